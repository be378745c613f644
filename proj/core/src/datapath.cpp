#include "vlcbeacon/datapath.hpp"

#include <algorithm>
#include <fstream>

#include "vlcbeacon/errors.hpp"
#include "vlcbeacon/polar.hpp"
#include "vlcbeacon/rll.hpp"

namespace vlcb {

MessageMemory::MessageMemory(uint32_t anchors) {
    if (anchors == 0) throw InvalidParameters("message memory needs at least one anchor");
    cells_.assign(anchors, BitBlock(kPayloadBits));
}

void MessageMemory::write_port_a(uint32_t address, const BitBlock& value) {
    if (address >= cells_.size()) throw InvalidParameters("port A address out of range");
    if (value.size() != kPayloadBits) throw InvalidParameters("port A expects 128-bit values");
    if (pending_) throw InvalidParameters("port A accepts one write per cycle");
    pending_.emplace(address, value);
}

const BitBlock& MessageMemory::read_port_b(uint32_t address) const {
    if (address >= cells_.size()) throw InvalidParameters("port B address out of range");
    return cells_[address];
}

void MessageMemory::end_cycle() {
    if (!pending_) return;
    cells_[pending_->first] = std::move(pending_->second);
    pending_.reset();
}

Simulator::Simulator(const NetworkConfig& config)
    : config_(config),
      polar_(config.make_polar_config()),
      memory_(config.front_ends),
      front_ends_(config.front_ends) {
    tx_.latency = config_.latency_cycles;
    tx_.overlap = config_.overlap;
    for (uint32_t i = 0; i < config_.front_ends; ++i) front_ends_[i].id = i;
}

void Simulator::enqueue_request(const UpdateRequest& request, uint64_t at_cycle) {
    request.validate();
    if (!request.write_flag) throw InvalidParameters("only write requests are accepted");
    if (request.address >= config_.front_ends)
        throw InvalidParameters("request addresses an anchor beyond the network");
    if (request.declared_ml != config_.ml)
        throw InvalidParameters("request message length differs from the network's");
    if (at_cycle < cycle_) throw InvalidParameters("cannot schedule a request in the past");
    pending_.emplace(at_cycle, request);
}

void Simulator::log(EventKind kind, int64_t anchor, std::string detail) {
    events_.push_back(Event{cycle_, kind, anchor, std::move(detail)});
}

void Simulator::process_arrivals() {
    auto [first, last] = pending_.equal_range(cycle_);
    for (auto it = first; it != last; ++it) {
        if (fifo_.size() >= config_.fifo_depth) {
            log(EventKind::Error, it->second.address, "fifo_overflow");
            continue;
        }
        fifo_.push_back(it->second);
        ++requests_enqueued_;
        log(EventKind::Enqueue, it->second.address, "payload=" + it->second.payload.to_hex());
    }
    pending_.erase(first, last);
}

void Simulator::sr_edge() {
    for (auto& fe : front_ends_) {
        if (fe.piso_pos == 0) {
            if (fe.buffer_reg) {
                fe.piso = std::move(*fe.buffer_reg);
                fe.buffer_reg.reset();
                fe.loaded = true;
                fe.active_since_sr_tick = sr_ticks_elapsed_;
                log(EventKind::PisoWrap, fe.id, "load");
            } else if (!fe.piso.bits.empty()) {
                log(EventKind::PisoWrap, fe.id, "loop");
            }
        }
        fe.output_line = fe.piso.bits.empty() ? 0 : fe.piso.bits.at(fe.piso_pos);
        if (!fe.piso.bits.empty())
            fe.piso_pos = static_cast<uint32_t>((fe.piso_pos + 1) % fe.piso.bits.size());
        fe.waveform.push_back(fe.output_line);
    }
    ++sr_ticks_elapsed_;
}

void Simulator::advance_pipeline() {
    for (auto it = tx_.in_flight.begin(); it != tx_.in_flight.end();) {
        auto& req = *it;
        --req.remaining;
        if (req.remaining == tx_.latency - 1) {
            req.data = memory_.read_port_b(req.address);
            req.data_captured = true;
            log(EventKind::MemRead, req.address, "data=" + req.data.to_hex());
            log(EventKind::EncodeStart, req.address, "");
        }
        if (req.remaining == 0) {
            BitBlock message = req.data.slice(0, config_.ml);
            LineCodedFrame frame = transmit_pipeline(message, polar_, config_.scheme);
            auto& fe = front_ends_[req.address];
            fe.buffer_reg = std::move(frame);
            ++frames_loaded_;
            last_load_cycle_ = cycle_;
            log(EventKind::FeLoad, req.address,
                "frame_len=" + std::to_string(coded_frame_length(config_.scheme, polar_.block_length())));
            it = tx_.in_flight.erase(it);
        } else {
            ++it;
        }
    }
}

void Simulator::try_dequeue() {
    if (!tx_.can_accept() || fifo_.empty()) return;
    UpdateRequest req = std::move(fifo_.front());
    fifo_.pop_front();
    log(EventKind::Dequeue, req.address, "");
    memory_.write_port_a(req.address, req.payload);
    log(EventKind::MemWrite, req.address, "payload=" + req.payload.to_hex());
    tx_.in_flight.push_back(InFlightRequest{req.address, cycle_, tx_.latency, BitBlock(), false});
}

void Simulator::step() {
    process_arrivals();
    if (cycle_ % config_.clock.divider() == 0) sr_edge();
    advance_pipeline();
    try_dequeue();
    memory_.end_cycle();
    ++cycle_;
}

void Simulator::run_until(uint64_t cycle) {
    while (cycle_ < cycle) step();
}

void Simulator::run_sr_ticks(uint64_t ticks) {
    const uint64_t target = sr_ticks_elapsed_ + ticks;
    while (sr_ticks_elapsed_ < target) step();
}

uint64_t Simulator::run_until_idle(uint64_t max_cycles) {
    while (!idle() && cycle_ < max_cycles) step();
    return cycle_;
}

bool Simulator::idle() const {
    return pending_.empty() && fifo_.empty() && !tx_.busy();
}

BitBlock Simulator::sample_waveform(uint32_t anchor, uint64_t sr_ticks) {
    if (anchor >= front_ends_.size()) throw InvalidParameters("anchor out of range");
    const uint64_t start = sr_ticks_elapsed_;
    run_sr_ticks(sr_ticks);
    return front_ends_[anchor].waveform.slice(start, sr_ticks);
}

const FrontEnd& Simulator::front_end(uint32_t anchor) const {
    if (anchor >= front_ends_.size()) throw InvalidParameters("anchor out of range");
    return front_ends_[anchor];
}

void Simulator::write_waveforms(const std::filesystem::path& dir) const {
    std::filesystem::create_directories(dir);
    for (const auto& fe : front_ends_) {
        auto path = dir / ("fe_" + std::to_string(fe.id) + ".bits");
        std::ofstream out(path);
        if (!out) throw Error("cannot write " + path.string());
        out << fe.waveform.to_ascii() << '\n';
    }
}

void Simulator::write_event_log(const std::filesystem::path& file) const {
    std::ofstream out(file);
    if (!out) throw Error("cannot write " + file.string());
    write_event_csv(out, events_);
}

BitBlock receive_and_decode(const BitBlock& waveform, const PolarCodeConfig& config,
                            RllScheme scheme, uint64_t frame_offset) {
    const std::size_t frame_len = coded_frame_length(scheme, config.block_length());
    if (frame_offset + frame_len > waveform.size())
        throw InvalidParameters("waveform too short for a frame at the given offset");
    LineCodedFrame frame{scheme, waveform.slice(frame_offset, frame_len)};
    return polar_extract(rll_decode(frame), config);
}

double report_throughput(const PolarCodeConfig& config, uint32_t latency_cycles, double fmax_hz) {
    if (latency_cycles == 0) throw InvalidParameters("latency must be at least one cycle");
    if (!(fmax_hz > 0.0)) throw InvalidParameters("fmax must be positive");
    return static_cast<double>(config.info_length()) * fmax_hz / latency_cycles;
}

SimulateResult run_simulate_job(const NetworkConfig& config,
                                const std::vector<ScheduleEntry>& schedule, uint64_t cycles,
                                const std::filesystem::path& out_dir) {
    for (const auto& entry : schedule) {
        if (entry.address >= config.front_ends)
            throw InvalidParameters("schedule addresses an anchor beyond the network");
    }

    Simulator sim(config);
    for (const auto& entry : schedule) {
        UpdateRequest req;
        req.address = entry.address;
        req.payload = entry.payload;
        req.declared_ml = config.ml;
        sim.enqueue_request(req, entry.cycle);
    }
    sim.run_until(cycles);

    std::filesystem::create_directories(out_dir);
    sim.write_waveforms(out_dir);
    sim.write_event_log(out_dir / "events.csv");

    // Last payload scheduled to arrive per anchor; later cycle wins, file
    // order breaks ties.
    std::vector<std::optional<BitBlock>> expected(config.front_ends);
    std::vector<uint64_t> expected_cycle(config.front_ends, 0);
    for (const auto& entry : schedule) {
        if (entry.cycle >= cycles) continue;
        if (!expected[entry.address] || entry.cycle >= expected_cycle[entry.address]) {
            expected[entry.address] = entry.payload.slice(0, config.ml);
            expected_cycle[entry.address] = entry.cycle;
        }
    }

    SimulateResult result;
    result.cycles_run = cycles;
    result.frames_loaded = sim.frames_loaded();
    const std::size_t frame_len = coded_frame_length(config.scheme, sim.polar().block_length());
    for (uint32_t a = 0; a < config.front_ends; ++a) {
        VerifyRow row;
        row.anchor = a;
        if (expected[a]) row.expected_hex = expected[a]->to_hex();
        const FrontEnd& fe = sim.front_end(a);
        if (!fe.loaded) {
            row.status = expected[a] ? "no_frame" : "idle";
        } else if (fe.active_since_sr_tick + frame_len > fe.waveform.size()) {
            row.status = "no_frame";
        } else {
            try {
                BitBlock decoded = receive_and_decode(fe.waveform, sim.polar(), config.scheme,
                                                      fe.active_since_sr_tick);
                row.decoded_hex = decoded.to_hex();
                row.status = (expected[a] && decoded == *expected[a]) ? "ok" : "mismatch";
            } catch (const LineCodeViolation&) {
                row.status = "mismatch";
            }
        }
        if (expected[a] && row.status != "ok") result.all_ok = false;
        result.rows.push_back(std::move(row));
    }

    auto verify_path = out_dir / "verify.csv";
    std::ofstream out(verify_path);
    if (!out) throw Error("cannot write " + verify_path.string());
    out << "anchor,status,expected_hex,decoded_hex\n";
    for (const auto& row : result.rows)
        out << row.anchor << ',' << row.status << ',' << row.expected_hex << ','
            << row.decoded_hex << '\n';
    return result;
}

}  // namespace vlcb
