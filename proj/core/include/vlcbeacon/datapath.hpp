#pragma once

#include <cstdint>
#include <deque>
#include <filesystem>
#include <map>
#include <optional>
#include <vector>

#include "vlcbeacon/config.hpp"
#include "vlcbeacon/event_log.hpp"
#include "vlcbeacon/pipeline.hpp"
#include "vlcbeacon/request.hpp"

namespace vlcb {

/// 2-port message store, one 128-bit cell per anchor (16 bytes each; the
/// default 100-anchor network gives 1600 bytes). Port A takes host writes,
/// port B feeds the address pointer. Writes commit at end of cycle, so a
/// port-B read in the same cycle as a port-A write to the same address
/// returns the old value.
class MessageMemory {
public:
    explicit MessageMemory(uint32_t anchors);

    std::size_t capacity_bytes() const { return cells_.size() * (kPayloadBits / 8); }
    uint32_t anchors() const { return static_cast<uint32_t>(cells_.size()); }

    /// Port A write; at most one per cycle, visible from the next cycle.
    void write_port_a(uint32_t address, const BitBlock& value);

    /// Port B read of the currently committed contents.
    const BitBlock& read_port_b(uint32_t address) const;

    /// Commits this cycle's pending write.
    void end_cycle();

private:
    std::vector<BitBlock> cells_;
    std::optional<std::pair<uint32_t, BitBlock>> pending_;
};

/// One LED anchor: the staging register written by the de-multiplexer and the
/// looping parallel-in serial-out shift register that drives the light.
struct FrontEnd {
    uint32_t id = 0;
    std::optional<LineCodedFrame> buffer_reg;  // staged frame, sys_clk domain
    LineCodedFrame piso;                       // active frame, sr_clk domain
    uint32_t piso_pos = 0;                     // next bit to shift out
    uint8_t output_line = 0;                   // current OOK level (1 = light high)
    bool loaded = false;                       // a frame has entered the PISO
    uint64_t active_since_sr_tick = 0;         // sr tick when the active frame loaded
    BitBlock waveform;                         // one sample per sr tick since reset
};

/// One request moving through the encode pipeline.
struct InFlightRequest {
    uint32_t address = 0;
    uint64_t dequeue_cycle = 0;
    uint32_t remaining = 0;   // sys cycles until the front-end register loads
    BitBlock data;            // captured from memory port B
    bool data_captured = false;
};

/// The encode unit. Blocking by default: at most one request in flight, and
/// the address pointer checks `busy` before dequeuing the next one.
struct TransmitterUnit {
    uint32_t latency = 14;  // request-to-register-load, sys_clk domain
    bool overlap = false;
    std::vector<InFlightRequest> in_flight;

    bool busy() const { return !in_flight.empty(); }
    bool can_accept() const { return overlap || in_flight.empty(); }
};

/// Deterministic cycle-level model of the centralized transmitter: requests
/// FIFO, address pointer, 2-port message memory, encode unit, de-multiplexer,
/// front-end staging registers and looping PISO shift registers, driven by
/// the sys_clk with the sr_clk derived by an integer divider.
///
/// Per sys tick, in order: scheduled arrivals land in the FIFO; on divider
/// boundaries every PISO shifts (loading its staged frame at a frame
/// boundary); the pipeline advances (memory data is captured one cycle after
/// dequeue, the addressed front-end register loads `latency` cycles after
/// dequeue); if the unit is free one request is dequeued, its payload written
/// to memory port A and the port-B read issued; memory writes commit.
class Simulator {
public:
    explicit Simulator(const NetworkConfig& config);

    /// Schedules a request to land in the FIFO at the start of `at_cycle`.
    /// Rejects addresses beyond the front-end count, non-write requests,
    /// declared lengths differing from the network's, and past cycles. A full
    /// FIFO at arrival time drops the request and records a backpressure
    /// error event.
    void enqueue_request(const UpdateRequest& request, uint64_t at_cycle);

    void step();
    void run_until(uint64_t cycle);
    void run_sr_ticks(uint64_t ticks);

    /// Steps until nothing is pending, queued or in flight (or `max_cycles`
    /// is hit). Returns the cycle reached.
    uint64_t run_until_idle(uint64_t max_cycles);

    /// Advances the simulation by `sr_ticks` shift-register ticks and returns
    /// that anchor's output line sampled once per tick.
    BitBlock sample_waveform(uint32_t anchor, uint64_t sr_ticks);

    uint64_t cycle() const { return cycle_; }
    uint64_t sr_ticks_elapsed() const { return sr_ticks_elapsed_; }
    bool idle() const;

    const NetworkConfig& config() const { return config_; }
    const PolarCodeConfig& polar() const { return polar_; }
    const std::vector<Event>& event_log() const { return events_; }
    const FrontEnd& front_end(uint32_t anchor) const;
    const MessageMemory& memory() const { return memory_; }
    const TransmitterUnit& transmitter() const { return tx_; }
    std::size_t fifo_size() const { return fifo_.size(); }

    uint64_t requests_enqueued() const { return requests_enqueued_; }
    uint64_t frames_loaded() const { return frames_loaded_; }
    uint64_t last_load_cycle() const { return last_load_cycle_; }

    /// One `fe_<id>.bits` file per anchor: ASCII 0/1, one character per sr
    /// tick, trailing newline.
    void write_waveforms(const std::filesystem::path& dir) const;
    void write_event_log(const std::filesystem::path& file) const;

private:
    void process_arrivals();
    void sr_edge();
    void advance_pipeline();
    void try_dequeue();
    void log(EventKind kind, int64_t anchor, std::string detail);

    NetworkConfig config_;
    PolarCodeConfig polar_;
    uint64_t cycle_ = 0;
    uint64_t sr_ticks_elapsed_ = 0;
    std::multimap<uint64_t, UpdateRequest> pending_;  // keyed by arrival cycle
    std::deque<UpdateRequest> fifo_;
    MessageMemory memory_;
    TransmitterUnit tx_;
    std::vector<FrontEnd> front_ends_;
    std::vector<Event> events_;
    uint64_t requests_enqueued_ = 0;
    uint64_t frames_loaded_ = 0;
    uint64_t last_load_cycle_ = 0;
};

/// Slices one aligned frame out of a sampled waveform, line-decodes it and
/// recovers the message. Line-code violations surface misalignment.
BitBlock receive_and_decode(const BitBlock& waveform, const PolarCodeConfig& config,
                            RllScheme scheme, uint64_t frame_offset);

/// Message bits emitted per pipeline occupancy interval: K * fmax / latency.
double report_throughput(const PolarCodeConfig& config, uint32_t latency_cycles, double fmax_hz);

/// Per-anchor outcome of a simulation run: the decoded waveform checked
/// against the last scheduled payload for that anchor.
struct VerifyRow {
    uint32_t anchor = 0;
    std::string status;  // ok | idle | no_frame | mismatch
    std::string expected_hex;
    std::string decoded_hex;
};

struct SimulateResult {
    std::vector<VerifyRow> rows;
    uint64_t cycles_run = 0;
    uint64_t frames_loaded = 0;
    bool all_ok = true;  // every scheduled anchor decoded to its payload
};

/// Runs a full simulation job: enqueue the schedule, run to `cycles`, write
/// `fe_<id>.bits`, `events.csv` and `verify.csv` under `out_dir`.
SimulateResult run_simulate_job(const NetworkConfig& config,
                                const std::vector<ScheduleEntry>& schedule, uint64_t cycles,
                                const std::filesystem::path& out_dir);

}  // namespace vlcb
