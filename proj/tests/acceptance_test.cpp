// End-to-end acceptance run. Each numbered check prints exactly one
// [PASS]/[FAIL] line; informational detail goes on indented lines below it.
// The process exits nonzero when any check fails.
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "vlcbeacon/bench.hpp"
#include "vlcbeacon/datapath.hpp"
#include "vlcbeacon/errors.hpp"
#include "vlcbeacon/firmware.hpp"

using vlcb::BitBlock;
using vlcb::CostModel;
using vlcb::EventKind;
using vlcb::NetworkConfig;
using vlcb::PolarCodeConfig;
using vlcb::RllScheme;
using vlcb::Simulator;
using vlcb::UpdateRequest;

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

int g_failures = 0;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int index, bool pass, const std::string& text) {
    std::printf("[%s] %d: %s\n", pass ? "PASS" : "FAIL", index, text.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

void info(const std::string& text) {
    std::printf("        %s\n", text.c_str());
    std::fflush(stdout);
}

template <typename F>
void run_check(int index, F&& body) {
    try {
        body();
    } catch (const std::exception& e) {
        report(index, false, std::string("unexpected exception: ") + e.what());
    }
}

const std::vector<std::pair<uint32_t, uint32_t>> kSupportedPairs = {
    {16, 32}, {32, 64}, {64, 128}, {128, 256}};

constexpr std::array<RllScheme, 2> kSchemes = {RllScheme::Manchester, RllScheme::FourBSixB};

std::string fmt(const char* format, double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, format, value);
    return buffer;
}

// 1. The in-place butterfly equals multiplication by the n-fold Kronecker
// power of the polar kernel: exhaustive through N = 16, randomized above.
void check_polar_oracle() {
    const auto start = Clock::now();
    std::mt19937_64 rng(2024);
    uint64_t blocks = 0;

    for (uint32_t n = 1; n <= 4; ++n) {
        const uint32_t block_len = 1u << n;
        const auto matrix = oracle::kernel_power(n);
        for (uint64_t value = 0; value < (1ull << block_len); ++value) {
            BitBlock input(block_len);
            for (uint32_t i = 0; i < block_len; ++i) input.set(i, (value >> i) & 1);
            if (vlcb::polar_transform(input) != oracle::transform_by_matrix(input, matrix)) {
                report(1, false, "butterfly disagrees with the matrix oracle at N=" +
                                     std::to_string(block_len));
                return;
            }
            ++blocks;
        }
    }
    for (uint32_t n = 5; n <= 8; ++n) {
        const uint32_t block_len = 1u << n;
        const auto matrix = oracle::kernel_power(n);
        for (int i = 0; i < 1000; ++i) {
            const BitBlock input = oracle::random_block(rng, block_len);
            if (vlcb::polar_transform(input) != oracle::transform_by_matrix(input, matrix)) {
                report(1, false, "butterfly disagrees with the matrix oracle at N=" +
                                     std::to_string(block_len));
                return;
            }
            ++blocks;
        }
    }

    const double elapsed = seconds_since(start);
    report(1, elapsed < 10.0,
           "polar transform matches the Kronecker-power oracle (" + std::to_string(blocks) +
               " blocks, exhaustive through N=16, " + fmt("%.2f", elapsed) + "s, budget 10s)");
}

// 2. decode(encode(m)) == m for every supported geometry and both line codes.
void check_round_trips() {
    std::mt19937_64 rng(77);
    uint64_t trips = 0;
    for (const auto& [ml, cl] : kSupportedPairs) {
        uint32_t n = 0;
        while ((1u << n) < cl) ++n;
        const auto config = PolarCodeConfig::bec_design(n, ml);
        for (RllScheme scheme : kSchemes) {
            for (int i = 0; i < 1000; ++i) {
                const BitBlock message = oracle::random_block(rng, ml);
                const auto frame = vlcb::transmit_pipeline(message, config, scheme);
                const BitBlock back = vlcb::polar_extract(vlcb::rll_decode(frame), config);
                if (back != message) {
                    report(2, false, "round trip failed at ml=" + std::to_string(ml) +
                                         " scheme=" + std::string(vlcb::to_string(scheme)));
                    return;
                }
                ++trips;
            }
        }
    }
    report(2, true,
           "encode/decode round trips hold (" + std::to_string(trips) +
               " random messages across 4 geometries x 2 line codes)");
}

// 3. Line-coding laws: manchester doubles the codeword and stays DC balanced;
// 4b6b maps nibbles to weight-3 sextets; the overall code rates are exactly
// 1/4 and 1/3.
void check_line_code_laws() {
    std::mt19937_64 rng(78);
    for (const auto& [ml, cl] : kSupportedPairs) {
        uint32_t n = 0;
        while ((1u << n) < cl) ++n;
        const auto config = PolarCodeConfig::bec_design(n, ml);
        for (int i = 0; i < 200; ++i) {
            const BitBlock message = oracle::random_block(rng, ml);

            const auto manchester = vlcb::transmit_pipeline(message, config, RllScheme::Manchester);
            if (manchester.bits.size() != 2u * cl || 4u * ml != manchester.bits.size()) {
                report(3, false, "manchester frame length is not 2N (= 4K)");
                return;
            }
            if (manchester.bits.count_ones() * 2 != manchester.bits.size()) {
                report(3, false, "manchester frame is not DC balanced");
                return;
            }

            const auto fourb = vlcb::transmit_pipeline(message, config, RllScheme::FourBSixB);
            if (fourb.bits.size() != 3u * cl / 2u || 3u * ml != fourb.bits.size()) {
                report(3, false, "4b6b frame length is not 3N/2 (= 3K)");
                return;
            }
            for (std::size_t g = 0; g < fourb.bits.size(); g += 6) {
                int weight = 0;
                for (std::size_t b = 0; b < 6; ++b) weight += fourb.bits.at(g + b);
                if (weight != 3) {
                    report(3, false, "4b6b sextet is not weight 3");
                    return;
                }
            }
        }
    }
    report(3, true,
           "line-code laws hold on 800 frames per scheme; code rates are exactly 1/4 "
           "(manchester) and 1/3 (4b6b)");
}

// 4. In the 100-anchor network every request spends exactly 14 cycles between
// dequeue and front-end load, and k back-to-back requests drain in 14k.
void check_latency_contract() {
    const NetworkConfig config;  // 100 anchors, 128/256, latency 14
    std::mt19937_64 rng(79);
    for (uint32_t k : {1u, 3u, 5u, 10u, 20u, 50u, 100u}) {
        Simulator sim(config);
        for (uint32_t i = 0; i < k; ++i)
            sim.enqueue_request(UpdateRequest::make(i, oracle::random_block(rng, config.ml)), 0);
        sim.run_until_idle(100000);

        std::vector<uint64_t> dequeues, loads;
        for (const auto& event : sim.event_log()) {
            if (event.kind == EventKind::Dequeue) dequeues.push_back(event.cycle);
            if (event.kind == EventKind::FeLoad) loads.push_back(event.cycle);
        }
        if (dequeues.size() != k || loads.size() != k) {
            report(4, false, "expected " + std::to_string(k) + " dequeues and loads");
            return;
        }
        for (uint32_t i = 0; i < k; ++i) {
            if (loads[i] - dequeues[i] != config.latency_cycles) {
                report(4, false, "request " + std::to_string(i) + " took " +
                                     std::to_string(loads[i] - dequeues[i]) + " cycles");
                return;
            }
        }
        if (sim.last_load_cycle() != uint64_t{14} * k) {
            report(4, false, "k=" + std::to_string(k) + " drained at cycle " +
                                 std::to_string(sim.last_load_cycle()) + ", expected " +
                                 std::to_string(14 * k));
            return;
        }
    }
    report(4, true,
           "every dequeue-to-load distance is exactly 14 cycles and k back-to-back requests "
           "drain at cycle 14k for k in {1,3,5,10,20,50,100}");
}

// 5. Sustained throughput K * fmax / latency lands within 2% of the published
// post-synthesis numbers for both timing closures.
void check_throughput() {
    const auto config = PolarCodeConfig::bec_design(8, 128);
    const double fast = vlcb::report_throughput(config, 14, 76.13e6);
    const double slow = vlcb::report_throughput(config, 14, 69.69e6);
    const double fast_err = std::fabs(fast - 694.8e6) / 694.8e6;
    const double slow_err = std::fabs(slow - 630.8e6) / 630.8e6;
    const bool pass = fast_err <= 0.02 && slow_err <= 0.02;
    report(5, pass,
           "throughput " + fmt("%.3f", fast / 1e6) + " Mbps @76.13 MHz and " +
               fmt("%.3f", slow / 1e6) + " Mbps @69.69 MHz sit within 2% of 694.8 / 630.8 Mbps" +
               " (errors " + fmt("%.2f", fast_err * 100) + "% / " + fmt("%.2f", slow_err * 100) +
               "%)");
}

// 6. Full-network identity: 100 anchors each receive a distinct 128-bit
// message; every emitted waveform decodes back to it and repeats with the
// frame period. Runs both line codes.
void check_end_to_end() {
    const auto start = Clock::now();
    std::mt19937_64 rng(80);
    for (RllScheme scheme : kSchemes) {
        NetworkConfig config;
        config.scheme = scheme;
        const uint32_t frame_len = vlcb::coded_frame_length(scheme, config.cl);

        std::vector<BitBlock> messages;
        Simulator sim(config);
        for (uint32_t a = 0; a < config.front_ends; ++a) {
            messages.push_back(oracle::random_block(rng, config.ml));
            sim.enqueue_request(UpdateRequest::make(a, messages.back()), a);
        }
        sim.run_until_idle(1000000);
        sim.run_sr_ticks(2 * frame_len + 8);

        for (uint32_t a = 0; a < config.front_ends; ++a) {
            const auto& fe = sim.front_end(a);
            if (!fe.loaded) {
                report(6, false, "anchor " + std::to_string(a) + " never loaded a frame");
                return;
            }
            const uint64_t offset = fe.active_since_sr_tick;
            const BitBlock decoded =
                vlcb::receive_and_decode(fe.waveform, sim.polar(), scheme, offset);
            if (decoded != messages[a]) {
                report(6, false, "anchor " + std::to_string(a) + " decoded the wrong message");
                return;
            }
            for (uint32_t t = 0; t < frame_len; ++t) {
                if (fe.waveform.at(offset + t) != fe.waveform.at(offset + t + frame_len)) {
                    report(6, false, "anchor " + std::to_string(a) + " waveform period is not " +
                                         std::to_string(frame_len));
                    return;
                }
            }
        }
    }
    const double elapsed = seconds_since(start);
    report(6, elapsed < 60.0,
           "100 anchors decode their own 128-bit messages under both line codes; waveforms "
           "repeat with period 512 (manchester) and 384 (4b6b) (" +
               fmt("%.2f", elapsed) + "s, budget 60s)");
}

// 7. Scaling: the measured sequential baseline grows linearly with the number
// of transmitters while the centralized datapath holds 14 cycles per update.
// Published hardware gains are printed for orientation, never asserted.
void check_scaling() {
    const std::vector<uint32_t> ks = {1, 3, 5, 10, 20, 50, 100};
    const auto config = PolarCodeConfig::bec_design(8, 128);

    CostModel cost;
    cost.mode = vlcb::CostMode::Measured;
    auto report_for = [&](const CostModel& model) {
        return vlcb::run_delay_sweep(ks, config, RllScheme::Manchester, model, 4242);
    };
    auto fit_of = [&](const vlcb::DelayReport& sweep) {
        std::vector<double> x, y;
        for (const auto& row : sweep.rows) {
            x.push_back(static_cast<double>(row.k));
            y.push_back(row.delay);
        }
        return vlcb::least_squares_fit(x, y);
    };

    auto sweep = report_for(cost);
    auto fit = fit_of(sweep);
    if (fit.r_squared < 0.99) {
        // One longer retry so a noisy scheduler cannot sink a property that
        // holds by construction.
        cost.repetitions = 60;
        sweep = report_for(cost);
        fit = fit_of(sweep);
    }

    const NetworkConfig network;
    bool constant_latency = true;
    std::vector<double> centralized;
    std::mt19937_64 rng(81);
    for (uint32_t k : ks) {
        Simulator sim(network);
        for (uint32_t i = 0; i < k; ++i)
            sim.enqueue_request(UpdateRequest::make(i, oracle::random_block(rng, network.ml)), 0);
        sim.run_until_idle(100000);
        constant_latency = constant_latency && sim.last_load_cycle() == uint64_t{14} * k;
        centralized.push_back(static_cast<double>(sim.last_load_cycle()) /
                              network.clock.sys_hz());
    }

    const bool pass = fit.r_squared >= 0.99 && fit.slope > 0.0 && constant_latency;
    report(7, pass,
           "measured sequential delay is linear in k (R^2 = " + fmt("%.5f", fit.r_squared) +
               ", slope " + fmt("%.3g", fit.slope) +
               " s/message) while the centralized path stays at 14 cycles per update");
    for (std::size_t i = 0; i < ks.size(); ++i) {
        const double gain = sweep.rows[i].delay / centralized[i];
        std::string line = "k=" + std::to_string(ks[i]) + ": measured gain " +
                           fmt("%.0f", gain) + "x";
        for (const auto& ref : vlcb::kReferenceGains)
            if (ref.k == ks[i])
                line += "; published hardware gains " + fmt("%.0f", ref.arduino) +
                        "x (Arduino Mega 2560), " + fmt("%.0f", ref.raspberry) +
                        "x (Raspberry Pi 3B+), informational only";
        info(line);
    }
}

// 8. The sequential encoder's array budget grows with the codeword and
// manchester always costs more than 4b6b.
void check_footprint() {
    const auto manchester = vlcb::estimate_footprint(128, 256, RllScheme::Manchester);
    const auto fourb = vlcb::estimate_footprint(128, 256, RllScheme::FourBSixB);
    bool pass = manchester.total == 1152 && fourb.total == 1024;

    std::size_t prev_m = 0, prev_f = 0;
    for (const auto& [ml, cl] : kSupportedPairs) {
        const auto m = vlcb::estimate_footprint(ml, cl, RllScheme::Manchester);
        const auto f = vlcb::estimate_footprint(ml, cl, RllScheme::FourBSixB);
        pass = pass && m.total > prev_m && f.total > prev_f && m.total > f.total;
        prev_m = m.total;
        prev_f = f.total;
    }
    report(8, pass,
           "array budgets rise strictly with the codeword and manchester outweighs 4b6b at "
           "every size (128-bit: 1152 vs 1024 bytes)");
}

// 9. Determinism: the same config and schedule produce byte-identical
// waveforms, event logs and verdicts on repeated runs.
void check_determinism() {
    const auto root = fs::temp_directory_path() / "vlcb_acceptance";
    fs::remove_all(root);

    NetworkConfig config;
    std::vector<vlcb::ScheduleEntry> schedule;
    std::mt19937_64 rng(82);
    for (uint32_t i = 0; i < 40; ++i) {
        vlcb::ScheduleEntry entry;
        entry.cycle = i * 3;
        entry.address = (i * 7) % config.front_ends;
        entry.payload = BitBlock(vlcb::kPayloadBits);
        for (uint32_t b = 0; b < config.ml; ++b) entry.payload.set(b, rng() & 1);
        schedule.push_back(entry);
    }

    vlcb::run_simulate_job(config, schedule, 300000, root / "a");
    vlcb::run_simulate_job(config, schedule, 300000, root / "b");

    auto read_file = [](const fs::path& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream out;
        out << in.rdbuf();
        return out.str();
    };

    std::vector<std::string> names = {"events.csv", "verify.csv"};
    for (uint32_t a = 0; a < config.front_ends; ++a)
        names.push_back("fe_" + std::to_string(a) + ".bits");
    for (const auto& name : names) {
        const std::string first = read_file(root / "a" / name);
        if (first.empty() || first != read_file(root / "b" / name)) {
            report(9, false, name + " differs between identical runs");
            return;
        }
    }
    fs::remove_all(root);
    report(9, true,
           "two identical simulate jobs emit byte-identical waveforms, event logs and "
           "verdicts (102 files compared)");
}

}  // namespace

int main() {
    run_check(1, check_polar_oracle);
    run_check(2, check_round_trips);
    run_check(3, check_line_code_laws);
    run_check(4, check_latency_contract);
    run_check(5, check_throughput);
    run_check(6, check_end_to_end);
    run_check(7, check_scaling);
    run_check(8, check_footprint);
    run_check(9, check_determinism);

    if (g_failures == 0) {
        std::printf("all 9 checks passed\n");
        return 0;
    }
    std::printf("%d check(s) failed\n", g_failures);
    return 1;
}
