#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "vlcbeacon/config.hpp"
#include "vlcbeacon/firmware.hpp"

namespace vlcb {

/// One benchmark run: the sequential baseline against the centralized
/// datapath over a sweep of transmitter counts.
struct Scenario {
    std::vector<uint32_t> k_values = {1, 3, 5, 10, 20, 50, 100};
    NetworkConfig network;
    CostModel cost;
    uint64_t seed = 0;
    uint64_t inter_arrival_gap = 0;  // sys cycles between request arrivals

    void validate() const;
};

struct GainRow {
    uint32_t k = 0;
    double baseline_delay = 0.0;     // seconds (measured) or units (modeled)
    double centralized_delay = 0.0;  // seconds
    double gain = 0.0;               // baseline / centralized

    friend bool operator==(const GainRow&, const GainRow&) = default;
};

struct GainTable {
    std::vector<GainRow> rows;
    std::string baseline_unit;  // "seconds" or "units"
};

/// Published hardware gains for the 128-bit configuration, reported next to
/// our desk-scale numbers for orientation. Never asserted: they came from an
/// Arduino Mega 2560 and a Raspberry Pi 3B+ against the FPGA design.
struct ReferenceGain {
    uint32_t k;
    double arduino;
    double raspberry;
};

inline constexpr std::array<ReferenceGain, 7> kReferenceGains = {{
    {1, 2729.0, 548.0},
    {3, 3969.0, 738.0},
    {5, 4609.0, 966.0},
    {10, 4610.0, 850.0},
    {20, 4465.0, 985.0},
    {50, 4375.0, 802.0},
    {100, 4359.0, 789.0},
}};

/// Runs the scenario and writes `delays_<model>.csv`, `gains.csv` and
/// `manifest.txt` under `out_dir`. For every k the same seeded messages feed
/// both sides; the centralized side must drain in exactly k * latency cycles
/// when requests arrive back to back, and its loaded frames must match the
/// baseline's bit for bit.
GainTable run_scenario(const Scenario& scenario, const std::filesystem::path& out_dir);

/// CSV `k,baseline_delay,centralized_delay,gain`; doubles are written in
/// shortest round-trip form, so parsing back reproduces the table exactly.
void write_gain_table(const GainTable& table, const std::filesystem::path& file);
GainTable load_gain_table(const std::filesystem::path& file);

}  // namespace vlcb
