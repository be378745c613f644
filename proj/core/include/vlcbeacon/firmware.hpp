#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "vlcbeacon/pipeline.hpp"

namespace vlcb {

enum class CostMode { Measured, Modeled };

std::string to_string(CostMode mode);
CostMode parse_cost_mode(const std::string& text);

/// Delay model for the sequential baseline. Modeled mode prices the op
/// counts gathered from the encoders; measured mode times wall clock and
/// ignores the unit costs. `calibration_scale` converts abstract units to
/// seconds for users who have calibrated against real hardware; the default
/// 1.0 keeps reports in units.
struct CostModel {
    CostMode mode = CostMode::Modeled;
    double cost_per_xor = 1.0;
    double cost_per_table_lookup = 1.0;
    double cost_per_bit_move = 1.0;
    double calibration_scale = 1.0;
    uint32_t warmup = 10;
    uint32_t repetitions = 30;

    void validate() const;
    double units(const PipelineOpCounts& ops) const;
};

struct DelayRow {
    uint32_t k = 0;
    double delay = 0.0;  // seconds (measured) or units (modeled)
};

struct DelayReport {
    std::vector<DelayRow> rows;  // sorted by k
    uint32_t ml = 0;
    RllScheme scheme = RllScheme::Manchester;
    CostMode mode = CostMode::Modeled;
    std::string model_label;
};

struct FootprintReport {
    uint32_t ml = 0;
    uint32_t cl = 0;
    RllScheme scheme = RllScheme::Manchester;
    std::size_t array_bytes = 0;
    std::size_t overhead_bytes = 0;
    std::size_t total = 0;
};

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

/// Sequential baseline: encodes the k messages one after another on one
/// core and returns the total delay for the batch. Modeled mode is exactly
/// k times the single-message cost (every message prices identically);
/// measured mode reports the median of `repetitions` timed passes after
/// `warmup` untimed ones.
double run_sequential(const std::vector<BitBlock>& messages, const PolarCodeConfig& config,
                      RllScheme scheme, const CostModel& cost);

/// Runs the baseline across a k sweep with seeded random messages.
DelayReport run_delay_sweep(const std::vector<uint32_t>& k_values, const PolarCodeConfig& config,
                            RllScheme scheme, const CostModel& cost, uint64_t seed);

/// Static array budget of the sequential encoder at one byte per element:
/// message + frozen index map + codeword + line-coded output.
FootprintReport estimate_footprint(uint32_t ml, uint32_t cl, RllScheme scheme,
                                   std::size_t overhead_bytes = 0);

LinearFit least_squares_fit(const std::vector<double>& x, const std::vector<double>& y);

BitBlock random_message(std::mt19937_64& rng, std::size_t length);

/// CSV `k,delay_seconds` (measured) or `k,delay_units` (modeled).
void write_delay_csv(const DelayReport& report, const std::filesystem::path& file);

/// CSV `ml,cl,scheme,array_bytes,overhead,total`.
void write_footprint_csv(const std::vector<FootprintReport>& reports,
                         const std::filesystem::path& file);

}  // namespace vlcb
