#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "vlcbeacon/bit_block.hpp"
#include "vlcbeacon/clock.hpp"
#include "vlcbeacon/polar.hpp"
#include "vlcbeacon/rll.hpp"

namespace vlcb {

/// Where the frozen-bit set comes from: erasure-channel design or an explicit
/// index file.
struct FrozenSource {
    enum class Kind { Bec, File };
    Kind kind = Kind::Bec;
    double erasure = 0.5;
    std::filesystem::path path;
};

/// Whole-network configuration shared by the simulator, the benchmark runner
/// and the CLI. Parsed from flat `key = value` text with '#' comments.
struct NetworkConfig {
    uint32_t front_ends = 100;
    uint32_t ml = 128;  // message length K
    uint32_t cl = 256;  // codeword length N, always 2 * ml
    RllScheme scheme = RllScheme::Manchester;
    ClockConfig clock;
    uint32_t latency_cycles = 14;
    uint32_t fifo_depth = 128;
    bool overlap = false;  // pipelined encode unit; default is one request in flight
    FrozenSource frozen;

    void validate() const;
    PolarCodeConfig make_polar_config() const;
};

/// Parses `key = value` lines. Every malformed line yields a ParseError
/// carrying the file name and line number.
NetworkConfig parse_network_config(std::istream& in, std::string_view filename);
NetworkConfig load_network_config(const std::filesystem::path& path);
void write_network_config(std::ostream& out, const NetworkConfig& config);

/// One row of a request schedule: CSV `cycle,address,payload_hex` with the
/// payload in 32 hex characters.
struct ScheduleEntry {
    uint64_t cycle = 0;
    uint32_t address = 0;
    BitBlock payload;  // 128 bits

    bool operator==(const ScheduleEntry&) const = default;
};

std::vector<ScheduleEntry> parse_schedule(std::istream& in, std::string_view filename);
std::vector<ScheduleEntry> load_schedule(const std::filesystem::path& path);
void write_schedule(std::ostream& out, const std::vector<ScheduleEntry>& entries);

}  // namespace vlcb
