#pragma once

#include <cstdint>

#include "vlcbeacon/errors.hpp"

namespace vlcb {

/// The two clock domains of the transmitter: the processing clock (sys_clk)
/// and the shift-register / optical symbol clock (sr_clk). The divider must
/// be an exact positive integer.
class ClockConfig {
public:
    ClockConfig() = default;

    ClockConfig(uint64_t sys_hz, uint64_t sr_hz) : sys_hz_(sys_hz), sr_hz_(sr_hz) { validate(); }

    uint64_t sys_hz() const { return sys_hz_; }
    uint64_t sr_hz() const { return sr_hz_; }

    /// sys ticks per sr tick.
    uint64_t divider() const { return sys_hz_ / sr_hz_; }

    void validate() const {
        if (sys_hz_ == 0 || sr_hz_ == 0) {
            throw InvalidParameters("clock frequencies must be positive");
        }
        if (sys_hz_ % sr_hz_ != 0) {
            throw InvalidParameters("sys_hz (" + std::to_string(sys_hz_) +
                                    ") must be an integer multiple of sr_hz (" +
                                    std::to_string(sr_hz_) + ")");
        }
    }

    bool operator==(const ClockConfig&) const = default;

private:
    uint64_t sys_hz_ = 50'000'000;
    uint64_t sr_hz_ = 100'000;
};

}  // namespace vlcb
