#pragma once

#include <cstdint>

#include "vlcbeacon/polar.hpp"
#include "vlcbeacon/rll.hpp"

namespace vlcb {

/// Operation counts gathered while an encoder runs, used by the sequential
/// cost model. Counts are incremented inside the encoding loops themselves.
struct PipelineOpCounts {
    uint64_t xor_ops = 0;        // butterfly XORs
    uint64_t table_lookups = 0;  // 4B6B table reads
    uint64_t bit_moves = 0;      // bit writes into work/output arrays

    PipelineOpCounts& operator+=(const PipelineOpCounts& other) {
        xor_ops += other.xor_ops;
        table_lookups += other.table_lookups;
        bit_moves += other.bit_moves;
        return *this;
    }

    friend bool operator==(const PipelineOpCounts&, const PipelineOpCounts&) = default;
};

/// One transmitter's unit of work per update: polar-encode the message, then
/// line-code the codeword.
LineCodedFrame transmit_pipeline(const BitBlock& message, const PolarCodeConfig& config,
                                 RllScheme scheme, PipelineOpCounts* ops = nullptr);

}  // namespace vlcb
