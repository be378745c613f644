#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "vlcbeacon/bit_block.hpp"

namespace vlcb {

struct PipelineOpCounts;

/// Run-length-limited line codes available on the optical link.
enum class RllScheme {
    Manchester,  // rate 1/2, 1 -> (1,0), 0 -> (0,1)
    FourBSixB,   // rate 2/3, each nibble maps to a weight-3 6-bit word
};

std::string_view to_string(RllScheme scheme);
std::optional<RllScheme> parse_rll_scheme(std::string_view text);

/// A line-coded bit sequence destined for one front-end.
struct LineCodedFrame {
    RllScheme scheme = RllScheme::Manchester;
    BitBlock bits;
};

/// Frame length produced for a codeword of `codeword_length` bits: 2N for
/// Manchester, 3N/2 for 4B6B (requires N divisible by 4).
uint32_t coded_frame_length(RllScheme scheme, uint32_t codeword_length);

/// Nibble -> 6-bit codeword, every entry of Hamming weight 3. Entry order is
/// nibble value 0..15; within a nibble or codeword, bit j of the value is the
/// array element j positions above the group base (higher index = more
/// significant).
inline constexpr std::array<uint8_t, 16> kFourBSixBTable = {
    0b001110, 0b001101, 0b010011, 0b010110, 0b010101, 0b100011, 0b100110, 0b100101,
    0b011001, 0b011010, 0b011100, 0b110001, 0b110010, 0b101001, 0b101010, 0b101100,
};

LineCodedFrame manchester_encode(const BitBlock& codeword, PipelineOpCounts* ops = nullptr);

/// Inverse of manchester_encode. Throws LineCodeViolation with the pair index
/// when an aligned pair is (0,0) or (1,1).
BitBlock manchester_decode(const LineCodedFrame& frame);

LineCodedFrame four_b_six_b_encode(const BitBlock& codeword, PipelineOpCounts* ops = nullptr);

/// Inverse of four_b_six_b_encode. Throws LineCodeViolation with the group
/// index when an aligned 6-bit group is not in the table.
BitBlock four_b_six_b_decode(const LineCodedFrame& frame);

LineCodedFrame rll_encode(RllScheme scheme, const BitBlock& codeword,
                          PipelineOpCounts* ops = nullptr);
BitBlock rll_decode(const LineCodedFrame& frame);

}  // namespace vlcb
