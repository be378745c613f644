#include "vlcbeacon/rll.hpp"

#include <bit>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "vlcbeacon/errors.hpp"
#include "vlcbeacon/pipeline.hpp"

using vlcb::BitBlock;
using vlcb::LineCodedFrame;
using vlcb::RllScheme;

TEST_CASE("scheme names parse both ways") {
    CHECK(vlcb::to_string(RllScheme::Manchester) == "manchester");
    CHECK(vlcb::to_string(RllScheme::FourBSixB) == "4b6b");
    CHECK(vlcb::parse_rll_scheme("manchester") == RllScheme::Manchester);
    CHECK(vlcb::parse_rll_scheme("4b6b") == RllScheme::FourBSixB);
    CHECK_FALSE(vlcb::parse_rll_scheme("8b10b").has_value());
}

TEST_CASE("frame lengths: 2N and 3N/2") {
    CHECK(vlcb::coded_frame_length(RllScheme::Manchester, 256) == 512);
    CHECK(vlcb::coded_frame_length(RllScheme::FourBSixB, 256) == 384);
    CHECK(vlcb::coded_frame_length(RllScheme::FourBSixB, 32) == 48);
    CHECK_THROWS_AS(vlcb::coded_frame_length(RllScheme::FourBSixB, 6), vlcb::InvalidParameters);
}

TEST_CASE("manchester maps 1 to (1,0) and 0 to (0,1)") {
    const auto frame = vlcb::manchester_encode(BitBlock{1, 0, 1});
    CHECK(frame.bits == BitBlock{1, 0, 0, 1, 1, 0});
    CHECK_THROWS_AS(vlcb::manchester_encode(BitBlock()), vlcb::InvalidParameters);
}

TEST_CASE("manchester frames are DC-balanced and round-trip") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 200; ++rep) {
        const auto word = oracle::random_block(rng, 64);
        const auto frame = vlcb::manchester_encode(word);
        CHECK(frame.bits.size() == 2 * word.size());
        CHECK(frame.bits.count_ones() * 2 == frame.bits.size());
        CHECK(vlcb::manchester_decode(frame) == word);
    }
}

TEST_CASE("manchester violations carry the pair index") {
    LineCodedFrame bad{RllScheme::Manchester, BitBlock{1, 0, 1, 1}};
    CHECK_THROWS_AS(vlcb::manchester_decode(bad), vlcb::LineCodeViolation);
    try {
        vlcb::manchester_decode(bad);
    } catch (const vlcb::LineCodeViolation& e) {
        CHECK(e.group_index == 1);
    }
    LineCodedFrame odd{RllScheme::Manchester, BitBlock{1, 0, 1}};
    CHECK_THROWS_AS(vlcb::manchester_decode(odd), vlcb::InvalidParameters);
}

TEST_CASE("the 4b6b table is a weight-3 injection") {
    std::set<uint8_t> seen;
    for (uint8_t word : vlcb::kFourBSixBTable) {
        CHECK(std::popcount(word) == 3);
        CHECK(word < 64);
        seen.insert(word);
    }
    CHECK(seen.size() == 16);
}

TEST_CASE("4b6b places bit j of each value at offset j of its group") {
    // Nibble 0000 -> 001110: value 0b001110 means offsets 1, 2, 3 are set.
    const auto zero = vlcb::four_b_six_b_encode(BitBlock(4));
    CHECK(zero.bits == BitBlock{0, 1, 1, 1, 0, 0});

    // Nibble value 1 (bit 0 set) -> 0b001101: offsets 0, 2, 3.
    const auto one = vlcb::four_b_six_b_encode(BitBlock{1, 0, 0, 0});
    CHECK(one.bits == BitBlock{1, 0, 1, 1, 0, 0});

    CHECK_THROWS_AS(vlcb::four_b_six_b_encode(BitBlock(6)), vlcb::InvalidParameters);
}

TEST_CASE("4b6b round-trips and flags unknown groups") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 200; ++rep) {
        const auto word = oracle::random_block(rng, 64);
        const auto frame = vlcb::four_b_six_b_encode(word);
        CHECK(frame.bits.size() == 96);
        CHECK(vlcb::four_b_six_b_decode(frame) == word);
        // Every aligned group keeps weight 3.
        for (std::size_t g = 0; g < frame.bits.size(); g += 6)
            CHECK(frame.bits.slice(g, 6).count_ones() == 3);
    }

    LineCodedFrame bad{RllScheme::FourBSixB, BitBlock(12)};  // all-zero groups invalid
    CHECK_THROWS_AS(vlcb::four_b_six_b_decode(bad), vlcb::LineCodeViolation);
    try {
        vlcb::four_b_six_b_decode(bad);
    } catch (const vlcb::LineCodeViolation& e) {
        CHECK(e.group_index == 0);
    }
    LineCodedFrame ragged{RllScheme::FourBSixB, BitBlock(10)};
    CHECK_THROWS_AS(vlcb::four_b_six_b_decode(ragged), vlcb::InvalidParameters);
}

TEST_CASE("dispatcher routes by scheme and checks frame tags") {
    const auto word = BitBlock::from_ascii("10110100");
    for (auto scheme : {RllScheme::Manchester, RllScheme::FourBSixB}) {
        const auto frame = vlcb::rll_encode(scheme, word);
        CHECK(frame.scheme == scheme);
        CHECK(vlcb::rll_decode(frame) == word);
    }
}

TEST_CASE("encode counts per-scheme op totals") {
    vlcb::PipelineOpCounts manchester_ops;
    vlcb::rll_encode(RllScheme::Manchester, BitBlock(256), &manchester_ops);
    CHECK(manchester_ops.bit_moves == 512);
    CHECK(manchester_ops.table_lookups == 0);

    vlcb::PipelineOpCounts fourb_ops;
    vlcb::rll_encode(RllScheme::FourBSixB, BitBlock(256), &fourb_ops);
    CHECK(fourb_ops.table_lookups == 64);  // N/4 groups
    CHECK(fourb_ops.bit_moves == 384);     // 3N/2 output writes
}
