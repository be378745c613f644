#include "vlcbeacon/rll.hpp"

#include "vlcbeacon/pipeline.hpp"

namespace vlcb {

namespace {

constexpr uint8_t kInvalidGroup = 0xFF;

constexpr std::array<uint8_t, 64> build_inverse_table() {
    std::array<uint8_t, 64> inverse{};
    for (auto& entry : inverse) entry = kInvalidGroup;
    for (std::size_t nibble = 0; nibble < kFourBSixBTable.size(); ++nibble) {
        inverse[kFourBSixBTable[nibble]] = static_cast<uint8_t>(nibble);
    }
    return inverse;
}

constexpr std::array<uint8_t, 64> kFourBSixBInverse = build_inverse_table();

void require_scheme(const LineCodedFrame& frame, RllScheme expected) {
    if (frame.scheme != expected) {
        throw InvalidParameters(std::string("frame scheme is ") + std::string(to_string(frame.scheme)) +
                                ", expected " + std::string(to_string(expected)));
    }
}

}  // namespace

std::string_view to_string(RllScheme scheme) {
    switch (scheme) {
        case RllScheme::Manchester: return "manchester";
        case RllScheme::FourBSixB: return "4b6b";
    }
    return "?";
}

std::optional<RllScheme> parse_rll_scheme(std::string_view text) {
    if (text == "manchester") return RllScheme::Manchester;
    if (text == "4b6b") return RllScheme::FourBSixB;
    return std::nullopt;
}

uint32_t coded_frame_length(RllScheme scheme, uint32_t codeword_length) {
    switch (scheme) {
        case RllScheme::Manchester:
            return 2 * codeword_length;
        case RllScheme::FourBSixB:
            if (codeword_length % 4 != 0) {
                throw InvalidParameters("4B6B input length must be divisible by 4, got " +
                                        std::to_string(codeword_length));
            }
            return codeword_length / 4 * 6;
    }
    throw InvalidParameters("unknown RLL scheme");
}

LineCodedFrame manchester_encode(const BitBlock& codeword, PipelineOpCounts* ops) {
    if (codeword.empty()) {
        throw InvalidParameters("Manchester encoder requires a nonempty input");
    }
    BitBlock out(2 * codeword.size());
    for (std::size_t i = 0; i < codeword.size(); ++i) {
        if (codeword[i]) {
            out.set(2 * i, 1);
            out.set(2 * i + 1, 0);
        } else {
            out.set(2 * i, 0);
            out.set(2 * i + 1, 1);
        }
        if (ops) ops->bit_moves += 2;
    }
    return LineCodedFrame{RllScheme::Manchester, std::move(out)};
}

BitBlock manchester_decode(const LineCodedFrame& frame) {
    require_scheme(frame, RllScheme::Manchester);
    if (frame.bits.size() % 2 != 0) {
        throw InvalidParameters("Manchester frame length must be even, got " +
                                std::to_string(frame.bits.size()));
    }
    BitBlock out(frame.bits.size() / 2);
    for (std::size_t pair = 0; pair < out.size(); ++pair) {
        uint8_t first = frame.bits[2 * pair];
        uint8_t second = frame.bits[2 * pair + 1];
        if (first == second) {
            throw LineCodeViolation("Manchester pair " + std::to_string(pair) + " is (" +
                                        std::to_string(first) + "," + std::to_string(second) + ")",
                                    pair);
        }
        out.set(pair, first);
    }
    return out;
}

LineCodedFrame four_b_six_b_encode(const BitBlock& codeword, PipelineOpCounts* ops) {
    if (codeword.empty()) {
        throw InvalidParameters("4B6B encoder requires a nonempty input");
    }
    if (codeword.size() % 4 != 0) {
        throw InvalidParameters("4B6B input length must be divisible by 4, got " +
                                std::to_string(codeword.size()));
    }
    BitBlock out(codeword.size() / 4 * 6);
    std::size_t z = 0;
    for (std::size_t x = 0; x < codeword.size(); x += 4) {
        // Higher array index is the more significant nibble bit.
        unsigned nibble = static_cast<unsigned>(codeword[x]) |
                          static_cast<unsigned>(codeword[x + 1]) << 1 |
                          static_cast<unsigned>(codeword[x + 2]) << 2 |
                          static_cast<unsigned>(codeword[x + 3]) << 3;
        uint8_t word = kFourBSixBTable[nibble];
        if (ops) ++ops->table_lookups;
        for (std::size_t j = 0; j < 6; ++j) {
            out.set(z + j, static_cast<uint8_t>((word >> j) & 1));
            if (ops) ++ops->bit_moves;
        }
        z += 6;
    }
    return LineCodedFrame{RllScheme::FourBSixB, std::move(out)};
}

BitBlock four_b_six_b_decode(const LineCodedFrame& frame) {
    require_scheme(frame, RllScheme::FourBSixB);
    if (frame.bits.size() % 6 != 0) {
        throw InvalidParameters("4B6B frame length must be divisible by 6, got " +
                                std::to_string(frame.bits.size()));
    }
    BitBlock out(frame.bits.size() / 6 * 4);
    for (std::size_t group = 0; group * 6 < frame.bits.size(); ++group) {
        const std::size_t z = group * 6;
        unsigned word = 0;
        for (std::size_t j = 0; j < 6; ++j) {
            word |= static_cast<unsigned>(frame.bits[z + j]) << j;
        }
        uint8_t nibble = kFourBSixBInverse[word];
        if (nibble == kInvalidGroup) {
            throw LineCodeViolation("4B6B group " + std::to_string(group) +
                                        " is not a codeword (value " + std::to_string(word) + ")",
                                    group);
        }
        for (std::size_t j = 0; j < 4; ++j) {
            out.set(group * 4 + j, static_cast<uint8_t>((nibble >> j) & 1));
        }
    }
    return out;
}

LineCodedFrame rll_encode(RllScheme scheme, const BitBlock& codeword, PipelineOpCounts* ops) {
    switch (scheme) {
        case RllScheme::Manchester: return manchester_encode(codeword, ops);
        case RllScheme::FourBSixB: return four_b_six_b_encode(codeword, ops);
    }
    throw InvalidParameters("unknown RLL scheme");
}

BitBlock rll_decode(const LineCodedFrame& frame) {
    switch (frame.scheme) {
        case RllScheme::Manchester: return manchester_decode(frame);
        case RllScheme::FourBSixB: return four_b_six_b_decode(frame);
    }
    throw InvalidParameters("unknown RLL scheme");
}

}  // namespace vlcb
