#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "vlcbeacon/errors.hpp"

namespace vlcb {

/// Fixed-length sequence of binary symbols. Every element is 0 or 1 and
/// indexing past the declared length throws.
///
/// Serialization conventions:
///  - ASCII form: bit 0 of the block is the first character of the string.
///  - Hex form: the block is read as an integer with bit i at weight 2^i,
///    rendered most-significant nibble first, ceil(length/4) digits wide.
class BitBlock {
public:
    BitBlock() = default;

    /// All-zero block of `length` bits.
    explicit BitBlock(std::size_t length) : bits_(length, 0) {}

    BitBlock(std::initializer_list<uint8_t> bits);

    static BitBlock from_bits(const std::vector<uint8_t>& bits);
    static BitBlock from_ascii(std::string_view text);
    static BitBlock from_hex(std::string_view hex, std::size_t length);

    std::string to_ascii() const;
    std::string to_hex() const;

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    uint8_t operator[](std::size_t i) const { return at(i); }
    uint8_t at(std::size_t i) const;
    void set(std::size_t i, uint8_t value);

    void push_back(uint8_t value);
    void append(const BitBlock& other);

    /// Contiguous sub-block [offset, offset + length).
    BitBlock slice(std::size_t offset, std::size_t length) const;

    std::size_t count_ones() const;

    /// Element-wise XOR; lengths must match.
    BitBlock operator^(const BitBlock& other) const;

    bool operator==(const BitBlock&) const = default;

    const std::vector<uint8_t>& raw() const { return bits_; }

private:
    std::vector<uint8_t> bits_;
};

}  // namespace vlcb
