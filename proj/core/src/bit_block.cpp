#include "vlcbeacon/bit_block.hpp"

#include <algorithm>
#include <numeric>

namespace vlcb {

namespace {

uint8_t check_bit(uint8_t value) {
    if (value > 1) {
        throw InvalidParameters("bit value must be 0 or 1, got " + std::to_string(value));
    }
    return value;
}

int hex_digit_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

BitBlock::BitBlock(std::initializer_list<uint8_t> bits) {
    bits_.reserve(bits.size());
    for (uint8_t b : bits) bits_.push_back(check_bit(b));
}

BitBlock BitBlock::from_bits(const std::vector<uint8_t>& bits) {
    BitBlock block;
    block.bits_.reserve(bits.size());
    for (uint8_t b : bits) block.bits_.push_back(check_bit(b));
    return block;
}

BitBlock BitBlock::from_ascii(std::string_view text) {
    BitBlock block;
    block.bits_.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c != '0' && c != '1') {
            throw InvalidParameters("bit string may contain only '0'/'1', found '" +
                                    std::string(1, c) + "' at position " + std::to_string(i));
        }
        block.bits_.push_back(static_cast<uint8_t>(c - '0'));
    }
    return block;
}

BitBlock BitBlock::from_hex(std::string_view hex, std::size_t length) {
    const std::size_t digits = (length + 3) / 4;
    if (hex.size() != digits) {
        throw InvalidParameters("hex string for " + std::to_string(length) + " bits must have " +
                                std::to_string(digits) + " digits, got " + std::to_string(hex.size()));
    }
    BitBlock block(length);
    // Most-significant nibble first: hex[0] carries bits [4*(digits-1), 4*digits).
    for (std::size_t d = 0; d < digits; ++d) {
        int v = hex_digit_value(hex[d]);
        if (v < 0) {
            throw InvalidParameters("invalid hex digit '" + std::string(1, hex[d]) + "'");
        }
        std::size_t base = 4 * (digits - 1 - d);
        for (std::size_t j = 0; j < 4; ++j) {
            uint8_t bit = static_cast<uint8_t>((v >> j) & 1);
            std::size_t idx = base + j;
            if (idx >= length) {
                if (bit) {
                    throw InvalidParameters("hex value has bits set beyond declared length " +
                                            std::to_string(length));
                }
            } else {
                block.bits_[idx] = bit;
            }
        }
    }
    return block;
}

std::string BitBlock::to_ascii() const {
    std::string out;
    out.reserve(bits_.size());
    for (uint8_t b : bits_) out.push_back(static_cast<char>('0' + b));
    return out;
}

std::string BitBlock::to_hex() const {
    static const char* digits = "0123456789abcdef";
    const std::size_t n_digits = (bits_.size() + 3) / 4;
    std::string out(n_digits, '0');
    for (std::size_t d = 0; d < n_digits; ++d) {
        std::size_t base = 4 * (n_digits - 1 - d);
        int v = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            std::size_t idx = base + j;
            if (idx < bits_.size() && bits_[idx]) v |= 1 << j;
        }
        out[d] = digits[v];
    }
    return out;
}

uint8_t BitBlock::at(std::size_t i) const {
    if (i >= bits_.size()) {
        throw InvalidParameters("bit index " + std::to_string(i) + " out of range, length " +
                                std::to_string(bits_.size()));
    }
    return bits_[i];
}

void BitBlock::set(std::size_t i, uint8_t value) {
    if (i >= bits_.size()) {
        throw InvalidParameters("bit index " + std::to_string(i) + " out of range, length " +
                                std::to_string(bits_.size()));
    }
    bits_[i] = check_bit(value);
}

void BitBlock::push_back(uint8_t value) { bits_.push_back(check_bit(value)); }

void BitBlock::append(const BitBlock& other) {
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

BitBlock BitBlock::slice(std::size_t offset, std::size_t length) const {
    if (offset + length > bits_.size()) {
        throw InvalidParameters("slice [" + std::to_string(offset) + ", " +
                                std::to_string(offset + length) + ") exceeds length " +
                                std::to_string(bits_.size()));
    }
    BitBlock out;
    out.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(offset),
                     bits_.begin() + static_cast<std::ptrdiff_t>(offset + length));
    return out;
}

std::size_t BitBlock::count_ones() const {
    return static_cast<std::size_t>(std::accumulate(bits_.begin(), bits_.end(), std::size_t{0}));
}

BitBlock BitBlock::operator^(const BitBlock& other) const {
    if (size() != other.size()) {
        throw InvalidParameters("XOR of blocks with different lengths: " + std::to_string(size()) +
                                " vs " + std::to_string(other.size()));
    }
    BitBlock out(size());
    for (std::size_t i = 0; i < size(); ++i) out.bits_[i] = bits_[i] ^ other.bits_[i];
    return out;
}

}  // namespace vlcb
