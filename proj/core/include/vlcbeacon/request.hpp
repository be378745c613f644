#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "vlcbeacon/bit_block.hpp"

namespace vlcb {

inline constexpr uint32_t kPayloadBits = 128;
inline constexpr uint32_t kAddressBits = 7;
inline constexpr uint32_t kRequestBits = 136;
inline constexpr uint32_t kRequestBytes = 17;

/// One write request to the message memory. Serialized width is exactly 136
/// bits: bit 135 = write flag, bits 134..128 = anchor address, bits 127..0 =
/// payload. Messages shorter than 128 bits occupy the low-order payload bits.
struct UpdateRequest {
    bool write_flag = true;
    uint32_t address = 0;       // 7-bit field
    BitBlock payload;           // exactly 128 bits, bit i = payload bit i
    uint32_t declared_ml = kPayloadBits;  // message length in use: 16/32/64/128

    /// Builds a request whose payload carries `message` in its low-order bits.
    static UpdateRequest make(uint32_t address, const BitBlock& message);

    /// The low `declared_ml` payload bits.
    BitBlock message() const;

    /// Throws InvalidParameters on field-width or message-length violations.
    void validate() const;

    /// Big-endian packing of the 136-bit layout.
    std::array<uint8_t, kRequestBytes> serialize() const;
    static UpdateRequest deserialize(std::span<const uint8_t, kRequestBytes> bytes,
                                     uint32_t declared_ml);

    bool operator==(const UpdateRequest&) const = default;
};

}  // namespace vlcb
