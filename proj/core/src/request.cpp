#include "vlcbeacon/request.hpp"

namespace vlcb {

namespace {

bool valid_ml(uint32_t ml) { return ml == 16 || ml == 32 || ml == 64 || ml == 128; }

}  // namespace

UpdateRequest UpdateRequest::make(uint32_t address, const BitBlock& message) {
    UpdateRequest req;
    req.address = address;
    req.declared_ml = static_cast<uint32_t>(message.size());
    req.payload = BitBlock(kPayloadBits);
    if (message.size() > kPayloadBits) {
        throw InvalidParameters("message length " + std::to_string(message.size()) +
                                " exceeds payload width " + std::to_string(kPayloadBits));
    }
    for (std::size_t i = 0; i < message.size(); ++i) req.payload.set(i, message[i]);
    req.validate();
    return req;
}

BitBlock UpdateRequest::message() const {
    return payload.slice(0, declared_ml);
}

void UpdateRequest::validate() const {
    if (address >= (1u << kAddressBits)) {
        throw InvalidParameters("address " + std::to_string(address) + " does not fit the " +
                                std::to_string(kAddressBits) + "-bit field");
    }
    if (payload.size() != kPayloadBits) {
        throw InvalidParameters("payload must be exactly " + std::to_string(kPayloadBits) +
                                " bits, got " + std::to_string(payload.size()));
    }
    if (!valid_ml(declared_ml)) {
        throw InvalidParameters("declared message length must be one of 16/32/64/128, got " +
                                std::to_string(declared_ml));
    }
}

std::array<uint8_t, kRequestBytes> UpdateRequest::serialize() const {
    validate();
    std::array<uint8_t, kRequestBytes> bytes{};
    bytes[0] = static_cast<uint8_t>((write_flag ? 0x80 : 0x00) | (address & 0x7F));
    // Byte 1 holds payload bits 127..120, byte 16 holds bits 7..0.
    for (std::size_t byte = 0; byte < 16; ++byte) {
        uint8_t value = 0;
        for (std::size_t j = 0; j < 8; ++j) {
            std::size_t bit = 8 * (15 - byte) + j;
            value |= static_cast<uint8_t>(payload[bit] << j);
        }
        bytes[1 + byte] = value;
    }
    return bytes;
}

UpdateRequest UpdateRequest::deserialize(std::span<const uint8_t, kRequestBytes> bytes,
                                         uint32_t declared_ml) {
    UpdateRequest req;
    req.write_flag = (bytes[0] & 0x80) != 0;
    req.address = bytes[0] & 0x7F;
    req.declared_ml = declared_ml;
    req.payload = BitBlock(kPayloadBits);
    for (std::size_t byte = 0; byte < 16; ++byte) {
        for (std::size_t j = 0; j < 8; ++j) {
            req.payload.set(8 * (15 - byte) + j, (bytes[1 + byte] >> j) & 1);
        }
    }
    req.validate();
    return req;
}

}  // namespace vlcb
