#include "vigil/wire.hpp"

namespace vigil {

void ByteWriter::u16(uint16_t v) {
    buf_.push_back(static_cast<uint8_t>(v >> 8));
    buf_.push_back(static_cast<uint8_t>(v));
}

void ByteWriter::u32(uint32_t v) {
    for (int s = 24; s >= 0; s -= 8) buf_.push_back(static_cast<uint8_t>(v >> s));
}

void ByteWriter::u64(uint64_t v) {
    for (int s = 56; s >= 0; s -= 8) buf_.push_back(static_cast<uint8_t>(v >> s));
}

void ByteWriter::bytes(std::span<const uint8_t> b) {
    if (b.size() > 0xffffffffull) throw WireError("field too large");
    u32(static_cast<uint32_t>(b.size()));
    raw(b);
}

uint8_t ByteReader::u8() {
    need(1);
    return b_[pos_++];
}

uint16_t ByteReader::u16() {
    need(2);
    uint16_t v = static_cast<uint16_t>(b_[pos_] << 8 | b_[pos_ + 1]);
    pos_ += 2;
    return v;
}

uint32_t ByteReader::u32() {
    need(4);
    uint32_t v = 0;
    for (int i = 0; i < 4; i++) v = v << 8 | b_[pos_ + i];
    pos_ += 4;
    return v;
}

uint64_t ByteReader::u64() {
    need(8);
    uint64_t v = 0;
    for (int i = 0; i < 8; i++) v = v << 8 | b_[pos_ + i];
    pos_ += 8;
    return v;
}

Bytes ByteReader::bytes() {
    uint32_t n = u32();
    return raw(n);
}

std::string ByteReader::str() {
    Bytes b = bytes();
    return std::string(b.begin(), b.end());
}

Bytes ByteReader::raw(size_t n) {
    need(n);
    Bytes out(b_.begin() + pos_, b_.begin() + pos_ + n);
    pos_ += n;
    return out;
}

}  // namespace vigil
