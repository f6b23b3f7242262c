#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

#include "vigil/bytes.hpp"

namespace vigil {

struct WireError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Canonical encoder: fixed-width big-endian integers, length-prefixed
/// strings/bytes. Same field values always produce the same bytes.
class ByteWriter {
public:
    void u8(uint8_t v) { buf_.push_back(v); }
    void u16(uint16_t v);
    void u32(uint32_t v);
    void u64(uint64_t v);
    void i64(int64_t v) { u64(static_cast<uint64_t>(v)); }
    void raw(std::span<const uint8_t> b) { buf_.insert(buf_.end(), b.begin(), b.end()); }
    void bytes(std::span<const uint8_t> b);   // u32 length prefix
    void str(const std::string& s) { bytes(as_span(s)); }

    const Bytes& out() const { return buf_; }
    Bytes take() { return std::move(buf_); }

private:
    Bytes buf_;
};

class ByteReader {
public:
    explicit ByteReader(std::span<const uint8_t> b) : b_(b) {}

    uint8_t u8();
    uint16_t u16();
    uint32_t u32();
    uint64_t u64();
    int64_t i64() { return static_cast<int64_t>(u64()); }
    Bytes bytes();            // u32 length prefix
    std::string str();
    Bytes raw(size_t n);
    size_t remaining() const { return b_.size() - pos_; }
    /// Parsers must consume their input exactly; trailing garbage is an error.
    void expect_end() const {
        if (pos_ != b_.size()) throw WireError("trailing bytes");
    }

private:
    void need(size_t n) const {
        if (pos_ + n > b_.size()) throw WireError("truncated input");
    }
    std::span<const uint8_t> b_;
    size_t pos_ = 0;
};

}  // namespace vigil
