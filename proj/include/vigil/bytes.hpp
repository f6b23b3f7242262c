#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace vigil {

using Bytes = std::vector<uint8_t>;

/// 32-byte SHA-256 digest with value semantics.
struct Digest {
    std::array<uint8_t, 32> v{};

    bool operator==(const Digest&) const = default;
    auto operator<=>(const Digest&) const = default;
    bool is_zero() const;
    std::string hex() const;
    static Digest from_hex(const std::string& s);
};

Digest sha256(std::span<const uint8_t> data);
Digest sha256_cat(std::initializer_list<std::span<const uint8_t>> parts);
Digest hmac_sha256(std::span<const uint8_t> key, std::span<const uint8_t> data);

std::string to_hex(std::span<const uint8_t> data);
Bytes from_hex(const std::string& s);

inline std::span<const uint8_t> as_span(const Bytes& b) { return {b.data(), b.size()}; }
inline std::span<const uint8_t> as_span(const std::string& s) {
    return {reinterpret_cast<const uint8_t*>(s.data()), s.size()};
}
inline std::span<const uint8_t> as_span(const Digest& d) { return {d.v.data(), d.v.size()}; }

}  // namespace vigil
