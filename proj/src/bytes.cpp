#include "vigil/bytes.hpp"

#include <openssl/evp.h>
#include <openssl/hmac.h>

#include <stdexcept>

namespace vigil {

bool Digest::is_zero() const {
    for (auto b : v)
        if (b) return false;
    return true;
}

std::string Digest::hex() const { return to_hex({v.data(), v.size()}); }

Digest Digest::from_hex(const std::string& s) {
    Bytes raw = vigil::from_hex(s);
    if (raw.size() != 32) throw std::invalid_argument("digest hex must be 64 chars");
    Digest d;
    std::copy(raw.begin(), raw.end(), d.v.begin());
    return d;
}

Digest sha256(std::span<const uint8_t> data) {
    return sha256_cat({data});
}

Digest sha256_cat(std::initializer_list<std::span<const uint8_t>> parts) {
    Digest out;
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (!ctx) throw std::runtime_error("EVP_MD_CTX_new failed");
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    for (auto p : parts) EVP_DigestUpdate(ctx, p.data(), p.size());
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, out.v.data(), &len);
    EVP_MD_CTX_free(ctx);
    return out;
}

Digest hmac_sha256(std::span<const uint8_t> key, std::span<const uint8_t> data) {
    Digest out;
    unsigned int len = 0;
    HMAC(EVP_sha256(), key.data(), static_cast<int>(key.size()), data.data(), data.size(),
         out.v.data(), &len);
    return out;
}

std::string to_hex(std::span<const uint8_t> data) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(data.size() * 2);
    for (uint8_t b : data) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 0xf]);
    }
    return s;
}

Bytes from_hex(const std::string& s) {
    if (s.size() % 2) throw std::invalid_argument("odd hex length");
    auto nib = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw std::invalid_argument("bad hex char");
    };
    Bytes out(s.size() / 2);
    for (size_t i = 0; i < out.size(); i++)
        out[i] = static_cast<uint8_t>(nib(s[2 * i]) << 4 | nib(s[2 * i + 1]));
    return out;
}

}  // namespace vigil
