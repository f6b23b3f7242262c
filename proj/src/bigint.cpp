#include "vigil/bigint.hpp"

#include <stdexcept>

namespace vigil {

Bytes bigint_to_bytes(const Bigint& x) {
    if (x < 0) throw std::invalid_argument("negative magnitude");
    if (x == 0) return {};
    size_t count = 0;
    Bytes out((mpz_sizeinbase(x.get_mpz_t(), 2) + 7) / 8);
    mpz_export(out.data(), &count, 1, 1, 1, 0, x.get_mpz_t());
    out.resize(count);
    return out;
}

Bytes bigint_to_bytes_padded(const Bigint& x, size_t width) {
    Bytes raw = bigint_to_bytes(x);
    if (raw.size() > width) throw std::invalid_argument("value wider than field");
    Bytes out(width, 0);
    std::copy(raw.begin(), raw.end(), out.begin() + (width - raw.size()));
    return out;
}

Bigint bigint_from_bytes(std::span<const uint8_t> b) {
    Bigint x;
    if (!b.empty()) mpz_import(x.get_mpz_t(), b.size(), 1, 1, 1, 0, b.data());
    return x;
}

void write_bigint(ByteWriter& w, const Bigint& x) {
    w.u8(sgn(x) < 0 ? 1 : 0);
    Bigint a = abs(x);
    Bytes mag = bigint_to_bytes(a);
    w.bytes(as_span(mag));
}

Bigint read_bigint(ByteReader& r) {
    uint8_t neg = r.u8();
    if (neg > 1) throw WireError("bad sign byte");
    Bytes mag = r.bytes();
    Bigint x = bigint_from_bytes(as_span(mag));
    if (neg) x = -x;
    return x;
}

Bigint powm(const Bigint& base, const Bigint& exp, const Bigint& mod) {
    Bigint out;
    mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return out;
}

Bigint invmod(const Bigint& x, const Bigint& mod) {
    Bigint out;
    if (!mpz_invert(out.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t()))
        throw std::domain_error("value not invertible");
    return out;
}

size_t bit_length(const Bigint& x) {
    if (x == 0) return 0;
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

}  // namespace vigil
