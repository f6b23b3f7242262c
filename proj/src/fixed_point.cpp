#include "vigil/fixed_point.hpp"

#include <cmath>
#include <stdexcept>

namespace vigil::fixed {

Bigint encode(double x, int scale_bits) {
    if (!std::isfinite(x)) throw std::domain_error("cannot encode non-finite value");
    mpf_class scaled(x, 128);
    mpf_mul_2exp(scaled.get_mpf_t(), scaled.get_mpf_t(), scale_bits);
    Bigint m;
    // round to nearest
    mpf_class half = scaled + (scaled >= 0 ? 0.5 : -0.5);
    mpz_set_f(m.get_mpz_t(), half.get_mpf_t());
    return m;
}

double decode(const Bigint& mantissa, int scale_bits) {
    mpf_class f(mantissa, 256);
    mpf_div_2exp(f.get_mpf_t(), f.get_mpf_t(), scale_bits);
    return f.get_d();
}

std::vector<Bigint> encode_vec(const std::vector<double>& xs, int scale_bits) {
    std::vector<Bigint> out;
    out.reserve(xs.size());
    for (double x : xs) out.push_back(encode(x, scale_bits));
    return out;
}

std::vector<double> decode_vec(const std::vector<Bigint>& ms, int scale_bits) {
    std::vector<double> out;
    out.reserve(ms.size());
    for (const auto& m : ms) out.push_back(decode(m, scale_bits));
    return out;
}

Bigint to_modular(const Bigint& mantissa, const Bigint& n) {
    Bigint r = mantissa % n;
    if (r < 0) r += n;
    return r;
}

Bigint from_modular(const Bigint& residue, const Bigint& n) {
    if (residue < 0 || residue >= n) throw std::domain_error("residue out of range");
    if (residue * 2 >= n) return residue - n;
    return residue;
}

}  // namespace vigil::fixed
