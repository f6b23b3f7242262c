#pragma once

#include <vector>

#include "vigil/bigint.hpp"

namespace vigil {

/// Fixed-point reals over the integers: x is carried as round(x * 2^scale).
/// One global scale keeps homomorphic sums aligned; products of encoded
/// values land at the sum of their scales and are decoded accordingly.
namespace fixed {

constexpr int kScaleBits = 32;

Bigint encode(double x, int scale_bits = kScaleBits);
double decode(const Bigint& mantissa, int scale_bits = kScaleBits);

std::vector<Bigint> encode_vec(const std::vector<double>& xs, int scale_bits = kScaleBits);
std::vector<double> decode_vec(const std::vector<Bigint>& ms, int scale_bits = kScaleBits);

/// Map a signed mantissa into Z_n (negatives go to the upper half) and back.
Bigint to_modular(const Bigint& mantissa, const Bigint& n);
Bigint from_modular(const Bigint& residue, const Bigint& n);

}  // namespace fixed
}  // namespace vigil
