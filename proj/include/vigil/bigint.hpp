#pragma once

#include <gmpxx.h>

#include <span>

#include "vigil/bytes.hpp"
#include "vigil/wire.hpp"

namespace vigil {

using Bigint = mpz_class;

/// Big-endian magnitude export, no sign. Empty vector encodes zero.
Bytes bigint_to_bytes(const Bigint& x);
Bytes bigint_to_bytes_padded(const Bigint& x, size_t width);
Bigint bigint_from_bytes(std::span<const uint8_t> b);

/// Length-prefixed signed encoding used inside payloads: sign byte +
/// magnitude bytes.
void write_bigint(ByteWriter& w, const Bigint& x);
Bigint read_bigint(ByteReader& r);

Bigint powm(const Bigint& base, const Bigint& exp, const Bigint& mod);
Bigint invmod(const Bigint& x, const Bigint& mod);  // throws on non-invertible
size_t bit_length(const Bigint& x);

}  // namespace vigil
