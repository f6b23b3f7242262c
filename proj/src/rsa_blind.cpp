#include "vigil/rsa_blind.hpp"

#include <stdexcept>

#include "vigil/paillier.hpp"

namespace vigil {

Bytes RsaKeyPair::serialize_public() const {
    ByteWriter w;
    w.str(key_id);
    w.u32(static_cast<uint32_t>(modulus_bits));
    write_bigint(w, n);
    write_bigint(w, e);
    return w.take();
}

Bytes RsaKeyPair::serialize_secret() const {
    ByteWriter w;
    w.str(key_id);
    w.u32(static_cast<uint32_t>(modulus_bits));
    write_bigint(w, n);
    write_bigint(w, e);
    write_bigint(w, d);
    return w.take();
}

RsaKeyPair RsaKeyPair::deserialize_public(std::span<const uint8_t> b) {
    ByteReader r(b);
    RsaKeyPair k;
    k.key_id = r.str();
    k.modulus_bits = static_cast<int>(r.u32());
    k.n = read_bigint(r);
    k.e = read_bigint(r);
    r.expect_end();
    return k;
}

RsaKeyPair RsaKeyPair::deserialize_secret(std::span<const uint8_t> b) {
    ByteReader r(b);
    RsaKeyPair k;
    k.key_id = r.str();
    k.modulus_bits = static_cast<int>(r.u32());
    k.n = read_bigint(r);
    k.e = read_bigint(r);
    k.d = read_bigint(r);
    r.expect_end();
    return k;
}

RsaKeyPair rsa_generate(int modulus_bits, SeededRng& rng, const std::string& key_id) {
    if (modulus_bits < 64) throw std::invalid_argument("modulus too small");
    RsaKeyPair k;
    k.key_id = key_id;
    k.modulus_bits = modulus_bits;
    k.e = 65537;
    for (;;) {
        Bigint p = random_prime(modulus_bits / 2, rng);
        Bigint q = random_prime(modulus_bits / 2, rng);
        if (p == q) continue;
        Bigint phi = (p - 1) * (q - 1);
        if (gcd(k.e, phi) != 1) continue;
        k.n = p * q;
        k.d = invmod(k.e, phi);
        return k;
    }
}

Bigint rsa_hash_to_group(std::span<const uint8_t> id, const Bigint& n) {
    Digest d = sha256(id);
    Bigint h = bigint_from_bytes(as_span(d)) % n;
    if (h == 0) h = 1;
    return h;
}

Bigint rsa_blinding_factor(const Bigint& n, SeededRng& rng) {
    for (;;) {
        Bigint r = rng.uniform_below(n - 2) + 2;
        if (gcd(r, n) == 1) return r;
    }
}

Bigint rsa_blind(const Bigint& h, const Bigint& r, const RsaKeyPair& pub) {
    if (gcd(r, pub.n) != 1) throw std::domain_error("blinding factor not invertible");
    return h * powm(r, pub.e, pub.n) % pub.n;
}

Bigint rsa_sign(const Bigint& blinded, const RsaKeyPair& sec) {
    if (sec.d == 0) throw std::invalid_argument("signing needs the secret exponent");
    return powm(blinded, sec.d, sec.n);
}

Bigint rsa_unblind(const Bigint& signed_value, const Bigint& r, const RsaKeyPair& pub) {
    return signed_value * invmod(r, pub.n) % pub.n;
}

}  // namespace vigil
