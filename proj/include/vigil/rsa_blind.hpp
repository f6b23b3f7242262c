#pragma once

#include <string>

#include "vigil/bigint.hpp"
#include "vigil/rng.hpp"

namespace vigil {

/// RSA blind-signature primitives for the intersection protocol: the signer
/// never sees which value it signed, and unblinding yields H(id)^d mod n.
struct RsaKeyPair {
    std::string key_id;
    int modulus_bits = 0;
    Bigint n, e, d;

    Bytes serialize_public() const;
    Bytes serialize_secret() const;
    static RsaKeyPair deserialize_public(std::span<const uint8_t> b);
    static RsaKeyPair deserialize_secret(std::span<const uint8_t> b);
};

RsaKeyPair rsa_generate(int modulus_bits, SeededRng& rng, const std::string& key_id);

/// SHA-256 of the id, reduced into [1, n).
Bigint rsa_hash_to_group(std::span<const uint8_t> id, const Bigint& n);

/// Fresh blinding factor coprime to n.
Bigint rsa_blinding_factor(const Bigint& n, SeededRng& rng);

Bigint rsa_blind(const Bigint& h, const Bigint& r, const RsaKeyPair& pub);
Bigint rsa_sign(const Bigint& blinded, const RsaKeyPair& sec);
Bigint rsa_unblind(const Bigint& signed_value, const Bigint& r, const RsaKeyPair& pub);

}  // namespace vigil
