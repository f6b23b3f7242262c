#pragma once

#include <string>
#include <vector>

#include "vigil/bigint.hpp"
#include "vigil/rng.hpp"

namespace vigil {

/// Additively homomorphic cipher over Z_n with g = n + 1. Every random
/// draw comes from a caller-supplied SeededRng, so the entire layer is a
/// pure function of (keys, seeds, inputs) and a recorded job can be
/// regenerated byte for byte.
struct PaillierPublicKey {
    std::string key_id;
    int modulus_bits = 0;
    Bigint n;
    Bigint n_squared;
    /// Precomputed n-th residue; per-message randomness is rand_base^k,
    /// i.e. (r0^k)^n, which keeps encryption a short exponentiation.
    Bigint rand_base;

    Bytes serialize() const;
    static PaillierPublicKey deserialize(std::span<const uint8_t> b);
};

struct PaillierSecretKey {
    Bigint p, q;
    Bigint lambda, mu;
    // CRT accelerators
    Bigint p_squared, q_squared;
    Bigint hp, hq;      // L_p(g^(p-1) mod p^2)^-1 mod p and the q twin
    Bigint q_inv_p;

    Bytes serialize() const;
    static PaillierSecretKey deserialize(std::span<const uint8_t> b);
};

struct PaillierKeyPair {
    PaillierPublicKey pub;
    PaillierSecretKey sec;
};

struct Ciphertext {
    Bigint value;  // in [0, n^2)
    std::string key_id;
};

/// Miller-Rabin with 40 rounds over candidates drawn from rng.
Bigint random_prime(size_t bits, SeededRng& rng);

PaillierKeyPair paillier_generate(int modulus_bits, SeededRng& rng,
                                  const std::string& key_id);

/// m must lie in [0, n); signed values go through fixed::to_modular first.
Ciphertext paillier_encrypt(const PaillierPublicKey& pk, const Bigint& m, SeededRng& rng);
Bigint paillier_decrypt(const PaillierSecretKey& sk, const PaillierPublicKey& pk,
                        const Bigint& c);

Ciphertext paillier_add(const PaillierPublicKey& pk, const Ciphertext& c1,
                        const Ciphertext& c2);
/// Dec(scale(c, k)) = k * m mod n; k may be negative.
Ciphertext paillier_scale(const PaillierPublicKey& pk, const Ciphertext& c,
                          const Bigint& k);
/// Dec(add_plain(c, m)) = m0 + m mod n; no fresh randomness consumed.
Ciphertext paillier_add_plain(const PaillierPublicKey& pk, const Ciphertext& c,
                              const Bigint& m);

/// Batch kernels. The omp:: versions split work across threads; results are
/// exact integers and independent of the thread count. serial:: versions are
/// the straight-line reference the tests compare against.
namespace kernels {

struct Matrix {
    size_t rows = 0, cols = 0;
    std::vector<Bigint> a;  // row-major
    const Bigint& at(size_t r, size_t c) const { return a[r * cols + c]; }
    Bigint& at(size_t r, size_t c) { return a[r * cols + c]; }
};

namespace omp {
std::vector<Bigint> encrypt_batch(const PaillierPublicKey& pk,
                                  const std::vector<Bigint>& residues,
                                  const SeededRng& rng);
std::vector<Bigint> decrypt_batch(const PaillierSecretKey& sk, const PaillierPublicKey& pk,
                                  const std::vector<Bigint>& cts);
std::vector<Bigint> scale_batch(const PaillierPublicKey& pk, const std::vector<Bigint>& cts,
                                const Bigint& k);
std::vector<Bigint> add_plain_batch(const PaillierPublicKey& pk,
                                    const std::vector<Bigint>& cts,
                                    const std::vector<Bigint>& plains);
/// out[j] = sum_i weights(i, j) * cts[i] under the cipher.
std::vector<Bigint> weighted_column_sums(const PaillierPublicKey& pk,
                                         const std::vector<Bigint>& cts,
                                         const Matrix& weights);
}  // namespace omp

namespace serial {
std::vector<Bigint> encrypt_batch(const PaillierPublicKey& pk,
                                  const std::vector<Bigint>& residues,
                                  const SeededRng& rng);
std::vector<Bigint> decrypt_batch(const PaillierSecretKey& sk, const PaillierPublicKey& pk,
                                  const std::vector<Bigint>& cts);
std::vector<Bigint> scale_batch(const PaillierPublicKey& pk, const std::vector<Bigint>& cts,
                                const Bigint& k);
std::vector<Bigint> add_plain_batch(const PaillierPublicKey& pk,
                                    const std::vector<Bigint>& cts,
                                    const std::vector<Bigint>& plains);
std::vector<Bigint> weighted_column_sums(const PaillierPublicKey& pk,
                                         const std::vector<Bigint>& cts,
                                         const Matrix& weights);
}  // namespace serial

}  // namespace kernels

}  // namespace vigil
