#include "vigil/paillier.hpp"

#include <omp.h>

#include <stdexcept>

namespace vigil {

namespace {

constexpr int kMillerRabinRounds = 40;
constexpr size_t kRandExpBits = 128;

Bigint l_function(const Bigint& u, const Bigint& d) { return (u - 1) / d; }

Bigint encrypt_one(const PaillierPublicKey& pk, const Bigint& m, SeededRng& rng) {
    if (m < 0 || m >= pk.n) throw std::domain_error("plaintext out of range");
    Bigint k = rng.uniform_bits(kRandExpBits) + 1;
    Bigint rand_term = powm(pk.rand_base, k, pk.n_squared);
    Bigint c = (1 + m * pk.n) % pk.n_squared;
    c = c * rand_term % pk.n_squared;
    return c;
}

Bigint decrypt_one(const PaillierSecretKey& sk, const PaillierPublicKey& pk,
                   const Bigint& c) {
    if (c < 0 || c >= pk.n_squared) throw std::domain_error("ciphertext out of range");
    Bigint mp = l_function(powm(c, sk.p - 1, sk.p_squared), sk.p) * sk.hp % sk.p;
    Bigint mq = l_function(powm(c, sk.q - 1, sk.q_squared), sk.q) * sk.hq % sk.q;
    Bigint diff = (mp - mq) % sk.p;
    if (diff < 0) diff += sk.p;
    return mq + sk.q * (diff * sk.q_inv_p % sk.p);
}

Bigint scale_one(const PaillierPublicKey& pk, const Bigint& c, const Bigint& k) {
    if (k >= 0) return powm(c, k, pk.n_squared);
    Bigint inv = invmod(c, pk.n_squared);
    Bigint mk = -k;
    return powm(inv, mk, pk.n_squared);
}

Bigint add_plain_one(const PaillierPublicKey& pk, const Bigint& c, const Bigint& m) {
    Bigint r = m % pk.n;
    if (r < 0) r += pk.n;
    return c * ((1 + r * pk.n) % pk.n_squared) % pk.n_squared;
}

}  // namespace

Bytes PaillierPublicKey::serialize() const {
    ByteWriter w;
    w.str(key_id);
    w.u32(static_cast<uint32_t>(modulus_bits));
    write_bigint(w, n);
    write_bigint(w, rand_base);
    return w.take();
}

PaillierPublicKey PaillierPublicKey::deserialize(std::span<const uint8_t> b) {
    ByteReader r(b);
    PaillierPublicKey pk;
    pk.key_id = r.str();
    pk.modulus_bits = static_cast<int>(r.u32());
    pk.n = read_bigint(r);
    pk.rand_base = read_bigint(r);
    pk.n_squared = pk.n * pk.n;
    r.expect_end();
    return pk;
}

Bytes PaillierSecretKey::serialize() const {
    ByteWriter w;
    write_bigint(w, p);
    write_bigint(w, q);
    return w.take();
}

namespace {
PaillierSecretKey secret_from_primes(const Bigint& p, const Bigint& q) {
    PaillierSecretKey sk;
    sk.p = p;
    sk.q = q;
    Bigint n = p * q;
    Bigint pm1 = p - 1, qm1 = q - 1;
    sk.lambda = pm1 * qm1 / gcd(pm1, qm1);
    sk.mu = invmod(sk.lambda % n, n);
    sk.p_squared = p * p;
    sk.q_squared = q * q;
    Bigint g = n + 1;
    sk.hp = invmod(l_function(powm(g, pm1, sk.p_squared), p) % p, p);
    sk.hq = invmod(l_function(powm(g, qm1, sk.q_squared), q) % q, q);
    sk.q_inv_p = invmod(q % p, p);
    return sk;
}
}  // namespace

PaillierSecretKey PaillierSecretKey::deserialize(std::span<const uint8_t> b) {
    ByteReader r(b);
    Bigint p = read_bigint(r);
    Bigint q = read_bigint(r);
    r.expect_end();
    return secret_from_primes(p, q);
}

Bigint random_prime(size_t bits, SeededRng& rng) {
    for (;;) {
        Bigint cand = rng.random_odd(bits);
        if (mpz_probab_prime_p(cand.get_mpz_t(), kMillerRabinRounds) > 0) return cand;
    }
}

PaillierKeyPair paillier_generate(int modulus_bits, SeededRng& rng,
                                  const std::string& key_id) {
    if (modulus_bits < 64) throw std::invalid_argument("modulus too small");
    for (;;) {
        Bigint p = random_prime(modulus_bits / 2, rng);
        Bigint q = random_prime(modulus_bits / 2, rng);
        if (p == q) continue;
        Bigint n = p * q;
        if (gcd(n, (p - 1) * (q - 1)) != 1) continue;

        PaillierKeyPair kp;
        kp.pub.key_id = key_id;
        kp.pub.modulus_bits = modulus_bits;
        kp.pub.n = n;
        kp.pub.n_squared = n * n;
        Bigint r0;
        do {
            r0 = rng.uniform_below(n - 2) + 2;
        } while (gcd(r0, n) != 1);
        kp.pub.rand_base = powm(r0, n, kp.pub.n_squared);
        kp.sec = secret_from_primes(p, q);
        return kp;
    }
}

Ciphertext paillier_encrypt(const PaillierPublicKey& pk, const Bigint& m, SeededRng& rng) {
    return {encrypt_one(pk, m, rng), pk.key_id};
}

Bigint paillier_decrypt(const PaillierSecretKey& sk, const PaillierPublicKey& pk,
                        const Bigint& c) {
    return decrypt_one(sk, pk, c);
}

Ciphertext paillier_add(const PaillierPublicKey& pk, const Ciphertext& c1,
                        const Ciphertext& c2) {
    if (c1.key_id != c2.key_id) throw std::invalid_argument("ciphertext key ids differ");
    return {c1.value * c2.value % pk.n_squared, c1.key_id};
}

Ciphertext paillier_scale(const PaillierPublicKey& pk, const Ciphertext& c,
                          const Bigint& k) {
    return {scale_one(pk, c.value, k), c.key_id};
}

Ciphertext paillier_add_plain(const PaillierPublicKey& pk, const Ciphertext& c,
                              const Bigint& m) {
    return {add_plain_one(pk, c.value, m), c.key_id};
}

namespace kernels {

namespace omp {

std::vector<Bigint> encrypt_batch(const PaillierPublicKey& pk,
                                  const std::vector<Bigint>& residues,
                                  const SeededRng& rng) {
    std::vector<Bigint> out(residues.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < static_cast<long>(residues.size()); i++) {
        SeededRng elem_rng = rng.fork(static_cast<uint64_t>(i));
        out[i] = encrypt_one(pk, residues[i], elem_rng);
    }
    return out;
}

std::vector<Bigint> decrypt_batch(const PaillierSecretKey& sk, const PaillierPublicKey& pk,
                                  const std::vector<Bigint>& cts) {
    std::vector<Bigint> out(cts.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < static_cast<long>(cts.size()); i++)
        out[i] = decrypt_one(sk, pk, cts[i]);
    return out;
}

std::vector<Bigint> scale_batch(const PaillierPublicKey& pk, const std::vector<Bigint>& cts,
                                const Bigint& k) {
    std::vector<Bigint> out(cts.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < static_cast<long>(cts.size()); i++)
        out[i] = scale_one(pk, cts[i], k);
    return out;
}

std::vector<Bigint> add_plain_batch(const PaillierPublicKey& pk,
                                    const std::vector<Bigint>& cts,
                                    const std::vector<Bigint>& plains) {
    if (cts.size() != plains.size()) throw std::invalid_argument("size mismatch");
    std::vector<Bigint> out(cts.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (long i = 0; i < static_cast<long>(cts.size()); i++)
        out[i] = add_plain_one(pk, cts[i], plains[i]);
    return out;
}

std::vector<Bigint> weighted_column_sums(const PaillierPublicKey& pk,
                                         const std::vector<Bigint>& cts,
                                         const Matrix& weights) {
    if (weights.rows != cts.size()) throw std::invalid_argument("row count mismatch");
    // Inverses are shared across all columns, so hoist them out of the
    // column loop.
    std::vector<Bigint> inv(cts.size());
#pragma omp parallel for schedule(dynamic, 32)
    for (long i = 0; i < static_cast<long>(cts.size()); i++)
        inv[i] = invmod(cts[i], pk.n_squared);

    std::vector<Bigint> out(weights.cols);
#pragma omp parallel for schedule(dynamic, 1)
    for (long j = 0; j < static_cast<long>(weights.cols); j++) {
        Bigint acc = 1;
        Bigint term;
        for (size_t i = 0; i < cts.size(); i++) {
            const Bigint& w = weights.at(i, j);
            if (w == 0) continue;
            if (w > 0)
                term = powm(cts[i], w, pk.n_squared);
            else
                term = powm(inv[i], -w, pk.n_squared);
            acc = acc * term % pk.n_squared;
        }
        out[j] = acc;
    }
    return out;
}

}  // namespace omp

namespace serial {

std::vector<Bigint> encrypt_batch(const PaillierPublicKey& pk,
                                  const std::vector<Bigint>& residues,
                                  const SeededRng& rng) {
    std::vector<Bigint> out(residues.size());
    for (size_t i = 0; i < residues.size(); i++) {
        SeededRng elem_rng = rng.fork(i);
        out[i] = encrypt_one(pk, residues[i], elem_rng);
    }
    return out;
}

std::vector<Bigint> decrypt_batch(const PaillierSecretKey& sk, const PaillierPublicKey& pk,
                                  const std::vector<Bigint>& cts) {
    std::vector<Bigint> out(cts.size());
    for (size_t i = 0; i < cts.size(); i++) out[i] = decrypt_one(sk, pk, cts[i]);
    return out;
}

std::vector<Bigint> scale_batch(const PaillierPublicKey& pk, const std::vector<Bigint>& cts,
                                const Bigint& k) {
    std::vector<Bigint> out(cts.size());
    for (size_t i = 0; i < cts.size(); i++) out[i] = scale_one(pk, cts[i], k);
    return out;
}

std::vector<Bigint> add_plain_batch(const PaillierPublicKey& pk,
                                    const std::vector<Bigint>& cts,
                                    const std::vector<Bigint>& plains) {
    if (cts.size() != plains.size()) throw std::invalid_argument("size mismatch");
    std::vector<Bigint> out(cts.size());
    for (size_t i = 0; i < cts.size(); i++) out[i] = add_plain_one(pk, cts[i], plains[i]);
    return out;
}

std::vector<Bigint> weighted_column_sums(const PaillierPublicKey& pk,
                                         const std::vector<Bigint>& cts,
                                         const Matrix& weights) {
    if (weights.rows != cts.size()) throw std::invalid_argument("row count mismatch");
    std::vector<Bigint> out(weights.cols);
    for (size_t j = 0; j < weights.cols; j++) {
        Bigint acc = 1;
        for (size_t i = 0; i < cts.size(); i++) {
            const Bigint& w = weights.at(i, j);
            if (w == 0) continue;
            acc = acc * scale_one(pk, cts[i], w) % pk.n_squared;
        }
        out[j] = acc;
    }
    return out;
}

}  // namespace serial

}  // namespace kernels

}  // namespace vigil
