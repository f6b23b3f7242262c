#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "vigil/bigint.hpp"
#include "vigil/bytes.hpp"

namespace vigil {

using Seed = std::array<uint8_t, 32>;

Seed seed_from_hex(const std::string& hex);
Seed seed_from_u64(uint64_t v);

/// Deterministic byte stream: block i is SHA-256(seed || i). The same
/// (seed, label) always yields the same stream; distinct labels derive
/// independent subseeds via keyed hashing. fork(i) pre-splits the stream
/// so batch element i can draw randomness independently of its neighbours
/// (this is what makes parallel batch encryption reproducible).
class SeededRng {
public:
    SeededRng() = default;
    explicit SeededRng(const Seed& seed, std::string label = "");

    static SeededRng derive(const Seed& master, const std::string& label);
    SeededRng fork(uint64_t index) const;

    void fill(uint8_t* out, size_t n);
    Bytes take(size_t n);
    uint64_t next_u64();
    /// Uniform in [0, 1).
    double uniform();
    /// Standard normal via Box-Muller.
    double gaussian();
    Bigint uniform_bits(size_t bits);
    /// Uniform in [0, bound). bound must be positive.
    Bigint uniform_below(const Bigint& bound);
    /// Uniform odd integer with exactly `bits` bits (top bit set).
    Bigint random_odd(size_t bits);

    const std::string& label() const { return label_; }
    const Seed& seed() const { return seed_; }
    uint64_t position() const { return counter_; }

private:
    void refill();
    Seed seed_{};
    std::string label_;
    uint64_t counter_ = 0;
    std::array<uint8_t, 32> block_{};
    size_t block_pos_ = 32;
    bool have_spare_gauss_ = false;
    double spare_gauss_ = 0.0;
};

}  // namespace vigil
