#include "vigil/rng.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

#include "vigil/wire.hpp"

namespace vigil {

namespace {
constexpr uint8_t kDomainLabel = 0x01;
constexpr uint8_t kDomainFork = 0x02;

std::array<uint8_t, 8> be64(uint64_t v) {
    std::array<uint8_t, 8> b{};
    for (int i = 0; i < 8; i++) b[i] = static_cast<uint8_t>(v >> (56 - 8 * i));
    return b;
}
}  // namespace

Seed seed_from_hex(const std::string& hex) {
    Bytes raw = from_hex(hex);
    if (raw.size() != 32) throw std::invalid_argument("seed hex must be 64 chars");
    Seed s;
    std::copy(raw.begin(), raw.end(), s.begin());
    return s;
}

Seed seed_from_u64(uint64_t v) {
    auto b = be64(v);
    Digest d = sha256({b.data(), b.size()});
    return d.v;
}

SeededRng::SeededRng(const Seed& seed, std::string label)
    : seed_(seed), label_(std::move(label)) {}

SeededRng SeededRng::derive(const Seed& master, const std::string& label) {
    if (label.empty()) throw std::invalid_argument("rng label must be non-empty");
    uint8_t dom = kDomainLabel;
    Digest sub = sha256_cat({{master.data(), master.size()}, {&dom, 1}, as_span(label)});
    return SeededRng(sub.v, label);
}

SeededRng SeededRng::fork(uint64_t index) const {
    uint8_t dom = kDomainFork;
    auto idx = be64(index);
    Digest sub = sha256_cat({{seed_.data(), seed_.size()}, {&dom, 1}, {idx.data(), idx.size()}});
    return SeededRng(sub.v, label_ + "#" + std::to_string(index));
}

void SeededRng::refill() {
    auto ctr = be64(counter_++);
    Digest d = sha256_cat({{seed_.data(), seed_.size()}, {ctr.data(), ctr.size()}});
    block_ = d.v;
    block_pos_ = 0;
}

void SeededRng::fill(uint8_t* out, size_t n) {
    while (n > 0) {
        if (block_pos_ == 32) refill();
        size_t take = std::min(n, 32 - block_pos_);
        std::memcpy(out, block_.data() + block_pos_, take);
        block_pos_ += take;
        out += take;
        n -= take;
    }
}

Bytes SeededRng::take(size_t n) {
    Bytes out(n);
    fill(out.data(), n);
    return out;
}

uint64_t SeededRng::next_u64() {
    uint8_t b[8];
    fill(b, 8);
    uint64_t v = 0;
    for (int i = 0; i < 8; i++) v = v << 8 | b[i];
    return v;
}

double SeededRng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SeededRng::gaussian() {
    if (have_spare_gauss_) {
        have_spare_gauss_ = false;
        return spare_gauss_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * M_PI * u2;
    spare_gauss_ = r * std::sin(theta);
    have_spare_gauss_ = true;
    return r * std::cos(theta);
}

Bigint SeededRng::uniform_bits(size_t bits) {
    size_t nbytes = (bits + 7) / 8;
    Bytes raw = take(nbytes);
    if (bits % 8) raw[0] &= static_cast<uint8_t>(0xff >> (8 - bits % 8));
    return bigint_from_bytes(as_span(raw));
}

Bigint SeededRng::uniform_below(const Bigint& bound) {
    if (bound <= 0) throw std::invalid_argument("bound must be positive");
    // 64 extra bits make the modulo bias negligible.
    Bigint wide = uniform_bits(bit_length(bound) + 64);
    return wide % bound;
}

Bigint SeededRng::random_odd(size_t bits) {
    if (bits < 2) throw std::invalid_argument("need at least 2 bits");
    Bigint x = uniform_bits(bits);
    mpz_setbit(x.get_mpz_t(), bits - 1);
    mpz_setbit(x.get_mpz_t(), 0);
    return x;
}

}  // namespace vigil
