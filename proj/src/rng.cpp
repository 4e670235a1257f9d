#include "ppr/rng.hpp"

#include <random>
#include <vector>

#include "ppr/errors.hpp"

namespace ppr {

namespace {

// splitmix64 finalizer
uint64_t mix(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(uint64_t seed) : state_(mix(seed)), inc_(mix(seed ^ 0xda3e39cb94b95bdbULL) | 1) {}

Rng Rng::from_entropy() {
    std::random_device rd;
    uint64_t seed = (uint64_t(rd()) << 32) ^ rd();
    return Rng(seed);
}

uint64_t Rng::next_raw() {
    state_ += inc_;
    return mix(state_);
}

uint64_t Rng::u64() { return next_raw(); }

uint64_t Rng::below(uint64_t bound) {
    if (bound == 0) throw ConfigError("Rng::below: zero bound");
    // rejection sampling over the largest multiple of bound
    uint64_t limit = ~uint64_t(0) - (~uint64_t(0) % bound);
    uint64_t v;
    do {
        v = next_raw();
    } while (v >= limit);
    return v % bound;
}

void Rng::fill_bytes(std::span<uint8_t> out) {
    size_t i = 0;
    while (i < out.size()) {
        uint64_t v = next_raw();
        for (int b = 0; b < 8 && i < out.size(); ++b, ++i) {
            out[i] = uint8_t(v >> (8 * b));
        }
    }
}

mpz_class Rng::mpz_bits(unsigned bits) {
    if (bits == 0) return 0;
    std::vector<uint8_t> buf((bits + 7) / 8);
    fill_bytes(buf);
    unsigned extra = unsigned(buf.size() * 8 - bits);
    buf[0] &= uint8_t(0xff >> extra);
    mpz_class out;
    mpz_import(out.get_mpz_t(), buf.size(), 1, 1, 0, 0, buf.data());
    return out;
}

mpz_class Rng::mpz_below(const mpz_class& bound) {
    if (bound <= 0) throw ConfigError("Rng::mpz_below: nonpositive bound");
    unsigned bits = unsigned(mpz_sizeinbase(bound.get_mpz_t(), 2));
    mpz_class v;
    do {
        v = mpz_bits(bits);
    } while (v >= bound);
    return v;
}

Rng Rng::fork(uint64_t tag) {
    uint64_t child = mix(next_raw() ^ mix(tag));
    return Rng(child);
}

}  // namespace ppr
