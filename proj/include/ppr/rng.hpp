#pragma once

#include <cstdint>
#include <span>

#include <gmpxx.h>

namespace ppr {

// Deterministic randomness source. Every random draw in the library (masks,
// keys, permutations, encryption randomness) flows through one of these so
// that a session replays byte-identically for a fixed seed.
class Rng {
public:
    explicit Rng(uint64_t seed);

    // OS-entropy seeded instance for key generation outside tests.
    static Rng from_entropy();

    uint64_t u64();
    // uniform in [0, bound), bound > 0
    uint64_t below(uint64_t bound);
    void fill_bytes(std::span<uint8_t> out);
    // uniform in [0, 2^bits)
    mpz_class mpz_bits(unsigned bits);
    // uniform in [0, bound), bound > 0
    mpz_class mpz_below(const mpz_class& bound);
    // independent child stream; distinct tags give distinct streams
    Rng fork(uint64_t tag);

private:
    uint64_t next_raw();
    uint64_t state_;
    uint64_t inc_;
};

}  // namespace ppr
