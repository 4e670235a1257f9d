#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "ppr/rng.hpp"

namespace ppr::khprf {

// Exact key-homomorphic PRF: eval(k, m) = H(m)^k on a prime-order group
// (NPR-style DDH construction over NIST P-256). Outputs under keys k1 and
// k2 combine, via the group operation, into the output under k1+k2.

// 33-byte compressed point; the all-zero string encodes the identity.
inline constexpr size_t kOutputBytes = 33;

struct Output {
    std::array<uint8_t, kOutputBytes> bytes{};
    bool operator==(const Output& o) const = default;
};

// scalar mod the group order; protocol integers (< 2^121) embed injectively
class Key {
public:
    Key() = default;
    explicit Key(const mpz_class& v);

    const mpz_class& value() const { return v_; }
    bool operator==(const Key& o) const = default;

private:
    mpz_class v_;
};

// prime order of the instantiating group
const mpz_class& group_order();

Key random_key(Rng& rng);
Key key_add(const Key& k, const mpz_class& delta);
Key key_sub(const Key& k, const mpz_class& delta);

// deterministic in (k, m)
Output eval(const Key& k, std::span<const uint8_t> m);

// group operation on outputs; meaningful when both were evaluated on the
// same message (caller's responsibility)
Output combine(const Output& a, const Output& b);

Output identity_output();

}  // namespace ppr::khprf
