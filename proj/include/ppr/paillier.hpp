#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "ppr/rng.hpp"

namespace ppr::paillier {

using KeyFingerprint = std::array<uint8_t, 8>;

// Public half: n, n^2 and the fingerprint used to tag ciphertexts.
class PublicKey {
public:
    PublicKey() = default;
    explicit PublicKey(mpz_class n);

    const mpz_class& n() const { return n_; }
    const mpz_class& n_squared() const { return n2_; }
    const KeyFingerprint& fingerprint() const { return fp_; }
    unsigned bits() const { return unsigned(mpz_sizeinbase(n_.get_mpz_t(), 2)); }

private:
    mpz_class n_, n2_;
    KeyFingerprint fp_{};
};

// Private half with CRT-accelerated decryption precomputation.
class SecretKey {
public:
    SecretKey() = default;
    SecretKey(const PublicKey& pk, mpz_class p, mpz_class q);

    const PublicKey& public_key() const { return pk_; }
    mpz_class decrypt_value(const mpz_class& c) const;

private:
    PublicKey pk_;
    mpz_class p_, q_, p2_, q2_;
    mpz_class hp_, hq_;     // L_p(g^{p-1} mod p^2)^-1 mod p, and q analogue
    mpz_class q_inv_p_;     // q^-1 mod p
};

struct KeyPair {
    PublicKey pk;
    SecretKey sk;
};

// Ciphertext in Z_{n^2}, tagged with the key fingerprint. Operations on
// ciphertexts under different keys throw CryptoError.
struct Ciphertext {
    mpz_class value;
    KeyFingerprint key_fp{};

    std::vector<uint8_t> serialize() const;
    static Ciphertext deserialize(std::span<const uint8_t> bytes);
    bool operator==(const Ciphertext& o) const = default;
};

inline constexpr unsigned kMinKeyBits = 1024;
inline constexpr unsigned kDefaultKeyBits = 2048;

// Random key pair with n of exactly `bits` bits; bits >= 1024.
KeyPair keygen(unsigned bits, Rng& rng);

// 0 <= m < n required. Encryption is randomized.
Ciphertext enc(const mpz_class& m, const PublicKey& pk, Rng& rng);

// Decrypting a ciphertext under the wrong key yields garbage without
// detection; callers are expected to route ciphertexts by fingerprint.
mpz_class dec(const Ciphertext& c, const SecretKey& sk);

Ciphertext add(const Ciphertext& a, const Ciphertext& b, const PublicKey& pk);
// c * g^k; with `rerandomize` the result is additionally blinded by a fresh r^n
Ciphertext add_plain(const Ciphertext& c, const mpz_class& k, const PublicKey& pk,
                     Rng* rerandomize = nullptr);
Ciphertext sub_plain(const Ciphertext& c, const mpz_class& k, const PublicKey& pk);
Ciphertext scalar_mul(const Ciphertext& c, const mpz_class& k, const PublicKey& pk);

}  // namespace ppr::paillier
