#include "ppr/paillier.hpp"

#include <openssl/sha.h>

#include "ppr/bytes.hpp"
#include "ppr/errors.hpp"

namespace ppr::paillier {

namespace {

KeyFingerprint fingerprint_of(const mpz_class& n) {
    auto bytes = mpz_to_bytes(n);
    std::array<uint8_t, SHA256_DIGEST_LENGTH> digest;
    SHA256(bytes.data(), bytes.size(), digest.data());
    KeyFingerprint fp;
    std::copy_n(digest.begin(), fp.size(), fp.begin());
    return fp;
}

void check_same_key(const Ciphertext& c, const PublicKey& pk) {
    if (c.key_fp != pk.fingerprint()) throw CryptoError("ciphertext/key fingerprint mismatch");
}

// L(x) = (x - 1) / d
mpz_class L(const mpz_class& x, const mpz_class& d) { return (x - 1) / d; }

mpz_class random_prime(unsigned bits, Rng& rng) {
    // top two bits set so that the product of two such primes has exactly 2*bits bits
    mpz_class base = rng.mpz_bits(bits - 2);
    mpz_class top = (mpz_class(3) << (bits - 2)) | base | 1;
    mpz_class p;
    mpz_nextprime(p.get_mpz_t(), top.get_mpz_t());
    // nextprime may overflow the bit budget; retry from a fresh draw
    while (mpz_sizeinbase(p.get_mpz_t(), 2) != bits) {
        base = rng.mpz_bits(bits - 2);
        top = (mpz_class(3) << (bits - 2)) | base | 1;
        mpz_nextprime(p.get_mpz_t(), top.get_mpz_t());
    }
    return p;
}

}  // namespace

PublicKey::PublicKey(mpz_class n) : n_(std::move(n)), n2_(n_ * n_), fp_(fingerprint_of(n_)) {}

SecretKey::SecretKey(const PublicKey& pk, mpz_class p, mpz_class q)
    : pk_(pk), p_(std::move(p)), q_(std::move(q)) {
    p2_ = p_ * p_;
    q2_ = q_ * q_;
    // with g = n + 1: g^(p-1) mod p^2 = 1 + (p-1)*n mod p^2
    mpz_class gp = (1 + (p_ - 1) * pk_.n()) % p2_;
    mpz_class gq = (1 + (q_ - 1) * pk_.n()) % q2_;
    mpz_class lp = L(gp, p_) % p_;
    mpz_class lq = L(gq, q_) % q_;
    if (mpz_invert(hp_.get_mpz_t(), lp.get_mpz_t(), p_.get_mpz_t()) == 0 ||
        mpz_invert(hq_.get_mpz_t(), lq.get_mpz_t(), q_.get_mpz_t()) == 0)
        throw CryptoError("degenerate Paillier key");
    if (mpz_invert(q_inv_p_.get_mpz_t(), q_.get_mpz_t(), p_.get_mpz_t()) == 0)
        throw CryptoError("p, q not coprime");
}

mpz_class SecretKey::decrypt_value(const mpz_class& c) const {
    mpz_class cp, cq, ep = p_ - 1, eq = q_ - 1;
    mpz_powm(cp.get_mpz_t(), c.get_mpz_t(), ep.get_mpz_t(), p2_.get_mpz_t());
    mpz_powm(cq.get_mpz_t(), c.get_mpz_t(), eq.get_mpz_t(), q2_.get_mpz_t());
    mpz_class mp = (L(cp, p_) * hp_) % p_;
    mpz_class mq = (L(cq, q_) * hq_) % q_;
    // Garner: m = mq + q * ((mp - mq) * q^-1 mod p)
    mpz_class diff = ((mp - mq) * q_inv_p_) % p_;
    if (diff < 0) diff += p_;
    return mq + q_ * diff;
}

KeyPair keygen(unsigned bits, Rng& rng) {
    if (bits < kMinKeyBits) throw ConfigError("Paillier key size below 1024-bit floor");
    if (bits % 2 != 0) throw ConfigError("Paillier key size must be even");
    mpz_class p, q;
    do {
        p = random_prime(bits / 2, rng);
        q = random_prime(bits / 2, rng);
    } while (p == q);
    PublicKey pk(p * q);
    return {pk, SecretKey(pk, p, q)};
}

Ciphertext enc(const mpz_class& m, const PublicKey& pk, Rng& rng) {
    if (m < 0 || m >= pk.n()) throw CryptoError("plaintext out of [0, n)");
    mpz_class r;
    do {
        r = rng.mpz_below(pk.n());
    } while (r == 0 || gcd(r, pk.n()) != 1);
    mpz_class rn;
    mpz_powm(rn.get_mpz_t(), r.get_mpz_t(), pk.n().get_mpz_t(), pk.n_squared().get_mpz_t());
    mpz_class c = ((1 + m * pk.n()) % pk.n_squared()) * rn % pk.n_squared();
    return {c, pk.fingerprint()};
}

mpz_class dec(const Ciphertext& c, const SecretKey& sk) {
    check_same_key(c, sk.public_key());
    return sk.decrypt_value(c.value);
}

Ciphertext add(const Ciphertext& a, const Ciphertext& b, const PublicKey& pk) {
    check_same_key(a, pk);
    check_same_key(b, pk);
    return {a.value * b.value % pk.n_squared(), pk.fingerprint()};
}

Ciphertext add_plain(const Ciphertext& c, const mpz_class& k, const PublicKey& pk,
                     Rng* rerandomize) {
    check_same_key(c, pk);
    mpz_class kk = k % pk.n();
    if (kk < 0) kk += pk.n();
    mpz_class v = c.value * ((1 + kk * pk.n()) % pk.n_squared()) % pk.n_squared();
    if (rerandomize != nullptr) {
        mpz_class r;
        do {
            r = rerandomize->mpz_below(pk.n());
        } while (r == 0 || gcd(r, pk.n()) != 1);
        mpz_class rn;
        mpz_powm(rn.get_mpz_t(), r.get_mpz_t(), pk.n().get_mpz_t(), pk.n_squared().get_mpz_t());
        v = v * rn % pk.n_squared();
    }
    return {v, pk.fingerprint()};
}

Ciphertext sub_plain(const Ciphertext& c, const mpz_class& k, const PublicKey& pk) {
    mpz_class kk = k % pk.n();
    if (kk < 0) kk += pk.n();
    return add_plain(c, pk.n() - kk, pk);
}

Ciphertext scalar_mul(const Ciphertext& c, const mpz_class& k, const PublicKey& pk) {
    check_same_key(c, pk);
    mpz_class kk = k % pk.n();
    if (kk < 0) kk += pk.n();
    mpz_class v;
    mpz_powm(v.get_mpz_t(), c.value.get_mpz_t(), kk.get_mpz_t(), pk.n_squared().get_mpz_t());
    return {v, pk.fingerprint()};
}

std::vector<uint8_t> Ciphertext::serialize() const {
    ByteWriter w;
    auto mag = mpz_to_bytes(value);
    if (mag.size() > 0xffff) throw CryptoError("ciphertext too large");
    w.u16(uint16_t(mag.size()));
    w.raw(mag);
    w.raw(std::span<const uint8_t>(key_fp.data(), key_fp.size()));
    return w.take();
}

Ciphertext Ciphertext::deserialize(std::span<const uint8_t> bytes) {
    ByteReader r(bytes);
    uint16_t len = r.u16();
    mpz_class v = mpz_from_bytes(r.raw(len));
    Ciphertext c;
    c.value = std::move(v);
    auto fp = r.raw(8);
    std::copy(fp.begin(), fp.end(), c.key_fp.begin());
    r.expect_done();
    return c;
}

}  // namespace ppr::paillier
