#include "ppr/bytes.hpp"

namespace ppr {

std::vector<uint8_t> mpz_to_bytes(const mpz_class& v) {
    if (v < 0) throw CryptoError("cannot serialize negative value");
    if (v == 0) return {};
    size_t count = 0;
    std::vector<uint8_t> out((mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8);
    mpz_export(out.data(), &count, 1, 1, 0, 0, v.get_mpz_t());
    out.resize(count);
    return out;
}

mpz_class mpz_from_bytes(std::span<const uint8_t> bytes) {
    mpz_class out;
    if (!bytes.empty()) mpz_import(out.get_mpz_t(), bytes.size(), 1, 1, 0, 0, bytes.data());
    return out;
}

void ByteWriter::mpz(const mpz_class& v) {
    auto mag = mpz_to_bytes(v);
    if (mag.size() > 0xffff) throw CryptoError("integer too large for u16 length prefix");
    u16(uint16_t(mag.size()));
    raw(mag);
}

mpz_class ByteReader::mpz() {
    uint16_t len = u16();
    return mpz_from_bytes(raw(len));
}

}  // namespace ppr
