#pragma once

#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ppr/errors.hpp"

namespace ppr {

// Little-endian binary writer used by all serialization code.
class ByteWriter {
public:
    void u8(uint8_t v) { buf_.push_back(v); }
    void u16(uint16_t v) {
        for (int i = 0; i < 2; ++i) buf_.push_back(uint8_t(v >> (8 * i)));
    }
    void u32(uint32_t v) {
        for (int i = 0; i < 4; ++i) buf_.push_back(uint8_t(v >> (8 * i)));
    }
    void u64(uint64_t v) {
        for (int i = 0; i < 8; ++i) buf_.push_back(uint8_t(v >> (8 * i)));
    }
    void f64(double v) {
        uint64_t bits;
        std::memcpy(&bits, &v, 8);
        u64(bits);
    }
    void raw(std::span<const uint8_t> bytes) { buf_.insert(buf_.end(), bytes.begin(), bytes.end()); }
    // u16 byte-length prefix + big-endian magnitude; value must be >= 0
    void mpz(const mpz_class& v);

    const std::vector<uint8_t>& bytes() const { return buf_; }
    std::vector<uint8_t> take() { return std::move(buf_); }

private:
    std::vector<uint8_t> buf_;
};

// Matching reader; throws ParseError on truncation.
class ByteReader {
public:
    explicit ByteReader(std::span<const uint8_t> data) : data_(data) {}

    uint8_t u8() { return take(1)[0]; }
    uint16_t u16() {
        auto b = take(2);
        return uint16_t(b[0]) | uint16_t(b[1]) << 8;
    }
    uint32_t u32() {
        auto b = take(4);
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= uint32_t(b[i]) << (8 * i);
        return v;
    }
    uint64_t u64() {
        auto b = take(8);
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= uint64_t(b[i]) << (8 * i);
        return v;
    }
    double f64() {
        uint64_t bits = u64();
        double v;
        std::memcpy(&v, &bits, 8);
        return v;
    }
    std::span<const uint8_t> raw(size_t n) { return take(n); }
    mpz_class mpz();

    bool done() const { return pos_ == data_.size(); }
    size_t remaining() const { return data_.size() - pos_; }
    void expect_done() const {
        if (!done()) throw ParseError("trailing bytes after payload");
    }

private:
    std::span<const uint8_t> take(size_t n) {
        if (pos_ + n > data_.size()) throw ParseError("truncated payload");
        auto s = data_.subspan(pos_, n);
        pos_ += n;
        return s;
    }
    std::span<const uint8_t> data_;
    size_t pos_ = 0;
};

// big-endian magnitude of a nonnegative mpz
std::vector<uint8_t> mpz_to_bytes(const mpz_class& v);
mpz_class mpz_from_bytes(std::span<const uint8_t> bytes);

}  // namespace ppr
