#ifndef ZKCMP_BYTES_HPP
#define ZKCMP_BYTES_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace zkcmp {

/// Thrown when wire-format parsing fails (bad length, trailing bytes,
/// off-curve point, value out of range).
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void write_u32_be(std::vector<uint8_t>& out, uint32_t v) {
    out.push_back(static_cast<uint8_t>(v >> 24));
    out.push_back(static_cast<uint8_t>(v >> 16));
    out.push_back(static_cast<uint8_t>(v >> 8));
    out.push_back(static_cast<uint8_t>(v));
}

/// Bounds-checked sequential reader over a byte buffer.
class ByteReader {
public:
    explicit ByteReader(std::span<const uint8_t> data) : data_(data) {}

    std::span<const uint8_t> take(size_t n) {
        if (remaining() < n) {
            throw FormatError("truncated input: need " + std::to_string(n) +
                              " bytes, have " + std::to_string(remaining()));
        }
        auto out = data_.subspan(pos_, n);
        pos_ += n;
        return out;
    }

    uint32_t u32_be() {
        auto b = take(4);
        return (static_cast<uint32_t>(b[0]) << 24) | (static_cast<uint32_t>(b[1]) << 16) |
               (static_cast<uint32_t>(b[2]) << 8) | static_cast<uint32_t>(b[3]);
    }

    size_t remaining() const { return data_.size() - pos_; }

    void expect_end() const {
        if (remaining() != 0) {
            throw FormatError("trailing bytes: " + std::to_string(remaining()));
        }
    }

private:
    std::span<const uint8_t> data_;
    size_t pos_ = 0;
};

}  // namespace zkcmp

#endif
