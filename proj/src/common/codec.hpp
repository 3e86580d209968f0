#ifndef ANONCROWD_COMMON_CODEC_HPP_
#define ANONCROWD_COMMON_CODEC_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "common/bytes.hpp"

namespace anoncrowd {

struct DecodeError : std::runtime_error {
    explicit DecodeError(const std::string& what) : std::runtime_error(what) {}
};

// Canonical length-prefixed byte encoding. Every variable-length field is
// written as u64-LE length followed by the raw bytes, so distinct field
// sequences never collide under concatenation.
class Encoder {
  public:
    Encoder& u8(uint8_t v) {
        out_.push_back(v);
        return *this;
    }
    Encoder& u32(uint32_t v) {
        for (int i = 0; i < 4; ++i) out_.push_back(uint8_t(v >> (8 * i)));
        return *this;
    }
    Encoder& u64(uint64_t v) {
        for (int i = 0; i < 8; ++i) out_.push_back(uint8_t(v >> (8 * i)));
        return *this;
    }
    Encoder& bytes(ByteView v) {
        u64(v.size());
        append(out_, v);
        return *this;
    }
    // Optional field: 0x00 = absent, 0x01 + length-prefixed payload.
    Encoder& opt_bytes(const std::optional<Bytes>& v) {
        if (v) {
            u8(1);
            bytes(*v);
        } else {
            u8(0);
        }
        return *this;
    }
    Bytes take() { return std::move(out_); }
    const Bytes& view() const { return out_; }

  private:
    Bytes out_;
};

class Decoder {
  public:
    explicit Decoder(ByteView data) : data_(data) {}

    uint8_t u8() {
        need(1);
        return data_[pos_++];
    }
    uint32_t u32() {
        need(4);
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= uint32_t(data_[pos_++]) << (8 * i);
        return v;
    }
    uint64_t u64() {
        need(8);
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= uint64_t(data_[pos_++]) << (8 * i);
        return v;
    }
    Bytes bytes() {
        uint64_t n = u64();
        if (n > remaining()) throw DecodeError("length prefix exceeds input");
        Bytes v(data_.begin() + pos_, data_.begin() + pos_ + n);
        pos_ += n;
        return v;
    }
    std::optional<Bytes> opt_bytes() {
        uint8_t flag = u8();
        if (flag == 0) return std::nullopt;
        if (flag != 1) throw DecodeError("bad optional flag");
        return bytes();
    }
    size_t remaining() const { return data_.size() - pos_; }
    void expect_end() const {
        if (pos_ != data_.size()) throw DecodeError("trailing bytes");
    }

  private:
    void need(size_t n) const {
        if (remaining() < n) throw DecodeError("input truncated");
    }
    ByteView data_;
    size_t pos_ = 0;
};

}  // namespace anoncrowd

#endif
