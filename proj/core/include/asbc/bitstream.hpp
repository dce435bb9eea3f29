#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "asbc/util.hpp"

namespace asbc {

// Append-only byte buffer with little-endian scalar writers and an MSB-first
// bit packer for quantizer codes.
class ByteWriter {
  public:
    void u8(std::uint8_t v) { buf_.push_back(v); }
    void u16(std::uint16_t v);
    void u32(std::uint32_t v);
    void f32(float v);
    void raw(BytesView bytes);

    // Packs the low `width` bits of each code, MSB first, then pads the last
    // byte with zero bits.
    void packed_codes(std::span<const std::uint64_t> codes, int width);

    const Bytes& bytes() const { return buf_; }
    Bytes take() { return std::move(buf_); }
    std::size_t size() const { return buf_.size(); }

  private:
    Bytes buf_;
};

// Forward-only reader over a byte span. All getters throw DecodeError when
// the input is shorter than the requested field.
class ByteReader {
  public:
    explicit ByteReader(BytesView data) : data_(data) {}

    std::uint8_t u8();
    std::uint16_t u16();
    std::uint32_t u32();
    float f32();
    BytesView raw(std::size_t n);
    std::vector<std::uint64_t> packed_codes(std::size_t count, int width);

    std::size_t offset() const { return off_; }
    std::size_t remaining() const { return data_.size() - off_; }
    bool empty() const { return off_ == data_.size(); }

  private:
    void need(std::size_t n) const;
    BytesView data_;
    std::size_t off_ = 0;
};

inline std::size_t packed_size_bytes(std::size_t count, int width) {
    return (count * static_cast<std::size_t>(width) + 7) / 8;
}

}  // namespace asbc
