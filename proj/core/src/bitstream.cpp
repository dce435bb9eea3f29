#include "asbc/bitstream.hpp"

#include <zlib.h>

#include <bit>
#include <cmath>
#include <cstring>

namespace asbc {

// --- binary16 ---------------------------------------------------------------

std::uint16_t f16_encode(float v) {
    const std::uint32_t bits = std::bit_cast<std::uint32_t>(v);
    const std::uint32_t sign = (bits >> 16) & 0x8000u;
    const std::int32_t exp = static_cast<std::int32_t>((bits >> 23) & 0xffu) - 127 + 15;
    std::uint32_t mant = bits & 0x7fffffu;

    if (exp >= 31) return static_cast<std::uint16_t>(sign | 0x7c00u);  // overflow -> inf
    if (exp <= 0) {
        // subnormal half: shift mantissa (with implicit 1) right
        if (exp < -10) return static_cast<std::uint16_t>(sign);
        mant |= 0x800000u;
        const int shift = 14 - exp;
        std::uint32_t half_mant = mant >> shift;
        // round to nearest even
        const std::uint32_t rem = mant & ((1u << shift) - 1);
        const std::uint32_t halfway = 1u << (shift - 1);
        if (rem > halfway || (rem == halfway && (half_mant & 1u))) half_mant++;
        return static_cast<std::uint16_t>(sign | half_mant);
    }
    std::uint16_t h = static_cast<std::uint16_t>(sign | (static_cast<std::uint32_t>(exp) << 10) |
                                                 (mant >> 13));
    const std::uint32_t rem = mant & 0x1fffu;
    if (rem > 0x1000u || (rem == 0x1000u && (h & 1u))) h++;  // may carry into exp, still valid
    return h;
}

float f16_decode(std::uint16_t h) {
    const std::uint32_t sign = static_cast<std::uint32_t>(h & 0x8000u) << 16;
    const std::uint32_t exp = (h >> 10) & 0x1fu;
    const std::uint32_t mant = h & 0x3ffu;
    std::uint32_t bits;
    if (exp == 0) {
        if (mant == 0) {
            bits = sign;
        } else {
            // subnormal: renormalize
            int e = -1;
            std::uint32_t m = mant;
            while ((m & 0x400u) == 0) {
                m <<= 1;
                e++;
            }
            m &= 0x3ffu;
            bits = sign | (static_cast<std::uint32_t>(112 - e) << 23) | (m << 13);
        }
    } else if (exp == 31) {
        bits = sign | 0x7f800000u | (mant << 13);
    } else {
        bits = sign | ((exp + 112) << 23) | (mant << 13);
    }
    return std::bit_cast<float>(bits);
}

std::uint16_t f16_encode_ceil(float v) {
    std::uint16_t h = f16_encode(v);
    if ((h & 0x7c00u) == 0x7c00u) return h;  // inf/nan: nothing above
    float back = f16_decode(h);
    if (std::fabs(back) < std::fabs(v)) h++;  // next representable away from zero
    return h;
}

// --- CRC32 ------------------------------------------------------------------

std::uint32_t crc32_ieee(BytesView data) {
    return static_cast<std::uint32_t>(
        ::crc32(0L, reinterpret_cast<const Bytef*>(data.data()),
                static_cast<uInt>(data.size())));
}

// --- ByteWriter -------------------------------------------------------------

void ByteWriter::u16(std::uint16_t v) {
    buf_.push_back(static_cast<std::uint8_t>(v & 0xff));
    buf_.push_back(static_cast<std::uint8_t>(v >> 8));
}

void ByteWriter::u32(std::uint32_t v) {
    for (int i = 0; i < 4; i++) buf_.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xff));
}

void ByteWriter::f32(float v) {
    u32(std::bit_cast<std::uint32_t>(v));
}

void ByteWriter::raw(BytesView bytes) {
    buf_.insert(buf_.end(), bytes.begin(), bytes.end());
}

void ByteWriter::packed_codes(std::span<const std::uint64_t> codes, int width) {
    std::uint64_t acc = 0;
    int nbits = 0;
    const std::uint64_t mask = width >= 64 ? ~0ull : ((1ull << width) - 1);
    for (std::uint64_t c : codes) {
        c &= mask;
        int left = width;
        while (left > 0) {
            const int take = std::min(left, 8 - nbits);
            acc = (acc << take) | ((c >> (left - take)) & ((1ull << take) - 1));
            nbits += take;
            left -= take;
            if (nbits == 8) {
                buf_.push_back(static_cast<std::uint8_t>(acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) buf_.push_back(static_cast<std::uint8_t>(acc << (8 - nbits)));
}

// --- ByteReader -------------------------------------------------------------

void ByteReader::need(std::size_t n) const {
    if (off_ + n > data_.size()) throw DecodeError("truncated input");
}

std::uint8_t ByteReader::u8() {
    need(1);
    return data_[off_++];
}

std::uint16_t ByteReader::u16() {
    need(2);
    std::uint16_t v = static_cast<std::uint16_t>(data_[off_] | (data_[off_ + 1] << 8));
    off_ += 2;
    return v;
}

std::uint32_t ByteReader::u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; i++) v |= static_cast<std::uint32_t>(data_[off_ + i]) << (8 * i);
    off_ += 4;
    return v;
}

float ByteReader::f32() {
    return std::bit_cast<float>(u32());
}

BytesView ByteReader::raw(std::size_t n) {
    need(n);
    BytesView v = data_.subspan(off_, n);
    off_ += n;
    return v;
}

std::vector<std::uint64_t> ByteReader::packed_codes(std::size_t count, int width) {
    const std::size_t nbytes = packed_size_bytes(count, width);
    need(nbytes);
    std::vector<std::uint64_t> out(count, 0);
    std::size_t bitpos = 0;
    for (std::size_t i = 0; i < count; i++) {
        std::uint64_t c = 0;
        for (int b = 0; b < width; b++, bitpos++) {
            const std::uint8_t byte = data_[off_ + bitpos / 8];
            c = (c << 1) | ((byte >> (7 - bitpos % 8)) & 1u);
        }
        out[i] = c;
    }
    off_ += nbytes;
    return out;
}

}  // namespace asbc
