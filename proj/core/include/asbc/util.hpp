#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace asbc {

// Raised by bitstream and frame parsers on malformed input.
struct DecodeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised by configuration and operation precondition checks.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using Bytes = std::vector<std::uint8_t>;
using BytesView = std::span<const std::uint8_t>;

// IEEE 754 binary16 conversions. `f16_encode_ceil` rounds away from zero so
// that the decoded value is never below the input magnitude (quantizer scales
// must cover every sample in the block).
std::uint16_t f16_encode(float v);
std::uint16_t f16_encode_ceil(float v);
float f16_decode(std::uint16_t h);

std::uint32_t crc32_ieee(BytesView data);

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

}  // namespace asbc
