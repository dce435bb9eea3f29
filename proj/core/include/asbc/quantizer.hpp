#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace asbc {

// One quantized subband block. Complex samples are split into two components
// of bits/2 each; DC-mode (real) blocks use bits per sample. `scale` is the
// value the wire carries: the block maximum rounded up to binary16, so every
// component fits inside [-scale, scale].
struct QuantizedBlock {
    int subband_index = 0;
    int bits = 0;  // r_k: per complex sample (split) or per real sample
    bool complex_mode = true;
    float scale = 0.0f;
    std::uint32_t count = 0;               // samples (complex counts one per pair)
    std::vector<std::uint64_t> codes;      // one code per component
    // Lossless debug path: raw samples carried verbatim, never serialized.
    bool lossless = false;
    std::vector<std::complex<double>> raw;
};

// Uniform midrise quantization against the block maximum. All-zero blocks
// encode scale 0 with zero codes and dequantize to exact zeros.
QuantizedBlock quantize(std::span<const std::complex<double>> v, int r_bits, int subband_index);
QuantizedBlock quantize(std::span<const double> v, int r_bits, int subband_index);

std::vector<std::complex<double>> dequantize_complex(const QuantizedBlock& q);
std::vector<double> dequantize_real(const QuantizedBlock& q);

// Uncompressed-PCM reference used for the E^uc law: a uniform quantizer
// loaded at twice the signal RMS, the convention under which the distortion
// approximation -6*R_Q + 1.25 dB holds. Returns the round-tripped signal.
std::vector<double> pcm_reference_roundtrip(std::span<const double> x, int r_q);

}  // namespace asbc
