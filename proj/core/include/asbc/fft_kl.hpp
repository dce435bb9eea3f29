#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "asbc/bitstream.hpp"
#include "asbc/util.hpp"

namespace asbc {

struct FftEntry {
    std::uint16_t bin = 0;
    float re = 0.0f;
    float im = 0.0f;
};

// One FFT-(k,L) coded block: the k largest-magnitude positive-frequency bins
// (DC and Nyquist included, counted once in energy terms), under the unitary
// DFT convention. Entries are sorted by bin index.
struct FftBlockCode {
    std::uint16_t block_len = 0;  // L
    std::uint16_t kept = 0;       // k
    std::vector<FftEntry> entries;
    std::uint16_t valid_len = 0;  // < L when the source block was zero-padded
};

// Blocks x into L-sample chunks (the last one zero-padded) and keeps the k
// largest positive-frequency coefficients per chunk. Ties break toward the
// lower bin. Throws ConfigError when k > L/2 or L < 2.
std::vector<FftBlockCode> fft_kl_encode(std::span<const double> x, int L, int k);

// Zero-filled inverse transform, conjugate-mirrored for a real result; blocks
// are concatenated and padding is trimmed.
std::vector<double> fft_kl_decode(const std::vector<FftBlockCode>& codes);

struct FftKlResult {
    double eta = 0.0;      // L/k (frequency-location bits ignored)
    double nmse_db = 0.0;  // closed form: 10 log10(1 - retained/total energy)
};

// Closed-form rate/distortion of codes produced from x. The energy ratio uses
// the same unitary convention as the codec, so it matches the time-domain
// round-trip NMSE up to float rounding.
FftKlResult fft_kl_metrics(std::span<const double> x, const std::vector<FftBlockCode>& codes);

// Wire layout: L u16 | k u16 | k x (bin u16, re f32, im f32), little-endian.
void serialize_fft_block(const FftBlockCode& code, ByteWriter& out);
FftBlockCode parse_fft_block(ByteReader& in);

}  // namespace asbc
