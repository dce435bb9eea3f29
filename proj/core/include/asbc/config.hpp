#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace asbc {

// One harmonic subband: a band of width `width` centred at index*f0.
// The downsampling factor is always derived from the width.
struct SubbandSpec {
    int index = 1;           // harmonic order k (1..K)
    double width = 6.0;      // passband bandwidth W_k, Hz
    int s_k = 0;             // = ceil(fs / width), filled by derive()
    int r_k = 16;            // quantizer bits per complex sample (even, split re/im)
    bool always_on = false;  // bypass the activity detector (mandatory for k = 1)
};

// Shared encoder/decoder contract. Everything the decoder needs to mirror the
// encoder bit-exactly is either stored here or derived deterministically.
//
// f0 == 0 selects the DC-centred mode used for near-constant series (PMU
// frequency estimates): a single real subband at baseband, unit mixer, no
// sqrt(2) analysis gain, samples quantized as reals at r_k bits each.
struct StreamConfig {
    double fs = 6000.0;            // sampling frequency, Hz (integral)
    double f0 = 60.0;              // system frequency, Hz (centihertz resolution)
    int k_max = 1;                 // number of harmonic subbands K
    std::vector<SubbandSpec> subbands;
    int r_q = 12;                  // uncompressed quantization, bits/sample
    int r_e = 2;                   // interharmonic branch budget, bits/sample
    std::uint32_t block_len = 1000;  // activity-detection block, full-rate samples
    double detector_threshold = 1e-4;  // relative to subband-1 energy
    double stop_atten_db = 0.0;    // 0 = canonical value (see canonical_stop_atten)

    bool dc_mode() const { return f0 == 0.0; }

    // Filter parameters must be derivable from the stream header alone, so the
    // wire format only admits the canonical attenuation per mode.
    double canonical_stop_atten() const { return dc_mode() ? 100.0 : 60.0; }
    double effective_stop_atten() const {
        return stop_atten_db > 0.0 ? stop_atten_db : canonical_stop_atten();
    }

    // Fills s_k from fs/width; leaves everything else untouched.
    void derive();
    // Throws ConfigError on any violated invariant.
    void validate() const;

    const SubbandSpec& band(int k) const;  // 1-based harmonic order
};

// Builds a validated config. `bands` holds (width_hz, r_k) per harmonic in
// ascending order; block_len 0 picks the smallest multiple of every s_k that
// covers ten fundamental cycles (half a second in DC mode).
StreamConfig make_stream_config(double fs, double f0,
                                const std::vector<std::pair<double, int>>& bands,
                                int r_q, int r_e,
                                double detector_threshold = 1e-4,
                                std::uint32_t block_len = 0);

}  // namespace asbc
