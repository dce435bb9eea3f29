#pragma once

#include <cstdint>
#include <vector>

#include "asbc/bitstream.hpp"
#include "asbc/config.hpp"
#include "asbc/quantizer.hpp"
#include "asbc/util.hpp"

namespace asbc {

// Per-block detector output: w[k-1] for harmonic subbands, w[K] for the
// interharmonic branch. w[0] is pinned to 1 (subband 1 bypasses detection).
struct ActivityDecision {
    std::uint32_t block_index = 0;
    std::vector<bool> w;
};

// One encoded block. `payloads` carries the active harmonic subbands in
// ascending order; masked subbands contribute no payload at all.
// `inactivity_runs` is decoder-facing bookkeeping (current masked-run length
// per subband); it is implied by the activity bitmaps and never serialized.
struct Frame {
    std::uint32_t seq = 0;
    std::vector<bool> activity;            // K+1 bits, bit K = interharmonic
    std::vector<QuantizedBlock> payloads;
    Bytes ih_payload;                      // serialized FFT-(k,L) block
    std::vector<std::uint32_t> inactivity_runs;
    // Lossless debug path: raw residual, never serialized.
    std::vector<double> ih_raw;

    bool ih_active() const { return !activity.empty() && activity.back(); }
};

// Stream header (wire layout, all integers little-endian):
//   "ASBC" | version u8=1 | fs_hz u32 | f0_centihz u16 | K u8 | r_q u8 |
//   r_e u8 | block_len u32 | K x (width_centihz u16, r_k u8) |
//   config_hash u32 (CRC32 of all preceding header bytes)
Bytes serialize_header(const StreamConfig& cfg);
StreamConfig parse_header(ByteReader& in);

// Frame (wire layout):
//   seq u32 | payload_len u32 | activity bitmap ceil((K+1)/8) bytes, bit i =
//   byte[i/8] >> (i%8), bit 0 = subband 1, bit K = interharmonic | per active
//   subband ascending k: scale f16 | count u16 | codes bit-packed MSB-first |
//   if interharmonic active: ih_len u16 | FFT-(k,L) payload
// payload_len counts every byte after itself. Lossless debug frames are
// in-memory only and rejected here.
Bytes serialize_frame(const Frame& f, const StreamConfig& cfg);
Frame parse_frame(ByteReader& in, const StreamConfig& cfg);

// Payload bits as counted by the rate ledger: quantizer code bits plus the
// serialized interharmonic payload; scale/count/bitmap framing is protocol
// overhead and excluded.
std::uint64_t frame_payload_bits(const Frame& f);

}  // namespace asbc
