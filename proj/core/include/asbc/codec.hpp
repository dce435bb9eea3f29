#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "asbc/config.hpp"
#include "asbc/filterbank.hpp"
#include "asbc/frame.hpp"

namespace asbc {

// Payload accounting across a session. `p_hat` values are the empirical
// per-subband activity fractions that feed the predicted-rate formula.
struct RateLedger {
    std::uint64_t total_source_samples = 0;
    std::uint64_t blocks = 0;
    std::vector<std::uint64_t> subband_bits;    // per harmonic subband
    std::uint64_t ih_bits = 0;
    std::vector<std::uint64_t> active_blocks;   // per harmonic subband
    std::uint64_t ih_active_blocks = 0;

    std::uint64_t total_payload_bits() const;
    double p_hat(int k) const;   // 1-based subband order
    double p_hat_ih() const;
};

struct RateReport {
    double measured_bps = 0.0;
    double predicted_bps = 0.0;
    double measured_ratio = 0.0;
    double predicted_ratio = 0.0;
};

// Measured ratio uses payload bits only (protocol overhead excluded);
// predicted evaluates the closed-form ASBC rate at the empirical activity
// fractions. Throws on an empty ledger.
RateReport rate_report(const RateLedger& ledger, const StreamConfig& cfg);

struct CodecOptions {
    // Lossless debug mode: subband samples and the residual are carried raw
    // (in-memory frames only) and the interharmonic branch is always on.
    bool lossless = false;
};

// Per-block energy detector. Returns true when the mean per-sample energy
// exceeds threshold * ref_energy. Subband 1 is handled by its always_on flag
// upstream; this is the bare detector.
bool detect_activity(double mean_energy, double threshold, double ref_energy);

// Streaming encoder. One instance per stream; feed exactly block_len samples
// per call. The transmitted residual is computed against an internal mirror
// of the decoder's reconstruction, so "harmonics + residual" is exact by
// construction whenever the interharmonic branch fires.
class Encoder {
  public:
    explicit Encoder(const StreamConfig& cfg, CodecOptions opt = {});

    Frame encode_block(std::span<const double> x);

    const RateLedger& ledger() const { return ledger_; }
    const StreamConfig& config() const { return bank_->cfg; }
    const FilterBank& filter_bank() const { return *bank_; }
    // Fixed codec delay in samples: decoder output index o corresponds to
    // encoder input index o - delay_samples().
    int delay_samples() const { return bank_->total_delay(); }
    // Blocks whose interharmonic detector is suppressed while the filter
    // state warms up from zero.
    std::uint32_t warmup_blocks() const { return warmup_blocks_; }
    std::uint32_t next_seq() const { return seq_; }
    int ih_coeff_budget() const { return ih_coeffs_; }

  private:
    std::shared_ptr<const FilterBank> bank_;
    CodecOptions opt_;
    std::vector<DecimatingAnalyzer> analyzers_;
    SynthesisBank mirror_;
    std::vector<double> x_delay_;  // last delay_samples() inputs
    std::vector<std::uint32_t> inactivity_runs_;
    RateLedger ledger_;
    std::uint32_t seq_ = 0;
    std::uint32_t warmup_blocks_ = 0;
    int ih_coeffs_ = 0;  // FFT-(k,L) coefficients per interharmonic block
};

struct GapReport {
    std::uint32_t gaps = 0;          // missing frames zero-filled so far
    std::uint32_t last_gap_len = 0;
};

// Streaming decoder, the mirror of Encoder. decode_block returns block_len
// samples per frame consumed; a sequence gap first zero-fills the missing
// blocks (keeping filter state aligned) and returns their samples too.
class Decoder {
  public:
    explicit Decoder(const StreamConfig& cfg, CodecOptions opt = {});

    std::vector<double> decode_block(const Frame& f);

    const StreamConfig& config() const { return bank_->cfg; }
    int delay_samples() const { return bank_->total_delay(); }
    const GapReport& gap_report() const { return gaps_; }
    std::uint32_t next_seq() const { return expected_seq_; }

  private:
    std::vector<double> reconstruct_block(const Frame* f);

    std::shared_ptr<const FilterBank> bank_;
    CodecOptions opt_;
    SynthesisBank synth_;
    GapReport gaps_;
    std::uint32_t expected_seq_ = 0;
};

// Number of FFT coefficients per interharmonic block such that the payload
// (entries plus the L,k prefix) meets r_e bits per full-rate sample.
int ih_coeff_budget(std::uint32_t block_len, int r_e);

// ---------------------------------------------------------------------------
// Whole-stream helpers (header + frames; used by the CLI and tests).

struct DecodedStream {
    StreamConfig cfg;
    std::vector<double> samples;  // delayed by delay_samples() vs encoder input
    GapReport gaps;
    int delay_samples = 0;
};

// Encodes x (zero-padded to whole blocks, plus enough zero blocks to flush
// the codec delay) into header + frames.
Bytes encode_stream(std::span<const double> x, const StreamConfig& cfg,
                    CodecOptions opt = {}, RateLedger* ledger_out = nullptr);
DecodedStream decode_stream(BytesView bytes);

}  // namespace asbc
