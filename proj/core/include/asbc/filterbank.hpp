#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "asbc/config.hpp"
#include "asbc/fir.hpp"
#include "asbc/mixer.hpp"
#include "asbc/signal.hpp"

namespace asbc {

// Complex baseband image of one harmonic subband.
struct BasebandSignal {
    std::vector<std::complex<double>> samples;
    int subband_index = 1;
    double rate = 0.0;           // Hz: fs at full rate, fs/s_k after decimation
    std::int64_t alignment = 0;  // full-rate index of samples[0], delay-compensated
};

// Analysis/synthesis filters shared by every stage of one stream. All
// subbands with equal width share taps; the mixer supplies the per-harmonic
// shift. Construction is deterministic from the config, which is what lets
// the decoder rebuild the identical bank from the stream header.
struct FilterBank {
    explicit FilterBank(const StreamConfig& cfg);

    const FirFilter& analysis(int k) const;  // 1-based subband order
    // Interpolation taps: analysis prototype rescaled to DC gain s_k.
    const std::vector<double>& interp_taps(int k) const;

    int analysis_delay(int k) const;
    int synth_delay(int k) const;
    // Fixed codec group delay: max over subbands of analysis+synthesis delay.
    int total_delay() const { return total_delay_; }

    StreamConfig cfg;
    HarmonicMixer mixer;

  private:
    std::vector<FirFilter> analysis_;           // one per subband
    std::vector<std::vector<double>> interp_;   // per subband, gain s_k
    int total_delay_ = 0;
};

// ---------------------------------------------------------------------------
// One-shot operations (whole-signal, used by tests and offline paths).

struct AnalysisResult {
    std::vector<BasebandSignal> bands;  // full rate, aligned with the input
    SampleBlock residual;               // y_e = x - sqrt(2) Re sum_k y_k e^{jkw0n}
    int transient_len = 0;              // leading samples inside filter warm-up
};

// Full-rate subband decomposition of x. Output index n holds the baseband
// value for input time n (delay compensated; the input is taken as zero
// outside its extent).
AnalysisResult analyze(const SampleBlock& x, const StreamConfig& cfg);

// Keeps every s_k-th sample counted on the absolute full-rate grid.
BasebandSignal decimate(const BasebandSignal& y, int s_k);

struct SynthesisResult {
    SampleBlock samples;
    int transient_len = 0;
};

// Mirror reconstruction from decimated subband streams plus an optional raw
// residual. All streams must share block alignment. The result is aligned
// with the original input timeline (group delay compensated).
SynthesisResult synthesize(const std::vector<BasebandSignal>& streams,
                           const SampleBlock* residual, const StreamConfig& cfg);

// ---------------------------------------------------------------------------
// Streaming primitives (block pipeline; used by the codec).

// Mix + lowpass evaluated only on the decimated grid (n % s_k == 0).
class DecimatingAnalyzer {
  public:
    DecimatingAnalyzer(const FilterBank& bank, int k);

    // Consumes block_len input samples starting at absolute index n0 and
    // appends the block's decimated baseband samples to `out`.
    void push_block(std::span<const double> x, std::int64_t n0,
                    std::vector<std::complex<double>>& out);

  private:
    const FilterBank* bank_;
    int k_;
    int s_k_;
    std::vector<std::complex<double>> hist_;  // last taps-1 mixed samples
};

// Zero-insertion upsampler + interpolation filter for one subband, evaluated
// with stride tricks (only non-zero inputs contribute).
class Interpolator {
  public:
    Interpolator(const FilterBank& bank, int k);

    // Consumes one block of decimated samples (block_len / s_k of them) and
    // produces block_len full-rate outputs.
    void push_block(std::span<const std::complex<double>> xq,
                    std::span<std::complex<double>> out);

  private:
    const std::vector<double>* taps_;
    int s_k_ = 1;
    std::int64_t pos_ = 0;                    // full-rate index of next output
    std::vector<std::complex<double>> hist_;  // past decimated samples
};

// Decoder-side (and encoder-mirror) reconstruction of the harmonic part.
// Feeding the same dequantized blocks in the same order reproduces the same
// doubles on both sides of the wire.
class SynthesisBank {
  public:
    explicit SynthesisBank(std::shared_ptr<const FilterBank> bank);

    // `subband_samples[k-1]` holds the dequantized decimated samples of
    // subband k for this block (zeros when masked). Appends block_len
    // reconstruction samples r[t]; the first output corresponds to
    // t = seq*block_len - total_delay.
    void push_block(const std::vector<std::vector<std::complex<double>>>& subband_samples,
                    std::vector<double>& r_out);

    std::int64_t blocks_fed() const { return blocks_; }

  private:
    std::shared_ptr<const FilterBank> bank_;
    std::vector<Interpolator> interp_;
    std::vector<std::complex<double>> v_;  // scratch, one block
    std::int64_t blocks_ = 0;
};

}  // namespace asbc
