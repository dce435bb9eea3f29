#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "asbc/config.hpp"
#include "asbc/metrics.hpp"
#include "asbc/waveform.hpp"

namespace asbc {

struct AsbcLayout {
    std::string label;
    StreamConfig cfg;
};

struct FftPoint {
    std::string label;
    int block_len = 512;  // L
    int kept = 8;         // k
};

// Monte-Carlo rate-distortion sweep: for every codec point and trial,
// synthesize a Markov-switched waveform, run the codec, and score the
// reconstruction. Trials differ only in the generator seed.
struct SweepSpec {
    WaveformSpec waveform;
    double fs = 5400.0;
    int trials = 20;
    std::int64_t transient_skip = -1;  // samples; -1 = codec delay + one block
    std::vector<AsbcLayout> asbc;
    std::vector<FftPoint> fft;
    std::string output_csv;
    std::string output_svg;
};

struct SweepOutcome {
    std::vector<RdPoint> points;           // aggregated, grid order
    std::vector<std::string> failures;     // per-point error notes, sweep continues
};

// Runs grid points in parallel; aggregation order (and therefore the CSV) is
// deterministic given the spec.
SweepOutcome run_sweep(const SweepSpec& spec);

// Minimal SVG line chart of NMSE versus compression ratio (log-eta axis),
// one polyline per label prefix.
std::string render_rd_svg(const std::vector<RdPoint>& points);

}  // namespace asbc
