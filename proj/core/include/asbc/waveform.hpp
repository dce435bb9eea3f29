#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "asbc/signal.hpp"

namespace asbc {

struct Harmonic {
    double amp = 0.0;
    double phase = 0.0;  // radians
};

// Event waveforms. Parameters follow the usual dynamic-compliance test
// shapes: amplitude modulation, phase/frequency modulation, a linear
// frequency ramp, and a bundle of interharmonic tones.
struct AmEvent {
    double alpha0 = 1.0;  // additive offset; carrier amplitude when multiplicative
    double alpha = 0.1;
    double delta_hz = 1.0;   // modulation frequency
    double theta0 = 0.0;
    bool multiplicative = false;  // (alpha0 + alpha cos)·carrier instead of alpha0 + alpha cos·carrier
};

struct FmEvent {
    double alpha = 1.0;
    double beta = 0.1;      // phase modulation index, radians
    double delta_hz = 1.0;  // modulation frequency
    double theta0 = 0.0;
};

// Instantaneous frequency (f0 - 0.5) + gamma*t, integrated phase.
struct ChirpEvent {
    double alpha = 1.0;
    double gamma = 10.0;  // Hz per second
    double theta0 = 0.0;
};

struct IhTone {
    double amp = 0.0;
    double freq = 0.0;  // Hz, must not be an integer multiple of f0
    double phase = 0.0;
};

struct IhEvent {
    std::vector<IhTone> tones;
};

using EventSpec = std::variant<AmEvent, FmEvent, ChirpEvent, IhEvent>;

// Synthetic test-signal description: steady harmonic content plus one event
// type, alternating under a two-state Markov process with rates lambda
// (normal -> event) and mu (event -> normal).
struct WaveformSpec {
    std::vector<Harmonic> normal;  // harmonic k (1-based) at k*f0
    EventSpec event = AmEvent{};
    double lambda_rate = 0.1;  // 1/s; expected normal holding time 1/lambda
    double mu_rate = 2.0;      // 1/s; expected event holding time 1/mu
    double duration = 10.0;    // seconds
    std::uint64_t seed = 1;
    double f0 = 60.0;
    double noise_std = 0.0;  // additive white noise applied by gen_switched
};

// Steady-state harmonic sum evaluated from t = 0.
SampleBlock gen_normal(const WaveformSpec& spec, std::size_t n, double fs);

// Event waveform evaluated from t = 0.
SampleBlock gen_event(const WaveformSpec& spec, std::size_t n, double fs);

struct SwitchedSignal {
    SampleBlock samples;
    std::vector<std::uint8_t> state;  // sigma per sample: 0 normal, 1 event
    // Continuous-time holding draws behind the trace, for distribution checks.
    std::vector<double> normal_sojourns;
    std::vector<double> event_sojourns;
};

// Markov-switched waveform over spec.duration seconds. Sojourns are drawn in
// continuous time and snapped to the sample grid. Waveforms are evaluated at
// absolute time, except the chirp ramp restarts at each event onset so its
// instantaneous frequency stays bounded.
SwitchedSignal gen_switched(const WaveformSpec& spec, double fs);

}  // namespace asbc
