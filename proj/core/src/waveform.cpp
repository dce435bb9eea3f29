#include "asbc/waveform.hpp"

#include <cmath>
#include <random>

#include "asbc/util.hpp"

namespace asbc {

namespace {

void check_common(const WaveformSpec& spec, double fs) {
    if (fs <= 0) throw ConfigError("fs must be positive");
    if (spec.f0 <= 0) throw ConfigError("waveform f0 must be positive");
}

double eval_normal(const WaveformSpec& spec, double t) {
    double v = 0.0;
    int k = 1;
    for (const auto& h : spec.normal) {
        v += h.amp * std::cos(kTwoPi * spec.f0 * k * t + h.phase);
        k++;
    }
    return v;
}

// t is absolute time; t_event the elapsed time since the event began (only
// the chirp ramp uses it).
double eval_event(const EventSpec& ev, const WaveformSpec& spec, double t, double t_event) {
    if (const auto* am = std::get_if<AmEvent>(&ev)) {
        const double env = am->alpha * std::cos(kTwoPi * am->delta_hz * t);
        const double carrier = std::cos(kTwoPi * spec.f0 * t + am->theta0);
        return am->multiplicative ? (am->alpha0 + env) * carrier : am->alpha0 + env * carrier;
    }
    if (const auto* fm = std::get_if<FmEvent>(&ev)) {
        return fm->alpha * std::cos(kTwoPi * spec.f0 * t +
                                    fm->beta * std::cos(kTwoPi * fm->delta_hz * t - kPi) +
                                    fm->theta0);
    }
    if (const auto* ch = std::get_if<ChirpEvent>(&ev)) {
        const double f_start = spec.f0 - 0.5;
        // instantaneous frequency f_start + gamma*t, phase by integration
        return ch->alpha *
               std::cos(kTwoPi * (f_start * t_event + 0.5 * ch->gamma * t_event * t_event) +
                        ch->theta0);
    }
    const auto& ih = std::get<IhEvent>(ev);
    double v = 0.0;
    for (const auto& tone : ih.tones)
        v += tone.amp * std::cos(kTwoPi * tone.freq * t + tone.phase);
    return v;
}

void check_event(const WaveformSpec& spec, double fs, double max_event_time) {
    if (const auto* ch = std::get_if<ChirpEvent>(&spec.event)) {
        if (!std::isfinite(ch->alpha) || !std::isfinite(ch->gamma))
            throw ConfigError("chirp parameters must be finite");
        const double f_end = (spec.f0 - 0.5) + ch->gamma * max_event_time;
        if (f_end <= 0 || f_end >= fs / 2 || spec.f0 - 0.5 >= fs / 2)
            throw ConfigError("chirp instantaneous frequency leaves (0, fs/2) over the block");
    }
    if (const auto* ih = std::get_if<IhEvent>(&spec.event)) {
        for (const auto& tone : ih->tones) {
            const double ratio = tone.freq / spec.f0;
            if (std::abs(ratio - std::round(ratio)) < 1e-9)
                throw ConfigError("interharmonic tone frequency is a multiple of f0");
        }
    }
}

}  // namespace

SampleBlock gen_normal(const WaveformSpec& spec, std::size_t n, double fs) {
    check_common(spec, fs);
    if (n == 0) throw ConfigError("sample count must be positive");
    if (spec.normal.empty()) throw ConfigError("harmonic list must not be empty");
    SampleBlock out;
    out.fs = fs;
    out.samples.resize(n);
    for (std::size_t i = 0; i < n; i++)
        out.samples[i] = eval_normal(spec, static_cast<double>(i) / fs);
    return out;
}

SampleBlock gen_event(const WaveformSpec& spec, std::size_t n, double fs) {
    check_common(spec, fs);
    if (n == 0) throw ConfigError("sample count must be positive");
    check_event(spec, fs, static_cast<double>(n) / fs);
    SampleBlock out;
    out.fs = fs;
    out.samples.resize(n);
    for (std::size_t i = 0; i < n; i++) {
        const double t = static_cast<double>(i) / fs;
        out.samples[i] = eval_event(spec.event, spec, t, t);
    }
    return out;
}

SwitchedSignal gen_switched(const WaveformSpec& spec, double fs) {
    check_common(spec, fs);
    if (spec.duration <= 0) throw ConfigError("duration must be positive");
    if (!(spec.lambda_rate >= 0) || !(spec.mu_rate > 0))
        throw ConfigError("switching rates must be positive (lambda may be 0)");
    if (spec.normal.empty()) throw ConfigError("harmonic list must not be empty");

    const std::size_t n = static_cast<std::size_t>(std::llround(spec.duration * fs));
    SwitchedSignal out;
    out.samples.fs = fs;
    out.samples.samples.resize(n);
    out.state.resize(n);

    std::mt19937_64 rng(spec.seed);
    std::exponential_distribution<double> hold_normal(spec.lambda_rate > 0 ? spec.lambda_rate : 1.0);
    std::exponential_distribution<double> hold_event(spec.mu_rate);

    // Continuous-time switching path, snapped to the sample grid.
    struct Segment {
        std::size_t start;
        std::size_t end;  // one past
        int state;
        double t_start;   // segment onset in continuous time
    };
    std::vector<Segment> segments;
    double t = 0.0;
    int state = 0;
    std::size_t cursor = 0;
    while (cursor < n) {
        double hold;
        if (state == 0) {
            hold = spec.lambda_rate > 0 ? hold_normal(rng)
                                        : spec.duration + 1.0;  // lambda -> 0: never switches
            if (spec.lambda_rate > 0) out.normal_sojourns.push_back(hold);
        } else {
            hold = hold_event(rng);
            out.event_sojourns.push_back(hold);
        }
        const double t_end = t + hold;
        std::size_t end = static_cast<std::size_t>(std::llround(t_end * fs));
        if (end > n) end = n;
        if (end > cursor) segments.push_back({cursor, end, state, t});
        cursor = std::max(cursor, end);
        t = t_end;
        state = 1 - state;
    }
    // Chirp Nyquist check against the event spans actually realized.
    double longest_event = 0.0;
    for (const auto& seg : segments) {
        if (seg.state == 1)
            longest_event = std::max(longest_event, static_cast<double>(seg.end) / fs - seg.t_start);
    }
    check_event(spec, fs, longest_event);

    std::normal_distribution<double> noise(0.0, spec.noise_std);
    for (const auto& seg : segments) {
        for (std::size_t i = seg.start; i < seg.end; i++) {
            const double ti = static_cast<double>(i) / fs;
            double v;
            if (seg.state == 0) {
                v = eval_normal(spec, ti);
            } else {
                v = eval_event(spec.event, spec, ti, ti - seg.t_start);
            }
            out.samples.samples[i] = v;
            out.state[i] = static_cast<std::uint8_t>(seg.state);
        }
    }
    if (spec.noise_std > 0) {
        for (auto& v : out.samples.samples) v += noise(rng);
    }
    return out;
}

}  // namespace asbc
