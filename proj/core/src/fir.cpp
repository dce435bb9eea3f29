#include "asbc/fir.hpp"

#include <cmath>

#include "asbc/util.hpp"

namespace asbc {

namespace {

double kaiser_beta(double atten_db) {
    if (atten_db > 50.0) return 0.1102 * (atten_db - 8.7);
    if (atten_db >= 21.0) return 0.5842 * std::pow(atten_db - 21.0, 0.4) + 0.07886 * (atten_db - 21.0);
    return 0.0;
}

double sinc(double x) {
    if (x == 0.0) return 1.0;
    return std::sin(kPi * x) / (kPi * x);
}

}  // namespace

FirFilter design_kaiser_lowpass(const LowpassDesign& d) {
    if (d.fs <= 0) throw ConfigError("fs must be positive");
    if (!(d.pass_edge_hz > 0) || !(d.stop_edge_hz > d.pass_edge_hz) || d.stop_edge_hz >= d.fs / 2)
        throw ConfigError("infeasible lowpass: need 0 < pass edge < stop edge < fs/2");
    if (d.stop_atten_db < 40.0) throw ConfigError("stop_atten_db must be >= 40");

    const double beta = kaiser_beta(d.stop_atten_db);
    const double dw = kTwoPi * (d.stop_edge_hz - d.pass_edge_hz) / d.fs;
    int n = static_cast<int>(std::ceil((d.stop_atten_db - 7.95) / (2.285 * dw))) + 1;
    if (n % 2 == 0) n++;
    if (n < 11) n = 11;

    FirFilter f;
    f.taps.resize(static_cast<std::size_t>(n));
    f.group_delay = (n - 1) / 2;
    const double fc = 0.5 * (d.pass_edge_hz + d.stop_edge_hz) / d.fs;  // cycles/sample
    const double denom = std::cyl_bessel_i(0.0, beta);
    const double half = static_cast<double>(f.group_delay);
    double sum = 0.0;
    for (int i = 0; i < n; i++) {
        const double m = static_cast<double>(i) - half;
        const double frac = m / half;
        const double w = std::cyl_bessel_i(0.0, beta * std::sqrt(std::max(0.0, 1.0 - frac * frac))) / denom;
        const double t = 2.0 * fc * sinc(2.0 * fc * m) * w;
        f.taps[static_cast<std::size_t>(i)] = t;
        sum += t;
    }
    // exact DC gain
    const double g = d.passband_gain / sum;
    for (auto& t : f.taps) t *= g;
    // enforce bit-exact symmetry (sinc/window arithmetic is symmetric already,
    // but make the invariant unconditional)
    for (int i = 0; i < n / 2; i++)
        f.taps[static_cast<std::size_t>(n - 1 - i)] = f.taps[static_cast<std::size_t>(i)];

    f.passband_gain = d.passband_gain;
    f.fs = d.fs;
    f.pass_edge_hz = d.pass_edge_hz;
    f.stop_edge_hz = d.stop_edge_hz;
    f.stop_atten_db = d.stop_atten_db;
    return f;
}

FirFilter design_lowpass(double width_hz, double fs, double stop_atten_db, double f0,
                         double passband_gain_override) {
    if (!(width_hz > 0) || width_hz >= fs) throw ConfigError("width must be in (0, fs)");
    LowpassDesign d;
    d.fs = fs;
    d.pass_edge_hz = width_hz / 2.0;
    d.stop_edge_hz = 0.7 * width_hz;
    if (f0 > 0) d.stop_edge_hz = std::min(d.stop_edge_hz, f0 - width_hz / 2.0);
    d.stop_atten_db = stop_atten_db;
    d.passband_gain = passband_gain_override > 0 ? passband_gain_override : std::sqrt(2.0);
    return design_kaiser_lowpass(d);
}

std::complex<double> fir_response(const FirFilter& f, double freq_hz) {
    const double w = kTwoPi * freq_hz / f.fs;
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < f.taps.size(); i++) {
        const double phase = -w * static_cast<double>(i);
        acc += f.taps[i] * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return acc;
}

double fir_response_db(const FirFilter& f, double freq_hz) {
    const double mag = std::abs(fir_response(f, freq_hz));
    if (mag <= 0) return -400.0;
    return 20.0 * std::log10(mag);
}

}  // namespace asbc
