#pragma once

#include <complex>
#include <vector>

namespace asbc {

// Linear-phase FIR lowpass. Taps are symmetric with odd length, so the group
// delay is an exact integer number of samples.
struct FirFilter {
    std::vector<double> taps;
    int group_delay = 0;        // (taps.size() - 1) / 2
    double passband_gain = 1.0; // amplitude at DC, exact after normalization
    double fs = 0.0;
    double pass_edge_hz = 0.0;
    double stop_edge_hz = 0.0;
    double stop_atten_db = 0.0;
};

struct LowpassDesign {
    double pass_edge_hz = 0.0;
    double stop_edge_hz = 0.0;
    double fs = 0.0;
    double stop_atten_db = 60.0;
    double passband_gain = 1.0;
};

// Kaiser-windowed sinc. Length follows the standard attenuation/transition
// estimate, rounded up to odd. Taps are normalized so the DC gain is exact.
FirFilter design_kaiser_lowpass(const LowpassDesign& d);

// Subband prototype: passband [0, width/2], stopband from 0.7*width (capped at
// f0 - width/2 when a neighbouring harmonic sits closer), gain sqrt(2).
// The stopband start must stay inside the band because subbands are critically
// decimated: interpolation images land at multiples of `width`.
FirFilter design_lowpass(double width_hz, double fs, double stop_atten_db,
                         double f0 = 0.0, double passband_gain_override = 0.0);

// Frequency response of the taps at one frequency (DTFT).
std::complex<double> fir_response(const FirFilter& f, double freq_hz);
double fir_response_db(const FirFilter& f, double freq_hz);  // relative to gain 1

}  // namespace asbc
