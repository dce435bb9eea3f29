#pragma once

#include <complex>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "asbc/config.hpp"

namespace asbc {

// Reported when the error energy underflows (or the ratio sweep hits a
// degenerate point); keeps every output finite and plottable.
inline constexpr double kNmseFloorDb = -150.0;

// 10 log10(sum |x - xhat|^2 / sum x^2) over indices >= skip, floored at
// kNmseFloorDb. Lengths must match after alignment; an all-zero reference is
// rejected.
double nmse_db(std::span<const double> x, std::span<const double> xhat,
               std::size_t skip = 0);

// max_n |x[n] - xhat[n]| over indices >= skip.
double max_abs_error(std::span<const double> x, std::span<const double> xhat,
                     std::size_t skip = 0);

// eta = uncompressed/compressed (bits/s); zero compressed rate rejected.
double compression_ratio(double uncompressed_bps, double compressed_bps);

// E^uc approximation: -6 r_q + 1.25 dB.
double pcm_distortion_estimate_db(int r_q);

// Closed-form ASBC ratio at activity probabilities p_k (per harmonic
// subband, 1-based order in the span) and p_e. Returns +inf when nothing is
// ever transmitted.
double asbc_predicted_ratio(const StreamConfig& cfg, std::span<const double> p_k,
                            double p_e);

// Maximum total vector error: max |est - ref| / |ref|. Zero reference
// phasors are rejected.
double tve_max(std::span<const std::complex<double>> ref,
               std::span<const std::complex<double>> est);

// Maximum absolute frequency-estimate error, Hz.
double max_fe(std::span<const double> ref_hz, std::span<const double> est_hz);

// One point of a rate-distortion sweep.
struct RdPoint {
    std::string label;
    double eta = 0.0;
    double nmse_db = 0.0;
    double max_err = 0.0;
    double ci95 = 0.0;  // half-width of the 95% CI of nmse_db across trials
};

// CSV with header `label,eta,nmse_db,max_err,ci95`.
void write_rd_csv(std::ostream& os, const std::vector<RdPoint>& points);

}  // namespace asbc
