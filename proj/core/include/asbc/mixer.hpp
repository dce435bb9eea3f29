#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace asbc {

// Exact-phase harmonic mixer: e^{-j k w0 n} with w0 = 2*pi*f0/fs.
// f0/fs is reduced to a rational p/q so the phase index (k*p*n) mod q never
// drifts; encoder and decoder evaluate identical phases from the absolute
// sample index, including negative indices.
class HarmonicMixer {
  public:
    HarmonicMixer() = default;
    HarmonicMixer(double f0, double fs);

    // e^{-j k w0 n}
    std::complex<double> down(int k, std::int64_t n) const;
    // e^{+j k w0 n}
    std::complex<double> up(int k, std::int64_t n) const { return std::conj(down(k, n)); }

    std::int64_t period() const { return den_; }

  private:
    std::int64_t phase_index(int k, std::int64_t n) const;

    std::int64_t num_ = 0;  // f0/fs = num/den, reduced
    std::int64_t den_ = 1;
    std::vector<std::complex<double>> table_;  // e^{-j 2 pi i / den}, when den is small
};

}  // namespace asbc
