#pragma once

#include <complex>
#include <span>
#include <vector>

namespace asbc {

// Unitary DFT of a real block (scale 1/sqrt(L)); returns bins 0..L/2.
// Thread-safe: plans are cached per length behind a mutex.
std::vector<std::complex<double>> dft_real_unitary(std::span<const double> x);

// Inverse of dft_real_unitary: half-spectrum (L/2+1 bins) back to L reals.
std::vector<double> idft_real_unitary(std::span<const std::complex<double>> half, int len);

}  // namespace asbc
