#include "asbc/mixer.hpp"

#include <cmath>
#include <numeric>

#include "asbc/util.hpp"

namespace asbc {

namespace {
constexpr std::int64_t kTableCap = 16384;
}

HarmonicMixer::HarmonicMixer(double f0, double fs) {
    if (fs <= 0 || fs != std::floor(fs)) throw ConfigError("mixer fs must be a positive integer");
    const double f0_centi = f0 * 100.0;
    if (f0 < 0 || std::abs(f0_centi - std::round(f0_centi)) > 1e-9)
        throw ConfigError("mixer f0 must have centihertz resolution");
    // f0/fs = (f0*100) / (fs*100), reduced
    std::int64_t num = static_cast<std::int64_t>(std::llround(f0_centi));
    std::int64_t den = static_cast<std::int64_t>(std::llround(fs)) * 100;
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
    if (den_ <= kTableCap) {
        table_.resize(static_cast<std::size_t>(den_));
        for (std::int64_t i = 0; i < den_; i++) {
            const double ph = -kTwoPi * static_cast<double>(i) / static_cast<double>(den_);
            table_[static_cast<std::size_t>(i)] = {std::cos(ph), std::sin(ph)};
        }
    }
}

std::int64_t HarmonicMixer::phase_index(int k, std::int64_t n) const {
    // (k * num * n) mod den; 128-bit product so any fs within range is safe.
    std::int64_t a = (static_cast<std::int64_t>(k) * num_) % den_;
    std::int64_t b = n % den_;
    if (b < 0) b += den_;
    return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % den_);
}

std::complex<double> HarmonicMixer::down(int k, std::int64_t n) const {
    if (num_ == 0) return {1.0, 0.0};  // DC mode
    const std::int64_t idx = phase_index(k, n);
    if (!table_.empty()) return table_[static_cast<std::size_t>(idx)];
    const double ph = -kTwoPi * static_cast<double>(idx) / static_cast<double>(den_);
    return {std::cos(ph), std::sin(ph)};
}

}  // namespace asbc
