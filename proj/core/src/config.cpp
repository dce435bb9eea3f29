#include "asbc/config.hpp"

#include <cmath>
#include <numeric>

#include "asbc/signal.hpp"
#include "asbc/util.hpp"

namespace asbc {

void require_finite(const SampleBlock& block) {
    for (double v : block.samples) {
        if (!std::isfinite(v)) throw ConfigError("sample block contains NaN or Inf");
    }
}

static int derive_s_k(double fs, double width) {
    return static_cast<int>(std::ceil(fs / width));
}

void StreamConfig::derive() {
    for (auto& b : subbands) b.s_k = derive_s_k(fs, b.width);
}

const SubbandSpec& StreamConfig::band(int k) const {
    if (k < 1 || k > static_cast<int>(subbands.size())) throw ConfigError("subband index out of range");
    return subbands[static_cast<std::size_t>(k - 1)];
}

void StreamConfig::validate() const {
    if (fs <= 0 || fs != std::floor(fs) || fs > 4.0e9) throw ConfigError("fs must be a positive integral Hz value");
    if (f0 < 0) throw ConfigError("f0 must be >= 0");
    const double f0_centi = f0 * 100.0;
    if (std::abs(f0_centi - std::round(f0_centi)) > 1e-9 || f0_centi > 65535.0)
        throw ConfigError("f0 must have centihertz resolution below 655.35 Hz");
    if (k_max < 1 || k_max > 200) throw ConfigError("k_max must be in 1..200");
    if (static_cast<int>(subbands.size()) != k_max) throw ConfigError("subband list must have k_max entries");
    if (!dc_mode() && fs <= 2.0 * k_max * f0)
        throw ConfigError("fs must exceed 2*k_max*f0 so all subbands fit below Nyquist");
    if (dc_mode() && k_max != 1) throw ConfigError("DC mode supports a single subband");
    if (r_q < 1 || r_q > 32) throw ConfigError("r_q must be in 1..32");
    if (r_e < 1 || r_e > 32) throw ConfigError("r_e must be in 1..32");
    if (block_len == 0) throw ConfigError("block_len must be positive");
    if (!(detector_threshold >= 0)) throw ConfigError("detector_threshold must be >= 0");
    if (stop_atten_db != 0.0 && (stop_atten_db < 40.0 || stop_atten_db > 180.0))
        throw ConfigError("stop_atten_db must be 0 (canonical) or in [40, 180]");

    for (int k = 1; k <= k_max; k++) {
        const auto& b = subbands[static_cast<std::size_t>(k - 1)];
        if (b.index != k) throw ConfigError("subband indices must be 1..K in order");
        if (b.width <= 0) throw ConfigError("subband width must be positive");
        const double w_centi = b.width * 100.0;
        if (std::abs(w_centi - std::round(w_centi)) > 1e-9 || w_centi > 65535.0)
            throw ConfigError("subband width must have centihertz resolution below 655.35 Hz");
        if (!dc_mode() && b.width >= f0)
            throw ConfigError("subband width must stay below f0 (adjacent harmonics must not overlap)");
        if (b.s_k != derive_s_k(fs, b.width)) throw ConfigError("s_k must equal ceil(fs/width)");
        if (b.s_k < 1) throw ConfigError("s_k must be >= 1");
        if (block_len % static_cast<std::uint32_t>(b.s_k) != 0)
            throw ConfigError("block_len must be a multiple of every s_k");
        if (block_len / static_cast<std::uint32_t>(b.s_k) > 65535)
            throw ConfigError("per-block subband sample count exceeds the u16 wire field");
        if (dc_mode()) {
            if (b.r_k < 1 || b.r_k > 32) throw ConfigError("DC-mode r_k must be in 1..32 (real samples)");
        } else {
            if (b.r_k < 2 || b.r_k > 64 || b.r_k % 2 != 0)
                throw ConfigError("r_k must be even and in 2..64 (split across two components)");
        }
        if (k == 1 && !b.always_on) throw ConfigError("subband 1 must be always_on");
    }
    if (block_len > 1u << 24) throw ConfigError("block_len unreasonably large");
}

StreamConfig make_stream_config(double fs, double f0,
                                const std::vector<std::pair<double, int>>& bands,
                                int r_q, int r_e, double detector_threshold,
                                std::uint32_t block_len) {
    StreamConfig cfg;
    cfg.fs = fs;
    cfg.f0 = f0;
    cfg.k_max = static_cast<int>(bands.size());
    cfg.r_q = r_q;
    cfg.r_e = r_e;
    cfg.detector_threshold = detector_threshold;
    int k = 1;
    for (const auto& [width, r_k] : bands) {
        SubbandSpec b;
        b.index = k;
        b.width = width;
        b.r_k = r_k;
        b.always_on = (k == 1);
        cfg.subbands.push_back(b);
        k++;
    }
    cfg.derive();
    if (block_len == 0) {
        std::uint32_t lcm = 1;
        for (const auto& b : cfg.subbands)
            lcm = static_cast<std::uint32_t>(std::lcm<std::uint64_t>(lcm, static_cast<std::uint64_t>(b.s_k)));
        const double min_len = f0 > 0 ? 10.0 * fs / f0 : 0.5 * fs;
        block_len = lcm;
        while (block_len < min_len) block_len += lcm;
    }
    cfg.block_len = block_len;
    cfg.validate();
    return cfg;
}

}  // namespace asbc
