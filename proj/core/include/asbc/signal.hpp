#pragma once

#include <cstdint>
#include <vector>

namespace asbc {

// A contiguous run of real samples positioned on the stream timeline.
// `start_index` is the absolute index of samples[0] at rate `fs`.
struct SampleBlock {
    std::vector<double> samples;
    std::int64_t start_index = 0;
    double fs = 0.0;
};

// Throws ConfigError if the block contains NaN or Inf.
void require_finite(const SampleBlock& block);

}  // namespace asbc
