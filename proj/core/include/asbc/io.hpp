#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "asbc/config.hpp"
#include "asbc/signal.hpp"
#include "asbc/sweep.hpp"
#include "asbc/util.hpp"
#include "asbc/waveform.hpp"

namespace asbc {

// Raw signal file: contiguous little-endian float64 samples, with a JSON
// sidecar at <path>.json carrying {fs, f0, count, format}. Ground-truth state
// traces go to <path>.state.json as [start_sample, state] runs.
struct SignalMeta {
    double fs = 0.0;
    double f0 = 0.0;
    std::uint64_t count = 0;
    std::string format = "f64le";
    std::optional<std::int64_t> delay_samples;  // set on decoded outputs
};

void write_signal(const std::string& path, const SampleBlock& block, double f0,
                  std::optional<std::int64_t> delay_samples = std::nullopt);
void write_state_trace(const std::string& path, const std::vector<std::uint8_t>& state);
SampleBlock read_signal(const std::string& path, SignalMeta* meta_out = nullptr);

Bytes read_file(const std::string& path);
void write_file(const std::string& path, BytesView bytes);

// Human-editable JSON specs; keys match the struct field names.
WaveformSpec load_waveform_spec(const std::string& path);
StreamConfig load_stream_config(const std::string& path);
SweepSpec load_sweep_spec(const std::string& path);

std::string waveform_spec_to_json(const WaveformSpec& spec);
std::string stream_config_to_json(const StreamConfig& cfg);

}  // namespace asbc
