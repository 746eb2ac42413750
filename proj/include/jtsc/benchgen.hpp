#pragma once

#include <filesystem>
#include <map>

#include "jtsc/chains.hpp"

namespace jtsc {

/// Ground-truth window of injected noise, 0-based inclusive bounds.
struct TruthInterval {
  SeriesTag series = SeriesTag::a;
  std::size_t start = 0;
  std::size_t end = 0;
  double amplitude = 1.0;  // half-range of the uniform noise placed here
};

struct CaseMeta {
  std::size_t instance_len = 0;
  std::size_t noise_len = 0;
  std::uint64_t seed = 0;
  std::string class1_label = "class1";
  std::string class2_label = "class2";
};

struct BenchmarkCase {
  TimeSeries t_a;
  TimeSeries t_b;
  std::vector<TruthInterval> truth;
  CaseMeta meta;
};

/// Noise half-range ramps, endpoints inclusive, stepped linearly across the
/// class-1 instances of each series.
struct NoiseRamp {
  double a_from = 0.05;
  double a_to = 0.5;
  double b_from = 0.5;
  double b_to = 1.0;
};

using Instance = std::vector<double>;

/// Two smooth, visually distinct waveform families with small per-instance
/// jitter; 20 instances per class. Recognized ids: "bumps".
std::pair<std::vector<Instance>, std::vector<Instance>> builtin_classes(
    const std::string& shape_pair, std::size_t instance_len,
    std::uint64_t seed);

/// One label-prefixed row per instance (comma or whitespace separated).
/// All rows must have the same value count and at least two labels must be
/// present. Errors name the offending row.
std::map<std::string, std::vector<Instance>> load_labeled_instances(
    const std::filesystem::path& path);

/// Builds a reference/target pair from two instance classes:
/// z-normalize each instance, interleave class1/class2 (class1 first), split
/// each class half to the reference and half to the target series, then
/// inject centered uniform-noise windows of half the instance length into
/// every class-1 instance, half-range ramped per `ramp`. Every noise window
/// is recorded in `truth`, zero-amplitude ones included.
BenchmarkCase generate_case(const std::vector<Instance>& class1,
                            const std::vector<Instance>& class2,
                            std::uint64_t seed, const NoiseRamp& ramp = {},
                            const std::string& class1_label = "class1",
                            const std::string& class2_label = "class2");

namespace detail {

/// Deterministic uniform doubles in [0, 1); fixed mapping from the raw
/// 64-bit stream so output does not depend on the standard library.
struct Rng {
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next_u64();
  double uniform01();                      // [0, 1)
  double uniform(double lo, double hi);    // [lo, hi)
  std::uint64_t state;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Shift/scale to zero mean, unit variance; flat instances become all-zero.
Instance znorm_instance(const Instance& inst);

}  // namespace detail

}  // namespace jtsc
