#pragma once

// Deterministic data constructions shared by the unit and acceptance tests.

#include <cstdint>
#include <vector>

namespace synthetic {

/// xorshift-free deterministic generator (same splitmix64 core everywhere).
struct Rng {
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next_u64() {
    std::uint64_t x = state += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  std::uint64_t state;
};

std::vector<double> random_series(std::size_t n, std::uint64_t seed);

/// Smooth bump of the given length; `drift` skews its center/width.
std::vector<double> bump_motif(std::size_t len, double drift);

/// Two triangular peaks at fixed positions; `drift` morphs the second
/// peak's height in place. Consecutive drift steps are each other's closest
/// shapes, and shifted windows misalign the peaks, so planted sequences have
/// an unambiguous nearest-neighbor order.
std::vector<double> drift_motif(std::size_t len, double drift);

/// Noise floor with progressively drifted copies of a motif planted at the
/// given starts. Later copies can carry extra uniform perturbation.
std::vector<double> planted_series(std::size_t n, std::size_t motif_len,
                                   const std::vector<std::size_t>& starts,
                                   double drift_step, double noise_amp,
                                   std::uint64_t seed,
                                   double extra_perturb = 0.0);

struct TwoRegime {
  std::vector<double> t_a;  // dense, stable motif repeats
  std::vector<double> t_b;  // sparser, increasingly perturbed repeats
  std::size_t motif_len = 0;
};

/// Reference side: motif instances at spacing that grows left to right, with
/// slow shape drift (the left end is dense). Target side: the drift
/// continues at wide spacing with a growing perturbation ramp. Concatenated,
/// a backward chain walked from the right crosses gaps that shrink toward
/// the left.
TwoRegime two_regime_series(std::uint64_t seed);

}  // namespace synthetic
