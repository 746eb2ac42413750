#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace jtsc {

/// Bad caller-supplied data (file contents, sizes, parameter ranges).
class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A library precondition was broken (mismatched lengths, wrong profile kind).
class ContractError : public std::logic_error {
  using std::logic_error::logic_error;
};

/// Ordered list of finite real samples.
struct TimeSeries {
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  std::span<const double> window(std::size_t start, std::size_t len) const {
    return std::span<const double>(values).subspan(start, len);
  }
};

/// Validates samples (finite, nonempty) and wraps them. Throws InputError.
TimeSeries make_series(std::vector<double> values);

/// Per-window mean / standard deviation (population form, divide by length).
/// Start offsets are 0-based in memory; serialized output is 1-based.
struct SubseqStats {
  std::size_t index = 0;
  std::size_t length = 0;
  double mean = 0.0;
  double stddev = 0.0;
  bool flat = false;  // stddev below the flat threshold for this window
};

/// Knobs shared across discovery, ranking and evaluation.
struct Config {
  std::size_t subseq_len = 0;      // window length l
  double quantile_ref = 0.5;       // chain-filter quantile, reference side
  double quantile_target = 0.6;    // chain-filter quantile, target side
  std::size_t topk = 3;            // order statistic for the deviation score
  double hit_overlap_frac = 0.25;  // fraction of truth length a hit must cover
  double flat_eps = 1e-12;         // relative scale below which sigma counts as zero

  void validate() const;  // throws InputError
};

/// z-normalized Euclidean distance between two equal-length windows.
///
/// Each window is shifted/scaled to zero mean, unit variance before the
/// pointwise comparison, so the result is offset and scale invariant.
/// Degenerate windows: both flat -> 0, exactly one flat -> sqrt(2l).
double znorm_distance(std::span<const double> a, std::span<const double> b,
                      double flat_eps = 1e-12);

/// Mean/stddev/flat flag for every window of length `len`.
std::vector<SubseqStats> rolling_stats(const TimeSeries& t, std::size_t len,
                                       double flat_eps = 1e-12);

/// Linear-interpolation quantile of the given sample (q in [0,1]).
double linear_quantile(std::vector<double> values, double q);

namespace detail {

/// Struct-of-arrays window moments used by the profile kernels.
struct WindowMoments {
  std::vector<double> mean;
  std::vector<double> sigma;
  std::vector<std::uint8_t> flat;
  std::size_t count() const noexcept { return mean.size(); }
};

WindowMoments window_moments(std::span<const double> x, std::size_t len,
                             double flat_eps);

/// Flat threshold for one window: flat_eps * max(1, max|value|).
double flat_threshold(double max_abs, double flat_eps);

}  // namespace detail

}  // namespace jtsc
