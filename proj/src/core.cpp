#include "jtsc/core.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace jtsc {

TimeSeries make_series(std::vector<double> values) {
  if (values.empty()) {
    throw InputError("time series must contain at least one sample");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw InputError("time series sample " + std::to_string(i + 1) +
                       " is not finite");
    }
  }
  return TimeSeries{std::move(values)};
}

void Config::validate() const {
  if (subseq_len < 3) {
    throw InputError("subsequence length must be at least 3");
  }
  if (quantile_ref < 0.0 || quantile_ref > 1.0 || quantile_target < 0.0 ||
      quantile_target > 1.0) {
    throw InputError("quantiles must lie in [0, 1]");
  }
  if (topk < 1) {
    throw InputError("topk must be at least 1");
  }
  if (!(hit_overlap_frac > 0.0 && hit_overlap_frac < 1.0)) {
    throw InputError("hit overlap fraction must lie strictly between 0 and 1");
  }
  if (!(flat_eps > 0.0)) {
    throw InputError("flat_eps must be positive");
  }
}

namespace detail {

double flat_threshold(double max_abs, double flat_eps) {
  return flat_eps * std::max(1.0, max_abs);
}

WindowMoments window_moments(std::span<const double> x, std::size_t len,
                             double flat_eps) {
  const std::size_t n = x.size();
  if (len == 0 || len > n) {
    throw InputError("window length exceeds series length");
  }
  const std::size_t count = n - len + 1;

  // Prefix sums in extended precision keep the cancellation error well below
  // the 1e-10 relative agreement the per-window two-pass form is held to.
  std::vector<long double> cum(n + 1, 0.0L), cumsq(n + 1, 0.0L);
  for (std::size_t i = 0; i < n; ++i) {
    cum[i + 1] = cum[i] + static_cast<long double>(x[i]);
    cumsq[i + 1] = cumsq[i] + static_cast<long double>(x[i]) * x[i];
  }

  WindowMoments m;
  m.mean.resize(count);
  m.sigma.resize(count);
  m.flat.resize(count);

  // Sliding max of |x| (monotonic deque) feeds the per-window flat scale.
  std::deque<std::size_t> maxq;
  auto absat = [&x](std::size_t i) { return std::fabs(x[i]); };
  for (std::size_t i = 0; i < n; ++i) {
    while (!maxq.empty() && absat(maxq.back()) <= absat(i)) maxq.pop_back();
    maxq.push_back(i);
    if (i + 1 < len) continue;
    const std::size_t w = i + 1 - len;
    if (maxq.front() < w) maxq.pop_front();

    const long double sum = cum[w + len] - cum[w];
    const long double sumsq = cumsq[w + len] - cumsq[w];
    const long double mu = sum / static_cast<long double>(len);
    long double var = sumsq / static_cast<long double>(len) - mu * mu;
    if (var < 0.0L) var = 0.0L;
    const double sigma = static_cast<double>(std::sqrt(var));
    m.mean[w] = static_cast<double>(mu);
    m.sigma[w] = sigma;
    m.flat[w] = sigma <= flat_threshold(absat(maxq.front()), flat_eps) ? 1 : 0;
  }
  return m;
}

}  // namespace detail

double znorm_distance(std::span<const double> a, std::span<const double> b,
                      double flat_eps) {
  if (a.size() != b.size()) {
    throw ContractError("window length mismatch in distance computation");
  }
  const std::size_t l = a.size();
  if (l < 3) {
    throw ContractError("windows must have length at least 3");
  }

  auto stats = [&](std::span<const double> w, double& mu, double& sigma,
                   double& max_abs) {
    double sum = 0.0;
    max_abs = 0.0;
    for (double v : w) {
      sum += v;
      max_abs = std::max(max_abs, std::fabs(v));
    }
    mu = sum / static_cast<double>(l);
    double ss = 0.0;
    for (double v : w) ss += (v - mu) * (v - mu);
    sigma = std::sqrt(ss / static_cast<double>(l));
  };

  double mu_a, sig_a, abs_a, mu_b, sig_b, abs_b;
  stats(a, mu_a, sig_a, abs_a);
  stats(b, mu_b, sig_b, abs_b);

  const bool flat_a = sig_a <= detail::flat_threshold(abs_a, flat_eps);
  const bool flat_b = sig_b <= detail::flat_threshold(abs_b, flat_eps);
  if (flat_a && flat_b) return 0.0;
  if (flat_a || flat_b) return std::sqrt(2.0 * static_cast<double>(l));

  double acc = 0.0;
  for (std::size_t k = 0; k < l; ++k) {
    const double d = (a[k] - mu_a) / sig_a - (b[k] - mu_b) / sig_b;
    acc += d * d;
  }
  return std::sqrt(acc);
}

std::vector<SubseqStats> rolling_stats(const TimeSeries& t, std::size_t len,
                                       double flat_eps) {
  if (len == 0 || len > t.size()) {
    throw InputError("window length exceeds series length");
  }
  const auto m = detail::window_moments(t.values, len, flat_eps);
  std::vector<SubseqStats> out(m.count());
  for (std::size_t i = 0; i < m.count(); ++i) {
    out[i] = SubseqStats{i, len, m.mean[i], m.sigma[i], m.flat[i] != 0};
  }
  return out;
}

double linear_quantile(std::vector<double> values, double q) {
  if (values.empty()) {
    throw InputError("quantile of an empty sample");
  }
  if (q < 0.0 || q > 1.0) {
    throw InputError("quantile level must lie in [0, 1]");
  }
  std::sort(values.begin(), values.end());
  const double h = q * static_cast<double>(values.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(h);
  if (lo + 1 >= values.size()) return values.back();
  const double frac = h - static_cast<double>(lo);
  return values[lo] + frac * (values[lo + 1] - values[lo]);
}

}  // namespace jtsc
