#include "jtsc/profile.hpp"

#include <cmath>
#include <limits>

namespace jtsc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Distance of a window pair from the dot product of the raw samples:
//   d^2 = 2l * (1 - (qt - l*mu_p*mu_q) / (l*sigma_p*sigma_q))
// which is the z-normalized squared distance expanded around the dot product.
struct PairDist {
  const detail::WindowMoments& ma;
  const detail::WindowMoments& mb;
  double len;
  double sqrt2l;

  double operator()(double qt, std::size_t i, std::size_t j) const {
    const bool fa = ma.flat[i] != 0;
    const bool fb = mb.flat[j] != 0;
    if (fa && fb) return 0.0;
    if (fa || fb) return sqrt2l;
    const double corr =
        (qt - len * ma.mean[i] * mb.mean[j]) / (len * ma.sigma[i] * mb.sigma[j]);
    double dsq = 2.0 * len * (1.0 - corr);
    if (dsq < 0.0) dsq = 0.0;
    return std::sqrt(dsq);
  }
};

// Smallest-index tie-break, independent of the order candidates arrive in.
inline void keep_min(double d, std::size_t cand, double& best,
                     std::size_t& best_idx) {
  if (d < best || (d == best && cand < best_idx)) {
    best = d;
    best_idx = cand;
  }
}

MatrixProfile pack(ProfileKind kind, std::size_t len,
                   const std::vector<double>& dist,
                   const std::vector<std::size_t>& idx) {
  MatrixProfile mp;
  mp.kind = kind;
  mp.subseq_len = len;
  mp.entries.resize(dist.size());
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (idx[i] != kNone) {
      mp.entries[i] = MatrixProfile::Entry{dist[i], idx[i]};
    }
  }
  return mp;
}

inline double dot(const double* a, const double* b, std::size_t len) {
  double q = 0.0;
  for (std::size_t k = 0; k < len; ++k) q += a[k] * b[k];
  return q;
}

}  // namespace

std::vector<double> distance_profile(std::span<const double> query,
                                     const TimeSeries& t, std::size_t len,
                                     double flat_eps) {
  if (query.size() != len) {
    throw ContractError("query window length mismatch");
  }
  if (len < 3) {
    throw ContractError("windows must have length at least 3");
  }
  if (len > t.size()) {
    throw InputError("window length exceeds series length");
  }

  double sum = 0.0, max_abs = 0.0;
  for (double v : query) {
    sum += v;
    max_abs = std::max(max_abs, std::fabs(v));
  }
  const double l = static_cast<double>(len);
  const double mu_q = sum / l;
  double ss = 0.0;
  for (double v : query) ss += (v - mu_q) * (v - mu_q);
  const double sig_q = std::sqrt(ss / l);
  const bool flat_q = sig_q <= detail::flat_threshold(max_abs, flat_eps);

  const auto mt = detail::window_moments(t.values, len, flat_eps);
  const double sqrt2l = std::sqrt(2.0 * l);
  std::vector<double> out(mt.count());
  for (std::size_t j = 0; j < mt.count(); ++j) {
    const bool flat_w = mt.flat[j] != 0;
    if (flat_q && flat_w) {
      out[j] = 0.0;
    } else if (flat_q || flat_w) {
      out[j] = sqrt2l;
    } else {
      const double qt = dot(query.data(), t.values.data() + j, len);
      const double corr = (qt - l * mu_q * mt.mean[j]) / (l * sig_q * mt.sigma[j]);
      double dsq = 2.0 * l * (1.0 - corr);
      if (dsq < 0.0) dsq = 0.0;
      out[j] = std::sqrt(dsq);
    }
  }
  return out;
}

SelfProfiles self_join_profiles(const TimeSeries& t, std::size_t len,
                                double flat_eps) {
  if (len < 3) {
    throw ContractError("windows must have length at least 3");
  }
  const std::size_t n = t.size();
  if (len > n) {
    throw InputError("window length exceeds series length");
  }
  const std::size_t count = n - len + 1;
  const auto m = detail::window_moments(t.values, len, flat_eps);
  const PairDist pd{m, m, static_cast<double>(len),
                    std::sqrt(2.0 * static_cast<double>(len))};

  std::vector<double> ldist(count, kInf), rdist(count, kInf);
  std::vector<std::size_t> lidx(count, kNone), ridx(count, kNone);

  const double* x = t.values.data();
  // Each diagonal holds all pairs (i, i+off); off >= len keeps the candidate
  // windows disjoint from the query window.
  for (std::size_t off = len; off < count; ++off) {
    double qt = dot(x, x + off, len);
    for (std::size_t i = 0;; ++i) {
      const std::size_t j = i + off;
      if (j >= count) break;
      if (i > 0) {
        qt += x[i + len - 1] * x[j + len - 1] - x[i - 1] * x[j - 1];
      }
      const double d = pd(qt, i, j);
      keep_min(d, j, rdist[i], ridx[i]);  // j is a right candidate of i
      keep_min(d, i, ldist[j], lidx[j]);  // i is a left candidate of j
    }
  }

  return SelfProfiles{pack(ProfileKind::left, len, ldist, lidx),
                      pack(ProfileKind::right, len, rdist, ridx)};
}

MatrixProfile left_matrix_profile(const TimeSeries& t, std::size_t len,
                                  double flat_eps) {
  return self_join_profiles(t, len, flat_eps).left;
}

MatrixProfile right_matrix_profile(const TimeSeries& t, std::size_t len,
                                   double flat_eps) {
  return self_join_profiles(t, len, flat_eps).right;
}

JoinProfiles join_matrix_profiles(const TimeSeries& t_a, const TimeSeries& t_b,
                                  std::size_t len, double flat_eps) {
  if (len < 3) {
    throw ContractError("windows must have length at least 3");
  }
  if (len > t_a.size() || len > t_b.size()) {
    throw InputError("window length exceeds series length");
  }
  const std::size_t ca = t_a.size() - len + 1;
  const std::size_t cb = t_b.size() - len + 1;
  const auto ma = detail::window_moments(t_a.values, len, flat_eps);
  const auto mb = detail::window_moments(t_b.values, len, flat_eps);
  const PairDist pd{ma, mb, static_cast<double>(len),
                    std::sqrt(2.0 * static_cast<double>(len))};

  std::vector<double> ab_dist(ca, kInf), ba_dist(cb, kInf);
  std::vector<std::size_t> ab_idx(ca, kNone), ba_idx(cb, kNone);

  const double* a = t_a.values.data();
  const double* b = t_b.values.data();
  auto walk = [&](std::size_t i0, std::size_t j0) {
    double qt = dot(a + i0, b + j0, len);
    for (std::size_t s = 0;; ++s) {
      const std::size_t i = i0 + s, j = j0 + s;
      if (i >= ca || j >= cb) break;
      if (s > 0) {
        qt += a[i + len - 1] * b[j + len - 1] - a[i - 1] * b[j - 1];
      }
      const double d = pd(qt, i, j);
      keep_min(d, j, ab_dist[i], ab_idx[i]);
      keep_min(d, i, ba_dist[j], ba_idx[j]);
    }
  };
  for (std::size_t j0 = 0; j0 < cb; ++j0) walk(0, j0);
  for (std::size_t i0 = 1; i0 < ca; ++i0) walk(i0, 0);

  return JoinProfiles{pack(ProfileKind::ab_join, len, ab_dist, ab_idx),
                      pack(ProfileKind::ba_join, len, ba_dist, ba_idx)};
}

}  // namespace jtsc
