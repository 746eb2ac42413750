#include "support/oracle.hpp"

#include <cmath>

namespace oracle {

namespace {

struct WindowInfo {
  double mean = 0.0;
  double sigma = 0.0;
  bool flat = false;
};

WindowInfo window_info(const double* w, std::size_t len) {
  WindowInfo info;
  double sum = 0.0, max_abs = 0.0;
  for (std::size_t k = 0; k < len; ++k) {
    sum += w[k];
    max_abs = std::max(max_abs, std::fabs(w[k]));
  }
  info.mean = sum / static_cast<double>(len);
  double ss = 0.0;
  for (std::size_t k = 0; k < len; ++k) {
    ss += (w[k] - info.mean) * (w[k] - info.mean);
  }
  info.sigma = std::sqrt(ss / static_cast<double>(len));
  info.flat = info.sigma <= 1e-12 * std::max(1.0, max_abs);
  return info;
}

double pair_dist(const double* a, const WindowInfo& ia, const double* b,
                 const WindowInfo& ib, std::size_t len) {
  if (ia.flat && ib.flat) return 0.0;
  if (ia.flat || ib.flat) return std::sqrt(2.0 * static_cast<double>(len));
  double acc = 0.0;
  for (std::size_t k = 0; k < len; ++k) {
    const double d = (a[k] - ia.mean) / ia.sigma - (b[k] - ib.mean) / ib.sigma;
    acc += d * d;
  }
  return std::sqrt(acc);
}

std::vector<WindowInfo> all_windows(const std::vector<double>& t,
                                    std::size_t len) {
  std::vector<WindowInfo> out(t.size() - len + 1);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = window_info(t.data() + i, len);
  }
  return out;
}

}  // namespace

double znorm(const double* a, const double* b, std::size_t len) {
  return pair_dist(a, window_info(a, len), b, window_info(b, len), len);
}

SelfProfiles self_profiles(const std::vector<double>& t, std::size_t len) {
  const std::size_t count = t.size() - len + 1;
  const auto info = all_windows(t, len);

  SelfProfiles sp;
  for (Profile* p : {&sp.left, &sp.right}) {
    p->dist.assign(count, 0.0);
    p->idx.assign(count, Profile::npos);
    p->defined.assign(count, false);
  }
  for (std::size_t i = 0; i < count; ++i) {
    // Left candidates end a full window before i; scanning ascending with a
    // strict < keeps the smallest index on ties.
    for (std::size_t j = 0; j + len <= i; ++j) {
      const double d = pair_dist(t.data() + i, info[i], t.data() + j, info[j], len);
      if (!sp.left.defined[i] || d < sp.left.dist[i]) {
        sp.left.defined[i] = true;
        sp.left.dist[i] = d;
        sp.left.idx[i] = j;
      }
    }
    for (std::size_t j = i + len; j < count; ++j) {
      const double d = pair_dist(t.data() + i, info[i], t.data() + j, info[j], len);
      if (!sp.right.defined[i] || d < sp.right.dist[i]) {
        sp.right.defined[i] = true;
        sp.right.dist[i] = d;
        sp.right.idx[i] = j;
      }
    }
  }
  return sp;
}

JoinProfiles join_profiles(const std::vector<double>& a,
                           const std::vector<double>& b, std::size_t len) {
  const std::size_t ca = a.size() - len + 1;
  const std::size_t cb = b.size() - len + 1;
  const auto ia = all_windows(a, len);
  const auto ib = all_windows(b, len);

  JoinProfiles jp;
  jp.ab.dist.assign(ca, 0.0);
  jp.ab.idx.assign(ca, Profile::npos);
  jp.ab.defined.assign(ca, false);
  jp.ba.dist.assign(cb, 0.0);
  jp.ba.idx.assign(cb, Profile::npos);
  jp.ba.defined.assign(cb, false);

  for (std::size_t i = 0; i < ca; ++i) {
    for (std::size_t j = 0; j < cb; ++j) {
      const double d = pair_dist(a.data() + i, ia[i], b.data() + j, ib[j], len);
      if (!jp.ab.defined[i] || d < jp.ab.dist[i]) {
        jp.ab.defined[i] = true;
        jp.ab.dist[i] = d;
        jp.ab.idx[i] = j;
      }
      if (!jp.ba.defined[j] || d < jp.ba.dist[j]) {
        jp.ba.defined[j] = true;
        jp.ba.dist[j] = d;
        jp.ba.idx[j] = i;
      }
    }
  }
  return jp;
}

std::vector<std::pair<std::size_t, std::size_t>> mutual_pairs(
    const JoinProfiles& jp) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < jp.ab.idx.size(); ++i) {
    if (!jp.ab.defined[i]) continue;
    const std::size_t j = jp.ab.idx[i];
    if (jp.ba.defined[j] && jp.ba.idx[j] == i) out.emplace_back(i, j);
  }
  return out;
}

Validation validate_jtsc(const jtsc::JointChain& jc, const Profile& left_a,
                         const Profile& right_b, const JoinProfiles& jp) {
  Validation v;
  auto fail = [&v](std::string what) {
    v.ok = false;
    v.detail = std::move(what);
    return v;
  };

  const auto& ra = jc.ref_chain.indices;
  const auto& tb = jc.target_chain.indices;
  if (ra.empty() || tb.empty()) return fail("empty sub-chain");
  if (ra.back() != jc.junction_a) return fail("junction_a is not the last reference node");
  if (tb.front() != jc.junction_b) return fail("junction_b is not the first target node");

  for (std::size_t k = 0; k + 1 < ra.size(); ++k) {
    const std::size_t next = ra[k + 1];
    if (!left_a.defined[next] || left_a.idx[next] != ra[k]) {
      return fail("condition 1: reference link " + std::to_string(ra[k] + 1) +
                  " -> " + std::to_string(next + 1) +
                  " is not a left nearest-neighbor link");
    }
  }
  for (std::size_t k = 0; k + 1 < tb.size(); ++k) {
    const std::size_t cur = tb[k];
    if (!right_b.defined[cur] || right_b.idx[cur] != tb[k + 1]) {
      return fail("condition 2: target link " + std::to_string(cur + 1) +
                  " -> " + std::to_string(tb[k + 1] + 1) +
                  " is not a right nearest-neighbor link");
    }
  }
  if (!jp.ab.defined[jc.junction_a] || jp.ab.idx[jc.junction_a] != jc.junction_b ||
      !jp.ba.defined[jc.junction_b] || jp.ba.idx[jc.junction_b] != jc.junction_a) {
    return fail("condition 3: junction nodes are not mutual nearest neighbors");
  }
  return v;
}

Validation validate_jtsc(const jtsc::JointChain& jc,
                         const std::vector<double>& t_a,
                         const std::vector<double>& t_b, std::size_t len) {
  const auto sa = self_profiles(t_a, len);
  const auto sb = self_profiles(t_b, len);
  const auto jp = join_profiles(t_a, t_b, len);
  return validate_jtsc(jc, sa.left, sb.right, jp);
}

}  // namespace oracle
