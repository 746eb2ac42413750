#include "jtsc/chains.hpp"

#include <algorithm>

namespace jtsc {

namespace {

void require_kind(const MatrixProfile& mp, ProfileKind kind, const char* what) {
  if (mp.kind != kind) {
    throw ContractError(std::string("profile kind mismatch: expected ") + what);
  }
}

// Endpoint distance d(first, last) used as a tie-break between equally long
// chains; singletons score 0.
double endpoint_dist(const Chain& c, const TimeSeries& t, std::size_t len,
                     double flat_eps) {
  if (c.length() < 2) return 0.0;
  return znorm_distance(t.window(c.indices.front(), len),
                        t.window(c.indices.back(), len), flat_eps);
}

Chain pick_best(std::vector<Chain> chains, const TimeSeries& t,
                std::size_t len, double flat_eps) {
  Chain best;
  double best_span = -1.0;
  for (auto& c : chains) {
    const double span = endpoint_dist(c, t, len, flat_eps);
    const bool better =
        c.length() > best.length() ||
        (c.length() == best.length() &&
         (span > best_span ||
          (span == best_span && !best.indices.empty() &&
           c.indices.front() < best.indices.front())));
    if (best.indices.empty() || better) {
      best = std::move(c);
      best_span = span;
    }
  }
  return best;
}

}  // namespace

Chain grow_backward(const MatrixProfile& mp_left, std::size_t start,
                    std::optional<double> threshold) {
  require_kind(mp_left, ProfileKind::left, "left");
  if (start >= mp_left.size()) {
    throw InputError("chain start index out of range");
  }

  std::vector<std::size_t> nodes{start};
  std::vector<double> dists;
  std::size_t cur = start;
  for (;;) {
    const auto& e = mp_left.entries[cur];
    if (!e) break;
    if (threshold && e->dist > *threshold) break;
    nodes.push_back(e->nn_index);
    dists.push_back(e->dist);
    cur = e->nn_index;
  }
  std::reverse(nodes.begin(), nodes.end());
  std::reverse(dists.begin(), dists.end());

  Chain c;
  c.direction = ChainDirection::backward;
  c.indices = std::move(nodes);
  c.adjacent_dists = std::move(dists);
  return c;
}

Chain grow_forward(const MatrixProfile& mp_right, std::size_t start,
                   std::optional<double> threshold) {
  require_kind(mp_right, ProfileKind::right, "right");
  if (start >= mp_right.size()) {
    throw InputError("chain start index out of range");
  }

  Chain c;
  c.direction = ChainDirection::forward;
  c.indices.push_back(start);
  std::size_t cur = start;
  for (;;) {
    const auto& e = mp_right.entries[cur];
    if (!e) break;
    if (threshold && e->dist > *threshold) break;
    c.indices.push_back(e->nn_index);
    c.adjacent_dists.push_back(e->dist);
    cur = e->nn_index;
  }
  return c;
}

std::vector<Chain> tsc17_chains_from(const MatrixProfile& left,
                                     const MatrixProfile& right) {
  require_kind(left, ProfileKind::left, "left");
  require_kind(right, ProfileKind::right, "right");
  if (left.size() != right.size() || left.subseq_len != right.subseq_len) {
    throw ContractError("left/right profiles do not describe the same series");
  }

  const std::size_t count = left.size();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> succ(count, kNone);
  std::vector<char> has_pred(count, 0);
  // Link i -> j only when the relation is mutual: j is i's right NN and i is
  // j's left NN. Each node then has at most one predecessor and successor,
  // so the links decompose into disjoint paths.
  for (std::size_t i = 0; i < count; ++i) {
    const auto& r = right.entries[i];
    if (!r) continue;
    const std::size_t j = r->nn_index;
    const auto& lj = left.entries[j];
    if (lj && lj->nn_index == i) {
      succ[i] = j;
      has_pred[j] = 1;
    }
  }

  std::vector<Chain> chains;
  for (std::size_t i = 0; i < count; ++i) {
    if (has_pred[i]) continue;
    Chain c;
    c.direction = ChainDirection::bidirectional;
    std::size_t cur = i;
    c.indices.push_back(cur);
    while (succ[cur] != kNone) {
      c.adjacent_dists.push_back(right.entries[cur]->dist);
      cur = succ[cur];
      c.indices.push_back(cur);
    }
    chains.push_back(std::move(c));
  }
  return chains;
}

std::vector<Chain> tsc17_chains(const TimeSeries& t, std::size_t len,
                                double flat_eps) {
  if (t.size() < 2 * len) {
    throw InputError("series too short: no non-overlapping window pairs");
  }
  const auto sp = self_join_profiles(t, len, flat_eps);
  return tsc17_chains_from(sp.left, sp.right);
}

Chain tsc17_best_chain(const TimeSeries& t, std::size_t len, double flat_eps) {
  return pick_best(tsc17_chains(t, len, flat_eps), t, len, flat_eps);
}

Chain tsc20_proxy_best_chain(const TimeSeries& t, std::size_t len,
                             double flat_eps) {
  const auto sp = self_join_profiles(t, len, flat_eps);

  std::vector<double> defined;
  for (const auto& e : sp.left.entries) {
    if (e) defined.push_back(e->dist);
  }
  std::optional<double> median;
  if (!defined.empty()) median = linear_quantile(defined, 0.5);

  std::vector<Chain> grown;
  grown.reserve(sp.left.size());
  for (std::size_t start = 0; start < sp.left.size(); ++start) {
    grown.push_back(grow_backward(sp.left, start, median));
  }
  return pick_best(std::move(grown), t, len, flat_eps);
}

std::vector<std::pair<std::size_t, std::size_t>> junction_candidates(
    const MatrixProfile& ab, const MatrixProfile& ba) {
  require_kind(ab, ProfileKind::ab_join, "ab_join");
  require_kind(ba, ProfileKind::ba_join, "ba_join");
  if (ab.subseq_len != ba.subseq_len) {
    throw ContractError("join profiles computed with different window lengths");
  }

  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < ab.size(); ++i) {
    const auto& e = ab.entries[i];
    if (!e) continue;
    const std::size_t j = e->nn_index;
    const auto& back = ba.entries[j];
    if (back && back->nn_index == i) {
      out.emplace_back(i, j);
    }
  }
  return out;
}

JoinContext build_join_context(const TimeSeries& t_a, const TimeSeries& t_b,
                               const Config& cfg) {
  cfg.validate();
  const std::size_t len = cfg.subseq_len;
  if (len > t_a.size() || len > t_b.size()) {
    throw InputError("window length exceeds a series length");
  }

  JoinContext ctx;
  ctx.left_a = self_join_profiles(t_a, len, cfg.flat_eps).left;
  ctx.right_b = self_join_profiles(t_b, len, cfg.flat_eps).right;
  auto join = join_matrix_profiles(t_a, t_b, len, cfg.flat_eps);
  ctx.ab = std::move(join.ab);
  ctx.ba = std::move(join.ba);

  // Noise thresholds come from the empirical distribution of cross-series
  // nearest-neighbor distances, both directions pooled.
  std::vector<double> pooled;
  pooled.reserve(ctx.ab.size() + ctx.ba.size());
  for (const auto& e : ctx.ab.entries) {
    if (e) pooled.push_back(e->dist);
  }
  for (const auto& e : ctx.ba.entries) {
    if (e) pooled.push_back(e->dist);
  }
  ctx.threshold_ref = linear_quantile(pooled, cfg.quantile_ref);
  ctx.threshold_target = linear_quantile(std::move(pooled), cfg.quantile_target);
  return ctx;
}

std::vector<JointChain> assemble_joint_chains(const JoinContext& ctx) {
  std::vector<JointChain> out;
  for (const auto& [i, j] : junction_candidates(ctx.ab, ctx.ba)) {
    JointChain jc;
    jc.ref_chain = grow_backward(ctx.left_a, i, ctx.threshold_ref);
    jc.ref_chain.series = SeriesTag::a;
    jc.target_chain = grow_forward(ctx.right_b, j, ctx.threshold_target);
    jc.target_chain.series = SeriesTag::b;
    jc.junction_a = i;
    jc.junction_b = j;
    jc.junction_dist = ctx.ab.entries[i]->dist;
    out.push_back(std::move(jc));
  }
  return out;
}

std::vector<JointChain> assemble_joint_chains(const TimeSeries& t_a,
                                              const TimeSeries& t_b,
                                              const Config& cfg) {
  return assemble_joint_chains(build_join_context(t_a, t_b, cfg));
}

}  // namespace jtsc
