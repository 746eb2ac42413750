#include "jtsc/ranking.hpp"

#include <algorithm>

namespace jtsc {

double rank_score(double fluc, double evolve, double ref_dev) {
  return (ref_dev + 1.0) / (fluc + 1.0) * evolve;
}

double fluctuation_score(const JointChain& jc) {
  double m = jc.junction_dist;
  for (double d : jc.ref_chain.adjacent_dists) m = std::max(m, d);
  return m;
}

double evolving_score(const JointChain& jc, const TimeSeries& t_b,
                      std::size_t len, double flat_eps) {
  const auto& idx = jc.target_chain.indices;
  if (idx.size() < 2) return 0.0;
  return znorm_distance(t_b.window(idx.front(), len),
                        t_b.window(idx.back(), len), flat_eps);
}

double reference_deviation_score(const JointChain& jc,
                                 const MatrixProfile& mp_ba, std::size_t k) {
  if (k < 1) throw ContractError("order statistic k must be at least 1");
  std::vector<double> dists;
  dists.reserve(jc.target_chain.length());
  for (std::size_t node : jc.target_chain.indices) {
    const auto& e = mp_ba.entries.at(node);
    if (!e) throw ContractError("join profile undefined at a chain node");
    dists.push_back(e->dist);
  }
  std::sort(dists.begin(), dists.end(), std::greater<>());
  const std::size_t kk = std::min(k, dists.size());
  return dists[kk - 1];
}

void score_joint_chain(JointChain& jc, const TimeSeries& t_b,
                       const MatrixProfile& mp_ba, const Config& cfg) {
  jc.scores.fluc = fluctuation_score(jc);
  jc.scores.evolve = evolving_score(jc, t_b, cfg.subseq_len, cfg.flat_eps);
  jc.scores.ref_dev = reference_deviation_score(jc, mp_ba, cfg.topk);
  jc.scores.rank = rank_score(jc.scores.fluc, jc.scores.evolve, jc.scores.ref_dev);
}

void rank_order(std::vector<JointChain>& chains) {
  std::sort(chains.begin(), chains.end(),
            [](const JointChain& x, const JointChain& y) {
              if (x.scores.rank != y.scores.rank) {
                return x.scores.rank > y.scores.rank;
              }
              if (x.node_count() != y.node_count()) {
                return x.node_count() > y.node_count();
              }
              return x.junction_a < y.junction_a;
            });
}

std::vector<JointChain> rank_chains(std::vector<JointChain> candidates,
                                    const TimeSeries& t_b,
                                    const MatrixProfile& mp_ba,
                                    const Config& cfg) {
  for (auto& jc : candidates) {
    score_joint_chain(jc, t_b, mp_ba, cfg);
  }
  rank_order(candidates);
  return candidates;
}

}  // namespace jtsc
