#pragma once

#include <utility>

#include "jtsc/profile.hpp"

namespace jtsc {

enum class SeriesTag { a, b, concatenated };
enum class ChainDirection { backward, forward, bidirectional };

/// Ordered set of window starts where every consecutive pair is linked by a
/// directional nearest-neighbor relation. Indices are strictly increasing
/// and at least one window length apart.
struct Chain {
  SeriesTag series = SeriesTag::a;
  ChainDirection direction = ChainDirection::backward;
  std::vector<std::size_t> indices;      // ascending, 0-based
  std::vector<double> adjacent_dists;    // d(node_i, node_{i+1}), size-1 entries

  std::size_t length() const noexcept { return indices.size(); }
};

struct ScoreBreakdown {
  double fluc = 0.0;
  double evolve = 0.0;
  double ref_dev = 0.0;
  double rank = 0.0;
};

/// A backward chain in the reference series joined to a forward chain in the
/// target series through a mutual-nearest-neighbor junction pair.
struct JointChain {
  Chain ref_chain;     // backward, lives in the reference series
  Chain target_chain;  // forward, lives in the target series
  std::size_t junction_a = 0;  // last node of ref_chain
  std::size_t junction_b = 0;  // first node of target_chain
  double junction_dist = 0.0;
  ScoreBreakdown scores;

  std::size_t node_count() const noexcept {
    return ref_chain.length() + target_chain.length();
  }
};

/// Follows left-NN links from `start` toward the beginning of the series.
/// With a threshold, growth stops before a link whose distance exceeds it.
Chain grow_backward(const MatrixProfile& mp_left, std::size_t start,
                    std::optional<double> threshold = std::nullopt);

/// Mirror of grow_backward over right-NN links; `start` is the first node.
Chain grow_forward(const MatrixProfile& mp_right, std::size_t start,
                   std::optional<double> threshold = std::nullopt);

/// All maximal bi-directional chains: consecutive nodes must be mutual
/// left/right nearest neighbors. Every window index lands in exactly one
/// chain (singletons included).
std::vector<Chain> tsc17_chains(const TimeSeries& t, std::size_t len,
                                double flat_eps = 1e-12);
std::vector<Chain> tsc17_chains_from(const MatrixProfile& left,
                                     const MatrixProfile& right);

/// Longest bi-directional chain; ties broken by larger endpoint distance,
/// then smaller first index.
Chain tsc17_best_chain(const TimeSeries& t, std::size_t len,
                       double flat_eps = 1e-12);

/// Backward-chain baseline: grows a filtered backward chain from every
/// index (threshold = median of the defined left-profile distances) and
/// reports the longest, ties broken as for tsc17_best_chain. A stand-in for
/// the published backward-chain method, pinned here for reproducibility.
Chain tsc20_proxy_best_chain(const TimeSeries& t, std::size_t len,
                             double flat_eps = 1e-12);

/// All mutual-nearest-neighbor pairs (i in A, j in B), ordered by i.
std::vector<std::pair<std::size_t, std::size_t>> junction_candidates(
    const MatrixProfile& ab, const MatrixProfile& ba);

/// Everything assemble/scoring needs from the profile stage.
struct JoinContext {
  MatrixProfile left_a;   // left self-join profile of the reference series
  MatrixProfile right_b;  // right self-join profile of the target series
  MatrixProfile ab;
  MatrixProfile ba;
  double threshold_ref = 0.0;     // filter quantile, reference sub-chain
  double threshold_target = 0.0;  // filter quantile, target sub-chain
};

JoinContext build_join_context(const TimeSeries& t_a, const TimeSeries& t_b,
                               const Config& cfg);

/// One JointChain per junction candidate, sub-chains grown under the
/// context thresholds. Scores are left zeroed for the ranking stage.
std::vector<JointChain> assemble_joint_chains(const JoinContext& ctx);
std::vector<JointChain> assemble_joint_chains(const TimeSeries& t_a,
                                              const TimeSeries& t_b,
                                              const Config& cfg);

}  // namespace jtsc
