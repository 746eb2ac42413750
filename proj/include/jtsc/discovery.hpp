#pragma once

#include "jtsc/ranking.hpp"

namespace jtsc {

struct StageTimings {
  double profiles_ms = 0.0;
  double chains_ms = 0.0;
  double ranking_ms = 0.0;
  double total_ms = 0.0;
};

struct DiscoveryResult {
  std::optional<JointChain> best;
  std::vector<JointChain> all_candidates;  // ranked best-first
  std::size_t subseq_len = 0;
  std::size_t ref_length = 0;
  std::size_t target_length = 0;
  double threshold_ref = 0.0;
  double threshold_target = 0.0;
  bool degenerate = false;  // best chain carries a zero evolving score
  JoinContext profiles;     // cached for export and evaluation
  StageTimings timings;
};

/// Full pipeline: profiles -> junction candidates -> filtered sub-chains ->
/// ranking. Deterministic for fixed inputs and configuration.
DiscoveryResult discover(const TimeSeries& t_a, const TimeSeries& t_b,
                         const Config& cfg);

}  // namespace jtsc
