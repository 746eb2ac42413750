#pragma once

#include "jtsc/chains.hpp"

namespace jtsc {

/// Overall rank: (ref_dev + 1) / (fluc + 1) * evolve. The +1 terms smooth
/// the ratio so near-zero components cannot blow it up.
double rank_score(double fluc, double evolve, double ref_dev);

/// Largest adjacent distance on the reference side, junction link included.
double fluctuation_score(const JointChain& jc);

/// Distance between the first and last target-chain windows; 0 for a
/// single-node target chain.
double evolving_score(const JointChain& jc, const TimeSeries& t_b,
                      std::size_t len, double flat_eps = 1e-12);

/// k-th largest cross-series NN distance over the target-chain nodes; falls
/// back to the smallest available order statistic for short chains.
double reference_deviation_score(const JointChain& jc,
                                 const MatrixProfile& mp_ba, std::size_t k);

void score_joint_chain(JointChain& jc, const TimeSeries& t_b,
                       const MatrixProfile& mp_ba, const Config& cfg);

/// Sorts by stored rank descending; ties go to the larger total node count,
/// then the smaller reference junction index.
void rank_order(std::vector<JointChain>& chains);

/// Scores every candidate and returns them ranked best-first. An empty
/// candidate list yields an empty result.
std::vector<JointChain> rank_chains(std::vector<JointChain> candidates,
                                    const TimeSeries& t_b,
                                    const MatrixProfile& mp_ba,
                                    const Config& cfg);

}  // namespace jtsc
