#pragma once

#include <optional>

#include "jtsc/core.hpp"

namespace jtsc {

enum class ProfileKind { left, right, ab_join, ba_join };

/// Per-window nearest-neighbor distance and index.
///
/// `left`/`right` restrict candidates to windows at least one full window
/// length before/after the query (trivial overlapping matches excluded);
/// the join kinds search every window of the other series with no exclusion.
/// Windows with an empty candidate set carry no entry at all, so downstream
/// argmin logic never sees a sentinel distance.
struct MatrixProfile {
  struct Entry {
    double dist = 0.0;
    std::size_t nn_index = 0;  // 0-based start of the nearest neighbor
  };

  ProfileKind kind = ProfileKind::left;
  std::size_t subseq_len = 0;
  std::vector<std::optional<Entry>> entries;

  std::size_t size() const noexcept { return entries.size(); }
  bool defined(std::size_t i) const { return entries[i].has_value(); }
};

/// Distances from one query window to every window of `t`.
std::vector<double> distance_profile(std::span<const double> query,
                                     const TimeSeries& t, std::size_t len,
                                     double flat_eps = 1e-12);

struct SelfProfiles {
  MatrixProfile left;
  MatrixProfile right;
};

/// Left and right self-join profiles in one O(n^2) pass over the diagonals.
/// Ties on distance resolve to the smallest candidate index.
SelfProfiles self_join_profiles(const TimeSeries& t, std::size_t len,
                                double flat_eps = 1e-12);

MatrixProfile left_matrix_profile(const TimeSeries& t, std::size_t len,
                                  double flat_eps = 1e-12);
MatrixProfile right_matrix_profile(const TimeSeries& t, std::size_t len,
                                   double flat_eps = 1e-12);

struct JoinProfiles {
  MatrixProfile ab;  // per window of A, nearest window of B
  MatrixProfile ba;  // per window of B, nearest window of A
};

/// Cross-series join profiles, both directions in one pass.
JoinProfiles join_matrix_profiles(const TimeSeries& t_a, const TimeSeries& t_b,
                                  std::size_t len, double flat_eps = 1e-12);

}  // namespace jtsc
