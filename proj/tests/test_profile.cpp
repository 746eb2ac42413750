#include <doctest.h>

#include <cmath>

#include "jtsc/profile.hpp"
#include "support/oracle.hpp"
#include "support/synthetic.hpp"

using jtsc::MatrixProfile;
using jtsc::TimeSeries;

namespace {

void check_against_oracle(const MatrixProfile& mp, const oracle::Profile& ref) {
  REQUIRE(mp.size() == ref.dist.size());
  for (std::size_t i = 0; i < mp.size(); ++i) {
    INFO("entry ", i);
    REQUIRE(mp.defined(i) == ref.defined[i]);
    if (ref.defined[i]) {
      CHECK(std::fabs(mp.entries[i]->dist - ref.dist[i]) <= 1e-8);
      CHECK(mp.entries[i]->nn_index == ref.idx[i]);
    }
  }
}

}  // namespace

TEST_CASE("distance profile hits zero at the query's own position") {
  const auto data = synthetic::random_series(128, 11);
  const TimeSeries t{data};
  const std::size_t l = 16, at = 37;
  const auto dp = jtsc::distance_profile(t.window(at, l), t, l);
  REQUIRE(dp.size() == data.size() - l + 1);
  CHECK(dp[at] <= 1e-6);
}

TEST_CASE("distance profile against a constant series is sqrt(2l) everywhere") {
  const auto q = synthetic::random_series(16, 3);
  const TimeSeries t{std::vector<double>(100, 2.0)};
  for (double d : jtsc::distance_profile(std::span<const double>(q), t, 16)) {
    CHECK(d == std::sqrt(32.0));
  }
}

TEST_CASE("distance profile matches the per-entry oracle") {
  const auto data = synthetic::random_series(256, 21);
  const auto qdata = synthetic::random_series(16, 22);
  const TimeSeries t{data};
  const auto dp = jtsc::distance_profile(std::span<const double>(qdata), t, 16);
  for (std::size_t j = 0; j < dp.size(); ++j) {
    CHECK(std::fabs(dp[j] - oracle::znorm(qdata.data(), data.data() + j, 16)) <=
          1e-8);
  }
}

TEST_CASE("left profile is undefined where no disjoint left candidate exists") {
  const auto data = synthetic::random_series(200, 5);
  const auto mp = jtsc::left_matrix_profile(TimeSeries{data}, 20);
  for (std::size_t i = 0; i < 20; ++i) CHECK_FALSE(mp.defined(i));
  for (std::size_t i = 20; i < mp.size(); ++i) CHECK(mp.defined(i));
}

TEST_CASE("right profile is undefined at the tail") {
  const auto data = synthetic::random_series(200, 6);
  const auto mp = jtsc::right_matrix_profile(TimeSeries{data}, 20);
  const std::size_t count = mp.size();
  for (std::size_t i = count - 20; i < count; ++i) CHECK_FALSE(mp.defined(i));
  for (std::size_t i = 0; i < count - 20; ++i) CHECK(mp.defined(i));
}

TEST_CASE("planted duplicate motifs are each other's left nearest neighbors") {
  // Identical bumps at 0 and 100 in a small noise floor.
  auto data = synthetic::planted_series(220, 50, {0, 100}, 0.0, 0.05, 9);
  const auto motif = synthetic::bump_motif(50, 0.0);
  for (std::size_t i = 0; i < 50; ++i) {
    data[i] = motif[i];
    data[100 + i] = motif[i];
  }
  const auto mp = jtsc::left_matrix_profile(TimeSeries{data}, 50);
  REQUIRE(mp.defined(100));
  CHECK(mp.entries[100]->dist <= 1e-6);
  CHECK(mp.entries[100]->nn_index == 0);
}

TEST_CASE("self-join profiles equal the brute-force oracle") {
  const auto data = synthetic::random_series(512, 1234);
  const auto sp = jtsc::self_join_profiles(TimeSeries{data}, 21);
  const auto ref = oracle::self_profiles(data, 21);
  check_against_oracle(sp.left, ref.left);
  check_against_oracle(sp.right, ref.right);
}

TEST_CASE("right profile mirrors the left profile of the reversed series") {
  const auto data = synthetic::random_series(256, 77);
  std::vector<double> rev(data.rbegin(), data.rend());
  const std::size_t l = 16;
  const auto right = jtsc::right_matrix_profile(TimeSeries{data}, l);
  const auto left_rev = jtsc::left_matrix_profile(TimeSeries{rev}, l);
  const std::size_t count = right.size();
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t mirrored = count - 1 - i;
    REQUIRE(right.defined(i) == left_rev.defined(mirrored));
    if (right.defined(i)) {
      CHECK(std::fabs(right.entries[i]->dist - left_rev.entries[mirrored]->dist) <=
            1e-8);
    }
  }
}

TEST_CASE("identity join matches every window to itself at distance zero") {
  const auto data = synthetic::random_series(180, 55);
  const TimeSeries t{data};
  const auto jp = jtsc::join_matrix_profiles(t, t, 12);
  for (std::size_t i = 0; i < jp.ab.size(); ++i) {
    REQUIRE(jp.ab.defined(i));
    CHECK(jp.ab.entries[i]->dist <= 1e-6);
    CHECK(jp.ab.entries[i]->nn_index == i);
  }
}

TEST_CASE("containment join: a segment of A matches into A at distance zero") {
  const auto data = synthetic::random_series(300, 91);
  const TimeSeries t_a{data};
  const TimeSeries t_b{std::vector<double>(data.begin() + 40, data.begin() + 160)};
  const auto jp = jtsc::join_matrix_profiles(t_a, t_b, 25);
  for (std::size_t j = 0; j < jp.ba.size(); ++j) {
    REQUIRE(jp.ba.defined(j));
    CHECK(jp.ba.entries[j]->dist <= 1e-6);
  }
}

TEST_CASE("join profiles equal the brute-force oracle") {
  const auto a = synthetic::random_series(300, 15);
  const auto b = synthetic::random_series(400, 16);
  const auto jp = jtsc::join_matrix_profiles(TimeSeries{a}, TimeSeries{b}, 25);
  const auto ref = oracle::join_profiles(a, b, 25);
  check_against_oracle(jp.ab, ref.ab);
  check_against_oracle(jp.ba, ref.ba);
}

TEST_CASE("profile distances are consistent with the direct distance") {
  const auto data = synthetic::random_series(400, 33);
  const TimeSeries t{data};
  const std::size_t l = 24;
  const auto sp = jtsc::self_join_profiles(t, l);
  for (std::size_t i = 0; i < sp.left.size(); ++i) {
    if (!sp.left.defined(i)) continue;
    const auto& e = *sp.left.entries[i];
    CHECK(std::fabs(e.dist - jtsc::znorm_distance(t.window(i, l),
                                                  t.window(e.nn_index, l))) <=
          1e-8);
  }
}

TEST_CASE("left profile dominates the unconstrained self-join minimum") {
  const auto data = synthetic::random_series(300, 44);
  const auto sp = jtsc::self_join_profiles(TimeSeries{data}, 15);
  for (std::size_t i = 0; i < sp.left.size(); ++i) {
    if (!sp.left.defined(i)) continue;
    double unconstrained = sp.left.entries[i]->dist;
    if (sp.right.defined(i)) {
      unconstrained = std::min(unconstrained, sp.right.entries[i]->dist);
    }
    CHECK(sp.left.entries[i]->dist >= unconstrained);
  }
}

TEST_CASE("profiles are deterministic across repeated runs") {
  const auto data = synthetic::random_series(256, 99);
  const TimeSeries t{data};
  const auto first = jtsc::self_join_profiles(t, 17);
  const auto second = jtsc::self_join_profiles(t, 17);
  for (std::size_t i = 0; i < first.left.size(); ++i) {
    REQUIRE(first.left.defined(i) == second.left.defined(i));
    if (first.left.defined(i)) {
      CHECK(first.left.entries[i]->dist == second.left.entries[i]->dist);
      CHECK(first.left.entries[i]->nn_index == second.left.entries[i]->nn_index);
    }
  }
}

TEST_CASE("profile computations reject oversized windows") {
  const TimeSeries t{synthetic::random_series(10, 1)};
  CHECK_THROWS_AS(jtsc::self_join_profiles(t, 11), jtsc::InputError);
  CHECK_THROWS_AS(jtsc::join_matrix_profiles(t, t, 11), jtsc::InputError);
  const std::vector<double> q(11, 0.0);
  CHECK_THROWS_AS(
      jtsc::distance_profile(std::span<const double>(q), t, 11),
      jtsc::InputError);
}
