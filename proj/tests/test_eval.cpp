#include <doctest.h>

#include <json.hpp>

#include "jtsc/eval.hpp"
#include "jtsc/io.hpp"
#include "support/synthetic.hpp"

using jtsc::ChainNode;
using jtsc::SeriesTag;
using jtsc::TruthInterval;

TEST_CASE("hit rate without truth intervals is zero") {
  const std::vector<ChainNode> nodes{{SeriesTag::a, 10}, {SeriesTag::b, 20}};
  CHECK(jtsc::hit_rate(nodes, {}, 16, 0.25) == 0.0);
}

TEST_CASE("a window equal to the truth interval is a hit") {
  const std::vector<ChainNode> nodes{{SeriesTag::a, 100}};
  const std::vector<TruthInterval> truth{{SeriesTag::a, 100, 163, 0.5}};
  CHECK(jtsc::hit_rate(nodes, truth, 64, 0.25) == 1.0);
}

TEST_CASE("the 25 percent overlap boundary is strict") {
  // Truth of length 64: an overlap of exactly 16 points is not a hit; 17 is.
  const std::vector<TruthInterval> truth{{SeriesTag::a, 100, 163, 0.5}};
  const std::vector<ChainNode> at_boundary{{SeriesTag::a, 52}};  // overlap 16
  CHECK(jtsc::hit_rate(at_boundary, truth, 64, 0.25) == 0.0);
  const std::vector<ChainNode> past_boundary{{SeriesTag::a, 53}};  // overlap 17
  CHECK(jtsc::hit_rate(past_boundary, truth, 64, 0.25) == 1.0);
}

TEST_CASE("zero-amplitude truth intervals never score") {
  const std::vector<ChainNode> nodes{{SeriesTag::a, 100}};
  const std::vector<TruthInterval> truth{{SeriesTag::a, 100, 163, 0.0}};
  CHECK(jtsc::hit_rate(nodes, truth, 64, 0.25) == 0.0);
}

TEST_CASE("hit rate is invariant under truth and node permutations") {
  synthetic::Rng rng(5);
  std::vector<ChainNode> nodes;
  std::vector<TruthInterval> truth;
  for (int k = 0; k < 12; ++k) {
    nodes.push_back({k % 2 ? SeriesTag::a : SeriesTag::b,
                     static_cast<std::size_t>(rng.next_u64() % 900)});
    const std::size_t s = rng.next_u64() % 900;
    truth.push_back({k % 3 ? SeriesTag::a : SeriesTag::b, s, s + 40, 0.5});
  }
  const double base = jtsc::hit_rate(nodes, truth, 30, 0.25);
  for (int trial = 0; trial < 10; ++trial) {
    auto n2 = nodes;
    auto t2 = truth;
    for (std::size_t i = n2.size(); i > 1; --i) {
      std::swap(n2[i - 1], n2[rng.next_u64() % i]);
    }
    for (std::size_t i = t2.size(); i > 1; --i) {
      std::swap(t2[i - 1], t2[rng.next_u64() % i]);
    }
    CHECK(jtsc::hit_rate(n2, t2, 30, 0.25) == base);
  }
  // Adding an interval never decreases the rate.
  auto extended = truth;
  extended.push_back({SeriesTag::a, 0, 40, 0.5});
  CHECK(jtsc::hit_rate(nodes, extended, 30, 0.25) >= base);
}

TEST_CASE("hit rate validates the overlap fraction") {
  CHECK_THROWS_AS(jtsc::hit_rate({}, {}, 16, 0.0), jtsc::InputError);
  CHECK_THROWS_AS(jtsc::hit_rate({}, {}, 16, 1.0), jtsc::InputError);
}

TEST_CASE("concatenated indices map back to their series") {
  // n_a = 100, l = 10: starts 0..90 belong to A, 100.. belong to B,
  // 91..99 straddle the boundary and can never hit.
  jtsc::Chain chain;
  chain.indices = {0, 90, 91, 99, 100, 150};
  const auto mapped = jtsc::map_concat_nodes(chain, 100, 10);
  REQUIRE(mapped.size() == 6);
  CHECK(mapped[0].series == SeriesTag::a);
  CHECK(mapped[1].series == SeriesTag::a);
  CHECK(mapped[1].index == 90);
  CHECK(mapped[2].series == SeriesTag::concatenated);
  CHECK(mapped[3].series == SeriesTag::concatenated);
  CHECK(mapped[4].series == SeriesTag::b);
  CHECK(mapped[4].index == 0);
  CHECK(mapped[5].series == SeriesTag::b);
  CHECK(mapped[5].index == 50);

  // Boundary nodes count in the denominator but never hit anything.
  const std::vector<TruthInterval> truth{{SeriesTag::a, 0, 99, 0.5},
                                         {SeriesTag::b, 0, 99, 0.5}};
  const std::vector<ChainNode> boundary{{SeriesTag::concatenated, 95}};
  CHECK(jtsc::hit_rate(boundary, truth, 10, 0.25) == 0.0);
}

TEST_CASE("benchmark with zero noise and identical classes scores zero for all") {
  const auto [c1, c2] = jtsc::builtin_classes("bumps", 64, 1);
  jtsc::BenchSpec spec;
  spec.shapes.clear();
  spec.class1 = c1;
  spec.class2 = c1;  // identical classes
  spec.instance_len = 64;
  spec.repeats = 1;
  spec.ramp = jtsc::NoiseRamp{0.0, 0.0, 0.0, 0.0};
  jtsc::Config cfg;
  const auto rep = jtsc::run_benchmark(spec, cfg);
  CHECK(rep.cases_completed == 1);
  for (const char* m : {"jtsc", "tsc17", "tsc20"}) {
    CHECK(rep.mean_hit_rate.at(m) == 0.0);
  }
}

TEST_CASE("benchmark reports are deterministic for a fixed seed") {
  jtsc::BenchSpec spec;
  spec.instance_len = 64;
  spec.repeats = 2;
  spec.seed = 31;
  jtsc::Config cfg;
  const auto rep = jtsc::run_benchmark(spec, cfg);
  const auto one = jtsc::report_to_json(rep).dump();
  const auto two = jtsc::report_to_json(jtsc::run_benchmark(spec, cfg)).dump();
  CHECK(one == two);

  std::size_t wins_total = 0;
  for (const auto& [method, wins] : rep.wins) wins_total += wins;
  CHECK(wins_total <= rep.cases_completed);
  for (const auto& cr : rep.per_case) {
    for (const auto& row : cr.rows) {
      CHECK(row.hit_rate >= 0.0);
      CHECK(row.hit_rate <= 1.0);
    }
  }
}

TEST_CASE("failed cases are skipped with a recorded error, never silently") {
  jtsc::BenchSpec spec;
  spec.shapes.clear();
  // Instances too short to host a noise window: generation must fail.
  spec.class1 = {{1.0, 2.0, 1.0}, {2.0, 1.0, 2.0}};
  spec.class2 = {{0.0, 1.0, 0.0}, {1.0, 0.0, 1.0}};
  spec.instance_len = 3;
  spec.repeats = 2;
  jtsc::Config cfg;
  const auto rep = jtsc::run_benchmark(spec, cfg);
  CHECK(rep.cases_requested == 2);
  CHECK(rep.cases_completed == 0);
  CHECK(rep.cases_skipped == 2);
  for (const auto& cr : rep.per_case) {
    CHECK_FALSE(cr.ok);
    CHECK_FALSE(cr.error.empty());
  }
  CHECK(jtsc::run_benchmark(spec, cfg).per_case.size() == 2);
}

TEST_CASE("table-shaped CSV carries one data row plus the wins row") {
  jtsc::EvalReport rep;
  rep.dataset = "bumps";
  rep.dataset_type = "synthetic";
  rep.instance_len = 128;
  rep.mean_hit_rate = {{"jtsc", 0.5}, {"tsc17", 0.25}, {"tsc20", 0.125}};
  rep.wins = {{"jtsc", 8}, {"tsc17", 1}, {"tsc20", 0}};
  const std::string csv = jtsc::report_to_table_csv(rep);
  CHECK(csv == "dataset,type,l_instance,tsc17,tsc20,jtsc\n"
               "bumps,synthetic,128,0.25,0.125,0.5\n"
               "wins,-,-,1,0,8\n");
}
