#include "jtsc/discovery.hpp"

#include <chrono>

namespace jtsc {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  using namespace std::chrono;
  return duration<double, std::milli>(steady_clock::now() - t0).count();
}

void require_informative(const TimeSeries& t, std::size_t len, double flat_eps,
                         const char* name) {
  for (const auto& s : rolling_stats(t, len, flat_eps)) {
    if (!s.flat) return;
  }
  throw InputError(std::string("no informative subsequences: every window of "
                               "the ") +
                   name + " series is flat");
}

}  // namespace

DiscoveryResult discover(const TimeSeries& t_a, const TimeSeries& t_b,
                         const Config& cfg) {
  cfg.validate();
  if (cfg.subseq_len > t_a.size() || cfg.subseq_len > t_b.size()) {
    throw InputError("window length exceeds a series length");
  }
  require_informative(t_a, cfg.subseq_len, cfg.flat_eps, "reference");
  require_informative(t_b, cfg.subseq_len, cfg.flat_eps, "target");

  DiscoveryResult res;
  res.subseq_len = cfg.subseq_len;
  res.ref_length = t_a.size();
  res.target_length = t_b.size();

  const auto t_start = std::chrono::steady_clock::now();
  res.profiles = build_join_context(t_a, t_b, cfg);
  res.threshold_ref = res.profiles.threshold_ref;
  res.threshold_target = res.profiles.threshold_target;
  res.timings.profiles_ms = ms_since(t_start);

  const auto t_chains = std::chrono::steady_clock::now();
  auto candidates = assemble_joint_chains(res.profiles);
  res.timings.chains_ms = ms_since(t_chains);

  const auto t_rank = std::chrono::steady_clock::now();
  res.all_candidates = rank_chains(std::move(candidates), t_b, res.profiles.ba, cfg);
  res.timings.ranking_ms = ms_since(t_rank);
  res.timings.total_ms = ms_since(t_start);

  if (!res.all_candidates.empty()) {
    res.best = res.all_candidates.front();
    res.degenerate = res.best->scores.rank == 0.0;
  }
  return res;
}

}  // namespace jtsc
