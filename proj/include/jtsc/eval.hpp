#pragma once

#include "jtsc/benchgen.hpp"
#include "jtsc/discovery.hpp"

namespace jtsc {

/// A chain node placed in one of the two original series, or on the
/// concatenation boundary (tag `concatenated`), where it can never hit.
struct ChainNode {
  SeriesTag series = SeriesTag::a;
  std::size_t index = 0;  // 0-based within its series
};

/// Fraction of nodes whose window overlaps a same-series truth interval by
/// strictly more than overlap_frac of that interval's length. Intervals
/// with zero amplitude carry no injected evolution and are ignored.
double hit_rate(const std::vector<ChainNode>& nodes,
                const std::vector<TruthInterval>& truth, std::size_t len,
                double overlap_frac);

/// Maps a chain found on concat(A, B) back onto the original series.
/// Windows straddling the boundary keep the `concatenated` tag.
std::vector<ChainNode> map_concat_nodes(const Chain& chain, std::size_t n_a,
                                        std::size_t len);

struct MethodResult {
  std::string method;
  double hit_rate = 0.0;
  std::size_t node_count = 0;
  std::size_t m_a = 0;  // nodes mapped to the reference series
  std::size_t m_b = 0;  // nodes mapped to the target series
};

struct CaseResult {
  std::size_t case_index = 0;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;  // set when the case was skipped
  std::vector<MethodResult> rows;
};

struct EvalReport {
  std::string dataset;
  std::string dataset_type;
  std::size_t instance_len = 0;
  std::size_t subseq_len = 0;
  std::vector<CaseResult> per_case;
  std::map<std::string, double> mean_hit_rate;  // over completed cases
  std::map<std::string, std::size_t> wins;      // strict per-case maxima
  std::size_t cases_requested = 0;
  std::size_t cases_completed = 0;
  std::size_t cases_skipped = 0;
};

struct BenchSpec {
  std::string shapes = "bumps";  // builtin id; empty -> use class1/class2
  std::vector<Instance> class1;
  std::vector<Instance> class2;
  std::string dataset = "bumps";
  std::string dataset_type = "synthetic";
  std::size_t instance_len = 128;
  std::size_t repeats = 10;
  std::uint64_t seed = 1;
  NoiseRamp ramp{};
};

/// Runs the joint-chain method against the two single-series baselines
/// (both applied to concat(A, B)) over `repeats` generated cases. A zero
/// cfg.subseq_len defaults to the noise length (half the instance length).
EvalReport run_benchmark(const BenchSpec& spec, Config cfg);

/// Loads every regular file in `dir` as labeled instance rows and fills the
/// spec with the two most populous classes (ties resolved by label order).
void load_ucr_dir(const std::filesystem::path& dir, BenchSpec& spec);

}  // namespace jtsc
