#include "jtsc/eval.hpp"

#include <algorithm>

namespace jtsc {

double hit_rate(const std::vector<ChainNode>& nodes,
                const std::vector<TruthInterval>& truth, std::size_t len,
                double overlap_frac) {
  if (!(overlap_frac > 0.0 && overlap_frac < 1.0)) {
    throw InputError("overlap fraction must lie strictly between 0 and 1");
  }
  if (nodes.empty()) return 0.0;

  std::size_t hits = 0;
  for (const auto& node : nodes) {
    if (node.series == SeriesTag::concatenated) continue;  // boundary node
    const std::size_t w_lo = node.index;
    const std::size_t w_hi = node.index + len - 1;
    for (const auto& iv : truth) {
      if (iv.series != node.series || iv.amplitude == 0.0) continue;
      const std::size_t lo = std::max(w_lo, iv.start);
      const std::size_t hi = std::min(w_hi, iv.end);
      if (lo > hi) continue;
      const double overlap = static_cast<double>(hi - lo + 1);
      const double iv_len = static_cast<double>(iv.end - iv.start + 1);
      if (overlap > overlap_frac * iv_len) {
        ++hits;
        break;
      }
    }
  }
  return static_cast<double>(hits) / static_cast<double>(nodes.size());
}

std::vector<ChainNode> map_concat_nodes(const Chain& chain, std::size_t n_a,
                                        std::size_t len) {
  std::vector<ChainNode> out;
  out.reserve(chain.length());
  for (std::size_t p : chain.indices) {
    if (p + len <= n_a) {
      out.push_back(ChainNode{SeriesTag::a, p});
    } else if (p >= n_a) {
      out.push_back(ChainNode{SeriesTag::b, p - n_a});
    } else {
      out.push_back(ChainNode{SeriesTag::concatenated, p});
    }
  }
  return out;
}

namespace {

MethodResult score_nodes(std::string method, const std::vector<ChainNode>& nodes,
                         const BenchmarkCase& bc, std::size_t len,
                         double overlap_frac) {
  MethodResult r;
  r.method = std::move(method);
  r.hit_rate = hit_rate(nodes, bc.truth, len, overlap_frac);
  r.node_count = nodes.size();
  for (const auto& n : nodes) {
    if (n.series == SeriesTag::a) ++r.m_a;
    if (n.series == SeriesTag::b) ++r.m_b;
  }
  return r;
}

}  // namespace

EvalReport run_benchmark(const BenchSpec& spec, Config cfg) {
  if (spec.repeats < 1) {
    throw InputError("benchmark needs at least one repeat");
  }

  EvalReport rep;
  rep.dataset = spec.dataset;
  rep.dataset_type = spec.dataset_type;
  rep.instance_len = spec.instance_len;
  rep.cases_requested = spec.repeats;

  std::map<std::string, double> sums;
  for (std::size_t r = 0; r < spec.repeats; ++r) {
    const std::uint64_t case_seed =
        detail::splitmix64(spec.seed + 0x100000001ULL * (r + 1));
    CaseResult cr;
    cr.case_index = r;
    cr.seed = case_seed;
    try {
      std::vector<Instance> c1 = spec.class1, c2 = spec.class2;
      if (!spec.shapes.empty()) {
        std::tie(c1, c2) =
            builtin_classes(spec.shapes, spec.instance_len, case_seed);
      }
      const BenchmarkCase bc = generate_case(c1, c2, case_seed, spec.ramp);

      Config case_cfg = cfg;
      if (case_cfg.subseq_len == 0) case_cfg.subseq_len = bc.meta.noise_len;
      const std::size_t len = case_cfg.subseq_len;

      // Joint chain on the (reference, target) pair.
      const DiscoveryResult dr = discover(bc.t_a, bc.t_b, case_cfg);
      std::vector<ChainNode> joint_nodes;
      if (dr.best) {
        for (std::size_t i : dr.best->ref_chain.indices) {
          joint_nodes.push_back(ChainNode{SeriesTag::a, i});
        }
        for (std::size_t i : dr.best->target_chain.indices) {
          joint_nodes.push_back(ChainNode{SeriesTag::b, i});
        }
      }

      // Baselines run on the concatenated series.
      std::vector<double> concat = bc.t_a.values;
      concat.insert(concat.end(), bc.t_b.values.begin(), bc.t_b.values.end());
      const TimeSeries joined{std::move(concat)};
      const Chain c17 = tsc17_best_chain(joined, len, case_cfg.flat_eps);
      const Chain c20 = tsc20_proxy_best_chain(joined, len, case_cfg.flat_eps);

      cr.rows.push_back(score_nodes("jtsc", joint_nodes, bc, len,
                                    case_cfg.hit_overlap_frac));
      cr.rows.push_back(score_nodes("tsc17",
                                    map_concat_nodes(c17, bc.t_a.size(), len),
                                    bc, len, case_cfg.hit_overlap_frac));
      cr.rows.push_back(score_nodes("tsc20",
                                    map_concat_nodes(c20, bc.t_a.size(), len),
                                    bc, len, case_cfg.hit_overlap_frac));
      cr.ok = true;
    } catch (const std::exception& ex) {
      cr.ok = false;
      cr.error = ex.what();
    }

    if (cr.ok) {
      ++rep.cases_completed;
      const MethodResult* best = nullptr;
      bool strict = true;
      for (const auto& row : cr.rows) {
        sums[row.method] += row.hit_rate;
        if (!best || row.hit_rate > best->hit_rate) {
          best = &row;
          strict = true;
        } else if (row.hit_rate == best->hit_rate) {
          strict = false;
        }
      }
      if (best && strict) ++rep.wins[best->method];
    } else {
      ++rep.cases_skipped;
    }
    rep.per_case.push_back(std::move(cr));
  }

  for (const char* m : {"jtsc", "tsc17", "tsc20"}) {
    rep.mean_hit_rate[m] =
        rep.cases_completed > 0
            ? sums[m] / static_cast<double>(rep.cases_completed)
            : 0.0;
    if (!rep.wins.count(m)) rep.wins[m] = 0;
  }
  return rep;
}

void load_ucr_dir(const std::filesystem::path& dir, BenchSpec& spec) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) {
    throw InputError("not a directory: " + dir.string());
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    throw InputError("no instance files in " + dir.string());
  }

  std::map<std::string, std::vector<Instance>> classes;
  for (const auto& f : files) {
    for (auto& [label, insts] : load_labeled_instances(f)) {
      auto& dst = classes[label];
      dst.insert(dst.end(), insts.begin(), insts.end());
    }
  }
  std::vector<std::pair<std::string, std::size_t>> sizes;
  for (const auto& [label, insts] : classes) {
    sizes.emplace_back(label, insts.size());
  }
  std::sort(sizes.begin(), sizes.end(), [](const auto& x, const auto& y) {
    return x.second != y.second ? x.second > y.second : x.first < y.first;
  });
  if (sizes.size() < 2) {
    throw InputError("need at least two classes in " + dir.string());
  }

  spec.shapes.clear();
  spec.class1 = classes[sizes[0].first];
  spec.class2 = classes[sizes[1].first];
  spec.dataset = dir.filename().string();
  spec.dataset_type = "ucr";
  spec.instance_len = spec.class1.front().size();
}

}  // namespace jtsc
