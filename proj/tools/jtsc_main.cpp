#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "jtsc/io.hpp"
#include "jtsc/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 2;
constexpr int kExitParse = 3;
constexpr int kExitContract = 4;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

nlohmann::json manifest_skeleton(const std::string& command) {
  nlohmann::json m;
  m["schema_version"] = 1;
  m["tool_version"] = jtsc::kToolVersion;
  m["command"] = command;
  m["parameters"] = nlohmann::json::object();
  m["inputs"] = nlohmann::json::object();
  m["timings_ms"] = nlohmann::json::object();
  return m;
}

void add_input_hash(nlohmann::json& manifest, const std::filesystem::path& p) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(jtsc::fnv1a64_file(p)));
  manifest["inputs"][p.string()] = buf;
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
  jtsc::write_text_atomic(path, j.dump(2) + "\n");
}

struct DiscoverOpts {
  std::string ref_path, target_path, out_dir;
  std::size_t subseq_len = 0;
  double quantile_ref = 0.5, quantile_target = 0.6;
  std::size_t topk = 3;
  std::optional<std::size_t> column;
};

int run_discover(const DiscoverOpts& o) {
  const auto t0 = Clock::now();
  auto manifest = manifest_skeleton("discover");
  manifest["parameters"] = {{"subseq_len", o.subseq_len},
                            {"quantile_ref", o.quantile_ref},
                            {"quantile_target", o.quantile_target},
                            {"topk", o.topk}};
  add_input_hash(manifest, o.ref_path);
  add_input_hash(manifest, o.target_path);

  const jtsc::TimeSeries t_a =
      jtsc::make_series(jtsc::read_series_csv(o.ref_path, o.column).values);
  const jtsc::TimeSeries t_b =
      jtsc::make_series(jtsc::read_series_csv(o.target_path, o.column).values);

  jtsc::Config cfg;
  cfg.subseq_len = o.subseq_len;
  cfg.quantile_ref = o.quantile_ref;
  cfg.quantile_target = o.quantile_target;
  cfg.topk = o.topk;

  const auto res = jtsc::discover(t_a, t_b, cfg);

  const std::filesystem::path out(o.out_dir);
  write_json(out / "chains.json", jtsc::discovery_to_json(res));
  jtsc::write_profile_csv(out / "mp_left_ref.csv", res.profiles.left_a);
  jtsc::write_profile_csv(out / "mp_right_target.csv", res.profiles.right_b);
  jtsc::write_profile_csv(out / "mp_ab.csv", res.profiles.ab);
  jtsc::write_profile_csv(out / "mp_ba.csv", res.profiles.ba);

  std::vector<std::size_t> ref_nodes, target_nodes;
  if (res.best) {
    ref_nodes = res.best->ref_chain.indices;
    target_nodes = res.best->target_chain.indices;
  }
  jtsc::write_annotated_series_csv(out / "ref_annotated.csv", t_a, ref_nodes,
                                   cfg.subseq_len);
  jtsc::write_annotated_series_csv(out / "target_annotated.csv", t_b,
                                   target_nodes, cfg.subseq_len);

  manifest["timings_ms"]["total"] = ms_since(t0);
  write_json(out / "manifest.json", manifest);

  if (res.best) {
    const auto& b = *res.best;
    std::cout << "best chain: junction A=" << b.junction_a + 1
              << " B=" << b.junction_b + 1 << " dist "
              << jtsc::format_double(b.junction_dist)
              << ", m_A=" << b.ref_chain.length()
              << " m_B=" << b.target_chain.length()
              << ", rank=" << jtsc::format_double(b.scores.rank) << "\n";
    if (res.degenerate) {
      std::cerr << "warning: degenerate result (no evolving trend; rank 0)\n";
    }
  } else {
    std::cerr << "warning: no joint chain candidates found\n";
  }
  return kExitOk;
}

struct BaselineOpts {
  std::string method, ref_path, target_path, out_dir;
  std::size_t subseq_len = 0;
  std::optional<std::size_t> column;
};

int run_baseline(const BaselineOpts& o) {
  const auto t0 = Clock::now();
  auto manifest = manifest_skeleton("baseline");
  manifest["parameters"] = {{"method", o.method}, {"subseq_len", o.subseq_len}};
  add_input_hash(manifest, o.ref_path);
  add_input_hash(manifest, o.target_path);

  const jtsc::TimeSeries t_a =
      jtsc::make_series(jtsc::read_series_csv(o.ref_path, o.column).values);
  const jtsc::TimeSeries t_b =
      jtsc::make_series(jtsc::read_series_csv(o.target_path, o.column).values);

  std::vector<double> concat = t_a.values;
  concat.insert(concat.end(), t_b.values.begin(), t_b.values.end());
  const jtsc::TimeSeries joined{std::move(concat)};

  jtsc::Chain best = o.method == "tsc17"
                         ? jtsc::tsc17_best_chain(joined, o.subseq_len)
                         : jtsc::tsc20_proxy_best_chain(joined, o.subseq_len);
  best.series = jtsc::SeriesTag::concatenated;

  nlohmann::json j;
  j["schema_version"] = 1;
  j["method"] = o.method;
  j["subseq_len"] = o.subseq_len;
  j["ref_length"] = t_a.size();
  j["target_length"] = t_b.size();
  j["chain"] = jtsc::chain_to_json(best);
  auto& mapped = j["mapped_nodes"] = nlohmann::json::array();
  for (const auto& node :
       jtsc::map_concat_nodes(best, t_a.size(), o.subseq_len)) {
    mapped.push_back({{"series", jtsc::mapped_node_series_name(node.series)},
                      {"index", node.index + 1}});
  }

  const std::filesystem::path out(o.out_dir);
  write_json(out / "chain.json", j);
  manifest["timings_ms"]["total"] = ms_since(t0);
  write_json(out / "manifest.json", manifest);

  std::cout << o.method << " best chain: " << best.length() << " nodes\n";
  return kExitOk;
}

struct BenchOpts {
  std::string shapes = "bumps";
  std::string ucr_dir;
  std::string out_dir;
  std::size_t instance_len = 128;
  std::size_t repeats = 10;
  std::uint64_t seed = 1;
  std::size_t subseq_len = 0;  // 0 -> noise length
  double quantile_ref = 0.5, quantile_target = 0.6;
  std::size_t topk = 3;
};

int run_bench(const BenchOpts& o) {
  const auto t0 = Clock::now();
  auto manifest = manifest_skeleton("bench");
  manifest["parameters"] = {{"shapes", o.shapes},
                            {"ucr_dir", o.ucr_dir},
                            {"instance_len", o.instance_len},
                            {"repeats", o.repeats},
                            {"subseq_len", o.subseq_len},
                            {"quantile_ref", o.quantile_ref},
                            {"quantile_target", o.quantile_target},
                            {"topk", o.topk}};
  manifest["seed"] = o.seed;

  jtsc::BenchSpec spec;
  spec.instance_len = o.instance_len;
  spec.repeats = o.repeats;
  spec.seed = o.seed;
  if (!o.ucr_dir.empty()) {
    jtsc::load_ucr_dir(o.ucr_dir, spec);
  } else {
    spec.shapes = o.shapes;
    spec.dataset = o.shapes;
  }

  jtsc::Config cfg;
  cfg.subseq_len = o.subseq_len ? o.subseq_len : spec.instance_len / 2;
  cfg.quantile_ref = o.quantile_ref;
  cfg.quantile_target = o.quantile_target;
  cfg.topk = o.topk;

  jtsc::EvalReport rep = jtsc::run_benchmark(spec, cfg);
  rep.subseq_len = cfg.subseq_len;

  const std::filesystem::path out(o.out_dir);
  write_json(out / "report.json", jtsc::report_to_json(rep));
  jtsc::write_text_atomic(out / "report.csv", jtsc::report_to_table_csv(rep));
  manifest["timings_ms"]["total"] = ms_since(t0);
  write_json(out / "manifest.json", manifest);

  std::cout << "mean hit rate: jtsc " << rep.mean_hit_rate["jtsc"] << ", tsc17 "
            << rep.mean_hit_rate["tsc17"] << ", tsc20 "
            << rep.mean_hit_rate["tsc20"] << " (" << rep.cases_completed << "/"
            << rep.cases_requested << " cases";
  if (rep.cases_skipped > 0) {
    std::cout << ", " << rep.cases_skipped << " skipped";
  }
  std::cout << ")\n";
  return kExitOk;
}

struct GenOpts {
  std::string shapes = "bumps";
  std::string out_dir;
  std::size_t instance_len = 128;
  std::uint64_t seed = 1;
};

int run_gen(const GenOpts& o) {
  const auto t0 = Clock::now();
  auto manifest = manifest_skeleton("gen");
  manifest["parameters"] = {{"shapes", o.shapes},
                            {"instance_len", o.instance_len}};
  manifest["seed"] = o.seed;

  const auto [c1, c2] = jtsc::builtin_classes(o.shapes, o.instance_len, o.seed);
  const jtsc::BenchmarkCase bc =
      jtsc::generate_case(c1, c2, o.seed, jtsc::NoiseRamp{}, "bump", "valleys");

  const std::filesystem::path out(o.out_dir);
  jtsc::write_series_csv(out / "t_a.csv", bc.t_a);
  jtsc::write_series_csv(out / "t_b.csv", bc.t_b);
  write_json(out / "truth.json", jtsc::truth_to_json(bc.truth));
  write_json(out / "meta.json", jtsc::case_meta_to_json(bc.meta));
  manifest["timings_ms"]["total"] = ms_since(t0);
  write_json(out / "manifest.json", manifest);

  std::cout << "wrote case bundle to " << out.string() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Joint time series chain discovery across two related series"};
  app.set_version_flag("--version", jtsc::kToolVersion);
  app.require_subcommand(1);

  DiscoverOpts d;
  std::size_t column_flag = 0;
  auto* discover = app.add_subcommand(
      "discover", "Find the top-ranked joint chain across two series");
  discover->add_option("--ref", d.ref_path, "Reference series CSV")->required();
  discover->add_option("--target", d.target_path, "Target series CSV")
      ->required();
  discover->add_option("--subseq-len", d.subseq_len, "Window length")
      ->required();
  discover->add_option("--quantile-ref", d.quantile_ref,
                       "Filter quantile, reference side");
  discover->add_option("--quantile-target", d.quantile_target,
                       "Filter quantile, target side");
  discover->add_option("--topk", d.topk, "Deviation-score order statistic");
  discover->add_option("--column", column_flag,
                       "1-based column for multi-column CSV inputs");
  discover->add_option("--out", d.out_dir, "Output directory")->required();

  BaselineOpts b;
  auto* baseline = app.add_subcommand(
      "baseline", "Run a single-series chain baseline on concat(ref, target)");
  baseline->add_option("--method", b.method, "tsc17 or tsc20")
      ->required()
      ->check(CLI::IsMember({"tsc17", "tsc20"}));
  baseline->add_option("--ref", b.ref_path, "Reference series CSV")->required();
  baseline->add_option("--target", b.target_path, "Target series CSV")
      ->required();
  baseline->add_option("--subseq-len", b.subseq_len, "Window length")
      ->required();
  baseline->add_option("--column", column_flag,
                       "1-based column for multi-column CSV inputs");
  baseline->add_option("--out", b.out_dir, "Output directory")->required();

  BenchOpts bn;
  auto* bench = app.add_subcommand(
      "bench", "Generate cases and compare all methods by hit rate");
  bench->add_option("--shapes", bn.shapes, "Builtin shape pair id");
  bench->add_option("--ucr-dir", bn.ucr_dir,
                    "Directory of labeled instance files (overrides --shapes)");
  bench->add_option("--instance-len", bn.instance_len,
                    "Instance length for builtin shapes");
  bench->add_option("--repeats", bn.repeats, "Cases to generate");
  bench->add_option("--seed", bn.seed, "Master seed");
  bench->add_option("--subseq-len", bn.subseq_len,
                    "Window length (default: half the instance length)");
  bench->add_option("--quantile-ref", bn.quantile_ref,
                    "Filter quantile, reference side");
  bench->add_option("--quantile-target", bn.quantile_target,
                    "Filter quantile, target side");
  bench->add_option("--topk", bn.topk, "Deviation-score order statistic");
  bench->add_option("--out", bn.out_dir, "Output directory")->required();

  GenOpts g;
  auto* gen = app.add_subcommand("gen", "Write one generated case bundle");
  gen->add_option("--shapes", g.shapes, "Builtin shape pair id");
  gen->add_option("--instance-len", g.instance_len, "Instance length");
  gen->add_option("--seed", g.seed, "Seed");
  gen->add_option("--out", g.out_dir, "Output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (discover->parsed()) {
      if (column_flag > 0) d.column = column_flag;
      return run_discover(d);
    }
    if (baseline->parsed()) {
      if (column_flag > 0) b.column = column_flag;
      return run_baseline(b);
    }
    if (bench->parsed()) return run_bench(bn);
    if (gen->parsed()) return run_gen(g);
  } catch (const jtsc::IOError& ex) {
    std::cerr << "I/O error: " << ex.what() << "\n";
    return kExitIo;
  } catch (const jtsc::ParseError& ex) {
    std::cerr << "parse error: " << ex.what() << "\n";
    return kExitParse;
  } catch (const jtsc::InputError& ex) {
    std::cerr << "input error: " << ex.what() << "\n";
    return kExitContract;
  } catch (const jtsc::ContractError& ex) {
    std::cerr << "contract violation: " << ex.what() << "\n";
    return kExitContract;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return kExitOk;
}
