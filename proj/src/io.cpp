#include "jtsc/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace jtsc {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& tok, double& out) {
  if (tok.empty()) return false;
  std::size_t used = 0;
  try {
    out = std::stod(tok, &used);
  } catch (const std::exception&) {
    return false;
  }
  return used == tok.size();
}

std::string direction_name(ChainDirection d) {
  switch (d) {
    case ChainDirection::backward: return "backward";
    case ChainDirection::forward: return "forward";
    case ChainDirection::bidirectional: return "bidirectional";
  }
  return "?";
}

nlohmann::json scores_to_json(const ScoreBreakdown& s) {
  return nlohmann::json{{"fluc", s.fluc},
                        {"evolve", s.evolve},
                        {"ref_dev", s.ref_dev},
                        {"rank", s.rank}};
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

TimeSeries read_series_csv(const std::filesystem::path& path,
                           std::optional<std::size_t> column) {
  std::ifstream in(path);
  if (!in) {
    throw IOError("cannot open input file: " + path.string());
  }

  std::vector<double> values;
  std::string line;
  std::size_t row = 0;
  bool first_data_line = true;
  while (std::getline(in, line)) {
    ++row;
    const auto fields = split_fields(line);
    if (fields.size() == 1 && trim(fields[0]).empty()) continue;  // blank

    if (fields.size() > 1 && !column) {
      throw ParseError(path.string() + ": row " + std::to_string(row) +
                       " has " + std::to_string(fields.size()) +
                       " columns; pass --column to select one");
    }
    const std::size_t col = column ? *column : 1;
    if (col == 0 || col > fields.size()) {
      throw ParseError(path.string() + ": row " + std::to_string(row) +
                       " has no column " + std::to_string(col));
    }
    const std::string tok = trim(fields[col - 1]);

    double v = 0.0;
    if (!parse_double(tok, v)) {
      if (first_data_line) {
        first_data_line = false;  // single header line
        continue;
      }
      throw ParseError(path.string() + ": row " + std::to_string(row) +
                       ": cannot parse value '" + tok + "'");
    }
    if (!std::isfinite(v)) {
      throw ParseError(path.string() + ": row " + std::to_string(row) +
                       ": value is not finite");
    }
    first_data_line = false;
    values.push_back(v);
  }
  if (values.empty()) {
    throw ParseError(path.string() + ": no samples found");
  }
  return TimeSeries{std::move(values)};
}

void write_series_csv(const std::filesystem::path& path, const TimeSeries& t) {
  std::string out;
  out.reserve(t.size() * 12);
  for (double v : t.values) {
    out += format_double(v);
    out += '\n';
  }
  write_text_atomic(path, out);
}

void write_profile_csv(const std::filesystem::path& path,
                       const MatrixProfile& mp) {
  std::string out = "index,dist,nn_index\n";
  for (std::size_t i = 0; i < mp.size(); ++i) {
    out += std::to_string(i + 1);
    out += ',';
    if (const auto& e = mp.entries[i]) {
      out += format_double(e->dist);
      out += ',';
      out += std::to_string(e->nn_index + 1);
    } else {
      out += ',';
    }
    out += '\n';
  }
  write_text_atomic(path, out);
}

void write_annotated_series_csv(const std::filesystem::path& path,
                                const TimeSeries& t,
                                const std::vector<std::size_t>& node_starts,
                                std::size_t len) {
  std::vector<char> flag(t.size(), 0);
  for (std::size_t s : node_starts) {
    for (std::size_t k = 0; k < len && s + k < t.size(); ++k) flag[s + k] = 1;
  }
  std::string out = "index,value,chain_node_flag\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    out += std::to_string(i + 1);
    out += ',';
    out += format_double(t.values[i]);
    out += ',';
    out += flag[i] ? '1' : '0';
    out += '\n';
  }
  write_text_atomic(path, out);
}

std::string series_tag_name(SeriesTag tag) {
  switch (tag) {
    case SeriesTag::a: return "A";
    case SeriesTag::b: return "B";
    case SeriesTag::concatenated: return "concatenated";
  }
  return "?";
}

std::string mapped_node_series_name(SeriesTag tag) {
  return tag == SeriesTag::concatenated ? "boundary" : series_tag_name(tag);
}

nlohmann::json chain_to_json(const Chain& chain) {
  nlohmann::json j;
  j["series"] = series_tag_name(chain.series);
  j["direction"] = direction_name(chain.direction);
  auto& idx = j["indices"] = nlohmann::json::array();
  for (std::size_t i : chain.indices) idx.push_back(i + 1);
  j["adjacent_dists"] = chain.adjacent_dists;
  return j;
}

nlohmann::json joint_chain_to_json(const JointChain& jc) {
  nlohmann::json j;
  j["ref_chain"] = chain_to_json(jc.ref_chain);
  j["target_chain"] = chain_to_json(jc.target_chain);
  j["junction"] = {{"a", jc.junction_a + 1},
                   {"b", jc.junction_b + 1},
                   {"dist", jc.junction_dist}};
  j["scores"] = scores_to_json(jc.scores);
  return j;
}

nlohmann::json discovery_to_json(const DiscoveryResult& res) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["subseq_len"] = res.subseq_len;
  j["ref_length"] = res.ref_length;
  j["target_length"] = res.target_length;
  j["thresholds"] = {{"ref", res.threshold_ref},
                     {"target", res.threshold_target}};
  j["degenerate"] = res.degenerate;
  auto& chains = j["chains"] = nlohmann::json::array();
  for (const auto& jc : res.all_candidates) {
    chains.push_back(joint_chain_to_json(jc));
  }
  return j;
}

nlohmann::json truth_to_json(const std::vector<TruthInterval>& truth) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& iv : truth) {
    arr.push_back({{"series", series_tag_name(iv.series)},
                   {"start", iv.start + 1},
                   {"end", iv.end + 1},
                   {"amplitude", iv.amplitude}});
  }
  return nlohmann::json{{"schema_version", 1}, {"intervals", arr}};
}

nlohmann::json case_meta_to_json(const CaseMeta& meta) {
  return nlohmann::json{{"schema_version", 1},
                        {"instance_len", meta.instance_len},
                        {"noise_len", meta.noise_len},
                        {"seed", meta.seed},
                        {"class1_label", meta.class1_label},
                        {"class2_label", meta.class2_label}};
}

nlohmann::json report_to_json(const EvalReport& rep) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["dataset"] = rep.dataset;
  j["type"] = rep.dataset_type;
  j["instance_len"] = rep.instance_len;
  j["subseq_len"] = rep.subseq_len;
  j["cases_requested"] = rep.cases_requested;
  j["cases_completed"] = rep.cases_completed;
  j["cases_skipped"] = rep.cases_skipped;
  j["mean_hit_rate"] = rep.mean_hit_rate;
  j["wins"] = rep.wins;
  auto& cases = j["per_case"] = nlohmann::json::array();
  for (const auto& cr : rep.per_case) {
    nlohmann::json c;
    c["case"] = cr.case_index;
    c["seed"] = cr.seed;
    c["ok"] = cr.ok;
    if (!cr.ok) c["error"] = cr.error;
    auto& rows = c["methods"] = nlohmann::json::array();
    for (const auto& row : cr.rows) {
      rows.push_back({{"method", row.method},
                      {"hit_rate", row.hit_rate},
                      {"node_count", row.node_count},
                      {"m_a", row.m_a},
                      {"m_b", row.m_b}});
    }
    cases.push_back(std::move(c));
  }
  return j;
}

std::string report_to_table_csv(const EvalReport& rep) {
  auto mean = [&rep](const char* m) {
    auto it = rep.mean_hit_rate.find(m);
    return it == rep.mean_hit_rate.end() ? 0.0 : it->second;
  };
  auto wins = [&rep](const char* m) {
    auto it = rep.wins.find(m);
    return it == rep.wins.end() ? std::size_t{0} : it->second;
  };
  std::string out = "dataset,type,l_instance,tsc17,tsc20,jtsc\n";
  out += rep.dataset + ',' + rep.dataset_type + ',' +
         std::to_string(rep.instance_len) + ',' + format_double(mean("tsc17")) +
         ',' + format_double(mean("tsc20")) + ',' +
         format_double(mean("jtsc")) + '\n';
  out += "wins,-,-," + std::to_string(wins("tsc17")) + ',' +
         std::to_string(wins("tsc20")) + ',' + std::to_string(wins("jtsc")) +
         '\n';
  return out;
}

void write_text_atomic(const std::filesystem::path& path,
                       const std::string& text) {
  namespace fs = std::filesystem;
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw IOError("cannot open output file: " + tmp.string());
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) {
      throw IOError("failed writing output file: " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    throw IOError("failed to move " + tmp.string() + " into place: " +
                  ec.message());
  }
}

std::uint64_t fnv1a64_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IOError("cannot open file for hashing: " + path.string());
  }
  std::uint64_t h = 0xcbf29ce484222325ULL;
  char buf[4096];
  while (in.read(buf, sizeof(buf)), in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

}  // namespace jtsc
