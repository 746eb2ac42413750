#pragma once

#include <filesystem>
#include <optional>

#include <json.hpp>

#include "jtsc/eval.hpp"

namespace jtsc {

/// File could not be opened, read or written.
class IOError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// File opened fine but its contents are malformed.
class ParseError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Reads a series from CSV: one value per line by default, a single header
/// line is auto-detected and skipped. Multi-column files need `column`
/// (1-based). NaN/inf and non-numeric fields are rejected with row numbers.
TimeSeries read_series_csv(const std::filesystem::path& path,
                           std::optional<std::size_t> column = std::nullopt);

void write_series_csv(const std::filesystem::path& path, const TimeSeries& t);

/// index,dist,nn_index rows (1-based); undefined entries emit empty fields.
void write_profile_csv(const std::filesystem::path& path,
                       const MatrixProfile& mp);

/// index,value,chain_node_flag rows; flag marks samples covered by a chain
/// node window.
void write_annotated_series_csv(const std::filesystem::path& path,
                                const TimeSeries& t,
                                const std::vector<std::size_t>& node_starts,
                                std::size_t len);

/// Serialized indices are 1-based throughout.
nlohmann::json chain_to_json(const Chain& chain);
nlohmann::json joint_chain_to_json(const JointChain& jc);
nlohmann::json discovery_to_json(const DiscoveryResult& res);
nlohmann::json truth_to_json(const std::vector<TruthInterval>& truth);
nlohmann::json case_meta_to_json(const CaseMeta& meta);
nlohmann::json report_to_json(const EvalReport& rep);
std::string report_to_table_csv(const EvalReport& rep);

std::string series_tag_name(SeriesTag tag);
std::string mapped_node_series_name(SeriesTag tag);  // boundary for concat

/// Temp-file-plus-rename write; directories are created as needed.
void write_text_atomic(const std::filesystem::path& path,
                       const std::string& text);

std::uint64_t fnv1a64_file(const std::filesystem::path& path);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

}  // namespace jtsc
