#ifndef RANKGRAPH_SWEEP_HPP
#define RANKGRAPH_SWEEP_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "rankgraph/catalog.hpp"
#include "rankgraph/graphs.hpp"

namespace rankgraph {

inline constexpr const char* tool_version = "0.1.0";

/// {2 if d(G) = 2} followed by max(3, d(G)) .. max(max(3, d(G)), d(G) + offset).
std::vector<unsigned> d_values(unsigned d_of_g, unsigned offset = 1);

struct SweepConfig {
  std::size_t max_order = 500;
  unsigned d_offset = 1;
  std::optional<unsigned> single_d;  // only this d (still flagged when disconnected)
  bool diameter = true;
  std::uint64_t seed = 42;
  unsigned jobs = 1;
  std::size_t cap_elements = default_table_cap;
};

struct SweepGraph {
  GraphStats stats;  // elapsed_ms kept out of the record body
  bool connected = false;
  bool critical = false;

  bool operator==(const SweepGraph&) const = default;
};

/// One catalog entry's outcome. Everything except `timing` is a function of
/// (entry, config), so records are reproducible modulo that field.
struct SweepRecord {
  std::string group_id;
  std::string status;  // ok | skipped-cyclic | skipped-order | error
  std::string message;
  std::size_t order = 0;
  unsigned d = 0;
  bool soluble = false;
  std::vector<SweepGraph> graphs;
  bool critical = false;
  std::string tool_version = rankgraph::tool_version;
  std::uint64_t seed = 0;
  nlohmann::json timing = nlohmann::json::object();

  bool operator==(const SweepRecord& other) const;
};

void to_json(nlohmann::json& j, const SweepRecord& r);
void from_json(const nlohmann::json& j, SweepRecord& r);

SweepRecord analyze_entry(const CatalogEntry& entry, const SweepConfig& config);

/// Runs analyze_entry on every entry, `config.jobs` at a time. `sink` sees
/// the records in input order, one at a time; errors stay inside records.
std::vector<SweepRecord> sweep(const std::vector<CatalogEntry>& entries, const SweepConfig& config,
                               const std::function<void(const SweepRecord&)>& sink = {});

/// Appends one JSON line per record.
void save_results(const std::vector<SweepRecord>& records, const std::filesystem::path& path);
void append_result(const SweepRecord& record, std::ostream& out);
std::vector<SweepRecord> load_results(const std::filesystem::path& path);
std::set<std::string> recorded_ids(const std::filesystem::path& path);

}  // namespace rankgraph

#endif
