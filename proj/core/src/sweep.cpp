#include "rankgraph/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <thread>

#include "rankgraph/group_structure.hpp"

namespace rankgraph {

std::vector<unsigned> d_values(unsigned d_of_g, unsigned offset) {
  std::vector<unsigned> out;
  if (d_of_g == 2) out.push_back(2);
  const unsigned first = std::max(3u, d_of_g);
  const unsigned last = std::max(first, d_of_g + offset);
  for (unsigned d = first; d <= last; ++d) out.push_back(d);
  return out;
}

bool SweepRecord::operator==(const SweepRecord& o) const {
  return group_id == o.group_id && status == o.status && message == o.message &&
         order == o.order && d == o.d && soluble == o.soluble && graphs == o.graphs &&
         critical == o.critical && tool_version == o.tool_version && seed == o.seed &&
         timing == o.timing;
}

void to_json(nlohmann::json& j, const SweepRecord& r) {
  auto graphs = nlohmann::json::array();
  for (const auto& g : r.graphs) {
    nlohmann::json s = g.stats;
    s.erase("elapsed_ms");
    s.erase("group");
    s["connected"] = g.connected;
    s["critical"] = g.critical;
    graphs.push_back(std::move(s));
  }
  j = nlohmann::json{{"group", r.group_id}, {"status", r.status},   {"message", r.message},
                     {"order", r.order},    {"d", r.d},             {"soluble", r.soluble},
                     {"graphs", graphs},    {"critical", r.critical}, {"tool_version", r.tool_version},
                     {"seed", r.seed},      {"timing", r.timing}};
}

void from_json(const nlohmann::json& j, SweepRecord& r) {
  r.group_id = j.at("group").get<std::string>();
  r.status = j.at("status").get<std::string>();
  r.message = j.value("message", std::string{});
  r.order = j.at("order").get<std::size_t>();
  r.d = j.at("d").get<unsigned>();
  r.soluble = j.value("soluble", false);
  r.critical = j.at("critical").get<bool>();
  r.tool_version = j.value("tool_version", std::string{});
  r.seed = j.value("seed", std::uint64_t{0});
  r.timing = j.value("timing", nlohmann::json::object());
  r.graphs.clear();
  for (const auto& s : j.at("graphs")) {
    SweepGraph g;
    auto body = s;
    body["group"] = r.group_id;
    body["elapsed_ms"] = 0.0;
    g.stats = body.get<GraphStats>();
    g.connected = s.at("connected").get<bool>();
    g.critical = s.at("critical").get<bool>();
    r.graphs.push_back(std::move(g));
  }
}

SweepRecord analyze_entry(const CatalogEntry& entry, const SweepConfig& config) {
  using clock = std::chrono::steady_clock;
  SweepRecord rec;
  rec.group_id = entry.id;
  rec.seed = config.seed;
  auto start = clock::now();
  rec.timing["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(
                                std::chrono::system_clock::now().time_since_epoch())
                                .count();
  rec.timing["elapsed_ms"] = nlohmann::json::object();
  try {
    PermGroup pg = to_perm_group(entry);
    rec.soluble = is_soluble(pg);
    if (pg.order() > config.max_order) {
      rec.status = "skipped-order";
      rec.order = pg.order() > std::numeric_limits<std::size_t>::max()
                      ? std::numeric_limits<std::size_t>::max()
                      : static_cast<std::size_t>(pg.order());
      return rec;
    }
    auto group = FiniteGroup::from_perm_group(pg, entry.id, config.cap_elements);
    rec.order = group->size();
    if (group->is_cyclic()) {
      rec.status = "skipped-cyclic";
      return rec;
    }
    SubgroupCache cache(group);
    rec.d = min_rank(cache).d;
    std::vector<unsigned> ds =
        config.single_d ? std::vector<unsigned>{*config.single_d} : d_values(rec.d, config.d_offset);
    for (unsigned d : ds) {
      auto t0 = clock::now();
      auto graph = build_delta_d(cache, d);
      SweepGraph g;
      g.stats = graph_stats(graph, entry.id, config.diameter);
      double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
      rec.timing["elapsed_ms"][std::to_string(d)] = ms;
      g.stats.elapsed_ms = 0;
      g.connected = g.stats.n_components == 1;
      // A rank graph below d(G) is empty by definition and not a finding.
      g.critical = !g.connected && d >= rec.d;
      rec.critical = rec.critical || g.critical;
      rec.graphs.push_back(std::move(g));
    }
    rec.status = "ok";
  } catch (const std::exception& err) {
    rec.status = "error";
    rec.message = err.what();
  }
  rec.timing["total_ms"] =
      std::chrono::duration<double, std::milli>(clock::now() - start).count();
  return rec;
}

std::vector<SweepRecord> sweep(const std::vector<CatalogEntry>& entries, const SweepConfig& config,
                               const std::function<void(const SweepRecord&)>& sink) {
  std::vector<std::optional<SweepRecord>> results(entries.size());
  std::mutex lock;
  std::size_t flushed = 0;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (;;) {
      std::size_t k = next.fetch_add(1);
      if (k >= entries.size()) return;
      SweepRecord rec = analyze_entry(entries[k], config);
      std::lock_guard guard(lock);
      results[k] = std::move(rec);
      while (flushed < results.size() && results[flushed]) {
        if (sink) sink(*results[flushed]);
        ++flushed;
      }
    }
  };
  const unsigned jobs = std::max(1u, config.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<SweepRecord> out;
  out.reserve(results.size());
  for (auto& r : results) out.push_back(std::move(*r));
  return out;
}

void append_result(const SweepRecord& record, std::ostream& out) {
  out << nlohmann::json(record).dump() << '\n';
}

void save_results(const std::vector<SweepRecord>& records, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw PreconditionError("cannot write results " + path.string());
  for (const auto& r : records) append_result(r, out);
}

std::vector<SweepRecord> load_results(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open results " + path.string());
  std::vector<SweepRecord> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(nlohmann::json::parse(line).get<SweepRecord>());
    } catch (const nlohmann::json::exception& err) {
      throw PreconditionError(path.string() + ":" + std::to_string(number) + ": " + err.what());
    }
  }
  return out;
}

std::set<std::string> recorded_ids(const std::filesystem::path& path) {
  std::set<std::string> ids;
  if (!std::filesystem::exists(path)) return ids;
  for (const auto& r : load_results(path)) ids.insert(r.group_id);
  return ids;
}

}  // namespace rankgraph
