#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "rankgraph/sweep.hpp"
#include "rankgraph/verify.hpp"

using namespace rankgraph;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "rankgraph_tests";
  fs::create_directories(dir);
  auto p = dir / name;
  fs::remove(p);
  return p;
}

int run_cli(const std::string& args, const fs::path& output) {
  std::string cmd = std::string(RANKGRAPH_CLI) + " " + args + " > " + output.string() + " 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::size_t order_of(const std::string& id) {
  auto e = fixture::catalog().resolve(id);
  return oracle::order(e.degree, fixture::raw_generators(e));
}

}  // namespace

TEST_CASE("builders produce groups of the right order") {
  struct Case {
    const char* id;
    std::size_t order;
  };
  for (auto c : {Case{"C7", 7}, Case{"D8", 8}, Case{"D14", 14}, Case{"S5", 120}, Case{"A6", 360},
                 Case{"C2^3", 8}, Case{"C3^3", 27}, Case{"PSL(2,7)", 168}, Case{"PSL(2,8)", 504},
                 Case{"PSL(2,9)", 360}, Case{"PGL(2,7)", 336}, Case{"PGL(2,9)", 720},
                 Case{"PSL(2,4)", 60}, Case{"C2xA4", 24}, Case{"S3xS3", 36}, Case{"Q8", 8},
                 Case{"SL(2,3)", 24}, Case{"F20", 20}, Case{"F21", 21}, Case{"Dic12", 12},
                 Case{"crown(A5,2)", 3600}, Case{"A5^2", 3600}, Case{"(C2xC3)xS3", 36}}) {
    CAPTURE(std::string(c.id));
    CHECK(order_of(c.id) == c.order);
    CHECK(to_perm_group(fixture::catalog().resolve(c.id)).order() == c.order);
  }
}

TEST_CASE("id grammar rejects unknown or out-of-range ids") {
  const auto& cat = fixture::catalog();
  for (const char* bad : {"X5", "D7", "S13", "A2", "PSL(2,6)", "PSL(2,64)", "C0", "A5^9", ""}) {
    CAPTURE(std::string(bad));
    CHECK_THROWS_AS(cat.resolve(bad), PreconditionError);
  }
}

TEST_CASE("standard catalog entries validate and carry consistent tags") {
  auto entries = fixture::catalog().standard_entries();
  CHECK(entries.size() >= 46);
  std::set<std::string> ids;
  for (const auto& e : entries) {
    CAPTURE(e.id);
    CHECK(ids.insert(e.id).second);
    CHECK_NOTHROW(validate_entry(e));
  }
}

TEST_CASE("validation rejects wrong tags and bad generators") {
  auto e = fixture::catalog().resolve("S4");
  e.tags = {"simple"};
  CHECK_THROWS_AS(validate_entry(e), PreconditionError);
  e.tags = {"soluble"};
  CHECK_NOTHROW(validate_entry(e));
  e.generators.push_back({0, 0, 1, 2});
  CHECK_THROWS_AS(validate_entry(e), PreconditionError);
}

TEST_CASE("catalog JSON round-trips") {
  std::vector<CatalogEntry> entries;
  for (const char* id : {"S4", "Q8", "PSL(2,7)", "C2xA4"}) entries.push_back(fixture::catalog().resolve(id));
  entries[1].notes = "quaternion";
  auto path = scratch("catalog.json");
  save_catalog(entries, path);
  CHECK(load_catalog(path) == entries);
  nlohmann::json j = entries;
  CHECK(parse_catalog(j.dump()) == entries);
  Catalog from_file(entries);
  CHECK(from_file.resolve("Q8").notes == "quaternion");
}

TEST_CASE("catalog parse errors name the entry") {
  std::string text = R"({"entries": [{"id": "ok", "degree": 2, "generators": [[1, 0]]},
                                      {"id": "bad", "degree": 3, "generators": [[0, 0, 1]]}]})";
  try {
    parse_catalog(text);
    FAIL("expected a parse error");
  } catch (const PreconditionError& err) {
    CHECK(std::string(err.what()).find("#1") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_catalog("{not json"), PreconditionError);
  CHECK_THROWS_AS(parse_catalog(R"([{"id": "x"}])"), PreconditionError);
}

TEST_CASE("d values cover the policy range") {
  CHECK(d_values(2) == std::vector<unsigned>{2, 3});
  CHECK(d_values(2, 2) == std::vector<unsigned>{2, 3, 4});
  CHECK(d_values(3) == std::vector<unsigned>{3, 4});
  CHECK(d_values(4, 2) == std::vector<unsigned>{4, 5, 6});
}

TEST_CASE("sweep is deterministic apart from timing and resumable") {
  std::vector<CatalogEntry> entries;
  for (const char* id : {"S3", "C6", "D8", "A4", "S4", "C2^3", "A5", "S5"})
    entries.push_back(fixture::catalog().resolve(id));
  SweepConfig config;
  config.max_order = 100;
  config.jobs = 3;
  auto first = sweep(entries, config);
  config.jobs = 1;
  auto second = sweep(entries, config);
  REQUIRE(first.size() == entries.size());
  for (std::size_t k = 0; k < first.size(); ++k) {
    CHECK(first[k].group_id == entries[k].id);
    first[k].timing = second[k].timing = nlohmann::json::object();
    CHECK(first[k] == second[k]);
    CHECK_FALSE(first[k].critical);
  }
  CHECK(first[1].status == "skipped-cyclic");
  CHECK(first[7].status == "skipped-order");
  CHECK(first[3].status == "ok");

  auto path = scratch("sweep.jsonl");
  save_results(first, path);
  auto loaded = load_results(path);
  REQUIRE(loaded.size() == first.size());
  for (std::size_t k = 0; k < loaded.size(); ++k) CHECK(loaded[k] == first[k]);
  auto ids = recorded_ids(path);
  CHECK(ids.count("A5") == 1);
  // Append-only: a second save keeps the earlier lines.
  save_results({first[0]}, path);
  CHECK(load_results(path).size() == first.size() + 1);

  std::ofstream(path, std::ios::app) << "{broken\n";
  try {
    load_results(path);
    FAIL("expected an error");
  } catch (const std::exception& err) {
    CHECK(std::string(err.what()).find(std::to_string(first.size() + 2)) != std::string::npos);
  }
}

TEST_CASE("sweep record keeps timing apart from the body") {
  auto rec = analyze_entry(fixture::catalog().resolve("S4"), SweepConfig{});
  nlohmann::json j = rec;
  CHECK(j.contains("timing"));
  for (const auto& g : j.at("graphs")) CHECK_FALSE(g.contains("elapsed_ms"));
  CHECK(j.at("timing").at("elapsed_ms").size() == rec.graphs.size());
  CHECK(j.at("tool_version") == tool_version);
  CHECK(j.get<SweepRecord>() == rec);
}

TEST_CASE("lemma suites run on restricted instance sets") {
  VerifyParams p;
  p.groups = {"S4", "D8", "Q8"};
  for (const char* id : {"coniugo", "frat", "induzionenormale", "norsol", "modgg"}) {
    CAPTURE(std::string(id));
    auto r = verify_lemma(fixture::catalog(), id, p);
    CHECK(r.pass);
    CHECK(r.violations == 0);
    CHECK(r.instances > 0);
    CHECK(r.seed == 42);
  }
  CHECK_THROWS_AS(verify_lemma(fixture::catalog(), "nonsense", p), PreconditionError);
}

TEST_CASE("lambda rejects coinciding cosets") {
  VerifyParams p;
  p.groups = {"S5"};
  p.x = "(0 1)";
  p.y = "(3 4)";
  auto r = verify_lemma(fixture::catalog(), "lambda", p);
  CHECK(r.rejected == 1);
  CHECK(r.violations == 0);
}

TEST_CASE("command-line exit codes") {
  auto out = scratch("cli.txt");
  CHECK(run_cli("catalog", out) == 0);
  CHECK(slurp(out).find("PSL(2,7)") != std::string::npos);
  CHECK(run_cli("analyze --group A5 --graph rank --d 2 --diameter", out) == 0);
  CHECK(run_cli("analyze --group NOPE", out) == 2);
  CHECK(run_cli("analyze --group C6", out) == 2);
  CHECK(run_cli("--no-such-flag", out) == 2);
  CHECK(run_cli("verify --lemma nonsense", out) == 2);
  CHECK(run_cli("verify --lemma frat --group S4 --seed 42", out) == 0);
  CHECK(run_cli("crown --L S4 --t 3", out) == 2);
  CHECK(run_cli("crown --L A5 --t 2 --check delta", out) == 0);
  CHECK(slurp(out).find("= 19") != std::string::npos);
  CHECK(run_cli("crown --group \"crown(S5,2)\"", out) == 2);
  CHECK(run_cli("export-dot --group S3 --graph rank --d 2", out) == 0);
  CHECK(slurp(out).rfind("graph", 0) == 0);

  auto json_out = scratch("cli.json");
  CHECK(run_cli("--out " + json_out.string() + " crown --L A5 --t 3 --eta 1", out) == 0);
  auto j = nlohmann::json::parse(slurp(json_out));
  for (const char* key : {"L", "t", "eta", "delta", "orbit_count", "weak_connectivity", "witnesses", "seed"})
    CHECK(j.contains(key));
  CHECK(j.at("weak_connectivity") == "pass");

  auto records = scratch("cli.jsonl");
  CHECK(run_cli("--out " + records.string() + " sweep --ids S3 D8 A4", out) == 0);
  CHECK(load_results(records).size() == 3);
  CHECK(run_cli("--out " + records.string() + " sweep --resume --ids S3 D8 A4 S4", out) == 0);
  CHECK(load_results(records).size() == 4);
}
