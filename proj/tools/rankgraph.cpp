// rankgraph: command-line front end for the rank-graph library.
//
// Exit codes: 0 pass, 1 theorem-violation finding, 2 usage or resource error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "rankgraph/automorphisms.hpp"
#include "rankgraph/catalog.hpp"
#include "rankgraph/crown_decomposition.hpp"
#include "rankgraph/crown_graph.hpp"
#include "rankgraph/crown_powers.hpp"
#include "rankgraph/graphs.hpp"
#include "rankgraph/group_structure.hpp"
#include "rankgraph/sweep.hpp"
#include "rankgraph/verify.hpp"

using namespace rankgraph;
using json = nlohmann::json;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_violation = 1;
constexpr int exit_usage = 2;

struct Common {
  std::string catalog_path;
  std::string out;
  bool json_stdout = false;
  std::size_t cap_elements = default_table_cap;
};

Catalog load(const Common& c) {
  if (c.catalog_path.empty()) return Catalog::with_default_file();
  return Catalog(load_catalog(c.catalog_path));
}

void emit(const Common& c, const json& j) {
  if (!c.out.empty()) {
    std::ofstream f(c.out);
    if (!f) throw PreconditionError("cannot write " + c.out);
    f << j.dump(2) << '\n';
  }
  if (c.json_stdout) std::cout << j.dump(2) << '\n';
}

ElementGraph build_graph(SubgroupCache& cache, const std::string& kind, unsigned d, bool keep_isolated) {
  if (kind == "generating") return build_generating_graph(cache, !keep_isolated);
  if (kind == "rank") return keep_isolated ? build_gamma_d(cache, d) : build_delta_d(cache, d);
  throw PreconditionError("unknown graph kind " + kind + " (generating | rank)");
}

// ---------------------------------------------------------------------------

struct AnalyzeOpts {
  std::string group, graph = "rank";
  std::optional<unsigned> d;
  bool diameter = false;
};

int run_analyze(const Common& c, const AnalyzeOpts& o) {
  auto catalog = load(c);
  auto group = to_group(catalog.resolve(o.group), c.cap_elements);
  if (group->is_cyclic()) throw PreconditionError(o.group + " is cyclic; graphs are not analyzed");
  SubgroupCache cache(group);
  auto cert = min_rank(cache);
  const unsigned d = o.d.value_or(std::max(2u, cert.d));
  auto t0 = std::chrono::steady_clock::now();
  auto graph = build_graph(cache, o.graph, d, false);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  auto stats = graph_stats(graph, o.group, o.diameter, ms);

  const bool in_scope = d >= std::max(3u, cert.d) || (d == 2 && cert.d == 2);
  const bool violation = in_scope && stats.n_components != 1;
  json j = stats;
  j["order"] = group->size();
  j["d_G"] = cert.d;
  j["connected"] = stats.n_components == 1;
  emit(c, j);
  std::cout << o.group << ": |G| = " << group->size() << ", d(G) = " << cert.d << ", "
            << o.graph << " graph d = " << d << ": " << stats.n_vertices << " vertices, "
            << stats.n_edges << " edges, " << stats.n_components << " component(s)";
  if (stats.diameter) std::cout << ", diameter " << *stats.diameter;
  std::cout << (violation ? "  CRITICAL" : "") << '\n';
  return violation ? exit_violation : exit_pass;
}

// ---------------------------------------------------------------------------

struct SweepOpts {
  std::vector<std::string> ids;
  std::size_t max_order = 500;
  std::optional<unsigned> d;
  unsigned d_max = 1;
  bool diameter = false;
  std::uint64_t seed = 42;
  unsigned jobs = 1;
  bool resume = false;
};

int run_sweep(const Common& c, const SweepOpts& o) {
  auto catalog = load(c);
  std::vector<CatalogEntry> entries;
  std::set<std::string> done;
  if (o.resume) {
    if (c.out.empty()) throw PreconditionError("--resume needs --out");
    done = recorded_ids(c.out);
  }
  for (const auto& id : o.ids.empty() ? catalog.standard_ids() : o.ids)
    if (!done.count(id)) entries.push_back(catalog.resolve(id));

  SweepConfig config;
  config.max_order = o.max_order;
  config.single_d = o.d;
  config.d_offset = o.d_max;
  config.diameter = o.diameter;
  config.seed = o.seed;
  config.jobs = o.jobs;
  config.cap_elements = c.cap_elements;

  std::ofstream out;
  if (!c.out.empty()) {
    out.open(c.out, o.resume ? std::ios::app : std::ios::trunc);
    if (!out) throw PreconditionError("cannot write " + c.out);
  }
  std::size_t critical = 0, errors = 0, analyzed = 0;
  sweep(entries, config, [&](const SweepRecord& r) {
    if (out.is_open()) {
      append_result(r, out);
      out.flush();
    }
    if (c.json_stdout) std::cout << json(r).dump() << '\n';
    if (r.status == "ok") ++analyzed;
    if (r.status == "error") ++errors;
    if (r.critical) ++critical;
    std::cout << r.group_id << " [" << r.status << "]";
    if (r.status == "ok") {
      std::cout << " |G|=" << r.order << " d=" << r.d << ':';
      for (const auto& g : r.graphs) {
        std::cout << " D" << g.stats.d << (g.connected ? " conn" : " DISCONNECTED");
        if (g.stats.diameter) std::cout << "(diam " << *g.stats.diameter << ")";
      }
    } else if (!r.message.empty()) {
      std::cout << ' ' << r.message;
    }
    std::cout << (r.critical ? "  CRITICAL" : "") << '\n';
  });
  std::cout << "analyzed " << analyzed << ", skipped or resumed " << (entries.size() - analyzed - errors)
            << ", errors " << errors << ", critical " << critical << '\n';
  return critical ? exit_violation : exit_pass;
}

// ---------------------------------------------------------------------------

struct CrownOpts {
  std::string l, group, check = "weak-conn";
  unsigned t = 3, eta = 1;
  bool sampled = false;
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
};

int run_crown(const Common& c, const CrownOpts& o) {
  auto catalog = load(c);
  if (!o.group.empty()) {
    SubgroupCache cache(to_group(catalog.resolve(o.group), c.cap_elements));
    auto list = crowns(cache, c.cap_elements);
    auto j = crown_summary_json(cache, o.group, list);
    emit(c, j);
    bool ok = true;
    for (const auto& cr : list) {
      std::cout << o.group << ": crown of factor " << cr.factor << ", delta " << cr.delta
                << ", |R| = " << cache.order(cr.r) << ", |I| = " << cache.order(cr.i) << ", "
                << cr.l_a_id;
      if (cr.power_isomorphic) std::cout << (*cr.power_isomorphic ? ", G/R = (L_A)_delta" : ", G/R NOT a crown-based power");
      std::cout << '\n';
      ok = ok && cr.power_isomorphic.value_or(true);
    }
    return ok ? exit_pass : exit_violation;
  }
  if (o.l.empty()) throw PreconditionError("crown needs --L or --group");
  auto l = resolve_monolithic(catalog, o.l);
  AutGroup x = x_subgroup(automorphism_group(l->group_ptr()), l->socle_members());
  OrbitTable table(l, x, standard_generating_tuple(*l, o.t));
  json j{{"L", o.l}, {"t", o.t}, {"eta", o.eta}, {"delta", delta_Lt(table)},
         {"orbit_count", table.orbit_count()}, {"omega_size", table.omega_size()}, {"seed", o.seed}};
  bool pass = true;
  if (o.check == "weak-conn") {
    WeakConnectivityOptions opts;
    opts.sampled = o.sampled;
    opts.samples = o.samples;
    opts.seed = o.seed;
    auto lc = local_connectivity(l, x, o.t, o.eta, opts);
    pass = lc.pass;
    auto witnesses = json::array();
    for (const auto& r : lc.reports)
      for (const auto& w : r.witnesses)
        witnesses.push_back({{"row", w.row}, {"from", {w.from.row, w.from.m}},
                             {"to", {w.to.row, w.to.m}}, {"conjugator", w.conjugator},
                             {"verified", w.verified}});
    j["weak_connectivity"] = pass ? "pass" : "fail";
    j["patterns"] = lc.patterns;
    j["failures"] = lc.failures;
    j["witnesses"] = witnesses;
    std::cout << "L = " << o.l << ", t = " << o.t << ", eta = " << o.eta << ": delta = "
              << j["delta"] << ", " << lc.patterns << " pattern(s), weak connectivity "
              << (pass ? "pass" : "FAIL") << '\n';
  } else if (o.check == "delta") {
    auto w = verify_delta(table);
    pass = w.generates && w.order == w.expected_order;
    j["witness_generates"] = w.generates;
    j["witness_order"] = w.order.str();
    std::cout << "delta(" << o.l << ", " << o.t << ") = " << w.k << ", witness "
              << (pass ? "generates" : "DOES NOT generate") << " L_" << w.k << " (order "
              << w.order << ")\n";
  } else if (o.check == "partitions") {
    auto pc = partitions_pi(table);
    auto bc = partition_bridges(table);
    pass = pc.meet_is_single_block && bc.pass;
    j["meet_single_block"] = pc.meet_is_single_block;
    j["bridges"] = bc.bridges.size();
    j["bridge_failures"] = bc.failures;
    std::cout << "partition meet " << (pc.meet_is_single_block ? "is" : "is NOT")
              << " one block; bridges " << (bc.pass ? "pass" : "FAIL") << '\n';
  } else {
    throw PreconditionError("unknown --check " + o.check + " (weak-conn | delta | partitions)");
  }
  emit(c, j);
  return pass ? exit_pass : exit_violation;
}

// ---------------------------------------------------------------------------

int run_verify(const Common& c, const std::string& lemma, const VerifyParams& p) {
  auto catalog = load(c);
  auto report = verify_lemma(catalog, lemma, p);
  emit(c, json(report));
  std::cout << lemma << ": " << (report.pass ? "PASS" : "FAIL") << " (" << report.instances
            << " instances, " << report.violations << " violations";
  if (report.rejected) std::cout << ", " << report.rejected << " rejected";
  std::cout << ", seed " << report.seed << ")\n";
  for (const auto& n : report.notes) std::cout << "  " << n << '\n';
  return report.pass ? exit_pass : exit_violation;
}

// ---------------------------------------------------------------------------

struct DotOpts {
  std::string group, graph = "rank", x, y;
  std::optional<unsigned> d;
  bool keep_isolated = false;
};

int run_export_dot(const Common& c, const DotOpts& o) {
  auto catalog = load(c);
  SubgroupCache cache(to_group(catalog.resolve(o.group), c.cap_elements));
  ElementGraph graph;
  if (o.graph == "lambda") {
    auto lattice = normal_subgroups(cache);
    if (lattice.minimal_normals.size() != 1)
      throw PreconditionError("lambda needs a unique minimal normal subgroup");
    const FiniteGroup& G = cache.group();
    auto parse = [&](const std::string& s) {
      auto idx = G.index_of(Permutation::parse(G.degree(), s.empty() ? "()" : s));
      if (!idx) throw PreconditionError(s + " is not in " + o.group);
      return *idx;
    };
    graph = build_lambda(cache, lattice.minimal_normals.front(), parse(o.x), parse(o.y));
  } else {
    unsigned d = o.d.value_or(std::max(2u, min_rank(cache).d));
    graph = build_graph(cache, o.graph, d, o.keep_isolated);
  }
  std::ostringstream dot;
  export_dot(graph, dot);
  if (c.out.empty()) {
    std::cout << dot.str();
  } else {
    std::ofstream f(c.out);
    if (!f) throw PreconditionError("cannot write " + c.out);
    f << dot.str();
    std::cerr << "wrote " << graph.vertex_count() << " vertices, " << graph.edge_count()
              << " edges to " << c.out << '\n';
  }
  return exit_pass;
}

// ---------------------------------------------------------------------------

int run_catalog(const Common& c, const std::string& show) {
  auto catalog = load(c);
  if (!show.empty()) {
    auto e = catalog.resolve(show);
    json j = e;
    j["order"] = to_perm_group(e).order().str();
    emit(c, j);
    std::cout << j.dump(2) << '\n';
    return exit_pass;
  }
  auto list = json::array();
  for (const auto& id : catalog.standard_ids()) {
    auto e = catalog.resolve(id);
    auto order = to_perm_group(e).order();
    list.push_back({{"id", id}, {"degree", e.degree}, {"order", order.str()}, {"tags", e.tags}});
    std::cout << id << "\torder " << order << "\tdegree " << e.degree << '\n';
  }
  emit(c, list);
  return exit_pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generating graphs, rank graphs and crown-based powers of finite permutation groups"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--catalog", common.catalog_path, "Catalog JSON file (default: bundled data/catalog.json)");
  app.add_option("--out", common.out, "Write JSON (JSON-lines for sweep, DOT for export-dot) here");
  app.add_flag("--json", common.json_stdout, "Also print JSON to standard output");
  app.add_option("--cap-elements", common.cap_elements, "Largest group order tabulated");

  AnalyzeOpts analyze;
  auto* a = app.add_subcommand("analyze", "Build one graph and report its statistics");
  a->add_option("--group", analyze.group, "Group id")->required();
  a->add_option("--graph", analyze.graph, "generating | rank");
  a->add_option("--d", analyze.d, "Rank-graph parameter (default max(2, d(G)))");
  a->add_flag("--diameter", analyze.diameter, "Compute the diameter");

  SweepOpts sw;
  auto* s = app.add_subcommand("sweep", "Rank-graph connectivity over the catalog (JSON-lines)");
  s->add_option("--ids", sw.ids, "Restrict to these ids");
  s->add_option("--max-order", sw.max_order, "Skip larger groups");
  s->add_option("--d", sw.d, "Only this d");
  s->add_option("--d-max", sw.d_max, "Largest d is max(3, d(G), d(G) + this)");
  s->add_flag("--diameter", sw.diameter, "Record diameters");
  s->add_option("--seed", sw.seed, "Seed recorded with every record");
  s->add_option("--jobs", sw.jobs, "Entries analyzed in parallel");
  s->add_flag("--resume", sw.resume, "Skip ids already present in --out");

  CrownOpts cr;
  auto* c = app.add_subcommand("crown", "Crown-based power checks, or crown decomposition of --group");
  c->add_option("--L", cr.l, "Monolithic group with non-abelian socle");
  c->add_option("--group", cr.group, "Decompose this group into crowns instead");
  c->add_option("--t", cr.t, "Generating tuple length");
  c->add_option("--eta", cr.eta, "Crown-power exponent of the graph");
  c->add_option("--check", cr.check, "weak-conn | delta | partitions");
  c->add_flag("--sampled", cr.sampled, "Add random pair checks");
  c->add_option("--samples", cr.samples, "Random pairs per row in sampled mode");
  c->add_option("--seed", cr.seed, "Seed");

  std::string lemma;
  VerifyParams vp;
  auto* v = app.add_subcommand("verify", "Check a lemma statement on its instance set");
  v->add_option("--lemma", lemma, "Lemma id")->required()->check(CLI::IsMember(lemma_ids()));
  v->add_option("--group", vp.groups, "Override the instance groups");
  v->add_option("--t", vp.t, "Tuple length");
  v->add_option("--eta", vp.eta, "Crown-power exponent");
  v->add_option("--d", vp.d, "Rank-graph parameter");
  v->add_option("--samples", vp.samples, "Random instances");
  v->add_option("--slice", vp.slice, "Exhaustive prefix length");
  v->add_option("--max-order", vp.max_order, "Largest catalog group used");
  v->add_flag("--sampled", vp.sampled, "Sampled mode");
  v->add_option("--seed", vp.seed, "Seed");
  v->add_option("--x", vp.x, "Lambda: first coset representative (cycle notation)");
  v->add_option("--y", vp.y, "Lambda: second coset representative (cycle notation)");

  DotOpts dot;
  auto* e = app.add_subcommand("export-dot", "Write a graph in DOT format");
  e->add_option("--group", dot.group, "Group id")->required();
  e->add_option("--graph", dot.graph, "generating | rank | lambda");
  e->add_option("--d", dot.d, "Rank-graph parameter");
  e->add_flag("--keep-isolated", dot.keep_isolated, "Keep isolated vertices");
  e->add_option("--x", dot.x, "Lambda: first coset representative");
  e->add_option("--y", dot.y, "Lambda: second coset representative");

  std::string show;
  auto* k = app.add_subcommand("catalog", "List the built-in sweep catalog or show one entry");
  k->add_option("--show", show, "Resolve and print one id");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::CallForAllHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    std::cerr << app.help();
    return exit_usage;
  }

  try {
    if (*a) return run_analyze(common, analyze);
    if (*s) return run_sweep(common, sw);
    if (*c) return run_crown(common, cr);
    if (*v) return run_verify(common, lemma, vp);
    if (*e) return run_export_dot(common, dot);
    if (*k) return run_catalog(common, show);
  } catch (const TheoremViolation& err) {
    std::cerr << "theorem violation: " << err.what() << '\n';
    return exit_violation;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
