#include "rankgraph/verify.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "rankgraph/automorphisms.hpp"
#include "rankgraph/crown_graph.hpp"
#include "rankgraph/crown_powers.hpp"
#include "rankgraph/graphs.hpp"
#include "rankgraph/group_structure.hpp"
#include "rankgraph/sweep.hpp"

namespace rankgraph {
namespace {

constexpr std::size_t max_notes = 50;

struct Recorder {
  VerifyReport& report;
  void violation(const std::string& what) {
    ++report.violations;
    if (report.notes.size() < max_notes) report.notes.push_back("violation: " + what);
  }
  void rejected(const std::string& what) {
    ++report.rejected;
    if (report.notes.size() < max_notes) report.notes.push_back("rejected: " + what);
  }
};

std::vector<CatalogEntry> instance_set(const Catalog& catalog, const VerifyParams& params,
                                       std::vector<std::string> defaults, std::size_t max_order) {
  std::vector<CatalogEntry> out;
  if (!params.groups.empty()) {
    for (const auto& id : params.groups) out.push_back(catalog.resolve(id));
    return out;
  }
  if (!defaults.empty()) {
    for (const auto& id : defaults) out.push_back(catalog.resolve(id));
    return out;
  }
  for (auto& e : catalog.standard_entries()) {
    PermGroup g = to_perm_group(e);
    if (g.order() <= params.max_order.value_or(max_order) && !to_group(e)->is_cyclic())
      out.push_back(std::move(e));
  }
  return out;
}

MonolithicPtr monolithic_of(const CatalogEntry& e) {
  return std::make_shared<const MonolithicGroup>(to_group(e), true);
}

AutGroup x_of(const MonolithicPtr& l) {
  return x_subgroup(automorphism_group(l->group_ptr()), l->socle_members());
}

Elem random_elem(std::mt19937_64& rng, std::size_t n) {
  return static_cast<Elem>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
}

Components delta_components(SubgroupCache& cache, unsigned d, ElementGraph& graph) {
  graph = build_delta_d(cache, d);
  return components(graph);
}

bool delta_connected(SubgroupCache& cache, unsigned d) {
  ElementGraph g;
  return delta_components(cache, d, g).connected();
}

// ---------------------------------------------------------------------------

void run_modgg(const Catalog& catalog, const VerifyParams& p, VerifyReport& report) {
  Recorder rec{report};
  std::mt19937_64 rng(p.seed);
  const std::size_t samples = p.samples.value_or(5);
  auto entries = instance_set(catalog, p,
                              {"S3", "D8", "Q8", "A4", "D12", "C2^3", "S4", "SL(2,3)", "F20",
                               "C3xS3", "C2xA4", "A5", "S5"},
                              120);
  std::uint64_t unsatisfied = 0;
  for (const auto& e : entries) {
    SubgroupCache cache(to_group(e));
    const FiniteGroup& G = cache.group();
    for (SubgroupId m : normal_subgroups(cache).normals) {
      if (m == SubgroupCache::trivial()) continue;
      for (unsigned xs = 0; xs <= 2; ++xs) {
        std::vector<Elem> x;
        for (unsigned k = 0; k < xs; ++k) x.push_back(random_elem(rng, G.size()));
        const unsigned dx = d_X(cache, x);
        for (unsigned r = std::max(1u, dx); r <= dx + 1; ++r) {
          for (std::size_t s = 0; s < samples; ++s) {
            std::vector<Elem> g(r);
            bool ok = false;
            for (int attempt = 0; attempt < 64 && !ok; ++attempt) {
              for (auto& v : g) v = random_elem(rng, G.size());
              SubgroupId h = cache.join_subgroups(cache.generated(x), m);
              for (Elem v : g) h = cache.join(h, v);
              ok = h == cache.whole();
            }
            if (!ok) {
              ++unsatisfied;
              continue;
            }
            ++report.instances;
            try {
              auto n = gaschutz_lift(cache, m, x, g);
              SubgroupId h = cache.generated(x);
              bool in_m = true;
              for (std::size_t i = 0; i < r; ++i) {
                in_m = in_m && cache.contains(m, n[i]);
                h = cache.join(h, G.mul(g[i], n[i]));
              }
              if (!in_m || h != cache.whole()) rec.violation(e.id + ": lift does not generate");
            } catch (const TheoremViolation& err) {
              rec.violation(e.id + ": " + err.what());
            }
          }
        }
      }
    }
  }
  report.details["groups"] = entries.size();
  report.details["samples_without_hypothesis"] = unsatisfied;
}

void run_delu(const Catalog& catalog, const VerifyParams& p, VerifyReport& report) {
  Recorder rec{report};
  std::mt19937_64 rng(p.seed);
  const unsigned d = p.d.value_or(2);
  auto entries = instance_set(catalog, p, {"A5"}, 0);
  auto out = nlohmann::json::array();
  for (const auto& e : entries) {
    auto l = monolithic_of(e);
    SubgroupCache cache(l->group_ptr());
    const FiniteGroup& L = cache.group();
    const std::size_t n = L.size();
    long double space = 1;
    for (unsigned k = 0; k < d; ++k) space *= static_cast<long double>(n);
    const bool exhaustive = space <= 4e6L;
    const std::size_t budget = exhaustive ? static_cast<std::size_t>(space) : p.samples.value_or(2000);

    std::map<std::vector<std::uint32_t>, DeluFraction> memo;
    DeluFraction worst{1, 1};
    std::uint64_t valid = 0;
    std::vector<Elem> b(d);
    for (Elem x = 0; x < n; ++x) {
      std::vector<Elem> just_x{x};
      if (d < std::max(2u, d_X(cache, just_x))) continue;
      SubgroupId with_x = cache.cyclic(x);
      for (std::size_t idx = 0; idx < budget; ++idx) {
        if (exhaustive) {
          std::size_t c = idx;
          for (unsigned k = d; k-- > 0;) {
            b[k] = static_cast<Elem>(c % n);
            c /= n;
          }
        } else {
          for (auto& v : b) v = random_elem(rng, n);
        }
        SubgroupId h = with_x;
        for (Elem v : b) h = cache.join(h, v);
        if (h != cache.whole()) continue;
        ++valid;
        std::vector<std::uint32_t> key{x};
        for (Elem v : b) key.push_back(l->coset_of(v));
        auto it = memo.find(key);
        if (it == memo.end()) it = memo.emplace(key, delu_fraction(cache, *l, x, b)).first;
        const DeluFraction& f = it->second;
        if (f.count * worst.total < worst.count * f.total) worst = f;
        if (!f.meets_bound()) rec.violation(e.id + ": fraction below 53/90");
      }
    }
    report.instances += valid;
    out.push_back({{"group", e.id},
                   {"d", d},
                   {"exhaustive", exhaustive},
                   {"valid_triples", valid},
                   {"distinct_cases", memo.size()},
                   {"min_count", worst.count},
                   {"total", worst.total},
                   {"min_fraction", worst.value()},
                   {"bound", 53.0 / 90.0}});
  }
  report.details["groups"] = out;
}

void run_cln(const Catalog& catalog, const VerifyParams& p, VerifyReport& report) {
  Recorder rec{report};
  auto entries = instance_set(catalog, p, {"A5", "S5", "PSL(2,7)", "PGL(2,7)"}, 0);
  auto out = nlohmann::json::array();
  for (const auto& e : entries) {
    auto g = monolithic_of(e);
    ClnSearch search(g);
    const FiniteGroup& G = g->group();
    std::uint64_t pairs = 0, found = 0;
    for (Elem a = 0; a < G.size(); ++a)
      for (Elem b = 0; b < G.size(); ++b) {
        if (!g->in_socle(G.commutator(a, b))) continue;
        ++pairs;
        if (search.witness(a, b)) ++found;
        else rec.violation(e.id + ": no witness for (" + G.label(a) + ", " + G.label(b) + ")");
      }
    report.instances += pairs;
    out.push_back({{"group", e.id},
                   {"pairs", pairs},
                   {"witnessed", found},
                   {"rate", pairs ? double(found) / double(pairs) : 1.0}});
  }
  report.details["groups"] = out;
}

void run_unico_rank(const Catalog& catalog, const VerifyParams& p, VerifyReport& report) {
  Recorder rec{report};
  std::mt19937_64 rng(p.seed);
  const unsigned t = p.t.value_or(3);
  const std::size_t samples = p.samples.value_or(200);
  auto entries = instance_set(catalog, p, {"A5", "S5", "PSL(2,7)", "PGL(2,7)"}, 0);
  auto out = nlohmann::json::array();
  for (const auto& e : entries) {
    auto l = monolithic_of(e);
    SubgroupCache cache(l->group_ptr());
    SubgroupId n = cache.from_members(l->socle_members());
    unsigned worst = 0;
    std::uint64_t count = 0;
    for (std::size_t s = 0; s < samples; ++s) {
      std::vector<Elem> b(t);
      bool ok = false;
      for (int attempt = 0; attempt < 256 && !ok; ++attempt) {
        for (auto& v : b) v = random_elem(rng, l->group().size());
        ok = cache.join_subgroups(cache.generated(b), n) == cache.whole();
      }
      if (!ok) continue;
      ++count;
      auto r = unico_rank_check(cache, *l, b);
      worst = std::max(worst, r.d_last);
      if (!r.holds) rec.violation(e.id + ": d_{b_t}(L) = " + std::to_string(r.d_last));
    }
    report.instances += count;
    out.push_back({{"group", e.id}, {"t", t}, {"tuples", count}, {"max_d_last", worst}});
  }
  report.details["groups"] = out;
}

void run_primo(const Catalog& catalog, const VerifyParams& p, VerifyReport& report) {
  Recorder rec{report};
  std::mt19937_64 rng(p.seed);
  const unsigned t = p.t.value_or(2);
  const unsigned eta = p.eta.value_or(2);
  const std::size_t samples = p.samples.value_or(10'000);
  const std::size_t slice = p.slice.value_or(100'000);
  auto entries = instance_set(catalog, p, {"A5"}, 0);
  auto out = nlohmann::json::array();
  for (const auto& e : entries) {
    auto l = monolithic_of(e);
    AutGroup x = x_of(l);
    OrbitTable table(l, x, standard_generating_tuple(*l, t));
    CrownPower power(l, eta);
    const auto& socle = l->socle();
    std::vector<std::vector<Elem>> corr(t, std::vector<Elem>(eta));
    std::uint64_t agree = 0, generating = 0, total = 0;
    auto check = [&](const char* mode) {
      bool via = generation_via_orbits(table, corr);
      bool direct = generates_crown_power(power, table.a(), corr);
      ++total;
      if (direct) ++generating;
      if (via == direct) ++agree;
      else rec.violation(std::string(e.id) + " (" + mode + "): orbit criterion disagrees");
    };
    for (std::size_t s = 0; s < samples; ++s) {
      for (auto& row : corr)
        for (auto& v : row) v = socle[random_elem(rng, socle.size())];
      check("random");
    }
    // Lexicographic prefix of N^(t*eta), last position fastest.
    std::vector<std::size_t> digits(t * eta, 0);
    for (std::size_t s = 0; s < slice; ++s) {
      for (unsigned i = 0; i < t; ++i)
        for (unsigned j = 0; j < eta; ++j) corr[i][j] = socle[digits[i * eta + j]];
      check("slice");
      for (std::size_t k = digits.size(); k-- > 0;) {
        if (++digits[k] < socle.size()) break;
        digits[k] = 0;
      }
    }
    report.instances += total;
    out.push_back({{"group", e.id}, {"t", t}, {"eta", eta}, {"random", samples},
                   {"slice", slice}, {"agree", agree}, {"generating", generating},
                   {"total", total}});
  }
  report.details["groups"] = out;
}

void run_coniugo(const Catalog& catalog, const VerifyParams& p, VerifyReport& report) {
  Recorder rec{report};
  auto entries = instance_set(catalog, p, {}, 200);
  std::uint64_t graphs = 0;
  for (const auto& e : entries) {
    SubgroupCache cache(to_group(e));
    const FiniteGroup& G = cache.group();
    unsigned dg = min_rank(cache).d;
    for (unsigned d : p.d ? std::vector<unsigned>{*p.d} : d_values(dg)) {
      ElementGraph graph;
      auto comps = delta_components(cache, d, graph);
      ++graphs;
      std::vector<std::int64_t> pos(G.size(), -1);
      for (std::uint32_t v = 0; v < graph.vertex_count(); ++v) pos[graph.vertices()[v]] = v;
      for (std::uint32_t v = 0; v < graph.vertex_count(); ++v) {
        Elem g = graph.vertices()[v];
        for (Elem z = 0; z < G.size(); ++z) {
          ++report.instances;
          auto w = pos[G.conj(g, z)];
          if (w < 0 || comps.id[static_cast<std::size_t>(w)] != comps.id[v])
            rec.violation(e.id + " d=" + std::to_string(d) + ": conjugate of " + G.label(g) +
                          " leaves its component");
        }
      }
    }
  }
  report.details["groups"] = entries.size();
  report.details["graphs"] = graphs;
}

void run_frat(const Catalog& catalog, const VerifyParams& p, VerifyReport& report) {
  Recorder rec{report};
  std::mt19937_64 rng(p.seed);
  const std::size_t samples = p.samples.value_or(500);
  auto entries = instance_set(catalog, p, {}, 200);
  auto out = nlohmann::json::array();
  for (const auto& e : entries) {
    SubgroupCache cache(to_group(e));
    const FiniteGroup& G = cache.group();
    SubgroupId phi = frattini(cache);
    if (phi == SubgroupCache::trivial()) continue;
    auto qm = quotient_map(cache, phi);
    SubgroupCache qcache(qm.group);
    unsigned dg = min_rank(cache).d;
    std::uint64_t implications = 0, premises = 0, tuples = 0;
    for (unsigned d : p.d ? std::vector<unsigned>{*p.d} : d_values(dg)) {
      ++implications;
      bool quotient_connected = delta_connected(qcache, d);
      bool group_connected = delta_connected(cache, d);
      if (quotient_connected) ++premises;
      if (quotient_connected && !group_connected)
        rec.violation(e.id + " d=" + std::to_string(d) + ": quotient connected, group not");

      // Generation equivalence modulo the Frattini subgroup.
      const bool exhaustive = d == 2;
      const std::size_t count = exhaustive ? G.size() * G.size() : samples;
      std::vector<Elem> tuple(d), image(d);
      for (std::size_t s = 0; s < count; ++s) {
        if (exhaustive) {
          tuple[0] = static_cast<Elem>(s / G.size());
          tuple[1] = static_cast<Elem>(s % G.size());
        } else {
          for (auto& v : tuple) v = random_elem(rng, G.size());
        }
        for (unsigned k = 0; k < d; ++k) image[k] = qm.image[tuple[k]];
        bool upstairs = cache.generated(tuple) == cache.whole();
        bool downstairs = qcache.generated(image) == qcache.whole();
        ++tuples;
        if (upstairs != downstairs) rec.violation(e.id + ": generation differs modulo Frattini");
      }
    }
    report.instances += implications + tuples;
    out.push_back({{"group", e.id}, {"frattini_order", cache.order(phi)},
                   {"implications", implications}, {"premises_met", premises},
                   {"tuples", tuples}});
  }
  report.details["groups"] = out;
}

void run_induzionenormale(const Catalog& catalog, const VerifyParams& p, VerifyReport& report) {
  Recorder rec{report};
  auto entries = instance_set(catalog, p, {}, 120);
  std::uint64_t cases = 0;
  for (const auto& e : entries) {
    SubgroupCache cache(to_group(e));
    const FiniteGroup& G = cache.group();
    unsigned dg = min_rank(cache).d;
    for (SubgroupId m : normal_subgroups(cache).normals) {
      if (m == SubgroupCache::trivial() || m == cache.whole()) continue;
      auto qm = quotient_map(cache, m);
      SubgroupCache qcache(qm.group);
      for (unsigned d : p.d ? std::vector<unsigned>{*p.d} : d_values(dg)) {
        ++cases;
        auto gamma = build_gamma_d(cache, d);
        auto comps = components(gamma);
        auto qcomps = components(build_gamma_d(qcache, d));
        // Components met by the coset yM.
        std::vector<std::vector<bool>> reach(G.size());
        for (Elem y = 0; y < G.size(); ++y) {
          if (!gamma.degree(y)) continue;
          reach[y].assign(comps.count, false);
          for (Elem mm : cache.elements(m)) reach[y][comps.id[G.mul(y, mm)]] = true;
        }
        for (Elem x = 0; x < G.size(); ++x) {
          if (!gamma.degree(x)) continue;
          for (Elem y = 0; y < G.size(); ++y) {
            if (!gamma.degree(y)) continue;
            if (qcomps.id[qm.image[x]] != qcomps.id[qm.image[y]]) continue;
            ++report.instances;
            if (!reach[y][comps.id[x]])
              rec.violation(e.id + " d=" + std::to_string(d) + ": no m for (" + G.label(x) +
                            ", " + G.label(y) + ")");
          }
        }
      }
    }
  }
  report.details["groups"] = entries.size();
  report.details["normal_subgroup_cases"] = cases;
}

void run_norsol(const Catalog& catalog, const VerifyParams& p, VerifyReport& report) {
  Recorder rec{report};
  auto entries = instance_set(catalog, p, {}, 200);
  std::uint64_t premises = 0;
  for (const auto& e : entries) {
    SubgroupCache cache(to_group(e));
    unsigned dg = min_rank(cache).d;
    std::map<unsigned, bool> upstairs;
    for (SubgroupId n : normal_subgroups(cache).normals) {
      if (n == SubgroupCache::trivial() || n == cache.whole() || !is_soluble(cache, n)) continue;
      auto qm = quotient_map(cache, n);
      SubgroupCache qcache(qm.group);
      for (unsigned d : p.d ? std::vector<unsigned>{*p.d} : d_values(dg)) {
        ++report.instances;
        if (!delta_connected(qcache, d)) continue;
        ++premises;
        if (!upstairs.count(d)) upstairs[d] = delta_connected(cache, d);
        if (!upstairs[d])
          rec.violation(e.id + " d=" + std::to_string(d) + ": quotient by soluble N connected, group not");
      }
    }
  }
  report.details["groups"] = entries.size();
  report.details["premises_met"] = premises;
}

void run_sempreuno(const Catalog& catalog, const VerifyParams& p, VerifyReport& report) {
  Recorder rec{report};
  std::mt19937_64 rng(p.seed);
  const unsigned t = p.t.value_or(3);
  const std::size_t samples = p.samples.value_or(20);
  if (t < 3) throw PreconditionError("sempreuno: t must be at least 3");
  auto entries = instance_set(catalog, p, {"A5"}, 0);
  auto out = nlohmann::json::array();
  for (const auto& e : entries) {
    auto l = monolithic_of(e);
    AutGroup x = x_of(l);
    SubgroupCache cache(l->group_ptr());
    if (t < min_rank(cache).d) throw PreconditionError("sempreuno: t below d(L)");
    std::vector<std::vector<Elem>> tuples{standard_generating_tuple(*l, t)};
    for (int extra = 0; extra < 2; ++extra) {
      std::vector<Elem> a(t);
      do {
        for (auto& v : a) v = random_elem(rng, l->group().size());
      } while (cache.generated(a) != cache.whole());
      tuples.push_back(a);
    }
    for (const auto& a : tuples) {
      OrbitTable table(l, x, a);
      auto meet = partitions_pi(table);
      ++report.instances;
      if (!meet.meet_is_single_block) rec.violation(e.id + ": meet of row partitions is not one block");
      auto bridges = partition_bridges(table);
      ++report.instances;
      if (!bridges.pass) rec.violation(e.id + ": bridge search failed");

      // Other choices of the reference matrix: a random member of every orbit.
      std::size_t sub_pass = 0;
      for (std::size_t s = 0; s < samples; ++s) {
        std::vector<std::uint64_t> columns(table.orbit_count());
        std::vector<std::uint64_t> seen(table.orbit_count(), 0);
        for (std::uint64_t idx = 0; idx < table.tuple_count(); ++idx) {
          auto lbl = table.label(idx);
          if (lbl == OrbitTable::outside) continue;
          if (std::uniform_int_distribution<std::uint64_t>(0, seen[lbl]++)(rng) == 0) columns[lbl] = idx;
        }
        ++report.instances;
        if (partitions_pi(table, columns).meet_is_single_block) ++sub_pass;
        else rec.violation(e.id + ": meet not one block for a resampled reference matrix");
      }
      out.push_back({{"group", e.id}, {"t", t}, {"orbits", table.orbit_count()},
                     {"meet_single_block", meet.meet_is_single_block},
                     {"row0_blocks", meet.partitions.front().block_count()},
                     {"bridges", bridges.bridges.size()}, {"bridge_failures", bridges.failures},
                     {"resampled", samples}, {"resampled_pass", sub_pass}});
    }
  }
  report.details["instances"] = out;
}

void run_weak_conn(const Catalog& catalog, const VerifyParams& p, VerifyReport& report) {
  Recorder rec{report};
  const unsigned t = p.t.value_or(3);
  const unsigned eta = p.eta.value_or(1);
  WeakConnectivityOptions opts;
  opts.sampled = p.sampled;
  opts.seed = p.seed;
  if (p.samples) opts.samples = *p.samples;
  auto entries = instance_set(catalog, p, {"A5", "PSL(2,7)"}, 0);
  auto out = nlohmann::json::array();
  for (const auto& e : entries) {
    auto l = monolithic_of(e);
    AutGroup x = x_of(l);
    auto lc = local_connectivity(l, x, t, eta, opts);
    report.instances += lc.patterns;
    for (std::size_t k = 0; k < lc.reports.size(); ++k)
      if (!lc.reports[k].pass) rec.violation(e.id + ": pattern " + std::to_string(k) + " not weakly connected");
    std::uint64_t vertices = 0, edges = 0, witnesses = 0, sampled_pairs = 0;
    for (const auto& r : lc.reports) {
      vertices += r.vertices;
      edges += r.edges;
      witnesses += r.witnesses.size();
      sampled_pairs += r.sampled_pairs;
    }
    out.push_back({{"group", e.id}, {"t", t}, {"eta", eta}, {"patterns", lc.patterns},
                   {"failures", lc.failures}, {"vertices", vertices}, {"edges", edges},
                   {"witnesses", witnesses}, {"sampled", p.sampled},
                   {"sampled_pairs", sampled_pairs}, {"seed", p.seed}});
  }
  report.details["groups"] = out;
}

void run_lambda(const Catalog& catalog, const VerifyParams& p, VerifyReport& report) {
  Recorder rec{report};
  auto entries = instance_set(catalog, p, {"S5"}, 0);
  auto out = nlohmann::json::array();
  for (const auto& e : entries) {
    SubgroupCache cache(to_group(e));
    const FiniteGroup& G = cache.group();
    auto lattice = normal_subgroups(cache);
    if (lattice.minimal_normals.size() != 1)
      throw PreconditionError("lambda: " + e.id + " has no unique minimal normal subgroup");
    SubgroupId s = lattice.minimal_normals.front();
    auto qm = quotient_map(cache, s);

    std::vector<std::pair<Elem, Elem>> pairs;
    if (!p.x.empty() || !p.y.empty()) {
      auto parse = [&](const std::string& text) {
        auto idx = G.index_of(Permutation::parse(G.degree(), text));
        if (!idx) throw PreconditionError("lambda: " + text + " is not in " + e.id);
        return *idx;
      };
      pairs.emplace_back(parse(p.x.empty() ? "()" : p.x), parse(p.y.empty() ? "()" : p.y));
    } else {
      std::vector<Elem> reps(qm.group->size(), UINT32_MAX);
      for (Elem g = 0; g < G.size(); ++g)
        if (reps[qm.image[g]] == UINT32_MAX) reps[qm.image[g]] = g;
      for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j) pairs.emplace_back(reps[i], reps[j]);
    }
    for (auto [x, y] : pairs) {
      if (qm.image[x] == qm.image[y]) {
        rec.rejected(e.id + ": xS = yS for x = " + G.label(x) + ", y = " + G.label(y));
        continue;
      }
      auto graph = build_lambda(cache, s, x, y);
      auto core = graph.without_isolated();
      auto comps = components(core);
      ++report.instances;
      if (!comps.connected())
        rec.violation(e.id + ": Lambda disconnected for x = " + G.label(x) + ", y = " + G.label(y));
      out.push_back({{"group", e.id}, {"x", G.label(x)}, {"y", G.label(y)},
                     {"vertices", graph.vertex_count()},
                     {"isolated", graph.vertex_count() - core.vertex_count()},
                     {"edges", graph.edge_count()}, {"components", comps.count}});
    }
  }
  report.details["instances"] = out;
}

}  // namespace

void to_json(nlohmann::json& j, const VerifyReport& r) {
  j = nlohmann::json{{"lemma", r.lemma},         {"pass", r.pass},
                     {"instances", r.instances}, {"violations", r.violations},
                     {"rejected", r.rejected},   {"seed", r.seed},
                     {"notes", r.notes},         {"details", r.details}};
}

const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids{"modgg", "delu", "cln", "unico-rank",
                                            "primo", "coniugo", "frat", "induzionenormale",
                                            "norsol", "sempreuno", "weak-conn", "lambda"};
  return ids;
}

VerifyReport verify_lemma(const Catalog& catalog, const std::string& id, const VerifyParams& params) {
  VerifyReport report;
  report.lemma = id;
  report.seed = params.seed;
  if (id == "modgg") run_modgg(catalog, params, report);
  else if (id == "delu") run_delu(catalog, params, report);
  else if (id == "cln") run_cln(catalog, params, report);
  else if (id == "unico-rank") run_unico_rank(catalog, params, report);
  else if (id == "primo") run_primo(catalog, params, report);
  else if (id == "coniugo") run_coniugo(catalog, params, report);
  else if (id == "frat") run_frat(catalog, params, report);
  else if (id == "induzionenormale") run_induzionenormale(catalog, params, report);
  else if (id == "norsol") run_norsol(catalog, params, report);
  else if (id == "sempreuno") run_sempreuno(catalog, params, report);
  else if (id == "weak-conn") run_weak_conn(catalog, params, report);
  else if (id == "lambda") run_lambda(catalog, params, report);
  else throw PreconditionError("unknown lemma id: " + id);
  report.pass = report.violations == 0;
  return report;
}

}  // namespace rankgraph
