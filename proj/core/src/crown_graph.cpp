#include "rankgraph/crown_graph.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "rankgraph/group_structure.hpp"
#include "rankgraph/union_find.hpp"

namespace rankgraph {

namespace {

std::size_t pair_index(unsigned i, unsigned j, unsigned t) {
  // Row pairs i < j in lexicographic order.
  return i * t - i * (i + 1) / 2 + (j - i - 1);
}

// Distinct representatives for the column sets, by augmenting paths.
bool has_sdr(const std::vector<const std::vector<std::uint32_t>*>& sets) {
  for (const auto* s : sets)
    if (s->empty()) return false;
  if (sets.size() == 1) return true;
  if (sets.size() == 2)
    return !(sets[0]->size() == 1 && sets[1]->size() == 1 && sets[0]->front() == sets[1]->front());
  std::unordered_map<std::uint32_t, std::size_t> owner;
  std::vector<char> visited;
  std::vector<std::uint32_t> seen_orbits;
  auto augment = [&](auto&& self, std::size_t col) -> bool {
    for (std::uint32_t orbit : *sets[col]) {
      if (std::find(seen_orbits.begin(), seen_orbits.end(), orbit) != seen_orbits.end()) continue;
      seen_orbits.push_back(orbit);
      auto it = owner.find(orbit);
      if (it == owner.end() || self(self, it->second)) {
        owner[orbit] = col;
        return true;
      }
    }
    return false;
  };
  for (std::size_t col = 0; col < sets.size(); ++col) {
    seen_orbits.clear();
    if (!augment(augment, col)) return false;
  }
  return true;
}

}  // namespace

CrownGraph::CrownGraph(const OrbitTable& table, unsigned eta, bool store_edges,
                       std::size_t vertex_cap)
    : table_(&table), eta_(eta), stored_(store_edges) {
  if (eta == 0) throw PreconditionError("CrownGraph: eta must be positive");
  if (table.t() < 2) throw PreconditionError("CrownGraph: needs t >= 2");
  const std::uint64_t n = table.socle_order();
  const unsigned t = table.t();
  for (unsigned k = 0; k < eta; ++k) {
    if (per_row_ > vertex_cap / n / t) throw CapExceeded("crown graph vertices", SIZE_MAX, vertex_cap);
    per_row_ *= n;
  }

  admissible_.assign(t * (t - 1) / 2, std::vector<std::vector<std::uint32_t>>(n * n));
  for (std::uint64_t index = 0; index < table.tuple_count(); ++index) {
    std::uint32_t label = table.label(index);
    if (label == OrbitTable::outside) continue;
    for (unsigned i = 0; i < t; ++i)
      for (unsigned j = i + 1; j < t; ++j)
        admissible_[pair_index(i, j, t)][table.position(index, i) * n + table.position(index, j)]
            .push_back(label);
  }
  for (auto& pair : admissible_)
    for (auto& bucket : pair) {
      std::sort(bucket.begin(), bucket.end());
      bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
    }

  std::vector<std::uint32_t> coords(per_row_ * eta);
  for (std::uint64_t m = 0; m < per_row_; ++m)
    for (unsigned k = 0; k < eta; ++k) coords[m * eta + k] = coordinate(m, k);

  const std::uint64_t total = vertex_count();
  active_.assign(total, false);
  UnionFind uf(total);
  std::vector<const std::vector<std::uint32_t>*> sets(eta);
  for (unsigned i = 0; i < t; ++i)
    for (unsigned j = i + 1; j < t; ++j) {
      const auto& pair = admissible_[pair_index(i, j, t)];
      for (std::uint64_t mu = 0; mu < per_row_; ++mu)
        for (std::uint64_t mv = 0; mv < per_row_; ++mv) {
          for (unsigned k = 0; k < eta; ++k)
            sets[k] = &pair[coords[mu * eta + k] * n + coords[mv * eta + k]];
          if (!has_sdr(sets)) continue;
          std::uint64_t a = i * per_row_ + mu, b = j * per_row_ + mv;
          active_[a] = active_[b] = true;
          uf.unite(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
          ++edge_count_;
          if (store_edges) edges_.emplace_back(a, b);
        }
    }
  component_ = uf.labels(component_count_, &active_, UINT32_MAX);
  non_isolated_ = static_cast<std::uint64_t>(std::count(active_.begin(), active_.end(), true));
}

std::uint32_t CrownGraph::coordinate(std::uint64_t m, unsigned k) const {
  const std::uint64_t n = table_->socle_order();
  for (unsigned c = eta_ - 1; c > k; --c) m /= n;
  return static_cast<std::uint32_t>(m % n);
}

std::uint64_t CrownGraph::encode(const std::vector<std::uint32_t>& positions) const {
  std::uint64_t m = 0;
  for (std::uint32_t p : positions) m = m * table_->socle_order() + p;
  return m;
}

const std::vector<std::uint32_t>& CrownGraph::admissible(unsigned i, unsigned j, std::uint32_t p,
                                                         std::uint32_t q) const {
  return admissible_[pair_index(i, j, table_->t())][p * table_->socle_order() + q];
}

bool CrownGraph::has_edge(CrownVertex u, CrownVertex v) const {
  if (u.row == v.row) return false;
  if (u.row > v.row) std::swap(u, v);
  std::vector<const std::vector<std::uint32_t>*> sets(eta_);
  for (unsigned k = 0; k < eta_; ++k)
    sets[k] = &admissible(u.row, v.row, coordinate(u.m, k), coordinate(v.m, k));
  return has_sdr(sets);
}

std::string CrownGraph::label(CrownVertex v) const {
  const FiniteGroup& L = table_->base().group();
  std::string text = "a" + std::to_string(v.row + 1) + " o [";
  for (unsigned k = 0; k < eta_; ++k) {
    if (k) text += ", ";
    text += L.label(table_->base().socle()[coordinate(v.m, k)]);
  }
  return text + "]";
}

CrownVertex CrownGraph::conjugate(CrownVertex v, const std::vector<Elem>& mu) const {
  const FiniteGroup& L = table_->base().group();
  const auto& mono = table_->base();
  Elem a = table_->a()[v.row];
  std::vector<std::uint32_t> positions(eta_);
  for (unsigned k = 0; k < eta_; ++k) {
    Elem x = L.mul(a, mono.socle()[coordinate(v.m, k)]);
    Elem y = L.mul(L.inv(a), L.conj(x, mu[k]));
    std::int32_t pos = mono.socle_position(y);
    if (pos < 0) throw PreconditionError("CrownGraph::conjugate: conjugator outside N^eta");
    positions[k] = static_cast<std::uint32_t>(pos);
  }
  return {v.row, encode(positions)};
}

ElementGraph CrownGraph::to_element_graph(bool drop_isolated) const {
  if (!stored_) throw PreconditionError("CrownGraph: edges were not stored");
  std::vector<Elem> ids(vertex_count());
  std::vector<std::string> labels;
  for (std::uint64_t id = 0; id < vertex_count(); ++id) {
    ids[id] = static_cast<Elem>(id);
    labels.push_back(label(vertex(id)));
  }
  ElementGraph graph(GraphKind::crown, nullptr, std::move(ids));
  graph.set_labels(std::move(labels));
  for (auto [a, b] : edges_)
    graph.add_edge(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
  graph.finalize();
  return drop_isolated ? graph.without_isolated() : graph;
}

WeakConnectivityReport weak_connectivity(const CrownGraph& graph,
                                         const WeakConnectivityOptions& options) {
  const OrbitTable& table = graph.table();
  const FiniteGroup& L = table.base().group();
  const unsigned t = table.t();
  const unsigned eta = graph.eta();

  WeakConnectivityReport report;
  report.vertices = graph.vertex_count();
  report.non_isolated = graph.non_isolated_count();
  report.edges = graph.edge_count();
  report.components = graph.component_count();
  report.sampled = options.sampled;
  report.seed = options.seed;

  std::vector<std::vector<Elem>> gens;
  for (unsigned k = 0; k < eta; ++k)
    for (Elem s : table.base().socle_generators()) {
      std::vector<Elem> mu(eta, FiniteGroup::identity());
      mu[k] = s;
      gens.push_back(std::move(mu));
    }

  const std::uint32_t comps = graph.component_count();
  std::vector<std::uint64_t> representative(comps, UINT64_MAX);
  for (std::uint64_t id = 0; id < graph.vertex_count(); ++id)
    if (!graph.isolated(id) && representative[graph.component(id)] == UINT64_MAX)
      representative[graph.component(id)] = id;

  // Action of each generator on components.
  std::vector<std::vector<std::uint32_t>> image(gens.size(), std::vector<std::uint32_t>(comps));
  UnionFind classes(comps);
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (std::uint32_t c = 0; c < comps; ++c) {
      std::uint64_t w = graph.vertex_id(graph.conjugate(graph.vertex(representative[c]), gens[g]));
      if (graph.isolated(w)) throw std::logic_error("weak_connectivity: conjugation broke an edge");
      image[g][c] = graph.component(w);
      classes.unite(c, image[g][c]);
    }
  std::uint32_t class_count = 0;
  auto class_of = classes.labels(class_count);
  report.component_classes = class_count;

  auto multiply = [&](const std::vector<Elem>& x, const std::vector<Elem>& y) {
    std::vector<Elem> r(eta);
    for (unsigned k = 0; k < eta; ++k) r[k] = L.mul(x[k], y[k]);
    return r;
  };
  auto invert = [&](const std::vector<Elem>& x) {
    std::vector<Elem> r(eta);
    for (unsigned k = 0; k < eta; ++k) r[k] = L.inv(x[k]);
    return r;
  };

  // word[c]: mu with root^mu = c, from a BFS over the component action.
  auto words_from = [&](std::uint32_t root) {
    std::vector<std::vector<Elem>> word(comps);
    std::vector<bool> reached(comps, false);
    word[root].assign(eta, FiniteGroup::identity());
    reached[root] = true;
    std::vector<std::uint32_t> queue{root};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      std::uint32_t c = queue[q];
      for (std::size_t g = 0; g < gens.size(); ++g) {
        std::uint32_t next = image[g][c];
        if (reached[next]) continue;
        reached[next] = true;
        word[next] = multiply(word[c], gens[g]);
        queue.push_back(next);
      }
    }
    return std::pair{std::move(word), std::move(reached)};
  };

  std::mt19937_64 rng(options.seed);
  report.row_pass.assign(t, true);
  for (unsigned i = 0; i < t; ++i) {
    std::vector<std::uint64_t> row_vertices;
    for (std::uint64_t m = 0; m < graph.per_row(); ++m) {
      std::uint64_t id = graph.vertex_id({i, m});
      if (!graph.isolated(id)) row_vertices.push_back(id);
    }
    if (row_vertices.empty()) continue;
    std::uint32_t root = graph.component(row_vertices.front());
    for (std::uint64_t id : row_vertices)
      if (class_of[graph.component(id)] != class_of[root]) report.row_pass[i] = false;
    if (!report.row_pass[i]) continue;

    auto [word, reached] = words_from(root);
    std::vector<bool> done(comps, false);
    done[root] = true;
    for (std::uint64_t id : row_vertices) {
      std::uint32_t c = graph.component(id);
      if (done[c] || report.witnesses.size() >= options.max_witnesses) continue;
      done[c] = true;
      WeakWitness w;
      w.row = i;
      w.from = graph.vertex(row_vertices.front());
      w.to = graph.vertex(id);
      w.conjugator = invert(word[c]);
      w.verified = reached[c] &&
                   graph.component(graph.vertex_id(graph.conjugate(w.to, w.conjugator))) == root;
      if (!w.verified) report.row_pass[i] = false;
      report.witnesses.push_back(std::move(w));
    }

    if (options.sampled) {
      std::uniform_int_distribution<std::size_t> pick(0, row_vertices.size() - 1);
      for (std::size_t s = 0; s < options.samples; ++s) {
        std::uint64_t v1 = row_vertices[pick(rng)], v2 = row_vertices[pick(rng)];
        std::uint32_t c1 = graph.component(v1), c2 = graph.component(v2);
        ++report.sampled_pairs;
        // v2 -> root component -> component of v1.
        bool ok = reached[c1] && reached[c2];
        if (ok) {
          auto mu = multiply(invert(word[c2]), word[c1]);
          ok = graph.component(graph.vertex_id(graph.conjugate(graph.vertex(v2), mu))) == c1;
        }
        if (!ok) ++report.sampled_failures;
      }
    }
  }
  report.pass = report.sampled_failures == 0 &&
                std::all_of(report.row_pass.begin(), report.row_pass.end(), [](bool b) { return b; });
  return report;
}

LocalConnectivityReport local_connectivity(MonolithicPtr l, const AutGroup& x, unsigned t,
                                           unsigned eta, const WeakConnectivityOptions& options) {
  const FiniteGroup& L = l->group();
  SubgroupCache cache(l->group_ptr());
  SubgroupId n = cache.generated(l->socle_generators());
  const auto& reps = l->coset_representatives();
  const std::size_t cosets = reps.size();

  LocalConnectivityReport report;
  std::vector<std::size_t> pattern(t, 0);
  while (true) {
    std::vector<Elem> g(t);
    for (unsigned i = 0; i < t; ++i) g[i] = reps[pattern[i]];
    if (cache.join_subgroups(cache.generated(g), n) == cache.whole()) {
      auto lift = gaschutz_lift(cache, n, {}, g);
      std::vector<Elem> a(t);
      for (unsigned i = 0; i < t; ++i) a[i] = L.mul(g[i], lift[i]);
      OrbitTable table(l, x, a);
      CrownGraph graph(table, eta);
      auto weak = weak_connectivity(graph, options);
      ++report.patterns;
      if (!weak.pass) ++report.failures;
      report.tuples.push_back(a);
      report.reports.push_back(std::move(weak));
    }
    unsigned k = 0;
    while (k < t && ++pattern[k] == cosets) pattern[k++] = 0;
    if (k == t) break;
  }
  report.pass = report.failures == 0 && report.patterns > 0;
  return report;
}

}  // namespace rankgraph
