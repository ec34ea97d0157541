#include "rankgraph/graphs.hpp"

#include <algorithm>
#include <deque>

#include "rankgraph/union_find.hpp"

namespace rankgraph {

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::generating: return "generating";
    case GraphKind::rank: return "rank";
    case GraphKind::lambda: return "lambda";
    case GraphKind::crown: return "crown";
  }
  return "rank";
}

GraphKind graph_kind_from_string(std::string_view text) {
  for (GraphKind k : {GraphKind::generating, GraphKind::rank, GraphKind::lambda, GraphKind::crown})
    if (to_string(k) == text) return k;
  throw PreconditionError("unknown graph kind '" + std::string(text) + "'");
}

ElementGraph::ElementGraph(GraphKind kind, GroupPtr group, std::vector<Elem> vertices)
    : kind_(kind), group_(std::move(group)), vertices_(std::move(vertices)),
      adjacency_(vertices_.size()) {}

void ElementGraph::add_edge(std::uint32_t u, std::uint32_t v) {
  if (u == v) throw PreconditionError("ElementGraph: loops are not allowed");
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
}

void ElementGraph::finalize() {
  edge_count_ = 0;
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    edge_count_ += adj.size();
  }
  edge_count_ /= 2;
}

bool ElementGraph::has_edge(std::uint32_t u, std::uint32_t v) const {
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> ElementGraph::edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> result;
  for (std::uint32_t u = 0; u < adjacency_.size(); ++u)
    for (std::uint32_t v : adjacency_[u])
      if (u < v) result.emplace_back(u, v);
  return result;
}

ElementGraph ElementGraph::without_isolated() const {
  std::vector<std::uint32_t> position(vertex_count(), UINT32_MAX);
  std::vector<Elem> kept;
  std::vector<std::string> kept_labels;
  for (std::uint32_t v = 0; v < vertex_count(); ++v) {
    if (adjacency_[v].empty()) continue;
    position[v] = static_cast<std::uint32_t>(kept.size());
    kept.push_back(vertices_[v]);
    if (!labels_.empty()) kept_labels.push_back(labels_[v]);
  }
  ElementGraph result(kind_, group_, std::move(kept));
  result.d_ = d_;
  result.labels_ = std::move(kept_labels);
  for (std::uint32_t u = 0; u < vertex_count(); ++u)
    for (std::uint32_t v : adjacency_[u])
      if (u < v) result.add_edge(position[u], position[v]);
  result.finalize();
  return result;
}

std::string ElementGraph::label(std::uint32_t v) const {
  if (!labels_.empty()) return labels_[v];
  if (group_) return group_->label(vertices_[v]);
  return std::to_string(vertices_[v]);
}

namespace {

// Eccentricity of `source` within its component.
unsigned eccentricity(const ElementGraph& graph, std::uint32_t source,
                      std::vector<std::uint32_t>& dist, std::vector<std::uint32_t>& queue) {
  std::fill(dist.begin(), dist.end(), UINT32_MAX);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  unsigned far = 0;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    std::uint32_t u = queue[q];
    for (std::uint32_t v : graph.neighbors(u))
      if (dist[v] == UINT32_MAX) {
        dist[v] = dist[u] + 1;
        far = std::max<unsigned>(far, dist[v]);
        queue.push_back(v);
      }
  }
  return far;
}

}  // namespace

Components components(const ElementGraph& graph, bool with_diameter) {
  const auto n = static_cast<std::uint32_t>(graph.vertex_count());
  UnionFind uf(n);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v : graph.neighbors(u)) uf.unite(u, v);
  Components result;
  result.id = uf.labels(result.count);
  if (with_diameter) {
    result.diameter.assign(result.count, 0u);
    std::vector<std::uint32_t> dist(n), queue;
    for (std::uint32_t v = 0; v < n; ++v) {
      unsigned e = eccentricity(graph, v, dist, queue);
      auto& slot = result.diameter[result.id[v]];
      slot = std::max(*slot, e);
    }
  }
  return result;
}

std::optional<unsigned> diameter(const ElementGraph& graph) {
  auto comps = components(graph, true);
  if (comps.count != 1) return std::nullopt;
  return comps.diameter.front();
}

bool is_edge_d(SubgroupCache& cache, Elem x, Elem y, unsigned d) {
  if (x == y) throw PreconditionError("is_edge_d: x and y must be distinct");
  if (d < 2) throw PreconditionError("is_edge_d: d must be at least 2");
  if (cache.group().size() < d) return false;
  return cache.completion_at_most(cache.join(cache.cyclic(x), y), d - 2);
}

ElementGraph build_gamma_d(SubgroupCache& cache, unsigned d) {
  if (d < 2) throw PreconditionError("build_gamma_d: d must be at least 2");
  const FiniteGroup& G = cache.group();
  const auto n = static_cast<Elem>(G.size());
  std::vector<Elem> all(n);
  for (Elem x = 0; x < n; ++x) all[x] = x;
  ElementGraph graph(GraphKind::rank, cache.group_ptr(), std::move(all));
  graph.set_d(d);
  if (n < d) return graph;
  // Verdicts depend only on <x, y>; cache them per subgroup id.
  std::vector<std::int8_t> verdict;
  for (Elem x = 0; x < n; ++x) {
    SubgroupId cx = cache.cyclic(x);
    for (Elem y = x + 1; y < n; ++y) {
      SubgroupId h = cache.join(cx, y);
      if (h >= verdict.size()) verdict.resize(std::max<std::size_t>(h + 1, verdict.size() * 2), -1);
      if (verdict[h] < 0) verdict[h] = cache.completion_at_most(h, d - 2) ? 1 : 0;
      if (verdict[h]) graph.add_edge(x, y);
    }
  }
  graph.finalize();
  return graph;
}

ElementGraph build_delta_d(SubgroupCache& cache, unsigned d) {
  return build_gamma_d(cache, d).without_isolated();
}

ElementGraph build_generating_graph(SubgroupCache& cache, bool drop_isolated) {
  ElementGraph graph = build_gamma_d(cache, 2);
  graph.set_kind(GraphKind::generating);
  return drop_isolated ? graph.without_isolated() : graph;
}

ElementGraph build_lambda(SubgroupCache& cache, SubgroupId s, Elem x, Elem y) {
  const FiniteGroup& G = cache.group();
  if (!cache.is_normal(s)) throw PreconditionError("build_lambda: S is not normal");
  if (cache.contains(s, G.mul(G.inv(x), y)))
    throw PreconditionError("build_lambda: xS = yS, the two parts coincide");
  const auto& members = cache.elements(s);
  const auto k = static_cast<std::uint32_t>(members.size());
  std::vector<Elem> vertices;
  vertices.reserve(2 * k);
  for (Elem m : members) vertices.push_back(G.mul(x, m));
  for (Elem m : members) vertices.push_back(G.mul(y, m));
  SubgroupId target = cache.join(cache.join(s, x), y);
  ElementGraph graph(GraphKind::lambda, cache.group_ptr(), vertices);
  graph.set_d(2);
  for (std::uint32_t i = 0; i < k; ++i) {
    SubgroupId ci = cache.cyclic(vertices[i]);
    for (std::uint32_t j = k; j < 2 * k; ++j)
      if (cache.join(ci, vertices[j]) == target) graph.add_edge(i, j);
  }
  graph.finalize();
  return graph;
}

void export_dot(const ElementGraph& graph, std::ostream& out) {
  out << "graph " << to_string(graph.kind()) << " {\n";
  for (std::uint32_t v = 0; v < graph.vertex_count(); ++v)
    out << "  v" << v << " [label=\"" << graph.label(v) << "\"];\n";
  for (auto [u, v] : graph.edges()) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  if (!out) throw std::runtime_error("export_dot: write failed");
}

GraphStats graph_stats(const ElementGraph& graph, std::string group_id, bool with_diameter,
                       double elapsed_ms) {
  GraphStats s;
  s.group_id = std::move(group_id);
  s.kind = graph.kind();
  s.d = graph.d();
  s.n_vertices = graph.vertex_count();
  s.n_edges = graph.edge_count();
  auto comps = components(graph, with_diameter);
  s.n_components = comps.count;
  if (with_diameter && comps.count == 1) s.diameter = comps.diameter.front();
  s.elapsed_ms = elapsed_ms;
  return s;
}

void to_json(nlohmann::json& j, const GraphStats& s) {
  j = nlohmann::json{{"group", s.group_id},        {"kind", std::string(to_string(s.kind))},
                     {"d", s.d},                   {"n_vertices", s.n_vertices},
                     {"n_edges", s.n_edges},       {"n_components", s.n_components},
                     {"diameter", nullptr},        {"elapsed_ms", s.elapsed_ms}};
  if (s.diameter) j["diameter"] = *s.diameter;
}

void from_json(const nlohmann::json& j, GraphStats& s) {
  s.group_id = j.at("group").get<std::string>();
  s.kind = graph_kind_from_string(j.at("kind").get<std::string>());
  s.d = j.at("d").get<unsigned>();
  s.n_vertices = j.at("n_vertices").get<std::size_t>();
  s.n_edges = j.at("n_edges").get<std::size_t>();
  s.n_components = j.at("n_components").get<std::size_t>();
  s.diameter.reset();
  if (!j.at("diameter").is_null()) s.diameter = j.at("diameter").get<unsigned>();
  s.elapsed_ms = j.at("elapsed_ms").get<double>();
}

}  // namespace rankgraph
