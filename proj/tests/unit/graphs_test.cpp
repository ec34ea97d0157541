#include <random>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "rankgraph/graphs.hpp"
#include "rankgraph/group_structure.hpp"

using namespace rankgraph;

namespace {

// Dense adjacency of the rank graph on all elements, from the oracle.
std::vector<std::vector<bool>> oracle_adjacency(const FiniteGroup& g, unsigned d) {
  auto elems = fixture::raw_elements(g);
  std::vector<std::vector<bool>> adj(elems.size(), std::vector<bool>(elems.size(), false));
  for (std::size_t x = 0; x < elems.size(); ++x)
    for (std::size_t y = x + 1; y < elems.size(); ++y)
      adj[x][y] = adj[y][x] = oracle::rank_edge(elems, x, y, d);
  return adj;
}

std::vector<std::vector<bool>> dense(const ElementGraph& graph) {
  std::vector<std::vector<bool>> adj(graph.vertex_count(),
                                     std::vector<bool>(graph.vertex_count(), false));
  for (auto [u, v] : graph.edges()) adj[u][v] = adj[v][u] = true;
  return adj;
}

}  // namespace

TEST_CASE("rank graph of A5 at d = 2 matches the oracle") {
  SubgroupCache cache(fixture::group("A5"));
  auto gamma = build_gamma_d(cache, 2);
  CHECK(dense(gamma) == oracle_adjacency(cache.group(), 2));
  auto delta = build_delta_d(cache, 2);
  CHECK(delta.vertex_count() == 59);
  CHECK(delta.edge_count() == 2280 / 2 * 1);  // unordered generating pairs
  CHECK(oracle::floyd_warshall_diameter(dense(delta)) == 2);
  CHECK(diameter(delta) == 2u);
}

TEST_CASE("rank graphs at d = 3 match the oracle") {
  for (const char* id : {"S3", "D8", "C2^3", "S4", "Q8", "C2xC4", "A4"}) {
    CAPTURE(std::string(id));
    SubgroupCache cache(fixture::group(id));
    auto gamma = build_gamma_d(cache, 3);
    CHECK(dense(gamma) == oracle_adjacency(cache.group(), 3));
    auto delta = build_delta_d(cache, 3);
    auto d = diameter(delta);
    auto fw = oracle::floyd_warshall_diameter(dense(delta));
    if (d) CHECK(*d == fw);
    else CHECK(fw == UINT32_MAX);
  }
}

TEST_CASE("identity adjacency and edge symmetry") {
  SubgroupCache cache(fixture::group("S4"));
  CHECK(build_gamma_d(cache, 2).degree(0) == 0);
  // With one spare slot the identity pads any generating pair.
  CHECK(build_gamma_d(cache, 3).degree(0) > 0);
  std::mt19937_64 rng(21);
  const auto n = cache.group().size();
  for (int k = 0; k < 300; ++k) {
    Elem x = static_cast<Elem>(rng() % n), y = static_cast<Elem>(rng() % n);
    if (x == y) continue;
    for (unsigned d : {2u, 3u, 4u}) CHECK(is_edge_d(cache, x, y, d) == is_edge_d(cache, y, x, d));
  }
  CHECK_THROWS_AS(is_edge_d(cache, 1, 1, 3), PreconditionError);
  CHECK_THROWS_AS(is_edge_d(cache, 1, 2, 1), PreconditionError);
}

TEST_CASE("edges persist when d grows and the group is large enough") {
  for (const char* id : {"S4", "D12", "C2xA4", "A5"}) {
    CAPTURE(std::string(id));
    SubgroupCache cache(fixture::group(id));
    const auto n = cache.group().size();
    std::mt19937_64 rng(4);
    for (int k = 0; k < 300; ++k) {
      Elem x = static_cast<Elem>(rng() % n), y = static_cast<Elem>(rng() % n);
      if (x == y) continue;
      for (unsigned d = 2; d < 5; ++d)
        if (is_edge_d(cache, x, y, d) && n > d) CHECK(is_edge_d(cache, x, y, d + 1));
    }
  }
}

TEST_CASE("components are unions of conjugacy-closed sets") {
  for (const char* id : {"S4", "C3xS3", "D12", "SL(2,3)"}) {
    CAPTURE(std::string(id));
    SubgroupCache cache(fixture::group(id));
    const auto& G = cache.group();
    auto delta = build_delta_d(cache, 3);
    auto comp = components(delta);
    std::vector<std::int64_t> where(G.size(), -1);
    for (std::uint32_t v = 0; v < delta.vertex_count(); ++v) where[delta.vertices()[v]] = comp.id[v];
    for (std::uint32_t v = 0; v < delta.vertex_count(); ++v)
      for (Elem z = 0; z < G.size(); ++z) CHECK(where[G.conj(delta.vertices()[v], z)] == comp.id[v]);
  }
}

TEST_CASE("components and diameter on hand-built graphs") {
  auto g = fixture::group("S3");
  ElementGraph path(GraphKind::rank, g, {0, 1, 2, 3, 4, 5});
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  path.add_edge(2, 3);
  path.add_edge(1, 0);
  path.add_edge(4, 5);
  path.finalize();
  CHECK(path.edge_count() == 4);
  auto c = components(path, true);
  CHECK(c.count == 2);
  CHECK(c.id[0] == c.id[3]);
  CHECK(c.id[4] != c.id[0]);
  CHECK(c.diameter[c.id[0]] == 3u);
  CHECK(c.diameter[c.id[4]] == 1u);
  CHECK_FALSE(diameter(path).has_value());
  CHECK_THROWS(path.add_edge(2, 2));
  auto trimmed = ElementGraph(GraphKind::rank, g, {0, 1, 2});
  trimmed.add_edge(1, 2);
  trimmed.finalize();
  CHECK(trimmed.without_isolated().vertex_count() == 2);
}

TEST_CASE("generating graph equals the rank graph at d = 2") {
  SubgroupCache cache(fixture::group("S4"));
  auto gen = build_generating_graph(cache);
  auto delta = build_delta_d(cache, 2);
  CHECK(gen.vertices() == delta.vertices());
  CHECK(gen.edges() == delta.edges());
  CHECK(gen.kind() == GraphKind::generating);
}

TEST_CASE("coset graph of S5 over A5 matches the oracle") {
  auto e = fixture::catalog().resolve("S5");
  SubgroupCache cache(to_group(e));
  const auto& G = cache.group();
  auto s = socle(cache);
  Elem x = FiniteGroup::identity();
  Elem y = *G.index_of(Permutation::parse(5, "(3 4)"));
  auto lambda = build_lambda(cache, s, x, y);
  REQUIRE(lambda.vertex_count() == 120);
  auto elems = fixture::raw_elements(G);
  std::size_t expected_edges = 0;
  for (std::uint32_t u = 0; u < 60; ++u)
    for (std::uint32_t v = 60; v < 120; ++v) {
      bool edge = oracle::generates(5, {elems[lambda.vertices()[u]], elems[lambda.vertices()[v]]}, 120);
      expected_edges += edge;
      CHECK(lambda.has_edge(u, v) == edge);
    }
  CHECK(lambda.edge_count() == expected_edges);
  CHECK(components(lambda.without_isolated()).connected());
  CHECK_THROWS_AS(build_lambda(cache, s, x, x), PreconditionError);
}

TEST_CASE("DOT export is deterministic") {
  SubgroupCache cache(fixture::group("S3"));
  auto graph = build_delta_d(cache, 2);
  std::ostringstream a, b;
  export_dot(graph, a);
  export_dot(graph, b);
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("graph", 0) == 0);
  CHECK(a.str().find("--") != std::string::npos);
}

TEST_CASE("graph stats serialize and parse back") {
  SubgroupCache cache(fixture::group("S4"));
  auto stats = graph_stats(build_delta_d(cache, 3), "S4", true, 1.5);
  nlohmann::json j = stats;
  CHECK(j.at("group") == "S4");
  CHECK(j.at("n_components") == 1);
  CHECK(j.get<GraphStats>() == stats);
  CHECK(to_string(graph_kind_from_string("lambda")) == "lambda");
}
