#ifndef RANKGRAPH_GRAPHS_HPP
#define RANKGRAPH_GRAPHS_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "rankgraph/subgroups.hpp"

namespace rankgraph {

enum class GraphKind { generating, rank, lambda, crown };

std::string_view to_string(GraphKind kind);
GraphKind graph_kind_from_string(std::string_view text);

/// Simple undirected graph on positions 0..n-1. Each position carries an
/// element index of `group()` (or a free-form label for crown graphs).
class ElementGraph {
 public:
  ElementGraph() = default;
  ElementGraph(GraphKind kind, GroupPtr group, std::vector<Elem> vertices);

  GraphKind kind() const noexcept { return kind_; }
  void set_kind(GraphKind kind) noexcept { kind_ = kind; }
  const GroupPtr& group() const noexcept { return group_; }
  unsigned d() const noexcept { return d_; }
  void set_d(unsigned d) noexcept { d_ = d; }

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  const std::vector<Elem>& vertices() const noexcept { return vertices_; }
  const std::vector<std::uint32_t>& neighbors(std::uint32_t v) const { return adjacency_[v]; }
  std::size_t degree(std::uint32_t v) const { return adjacency_[v].size(); }

  /// Adds u -- v. Loops are rejected; call finalize() after the last edge to
  /// drop duplicates and sort neighbor lists.
  void add_edge(std::uint32_t u, std::uint32_t v);
  void finalize();
  bool has_edge(std::uint32_t u, std::uint32_t v) const;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

  /// Induced subgraph on vertices of positive degree.
  ElementGraph without_isolated() const;

  void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }
  std::string label(std::uint32_t v) const;

 private:
  GraphKind kind_ = GraphKind::rank;
  GroupPtr group_;
  unsigned d_ = 0;
  std::vector<Elem> vertices_;
  std::vector<std::vector<std::uint32_t>> adjacency_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

struct Components {
  std::vector<std::uint32_t> id;  // per vertex, numbered by smallest vertex
  std::uint32_t count = 0;
  std::vector<std::optional<unsigned>> diameter;  // per component, when requested
  bool connected() const noexcept { return count == 1; }
};

Components components(const ElementGraph& graph, bool with_diameter = false);

/// Diameter of a connected graph; nullopt when disconnected or empty.
std::optional<unsigned> diameter(const ElementGraph& graph);

/// There is a generating set of G of cardinality exactly d containing x and
/// y. Decided as completion_rank(<x, y>) <= d - 2 together with |G| >= d:
/// a shorter completion, or one that repeats x or y, is padded with unused
/// elements, which keeps the set generating.
///
/// Throws PreconditionError if x == y or d < 2.
bool is_edge_d(SubgroupCache& cache, Elem x, Elem y, unsigned d);

/// Gamma_d(G) on all elements (identity included).
ElementGraph build_gamma_d(SubgroupCache& cache, unsigned d);

/// Delta_d(G): Gamma_d(G) without isolated vertices.
ElementGraph build_delta_d(SubgroupCache& cache, unsigned d);

/// Generating graph: Gamma_2 with kind `generating`; `drop_isolated` gives
/// the graph induced on non-isolated vertices.
ElementGraph build_generating_graph(SubgroupCache& cache, bool drop_isolated = true);

/// Bipartite graph on the cosets xS (positions 0..|S|-1) and yS (positions
/// |S|..2|S|-1), with xs1 -- ys2 when <xs1, ys2> = <S, x, y>.
///
/// Throws PreconditionError if S is not normal or xS = yS.
ElementGraph build_lambda(SubgroupCache& cache, SubgroupId s, Elem x, Elem y);

/// Deterministic DOT text; vertices labeled by cycle notation.
void export_dot(const ElementGraph& graph, std::ostream& out);

struct GraphStats {
  std::string group_id;
  GraphKind kind = GraphKind::rank;
  unsigned d = 0;
  std::size_t n_vertices = 0;
  std::size_t n_edges = 0;
  std::size_t n_components = 0;
  std::optional<unsigned> diameter;
  double elapsed_ms = 0;

  bool operator==(const GraphStats&) const = default;
};

GraphStats graph_stats(const ElementGraph& graph, std::string group_id, bool with_diameter,
                       double elapsed_ms = 0);

void to_json(nlohmann::json& j, const GraphStats& s);
void from_json(const nlohmann::json& j, GraphStats& s);

}  // namespace rankgraph

#endif
