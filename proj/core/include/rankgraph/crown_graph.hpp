#ifndef RANKGRAPH_CROWN_GRAPH_HPP
#define RANKGRAPH_CROWN_GRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rankgraph/crown_powers.hpp"
#include "rankgraph/graphs.hpp"

namespace rankgraph {

/// Vertex a_row o m of the crown graph; `m` encodes the socle positions of
/// (n_1, ..., n_eta), n_1 most significant.
struct CrownVertex {
  unsigned row = 0;
  std::uint64_t m = 0;
  bool operator==(const CrownVertex&) const = default;
};

/// Gamma_{a_1..a_t}(L_eta) over an orbit table for (a_1..a_t).
///
/// Vertices are (row, m) pairs, t * |N|^eta of them. Two vertices in rows
/// i != j are adjacent when the remaining rows can be filled so that all eta
/// columns lie in Omega in pairwise different X-orbits. With rows i, j fixed
/// each column k admits a set of orbits, and the edge exists iff these sets
/// have a system of distinct representatives (augmenting-path matching).
class CrownGraph {
 public:
  /// Throws CapExceeded when t * |N|^eta exceeds `vertex_cap`.
  CrownGraph(const OrbitTable& table, unsigned eta, bool store_edges = false,
             std::size_t vertex_cap = 20'000'000);

  const OrbitTable& table() const noexcept { return *table_; }
  unsigned eta() const noexcept { return eta_; }
  std::uint64_t per_row() const noexcept { return per_row_; }
  std::uint64_t vertex_count() const noexcept { return per_row_ * table_->t(); }
  std::uint64_t vertex_id(CrownVertex v) const noexcept { return v.row * per_row_ + v.m; }
  CrownVertex vertex(std::uint64_t id) const noexcept {
    return {static_cast<unsigned>(id / per_row_), id % per_row_};
  }

  /// Socle position of coordinate k of m.
  std::uint32_t coordinate(std::uint64_t m, unsigned k) const;
  std::uint64_t encode(const std::vector<std::uint32_t>& positions) const;

  bool has_edge(CrownVertex u, CrownVertex v) const;

  bool isolated(std::uint64_t id) const { return !active_[id]; }
  std::uint64_t non_isolated_count() const noexcept { return non_isolated_; }
  std::uint64_t edge_count() const noexcept { return edge_count_; }

  /// Component id of a non-isolated vertex (UINT32_MAX for isolated ones).
  std::uint32_t component(std::uint64_t id) const { return component_[id]; }
  std::uint32_t component_count() const noexcept { return component_count_; }

  /// The stored graph (requires store_edges); drop_isolated gives Delta.
  ElementGraph to_element_graph(bool drop_isolated = true) const;
  std::string label(CrownVertex v) const;

  /// (a_row o m)^mu for mu in N^eta, given as eta socle elements.
  CrownVertex conjugate(CrownVertex v, const std::vector<Elem>& mu) const;

 private:
  const std::vector<std::uint32_t>& admissible(unsigned i, unsigned j, std::uint32_t p,
                                               std::uint32_t q) const;

  const OrbitTable* table_;
  unsigned eta_;
  std::uint64_t per_row_ = 1;
  // Orbits admissible in a column with row-i position p and row-j position q,
  // for each row pair i < j, flattened as [pair][p * |N| + q].
  std::vector<std::vector<std::vector<std::uint32_t>>> admissible_;
  std::vector<bool> active_;
  std::vector<std::uint32_t> component_;
  std::uint32_t component_count_ = 0;
  std::uint64_t non_isolated_ = 0;
  std::uint64_t edge_count_ = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges_;
  bool stored_ = false;
};

struct WeakWitness {
  unsigned row = 0;
  CrownVertex from;
  CrownVertex to;
  std::vector<Elem> conjugator;  // mu in N^eta with to^mu in the component of from
  bool verified = false;
};

struct WeakConnectivityOptions {
  bool sampled = false;
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  std::size_t max_witnesses = 64;
};

struct WeakConnectivityReport {
  bool pass = false;
  std::vector<bool> row_pass;
  std::uint64_t vertices = 0;
  std::uint64_t non_isolated = 0;
  std::uint64_t edges = 0;
  std::uint32_t components = 0;
  std::uint32_t component_classes = 0;  // components up to conjugation by N^eta
  std::vector<WeakWitness> witnesses;
  bool sampled = false;
  std::size_t sampled_pairs = 0;
  std::size_t sampled_failures = 0;
  std::uint64_t seed = 0;
};

/// Weak connectivity of Delta_{a_1..a_t}(L_eta).
///
/// N^eta acts on vertices by conjugation and permutes components. Components
/// are merged along the action of its generators; row i passes iff all of its
/// non-isolated vertices fall in one merged class. For each further component
/// met by row i a conjugator is reconstructed and re-checked explicitly. In
/// sampled mode, random vertex pairs of each row are additionally checked
/// through explicit conjugators.
WeakConnectivityReport weak_connectivity(const CrownGraph& graph,
                                         const WeakConnectivityOptions& options = {});

struct LocalConnectivityReport {
  bool pass = false;
  std::size_t patterns = 0;  // generating coset tuples tried
  std::size_t failures = 0;
  std::vector<std::vector<Elem>> tuples;
  std::vector<WeakConnectivityReport> reports;
};

/// t-local connectivity of L_eta: weak connectivity for one generating tuple
/// in every coset pattern (c_1 N, ..., c_t N) that generates L modulo N.
LocalConnectivityReport local_connectivity(MonolithicPtr l, const AutGroup& x, unsigned t,
                                           unsigned eta,
                                           const WeakConnectivityOptions& options = {});

}  // namespace rankgraph

#endif
