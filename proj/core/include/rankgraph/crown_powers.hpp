#ifndef RANKGRAPH_CROWN_POWERS_HPP
#define RANKGRAPH_CROWN_POWERS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rankgraph/automorphisms.hpp"
#include "rankgraph/monolithic.hpp"

namespace rankgraph {

/// L_k: tuples of L^k congruent modulo N, acting on k disjoint copies of L's
/// domain (copy c on points [c*deg, (c+1)*deg)).
///
/// Generated by the diagonal copies of L's generators together with N's
/// generators placed in each coordinate. The constructor checks the chain
/// order against |L/N| * |N|^k.
class CrownPower {
 public:
  CrownPower(MonolithicPtr base, unsigned k);

  const MonolithicGroup& base() const noexcept { return *base_; }
  unsigned k() const noexcept { return k_; }
  std::size_t degree() const noexcept { return k_ * base_->group().degree(); }
  const PermGroup& group() const noexcept { return group_; }
  Order expected_order() const;

  /// (l_1, ..., l_k) as a permutation; throws PreconditionError if the
  /// coordinates are not congruent modulo N.
  Permutation embed(std::span<const Elem> coordinates) const;

  /// a o m = (a n_1, ..., a n_k); throws PreconditionError if some n_i is
  /// outside N.
  Permutation circ(Elem a, std::span<const Elem> m) const;

 private:
  MonolithicPtr base_;
  unsigned k_;
  PermGroup group_;
};

/// Omega for a generating tuple (a_1..a_t) of L: all (a_1 n_1, ..., a_t n_t)
/// with n_i in N generating L, labeled by the orbits of X = C_Aut(L)(L/N).
///
/// Tuples are indexed by the socle positions (p_1, ..., p_t) of their
/// corrections, p_1 most significant, so index order is lexicographic.
class OrbitTable {
 public:
  static constexpr std::uint32_t outside = UINT32_MAX;

  OrbitTable(MonolithicPtr base, const AutGroup& x, std::vector<Elem> a,
             std::size_t cap = default_omega_cap);

  const MonolithicGroup& base() const noexcept { return *base_; }
  const MonolithicPtr& base_ptr() const noexcept { return base_; }
  unsigned t() const noexcept { return static_cast<unsigned>(a_.size()); }
  const std::vector<Elem>& a() const noexcept { return a_; }
  std::size_t socle_order() const noexcept { return base_->socle().size(); }

  std::uint64_t tuple_count() const noexcept { return labels_.size(); }
  std::uint64_t omega_size() const noexcept { return omega_size_; }
  std::uint32_t orbit_count() const noexcept { return orbit_count_; }

  /// Orbit id of the tuple, or `outside` if it does not generate L.
  std::uint32_t label(std::uint64_t index) const { return labels_[index]; }

  /// Smallest tuple index of each orbit, by orbit id.
  const std::vector<std::uint64_t>& representatives() const noexcept { return representatives_; }

  /// Socle position of the correction in `row`.
  std::uint32_t position(std::uint64_t index, unsigned row) const;
  /// a_row * n_row.
  Elem entry(std::uint64_t index, unsigned row) const;
  std::uint64_t encode(std::span<const std::uint32_t> positions) const;

  /// Index of (x_1, ..., x_t); nullopt if some x_i is outside a_i N.
  std::optional<std::uint64_t> index_of_entries(std::span<const Elem> entries) const;

  /// X-orbit id of every element of L.
  const std::vector<std::uint32_t>& element_orbits() const noexcept { return element_orbits_; }
  const std::vector<Permutation>& x_generators() const noexcept { return x_generators_; }

 private:
  MonolithicPtr base_;
  std::vector<Elem> a_;
  std::vector<Permutation> x_generators_;
  std::vector<std::uint32_t> labels_;
  std::vector<std::uint64_t> representatives_;
  std::vector<std::uint32_t> element_orbits_;
  std::uint64_t omega_size_ = 0;
  std::uint32_t orbit_count_ = 0;
};

/// A generating t-tuple of L: a minimal generating sequence padded with
/// identities. Throws PreconditionError if t < d(L).
std::vector<Elem> standard_generating_tuple(const MonolithicGroup& l, unsigned t);

/// delta(L, t) as the number of X-orbits on Omega.
unsigned delta_Lt(const OrbitTable& table);

struct DeltaWitness {
  unsigned k = 0;
  std::vector<std::vector<Elem>> corrections;  // t rows of k socle elements
  std::vector<Permutation> generators;         // a_i o m_i in L_k
  Order order;                                 // chain order of <generators>
  Order expected_order;
  bool generates = false;
};

/// Builds L_k for k = delta(L, t), takes the orbit representatives as columns
/// and checks with the stabilizer chain that the t elements generate L_k.
DeltaWitness verify_delta(const OrbitTable& table);

/// Criterion for <a_1 o m_1, ..., a_t o m_t> = L_eta: every column
/// (a_1 n_1j, ..., a_t n_tj) lies in Omega and the columns lie in pairwise
/// different X-orbits. `corrections` holds t rows of eta socle elements.
bool generation_via_orbits(const OrbitTable& table,
                           const std::vector<std::vector<Elem>>& corrections);

/// Direct test of the same statement with the stabilizer chain of L_eta.
bool generates_crown_power(const CrownPower& power, std::span<const Elem> a,
                           const std::vector<std::vector<Elem>>& corrections);

/// Partition of {0..n-1}. Ordered so that the one-block partition is the
/// smallest element; meet() merges the blocks of both arguments.
class IndexPartition {
 public:
  IndexPartition() = default;
  /// Block label per index; relabeled by first occurrence.
  explicit IndexPartition(const std::vector<std::uint32_t>& block_of);

  static IndexPartition single_block(std::size_t n);
  static IndexPartition singletons(std::size_t n);

  std::size_t size() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return block_count_; }
  std::uint32_t block_of(std::size_t j) const { return block_of_[j]; }
  bool same_block(std::size_t a, std::size_t b) const { return block_of_[a] == block_of_[b]; }
  std::vector<std::vector<std::uint32_t>> blocks() const;

  IndexPartition meet(const IndexPartition& other) const;
  /// Every block of *this lies inside a block of `other`.
  bool refines(const IndexPartition& other) const;

  bool operator==(const IndexPartition&) const = default;

 private:
  std::vector<std::uint32_t> block_of_;
  std::size_t block_count_ = 0;
};

struct PartitionCheck {
  std::vector<IndexPartition> partitions;  // one per row
  IndexPartition meet;
  bool meet_is_single_block = false;
};

/// For the reference matrix whose columns are the given tuple indices:
/// columns j1, j2 share a block of row i's partition when their row-i
/// entries are X-conjugate. Defaults to the orbit representatives.
PartitionCheck partitions_pi(const OrbitTable& table,
                             std::span<const std::uint64_t> columns = {});

struct Bridge {
  std::uint32_t first = 0;   // column 0
  std::uint32_t u = 0;       // orbit of (row-0 entry of column 0, nu)
  std::uint32_t v = 0;       // orbit of (row-0 entry of column j, nu)
  std::uint32_t target = 0;  // column j
};

struct BridgeCheck {
  bool pass = false;
  std::vector<Bridge> bridges;  // one per block of row 0 other than column 0's
  std::size_t failures = 0;
};

/// For each block of row 0's partition not containing column 0, with
/// representative column j, finds corrections nu for rows 1..t-1 making both
/// (row-0 entry of column 0, nu) and (row-0 entry of column j, nu) generate,
/// and checks that their orbits u, v satisfy u ~ 0 and v ~ j in row 0 and
/// u ~ v in row 1. Requires t >= 2 and the representative matrix.
BridgeCheck partition_bridges(const OrbitTable& table);

struct DeluFraction {
  std::uint64_t count = 0;
  std::uint64_t total = 0;
  /// count / total >= 53/90, compared exactly.
  bool meets_bound() const noexcept { return count * 90 >= 53 * total; }
  double value() const noexcept { return total ? double(count) / double(total) : 0.0; }
};

/// |{(n_1..n_d) in N^d : <l, b_1 n_1, ..., b_d n_d> = L}| out of |N|^d.
/// Throws PreconditionError unless <l, b> = L and d >= max(2, d_l(L)).
DeluFraction delu_fraction(SubgroupCache& cache, const MonolithicGroup& l, Elem x,
                           std::span<const Elem> b);

/// Search for n, m in N with [an, bm] = 1, via a table giving for each
/// element c and each coset of N one element of C(c) in that coset.
class ClnSearch {
 public:
  explicit ClnSearch(MonolithicPtr g);
  /// Throws PreconditionError unless [a, b] lies in N.
  std::optional<std::pair<Elem, Elem>> witness(Elem a, Elem b) const;

 private:
  MonolithicPtr g_;
  std::vector<Elem> centralizing_;  // [c * cosets + coset] -> element or UINT32_MAX
};

std::optional<std::pair<Elem, Elem>> cln_witness(MonolithicPtr g, Elem a, Elem b);

struct UnicoRankResult {
  unsigned d_last = 0;  // d_{b_t}(L)
  bool holds = false;   // d_last <= t - 1
};

/// Throws PreconditionError unless t >= 3 and <b_1..b_t> N = L.
UnicoRankResult unico_rank_check(SubgroupCache& cache, const MonolithicGroup& l,
                                 std::span<const Elem> b);

}  // namespace rankgraph

#endif
