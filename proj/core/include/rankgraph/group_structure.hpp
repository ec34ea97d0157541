#ifndef RANKGRAPH_GROUP_STRUCTURE_HPP
#define RANKGRAPH_GROUP_STRUCTURE_HPP

#include <span>
#include <vector>

#include "rankgraph/subgroups.hpp"

namespace rankgraph {

/// All normal subgroups of G, ordered by (order, sorted element list).
/// The trivial group comes first and G last.
struct NormalLattice {
  std::vector<SubgroupId> normals;
  std::vector<SubgroupId> minimal_normals;
};

/// Normal closures of conjugacy classes, closed under products.
NormalLattice normal_subgroups(SubgroupCache& cache, std::size_t cap = default_normal_cap);

/// Join of all minimal normal subgroups.
SubgroupId socle(SubgroupCache& cache);

/// Every subgroup of G, found by joining cyclic subgroups of prime-power order
/// until nothing new appears. Ordered like NormalLattice.
std::vector<SubgroupId> all_subgroups(SubgroupCache& cache,
                                      std::size_t cap = default_subgroup_search_cap);

std::vector<SubgroupId> maximal_subgroups(SubgroupCache& cache,
                                          std::size_t cap = default_subgroup_search_cap);

/// Intersection of the maximal subgroups. Throws CapExceeded above `cap`
/// instead of approximating.
SubgroupId frattini(SubgroupCache& cache, std::size_t cap = default_subgroup_search_cap);

/// Derived series of H reaches the trivial group.
bool is_soluble(SubgroupCache& cache, SubgroupId h);

struct RankCertificate {
  unsigned d = 0;
  std::vector<Elem> witness;  // generates G, length d
};

/// d(G) with a generating witness. The first generator ranges over class
/// representatives only; generation is invariant under simultaneous
/// conjugation, so this loses nothing.
RankCertificate min_rank(SubgroupCache& cache);

/// d_X(G): fewest extra elements that together with X generate G.
unsigned d_X(SubgroupCache& cache, std::span<const Elem> x);

/// Gaschutz lifting: given <g_1..g_r, X, M> = G and r >= d_X(G), finds
/// n_1..n_r in M with <g_1 n_1, ..., g_r n_r, X> = G by exhaustive search of
/// M^r with early exit.
///
/// Throws PreconditionError if the hypotheses fail and TheoremViolation if
/// the search is exhausted (which the lifting lemma rules out).
std::vector<Elem> gaschutz_lift(SubgroupCache& cache, SubgroupId m, std::span<const Elem> x,
                                std::span<const Elem> g);

/// G/N tabulated, with the image of every element of G.
struct QuotientMap {
  GroupPtr group;
  std::vector<Elem> image;
};

/// Throws PreconditionError unless N is normal. For trivial N the quotient
/// is G itself.
QuotientMap quotient_map(SubgroupCache& cache, SubgroupId n,
                         std::size_t cap = default_table_cap);

}  // namespace rankgraph

#endif
