#ifndef RANKGRAPH_AUTOMORPHISMS_HPP
#define RANKGRAPH_AUTOMORPHISMS_HPP

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rankgraph/finite_group.hpp"
#include "rankgraph/subgroups.hpp"

namespace rankgraph {

/// Image of every element index of the source group.
using ElementMap = std::vector<Elem>;

/// Enumerates isomorphisms A -> B, calling `visit` on each until it returns
/// false. Returns the number visited.
///
/// Images of a minimal generating sequence of A are chosen by backtracking.
/// Candidates must match (element order, class size, order of the square);
/// each partial choice is checked by extending it along the Cayley graph of
/// the subgroup generated so far, which rejects inconsistent or non-injective
/// assignments early. A complete consistent assignment is an isomorphism.
std::size_t for_each_isomorphism(const GroupPtr& a, const GroupPtr& b,
                                 const std::function<bool(const ElementMap&)>& visit);

std::optional<ElementMap> find_isomorphism(const GroupPtr& a, const GroupPtr& b);

/// Full multiplication-table check.
bool is_automorphism(const FiniteGroup& g, const ElementMap& map);

/// x -> z^-1 x z as an element map.
ElementMap inner_automorphism(const FiniteGroup& g, Elem z);

/// A group of automorphisms of a tabulated group, held as permutations of
/// element indices.
class AutGroup {
 public:
  /// Each map must be an automorphism of `base`; throws PreconditionError
  /// otherwise.
  AutGroup(GroupPtr base, const std::vector<ElementMap>& generators);

  const FiniteGroup& base() const noexcept { return *base_; }
  const GroupPtr& base_ptr() const noexcept { return base_; }
  const PermGroup& group() const noexcept { return group_; }
  const std::vector<Permutation>& generators() const noexcept { return group_.generators(); }
  const Order& order() const noexcept { return group_.order(); }

  bool contains(const ElementMap& map) const;

  /// Inner automorphisms of the base group.
  PermGroup inner() const;

  /// Every element (for small groups), sorted.
  std::vector<ElementMap> elements(std::size_t cap = default_enumeration_cap) const;

 private:
  GroupPtr base_;
  PermGroup group_;
};

/// Aut(L). Throws CapExceeded if |L| > cap.
AutGroup automorphism_group(GroupPtr l, std::size_t cap = default_automorphism_cap);

/// C_Aut(L)(L/N): automorphisms fixing every coset of the normal subgroup N.
/// Filters the supplied Aut(L), so an externally provided group works too.
AutGroup x_subgroup(const AutGroup& aut, const ElementSet& normal_members);

struct OrbitLabels {
  std::vector<std::uint32_t> label;  // orbit id per tuple, numbered by first occurrence
  std::uint32_t count = 0;
};

/// Orbits of the diagonal action of the given automorphisms on a set of
/// element tuples. Throws PreconditionError if some image leaves the set.
OrbitLabels orbits_on_tuples(std::span<const Permutation> automorphisms,
                             const std::vector<std::vector<Elem>>& tuples);

}  // namespace rankgraph

#endif
