#ifndef RANKGRAPH_MONOLITHIC_HPP
#define RANKGRAPH_MONOLITHIC_HPP

#include <memory>
#include <vector>

#include "rankgraph/finite_group.hpp"
#include "rankgraph/subgroups.hpp"

namespace rankgraph {

/// A group L with a unique minimal normal subgroup N, plus the coset map
/// L -> L/N.
class MonolithicGroup {
 public:
  /// Throws PreconditionError unless L has exactly one minimal normal
  /// subgroup, or if `require_nonabelian_socle` and that subgroup is abelian.
  explicit MonolithicGroup(GroupPtr l, bool require_nonabelian_socle = true);

  const FiniteGroup& group() const noexcept { return *l_; }
  const GroupPtr& group_ptr() const noexcept { return l_; }

  /// Sorted elements of N.
  const std::vector<Elem>& socle() const noexcept { return socle_; }
  const ElementSet& socle_members() const noexcept { return socle_members_; }
  const std::vector<Elem>& socle_generators() const noexcept { return socle_gens_; }
  bool in_socle(Elem x) const noexcept { return socle_members_.contains(x); }
  bool socle_abelian() const noexcept { return socle_abelian_; }

  /// Position of x in socle(), or -1.
  std::int32_t socle_position(Elem x) const noexcept { return socle_pos_[x]; }

  std::size_t coset_count() const noexcept { return coset_reps_.size(); }
  std::uint32_t coset_of(Elem x) const noexcept { return coset_of_[x]; }
  /// Smallest element of each coset; coset 0 is N.
  const std::vector<Elem>& coset_representatives() const noexcept { return coset_reps_; }

 private:
  GroupPtr l_;
  std::vector<Elem> socle_;
  ElementSet socle_members_;
  std::vector<Elem> socle_gens_;
  std::vector<std::int32_t> socle_pos_;
  std::vector<std::uint32_t> coset_of_;
  std::vector<Elem> coset_reps_;
  bool socle_abelian_ = false;
};

using MonolithicPtr = std::shared_ptr<const MonolithicGroup>;

}  // namespace rankgraph

#endif
