#include "rankgraph/monolithic.hpp"

#include "rankgraph/group_structure.hpp"

namespace rankgraph {

MonolithicGroup::MonolithicGroup(GroupPtr l, bool require_nonabelian_socle) : l_(std::move(l)) {
  SubgroupCache cache(l_);
  auto lattice = normal_subgroups(cache);
  if (lattice.minimal_normals.size() != 1)
    throw PreconditionError("MonolithicGroup: group '" + l_->name() +
                            "' does not have a unique minimal normal subgroup");
  SubgroupId n = lattice.minimal_normals.front();
  socle_ = cache.elements(n);
  socle_members_ = cache.members(n);
  socle_gens_ = cache.generators(n);
  socle_abelian_ = true;
  for (Elem a : socle_gens_)
    for (Elem b : socle_gens_)
      if (l_->mul(a, b) != l_->mul(b, a)) socle_abelian_ = false;
  if (require_nonabelian_socle && socle_abelian_)
    throw PreconditionError("MonolithicGroup: socle of '" + l_->name() + "' is abelian");

  socle_pos_.assign(l_->size(), -1);
  for (std::size_t k = 0; k < socle_.size(); ++k) socle_pos_[socle_[k]] = static_cast<std::int32_t>(k);

  coset_of_.assign(l_->size(), UINT32_MAX);
  for (Elem x = 0; x < l_->size(); ++x) {
    if (coset_of_[x] != UINT32_MAX) continue;
    auto id = static_cast<std::uint32_t>(coset_reps_.size());
    coset_reps_.push_back(x);
    for (Elem s : socle_) coset_of_[l_->mul(x, s)] = id;
  }
}

}  // namespace rankgraph
