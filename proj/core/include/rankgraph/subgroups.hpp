#ifndef RANKGRAPH_SUBGROUPS_HPP
#define RANKGRAPH_SUBGROUPS_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <unordered_map>
#include <vector>

#include "rankgraph/finite_group.hpp"

namespace rankgraph {

/// Bitset over the elements of a FiniteGroup.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64) {}

  std::size_t universe() const noexcept { return universe_; }
  void insert(Elem e) noexcept { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  bool contains(Elem e) const noexcept { return (words_[e >> 6] >> (e & 63)) & 1; }
  std::size_t count() const noexcept;
  bool is_subset_of(const ElementSet& other) const noexcept;
  ElementSet intersect(const ElementSet& other) const;
  std::vector<Elem> to_vector() const;
  std::size_t hash() const noexcept;
  bool operator==(const ElementSet& other) const noexcept = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

using SubgroupId = std::uint32_t;

/// Interned subgroups of one FiniteGroup with memoized joins.
///
/// Subgroups are identified by their member set; each distinct subgroup gets
/// one SubgroupId for the lifetime of the cache, so ids can key memo tables.
/// Joins with a single element use coset-wise (Dimino) closure.
///
/// Also hosts the completion-rank search: completion_rank(H) is the least r
/// such that <H, g_1, ..., g_r> = G, i.e. d_X(G) for any X generating H.
/// Results are memoized per subgroup, which is what collapses pair-level work
/// in the rank-graph builders to one evaluation per 2-generated subgroup.
///
/// Not thread-safe; use one cache per worker.
class SubgroupCache {
 public:
  explicit SubgroupCache(GroupPtr group);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }

  static constexpr SubgroupId trivial() noexcept { return 0; }
  SubgroupId whole() const noexcept { return whole_; }

  SubgroupId join(SubgroupId h, Elem g);
  SubgroupId join_subgroups(SubgroupId a, SubgroupId b);
  SubgroupId cyclic(Elem g) { return join(trivial(), g); }
  SubgroupId generated(std::span<const Elem> elems);

  /// Id of a member set already known to be a subgroup.
  SubgroupId from_members(const ElementSet& members);
  SubgroupId intersection(SubgroupId a, SubgroupId b);

  /// Smallest normal subgroup of G containing the elements.
  SubgroupId normal_closure(std::span<const Elem> elems);
  SubgroupId normal_closure(SubgroupId h);

  /// [H, H].
  SubgroupId derived(SubgroupId h);

  const ElementSet& members(SubgroupId h) const noexcept { return entries_[h].members; }
  const std::vector<Elem>& elements(SubgroupId h) const noexcept { return entries_[h].elements; }
  const std::vector<Elem>& generators(SubgroupId h) const noexcept { return entries_[h].gens; }
  std::size_t order(SubgroupId h) const noexcept { return entries_[h].elements.size(); }
  bool contains(SubgroupId h, Elem g) const noexcept { return entries_[h].members.contains(g); }
  bool is_subgroup_of(SubgroupId a, SubgroupId b) const noexcept {
    return entries_[a].members.is_subset_of(entries_[b].members);
  }
  bool is_normal(SubgroupId h) const noexcept;

  /// Number of distinct subgroups interned so far.
  std::size_t count() const noexcept { return entries_.size(); }

  /// completion_rank(h) <= budget.
  bool completion_at_most(SubgroupId h, unsigned budget);
  unsigned completion_rank(SubgroupId h);

  /// Elements g_1..g_r with <H, g_1..g_r> = G and r = completion_rank(h).
  std::vector<Elem> completion_witness(SubgroupId h);

 private:
  static constexpr unsigned unknown = std::numeric_limits<unsigned>::max();

  struct Entry {
    ElementSet members;
    std::vector<Elem> elements;
    std::vector<Elem> gens;
    unsigned lower = 0;
    unsigned upper = unknown;
    Elem witness = 0;
  };

  SubgroupId intern(ElementSet members, std::vector<Elem> elements, std::vector<Elem> gens);
  SubgroupId extend(SubgroupId h, Elem g);

  GroupPtr group_;
  SubgroupId whole_ = 0;
  std::vector<Entry> entries_;
  std::unordered_map<std::size_t, std::vector<SubgroupId>> by_hash_;
  std::unordered_map<std::uint64_t, SubgroupId> join_memo_;
};

}  // namespace rankgraph

#endif
