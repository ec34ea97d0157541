#ifndef RANKGRAPH_FINITE_GROUP_HPP
#define RANKGRAPH_FINITE_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rankgraph/errors.hpp"
#include "rankgraph/perm_group.hpp"
#include "rankgraph/permutation.hpp"

namespace rankgraph {

/// Index of an element in a FiniteGroup's deterministic element list.
using Elem = std::uint32_t;

/// A permutation group with all elements enumerated (lexicographic order of
/// image sequences, so index 0 is the identity) and a full Cayley table.
///
/// This is the carrier of every element-level algorithm: subgroup lattices,
/// graph construction, automorphisms and orbit tables all work on element
/// indices. Instances are immutable and shared through GroupPtr.
class FiniteGroup {
 public:
  /// Throws CapExceeded if |G| > cap.
  static std::shared_ptr<const FiniteGroup> from_perm_group(
      const PermGroup& g, std::string name = {}, std::size_t cap = default_table_cap);

  std::size_t size() const noexcept { return size_; }
  const std::string& name() const noexcept { return name_; }
  std::size_t degree() const noexcept { return perm_group_.degree(); }
  const PermGroup& perm_group() const noexcept { return perm_group_; }

  static constexpr Elem identity() noexcept { return 0; }

  Elem mul(Elem a, Elem b) const noexcept { return table_[std::size_t{a} * size_ + b]; }
  Elem inv(Elem a) const noexcept { return inverse_[a]; }

  /// z^-1 a z.
  Elem conj(Elem a, Elem z) const noexcept { return mul(mul(inverse_[z], a), z); }

  /// a^-1 b^-1 a b.
  Elem commutator(Elem a, Elem b) const noexcept {
    return mul(mul(inverse_[a], inverse_[b]), mul(a, b));
  }

  Elem pow(Elem a, long long e) const noexcept;
  std::uint32_t element_order(Elem a) const noexcept { return orders_[a]; }

  const Permutation& perm(Elem a) const noexcept { return elements_[a]; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  std::optional<Elem> index_of(const Permutation& p) const;

  /// Element indices of the defining generators (identity generators dropped).
  const std::vector<Elem>& generators() const noexcept { return generators_; }

  /// Cycle notation of the element.
  std::string label(Elem a) const { return elements_[a].to_string(); }

  bool is_abelian() const noexcept;
  bool is_cyclic() const noexcept;

  /// Class index of every element; classes numbered by smallest member.
  const std::vector<std::uint32_t>& class_of() const noexcept { return class_of_; }
  const std::vector<std::vector<Elem>>& conjugacy_classes() const noexcept { return classes_; }

  /// Subgroup generated by the given elements, as a PermGroup.
  PermGroup subgroup_perm_group(std::span<const Elem> gens) const;

 private:
  FiniteGroup() = default;

  std::string name_;
  std::size_t size_ = 0;
  PermGroup perm_group_;
  std::vector<Permutation> elements_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::uint32_t> orders_;
  std::vector<Elem> generators_;
  std::vector<Point> base_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::vector<Elem>> classes_;
  std::vector<std::uint64_t> keys_;  // sorted base-image keys
  std::vector<Elem> key_index_;

  std::uint64_t key_of(const Permutation& p) const noexcept;
  friend struct FiniteGroupBuilder;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Convenience: tabulate the group generated by `gens` on `degree` points.
GroupPtr make_group(std::size_t degree, std::vector<Permutation> gens, std::string name = {},
                    std::size_t cap = default_table_cap);

/// Parse each string as cycle notation on `degree` points and tabulate.
GroupPtr make_group(std::size_t degree, const std::vector<std::string>& cycle_gens,
                    std::string name = {}, std::size_t cap = default_table_cap);

}  // namespace rankgraph

#endif
