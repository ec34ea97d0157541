#ifndef RANKGRAPH_PERM_GROUP_HPP
#define RANKGRAPH_PERM_GROUP_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rankgraph/errors.hpp"
#include "rankgraph/permutation.hpp"

namespace rankgraph {

using Order = boost::multiprecision::cpp_int;

/// A permutation group given by generators, with a stabilizer chain built by
/// the deterministic Schreier-Sims algorithm.
///
/// Base points are chosen as the smallest point moved by the element that
/// forces a new level, so the chain (and every fixture built on it) is
/// reproducible. The group is immutable after construction.
class PermGroup {
 public:
  /// Trivial group of degree 0.
  PermGroup() = default;

  /// Throws PreconditionError if a generator has the wrong degree. An empty
  /// generator list gives the trivial group.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  /// Product of the fundamental orbit sizes.
  const Order& order() const noexcept { return order_; }

  /// Throws CapExceeded if the order does not fit in 64 bits.
  std::uint64_t order_u64() const;

  bool is_trivial() const noexcept { return levels_.empty(); }

  /// True iff p sifts to the identity through the chain.
  bool contains(const Permutation& p) const;

  /// True iff every generator of `other` lies in this group.
  bool contains_group(const PermGroup& other) const;

  std::vector<Point> base() const;
  std::vector<std::size_t> fundamental_orbit_sizes() const;
  std::vector<Permutation> strong_generators() const;

  /// All elements in lexicographic order of their image sequences.
  /// Throws CapExceeded when the order exceeds `cap`.
  std::vector<Permutation> elements(std::size_t cap = default_enumeration_cap) const;

  /// Uniformly distributed element (product of random transversal elements).
  Permutation random_element(std::mt19937_64& rng) const;

 private:
  struct Level {
    Point base_point = 0;
    std::vector<Permutation> generators;    // strong generators fixing earlier base points
    std::vector<std::int32_t> orbit_index;  // point -> position in orbit, or -1
    std::vector<Point> orbit;
    std::vector<Permutation> transversal;   // base_point^transversal[k] == orbit[k]
    std::vector<Permutation> transversal_inverse;
  };

  void build_chain();
  void recompute_orbit(Level& level) const;
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
  Order order_ = 1;
};

/// True iff the subgroup generated by `elems` is all of G. Throws
/// PreconditionError if some element lies outside G.
bool generates(const PermGroup& g, std::span<const Permutation> elems);

/// Conjugacy classes under x -> z^-1 x z, each sorted, classes ordered by
/// their smallest element. Throws CapExceeded past `cap`.
std::vector<std::vector<Permutation>> conjugacy_classes(
    const PermGroup& g, std::size_t cap = default_enumeration_cap);

/// {g in G : g p = p g}. Requires p in G.
PermGroup centralizer(const PermGroup& g, const Permutation& p,
                      std::size_t cap = default_enumeration_cap);

/// Smallest normal subgroup of G containing S (S inside G).
PermGroup normal_closure(const PermGroup& g, std::span<const Permutation> s);

/// H normal in G, tested on generators. H must be a subgroup of G.
bool is_normal(const PermGroup& g, const PermGroup& h);

PermGroup derived_subgroup(const PermGroup& g);

/// Derived series reaches the trivial group. Works at any order the chain can
/// handle.
bool is_soluble(const PermGroup& g);

/// A homomorphism determined by generator images, tabulated on the source.
///
/// Construction extends the generator images along the Cayley graph and
/// throws PreconditionError if two words for the same element disagree.
class Homomorphism {
 public:
  Homomorphism(PermGroup source, PermGroup target,
               std::vector<Permutation> generator_images,
               std::size_t cap = default_enumeration_cap);

  const PermGroup& source() const noexcept { return source_; }
  const PermGroup& target() const noexcept { return target_; }
  const std::vector<Permutation>& generator_images() const noexcept {
    return generator_images_;
  }

  /// Image of an element of the source. Throws PreconditionError otherwise.
  const Permutation& operator()(const Permutation& p) const;

  /// Kernel as a subgroup of the source.
  PermGroup kernel() const;

 private:
  PermGroup source_;
  PermGroup target_;
  std::vector<Permutation> generator_images_;
  std::unordered_map<Permutation, Permutation, PermutationHash> table_;
};

struct Quotient {
  PermGroup group;
  Homomorphism projection;
};

/// G/N realized on the right cosets of N (degree [G:N]). Throws
/// PreconditionError if N is not normal in G.
Quotient quotient(const PermGroup& g, const PermGroup& n,
                  std::size_t cap = default_enumeration_cap);

}  // namespace rankgraph

#endif
