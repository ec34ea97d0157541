#ifndef RANKGRAPH_PERMUTATION_HPP
#define RANKGRAPH_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rankgraph {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}, stored as its image array.
///
/// Products act left to right: (p * q)(i) = q(p(i)), i.e. p is applied
/// first. Consequently conjugation reads x^g = g^-1 * x * g and the
/// commutator is [a, b] = a^-1 * b^-1 * a * b. Every algorithm in the
/// library uses this convention.
class Permutation {
 public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Throws PreconditionError unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Builds a permutation from disjoint cycles; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  /// Parses cycle notation such as "(0 1 2)(3 4)" or "(0,1)". "()" is the
  /// identity.
  static Permutation parse(std::size_t degree, std::string_view text);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point i) const { return images_[i]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation pow(long long e) const;
  std::uint64_t order() const;

  /// g^-1 * this * g.
  Permutation conjugate_by(const Permutation& g) const;

  std::optional<Point> smallest_moved_point() const noexcept;

  /// Cycle notation, fixed points omitted; identity prints as "()".
  std::string to_string() const;

  /// Lexicographic on image sequences.
  auto operator<=>(const Permutation&) const = default;

  std::size_t hash() const noexcept;

 private:
  friend Permutation compose(const Permutation& p, const Permutation& q);

  std::vector<Point> images_;
};

/// (p * q)(i) = q(p(i)). Throws PreconditionError on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

/// a^-1 b^-1 a b.
Permutation commutator(const Permutation& a, const Permutation& b);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept { return p.hash(); }
};

}  // namespace rankgraph

#endif
