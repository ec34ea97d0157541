#ifndef RANKGRAPH_ERRORS_HPP
#define RANKGRAPH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rankgraph {

/// Default bound on the number of group elements an operation may enumerate.
inline constexpr std::size_t default_enumeration_cap = 1'000'000;

/// Default bound on the order of a group whose Cayley table is materialized.
inline constexpr std::size_t default_table_cap = 8'000;

/// Normal-subgroup enumeration bound.
inline constexpr std::size_t default_normal_cap = 10'000;

/// Maximal-subgroup / Frattini computations are refused above this order.
inline constexpr std::size_t default_subgroup_search_cap = 2'000;

/// Automorphism-group computations are refused above this order.
inline constexpr std::size_t default_automorphism_cap = 2'000;

/// Largest |N|^t enumerated when building an orbit table.
inline constexpr std::size_t default_omega_cap = 20'000'000;

/// An input violated an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A desk-scale resource bound was exceeded.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what_for, std::size_t needed, std::size_t cap)
      : std::runtime_error(what_for + ": needs " + std::to_string(needed) +
                           " but cap is " + std::to_string(cap)),
        needed_(needed),
        cap_(cap) {}

  std::size_t needed() const noexcept { return needed_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t needed_;
  std::size_t cap_;
};

/// A computation that the underlying theorem guarantees to succeed did not.
/// Always a bug or a genuine counterexample, never an expected outcome.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rankgraph

#endif
