#ifndef RANKGRAPH_UNION_FIND_HPP
#define RANKGRAPH_UNION_FIND_HPP

#include <cstdint>
#include <numeric>
#include <vector>

namespace rankgraph {

/// Disjoint sets over 0..n-1 with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n = 0) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
  }

  std::size_t size() const noexcept { return parent_.size(); }

  std::uint32_t find(std::uint32_t x) noexcept {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns true if two different sets were merged.
  bool unite(std::uint32_t a, std::uint32_t b) noexcept {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  /// Dense labels 0..k-1 numbered by smallest member, restricted to `active`
  /// positions when given (inactive positions get `none`).
  std::vector<std::uint32_t> labels(std::uint32_t& count, const std::vector<bool>* active = nullptr,
                                    std::uint32_t none = UINT32_MAX) {
    std::vector<std::uint32_t> root_label(parent_.size(), none);
    std::vector<std::uint32_t> result(parent_.size(), none);
    count = 0;
    for (std::uint32_t x = 0; x < parent_.size(); ++x) {
      if (active && !(*active)[x]) continue;
      std::uint32_t r = find(x);
      if (root_label[r] == none) root_label[r] = count++;
      result[x] = root_label[r];
    }
    return result;
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
};

}  // namespace rankgraph

#endif
