#include "rankgraph/finite_group.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>

namespace rankgraph {

struct FiniteGroupBuilder {
  static GroupPtr build(const PermGroup& g, std::string name, std::size_t cap) {
    if (g.order() > cap)
      throw CapExceeded("Cayley table",
                        g.order() > std::numeric_limits<std::size_t>::max()
                            ? std::numeric_limits<std::size_t>::max()
                            : static_cast<std::size_t>(g.order()),
                        cap);
    std::shared_ptr<FiniteGroup> group(new FiniteGroup());
    FiniteGroup& G = *group;
    G.name_ = std::move(name);
    G.perm_group_ = g;
    G.elements_ = g.elements(cap);
    G.size_ = G.elements_.size();
    G.base_ = g.base();

    const std::size_t n = G.size_;
    const std::size_t degree = std::max<std::size_t>(g.degree(), 1);
    bool keys_fit = true;
    {
      long double bound = 1;
      for (std::size_t l = 0; l < G.base_.size(); ++l) bound *= static_cast<long double>(degree);
      keys_fit = bound < 1.8e19L;
    }
    if (!keys_fit)
      throw CapExceeded("base-image key width", G.base_.size(), 64);

    std::vector<std::uint64_t> keys(n);
    for (std::size_t i = 0; i < n; ++i) keys[i] = G.key_of(G.elements_[i]);
    std::vector<Elem> order_idx(n);
    std::iota(order_idx.begin(), order_idx.end(), Elem{0});
    std::sort(order_idx.begin(), order_idx.end(),
              [&](Elem a, Elem b) { return keys[a] < keys[b]; });
    G.keys_.resize(n);
    G.key_index_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      G.keys_[i] = keys[order_idx[i]];
      G.key_index_[i] = order_idx[i];
    }
    std::unordered_map<std::uint64_t, Elem> lookup;
    lookup.reserve(n * 2);
    for (std::size_t i = 0; i < n; ++i) lookup.emplace(keys[i], static_cast<Elem>(i));

    // (a*b)[beta] = b[a[beta]] on base points only.
    G.table_.resize(n * n);
    std::vector<Point> a_base(G.base_.size());
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t l = 0; l < G.base_.size(); ++l) a_base[l] = G.elements_[a][G.base_[l]];
      for (std::size_t b = 0; b < n; ++b) {
        std::uint64_t key = 0;
        const Permutation& pb = G.elements_[b];
        for (std::size_t l = G.base_.size(); l-- > 0;) key = key * degree + pb[a_base[l]];
        G.table_[a * n + b] = lookup.at(key);
      }
    }

    G.inverse_.resize(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (G.table_[a * n + b] == 0) {
          G.inverse_[a] = static_cast<Elem>(b);
          break;
        }

    G.orders_.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      std::uint32_t k = 1;
      Elem x = static_cast<Elem>(a);
      while (x != 0) {
        x = G.table_[x * n + a];
        ++k;
      }
      G.orders_[a] = k;
    }

    for (const auto& gen : g.generators())
      if (!gen.is_identity()) G.generators_.push_back(*G.index_of(gen));

    G.class_of_.assign(n, std::numeric_limits<std::uint32_t>::max());
    for (std::size_t a = 0; a < n; ++a) {
      if (G.class_of_[a] != std::numeric_limits<std::uint32_t>::max()) continue;
      auto cls_id = static_cast<std::uint32_t>(G.classes_.size());
      std::vector<Elem> cls{static_cast<Elem>(a)};
      G.class_of_[a] = cls_id;
      for (std::size_t k = 0; k < cls.size(); ++k)
        for (Elem z : G.generators_) {
          Elem c = G.conj(cls[k], z);
          if (G.class_of_[c] == std::numeric_limits<std::uint32_t>::max()) {
            G.class_of_[c] = cls_id;
            cls.push_back(c);
          }
        }
      std::sort(cls.begin(), cls.end());
      G.classes_.push_back(std::move(cls));
    }
    return group;
  }
};

std::uint64_t FiniteGroup::key_of(const Permutation& p) const noexcept {
  const std::uint64_t degree = std::max<std::size_t>(perm_group_.degree(), 1);
  std::uint64_t key = 0;
  for (std::size_t l = base_.size(); l-- > 0;) key = key * degree + p[base_[l]];
  return key;
}

GroupPtr FiniteGroup::from_perm_group(const PermGroup& g, std::string name, std::size_t cap) {
  return FiniteGroupBuilder::build(g, std::move(name), cap);
}

Elem FiniteGroup::pow(Elem a, long long e) const noexcept {
  Elem base = e < 0 ? inverse_[a] : a;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1
                               : static_cast<unsigned long long>(e);
  k %= orders_[a];
  Elem result = identity();
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::optional<Elem> FiniteGroup::index_of(const Permutation& p) const {
  if (p.degree() != degree()) return std::nullopt;
  std::uint64_t key = key_of(p);
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) return std::nullopt;
  Elem idx = key_index_[static_cast<std::size_t>(it - keys_.begin())];
  if (elements_[idx] != p) return std::nullopt;
  return idx;
}

bool FiniteGroup::is_abelian() const noexcept {
  for (Elem a : generators_)
    for (Elem b : generators_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool FiniteGroup::is_cyclic() const noexcept {
  return std::any_of(orders_.begin(), orders_.end(),
                     [&](std::uint32_t o) { return o == size_; });
}

PermGroup FiniteGroup::subgroup_perm_group(std::span<const Elem> gens) const {
  std::vector<Permutation> perms;
  for (Elem g : gens)
    if (g != identity()) perms.push_back(elements_[g]);
  return PermGroup(degree(), std::move(perms));
}

GroupPtr make_group(std::size_t degree, std::vector<Permutation> gens, std::string name,
                    std::size_t cap) {
  return FiniteGroup::from_perm_group(PermGroup(degree, std::move(gens)), std::move(name), cap);
}

GroupPtr make_group(std::size_t degree, const std::vector<std::string>& cycle_gens,
                    std::string name, std::size_t cap) {
  std::vector<Permutation> gens;
  for (const auto& text : cycle_gens) gens.push_back(Permutation::parse(degree, text));
  return make_group(degree, std::move(gens), std::move(name), cap);
}

}  // namespace rankgraph
