#include "rankgraph/automorphisms.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "rankgraph/group_structure.hpp"
#include "rankgraph/union_find.hpp"

namespace rankgraph {

namespace {

using Fingerprint = std::array<std::size_t, 4>;

std::vector<Fingerprint> fingerprints(const FiniteGroup& g) {
  const auto& classes = g.conjugacy_classes();
  const auto& class_of = g.class_of();
  auto class_size = [&](Elem x) { return classes[class_of[x]].size(); };
  std::vector<Fingerprint> result(g.size());
  for (Elem x = 0; x < g.size(); ++x)
    result[x] = {g.element_order(x), class_size(x), class_size(g.mul(x, x)),
                 class_size(g.pow(x, 3))};
  return result;
}

constexpr Elem unmapped = UINT32_MAX;

class IsomorphismSearch {
 public:
  IsomorphismSearch(const GroupPtr& a, const GroupPtr& b) : a_(*a), b_(*b) {
    SubgroupCache cache(a);
    gens_ = min_rank(cache).witness;
    auto fa = fingerprints(a_);
    auto fb = fingerprints(b_);
    auto sa = fa, sb = fb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    feasible_ = sa == sb;
    for (Elem g : gens_) {
      std::vector<Elem> c;
      for (Elem y = 0; y < b_.size(); ++y)
        if (fb[y] == fa[g]) c.push_back(y);
      candidates_.push_back(std::move(c));
    }
    map_.assign(a_.size(), unmapped);
    used_.assign(b_.size(), 0);
    images_.assign(gens_.size(), 0);
  }

  std::size_t run(const std::function<bool(const ElementMap&)>& visit) {
    if (!feasible_) return 0;
    if (gens_.empty()) {
      visit(ElementMap{FiniteGroup::identity()});
      return 1;
    }
    count_ = 0;
    stop_ = false;
    search(0, visit);
    return count_;
  }

 private:
  // Extends the assignment of generators 0..k along the Cayley graph of the
  // subgroup they generate; false on a conflict or a collision in B.
  bool extend(std::size_t k) {
    for (Elem x : touched_) map_[x] = unmapped;
    for (Elem y : touched_images_) used_[y] = 0;
    touched_.clear();
    touched_images_.clear();
    map_[0] = 0;
    used_[0] = 1;
    touched_.push_back(0);
    touched_images_.push_back(0);
    for (std::size_t q = 0; q < touched_.size(); ++q) {
      Elem x = touched_[q];
      for (std::size_t s = 0; s <= k; ++s) {
        Elem y = a_.mul(x, gens_[s]);
        Elem v = b_.mul(map_[x], images_[s]);
        if (map_[y] == unmapped) {
          if (used_[v]) return false;
          map_[y] = v;
          used_[v] = 1;
          touched_.push_back(y);
          touched_images_.push_back(v);
        } else if (map_[y] != v) {
          return false;
        }
      }
    }
    return true;
  }

  void search(std::size_t k, const std::function<bool(const ElementMap&)>& visit) {
    for (Elem candidate : candidates_[k]) {
      if (stop_) return;
      images_[k] = candidate;
      if (!extend(k)) continue;
      if (k + 1 == gens_.size()) {
        ++count_;
        if (!visit(map_)) stop_ = true;
      } else {
        search(k + 1, visit);
      }
    }
  }

  const FiniteGroup& a_;
  const FiniteGroup& b_;
  std::vector<Elem> gens_;
  std::vector<std::vector<Elem>> candidates_;
  std::vector<Elem> images_;
  ElementMap map_;
  std::vector<char> used_;
  std::vector<Elem> touched_;
  std::vector<Elem> touched_images_;
  bool feasible_ = false;
  bool stop_ = false;
  std::size_t count_ = 0;
};

Permutation to_permutation(const ElementMap& map) {
  return Permutation(std::vector<Point>(map.begin(), map.end()));
}

// Keeps only maps not already generated by the earlier ones.
PermGroup greedy_group(std::size_t degree, const std::vector<ElementMap>& maps) {
  std::vector<Permutation> gens;
  PermGroup group = PermGroup::trivial(degree);
  for (const auto& m : maps) {
    Permutation p = to_permutation(m);
    if (group.contains(p)) continue;
    gens.push_back(std::move(p));
    group = PermGroup(degree, gens);
  }
  return group;
}

}  // namespace

std::size_t for_each_isomorphism(const GroupPtr& a, const GroupPtr& b,
                                 const std::function<bool(const ElementMap&)>& visit) {
  if (a->size() != b->size()) return 0;
  IsomorphismSearch search(a, b);
  return search.run(visit);
}

std::optional<ElementMap> find_isomorphism(const GroupPtr& a, const GroupPtr& b) {
  std::optional<ElementMap> found;
  for_each_isomorphism(a, b, [&](const ElementMap& m) {
    found = m;
    return false;
  });
  return found;
}

bool is_automorphism(const FiniteGroup& g, const ElementMap& map) {
  if (map.size() != g.size()) return false;
  std::vector<char> seen(g.size(), 0);
  for (Elem v : map) {
    if (v >= g.size() || seen[v]) return false;
    seen[v] = 1;
  }
  for (Elem x = 0; x < g.size(); ++x)
    for (Elem y = 0; y < g.size(); ++y)
      if (map[g.mul(x, y)] != g.mul(map[x], map[y])) return false;
  return true;
}

ElementMap inner_automorphism(const FiniteGroup& g, Elem z) {
  ElementMap m(g.size());
  for (Elem x = 0; x < g.size(); ++x) m[x] = g.conj(x, z);
  return m;
}

AutGroup::AutGroup(GroupPtr base, const std::vector<ElementMap>& generators)
    : base_(std::move(base)) {
  for (const auto& m : generators)
    if (!is_automorphism(*base_, m))
      throw PreconditionError("AutGroup: element map is not an automorphism");
  group_ = greedy_group(base_->size(), generators);
}

bool AutGroup::contains(const ElementMap& map) const {
  if (map.size() != base_->size()) return false;
  return group_.contains(to_permutation(map));
}

PermGroup AutGroup::inner() const {
  std::vector<ElementMap> maps;
  for (Elem z : base_->generators()) maps.push_back(inner_automorphism(*base_, z));
  return greedy_group(base_->size(), maps);
}

std::vector<ElementMap> AutGroup::elements(std::size_t cap) const {
  std::vector<ElementMap> result;
  for (const auto& p : group_.elements(cap)) result.emplace_back(p.images().begin(), p.images().end());
  return result;
}

AutGroup automorphism_group(GroupPtr l, std::size_t cap) {
  if (l->size() > cap) throw CapExceeded("automorphism group", l->size(), cap);
  std::vector<ElementMap> gens;
  PermGroup group = PermGroup::trivial(l->size());
  std::vector<Permutation> perms;
  for_each_isomorphism(l, l, [&](const ElementMap& m) {
    Permutation p = to_permutation(m);
    if (!group.contains(p)) {
      perms.push_back(p);
      gens.push_back(m);
      group = PermGroup(l->size(), perms);
    }
    return true;
  });
  return AutGroup(std::move(l), gens);
}

AutGroup x_subgroup(const AutGroup& aut, const ElementSet& normal_members) {
  const FiniteGroup& L = aut.base();
  std::vector<ElementMap> kept;
  for (auto& m : aut.elements()) {
    bool fixes_cosets = std::all_of(L.generators().begin(), L.generators().end(), [&](Elem l) {
      return normal_members.contains(L.mul(L.inv(l), m[l]));
    });
    if (fixes_cosets) kept.push_back(std::move(m));
  }
  return AutGroup(aut.base_ptr(), kept);
}

OrbitLabels orbits_on_tuples(std::span<const Permutation> automorphisms,
                             const std::vector<std::vector<Elem>>& tuples) {
  std::map<std::vector<Elem>, std::uint32_t> index;
  for (std::uint32_t k = 0; k < tuples.size(); ++k) index.emplace(tuples[k], k);
  UnionFind uf(tuples.size());
  std::vector<Elem> image;
  for (const auto& gamma : automorphisms)
    for (std::uint32_t k = 0; k < tuples.size(); ++k) {
      image.clear();
      for (Elem x : tuples[k]) image.push_back(gamma[x]);
      auto it = index.find(image);
      if (it == index.end())
        throw PreconditionError("orbits_on_tuples: tuple set is not closed under the action");
      uf.unite(k, it->second);
    }
  OrbitLabels result;
  result.label = uf.labels(result.count);
  return result;
}

}  // namespace rankgraph
