#include "rankgraph/subgroups.hpp"

#include <algorithm>
#include <bit>

namespace rankgraph {

std::size_t ElementSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
  ElementSet result(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) result.words_[i] = words_[i] & other.words_[i];
  return result;
}

std::vector<Elem> ElementSet::to_vector() const {
  std::vector<Elem> result;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      int bit = std::countr_zero(w);
      result.push_back(static_cast<Elem>(i * 64 + static_cast<std::size_t>(bit)));
      w &= w - 1;
    }
  }
  return result;
}

std::size_t ElementSet::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto w : words_) {
    h ^= static_cast<std::size_t>(w ^ (w >> 29));
    h *= 1099511628211ull;
  }
  return h;
}

SubgroupCache::SubgroupCache(GroupPtr group) : group_(std::move(group)) {
  ElementSet members(group_->size());
  members.insert(FiniteGroup::identity());
  intern(std::move(members), {FiniteGroup::identity()}, {});
  whole_ = generated(group_->generators());
  entries_[whole_].upper = 0;
}

SubgroupId SubgroupCache::intern(ElementSet members, std::vector<Elem> elements,
                                 std::vector<Elem> gens) {
  std::size_t h = members.hash();
  auto& bucket = by_hash_[h];
  for (SubgroupId id : bucket)
    if (entries_[id].members == members) return id;
  std::sort(elements.begin(), elements.end());
  auto id = static_cast<SubgroupId>(entries_.size());
  entries_.push_back(Entry{std::move(members), std::move(elements), std::move(gens)});
  bucket.push_back(id);
  return id;
}

SubgroupId SubgroupCache::extend(SubgroupId h, Elem g) {
  const FiniteGroup& G = *group_;
  ElementSet members = entries_[h].members;
  const std::vector<Elem> base = entries_[h].elements;
  std::vector<Elem> elements = base;
  std::vector<Elem> gens = entries_[h].gens;
  gens.push_back(g);
  // The closure is a union of right cosets H*y; it suffices that every
  // coset representative times every generator lands in the union.
  std::vector<Elem> reps{FiniteGroup::identity()};
  for (std::size_t r = 0; r < reps.size(); ++r) {
    for (Elem s : gens) {
      Elem y = G.mul(reps[r], s);
      if (members.contains(y)) continue;
      for (Elem x : base) {
        Elem z = G.mul(x, y);
        members.insert(z);
        elements.push_back(z);
      }
      reps.push_back(y);
    }
  }
  return intern(std::move(members), std::move(elements), std::move(gens));
}

SubgroupId SubgroupCache::join(SubgroupId h, Elem g) {
  if (entries_[h].members.contains(g)) return h;
  std::uint64_t key = (std::uint64_t{h} << 32) | g;
  auto it = join_memo_.find(key);
  if (it != join_memo_.end()) return it->second;
  SubgroupId result = extend(h, g);
  join_memo_.emplace(key, result);
  return result;
}

SubgroupId SubgroupCache::join_subgroups(SubgroupId a, SubgroupId b) {
  SubgroupId result = a;
  const std::vector<Elem> gens = entries_[b].gens;
  for (Elem g : gens) result = join(result, g);
  return result;
}

SubgroupId SubgroupCache::generated(std::span<const Elem> elems) {
  SubgroupId result = trivial();
  for (Elem g : elems) result = join(result, g);
  return result;
}

SubgroupId SubgroupCache::from_members(const ElementSet& members) {
  std::size_t h = members.hash();
  if (auto it = by_hash_.find(h); it != by_hash_.end())
    for (SubgroupId id : it->second)
      if (entries_[id].members == members) return id;
  SubgroupId result = trivial();
  for (Elem e : members.to_vector()) result = join(result, e);
  return result;
}

SubgroupId SubgroupCache::intersection(SubgroupId a, SubgroupId b) {
  return from_members(entries_[a].members.intersect(entries_[b].members));
}

SubgroupId SubgroupCache::normal_closure(std::span<const Elem> elems) {
  SubgroupId h = generated(elems);
  return normal_closure(h);
}

SubgroupId SubgroupCache::normal_closure(SubgroupId h) {
  const FiniteGroup& G = *group_;
  for (std::size_t k = 0; k < entries_[h].gens.size(); ++k) {
    for (Elem z : G.generators()) {
      Elem c = G.conj(entries_[h].gens[k], z);
      if (!contains(h, c)) h = join(h, c);
    }
  }
  return h;
}

SubgroupId SubgroupCache::derived(SubgroupId h) {
  const FiniteGroup& G = *group_;
  const std::vector<Elem> hg = entries_[h].gens;
  SubgroupId d = trivial();
  for (std::size_t a = 0; a < hg.size(); ++a)
    for (std::size_t b = a + 1; b < hg.size(); ++b) d = join(d, G.commutator(hg[a], hg[b]));
  // Normal closure inside H.
  for (std::size_t k = 0; k < entries_[d].gens.size(); ++k)
    for (Elem z : hg) {
      Elem c = G.conj(entries_[d].gens[k], z);
      if (!contains(d, c)) d = join(d, c);
    }
  return d;
}

bool SubgroupCache::is_normal(SubgroupId h) const noexcept {
  const FiniteGroup& G = *group_;
  for (Elem s : entries_[h].gens)
    for (Elem z : G.generators())
      if (!contains(h, G.conj(s, z))) return false;
  return true;
}

bool SubgroupCache::completion_at_most(SubgroupId h, unsigned budget) {
  if (entries_[h].upper <= budget) return true;
  if (entries_[h].lower > budget) return false;
  if (budget == 0) {
    entries_[h].lower = std::max(entries_[h].lower, 1u);
    return false;
  }
  const std::size_t n = group_->size();
  for (Elem g = 0; g < n; ++g) {
    if (contains(h, g)) continue;
    SubgroupId child = join(h, g);
    if (completion_at_most(child, budget - 1)) {
      unsigned candidate = entries_[child].upper + 1;
      if (candidate < entries_[h].upper) {
        entries_[h].upper = candidate;
        entries_[h].witness = g;
      }
      return true;
    }
  }
  entries_[h].lower = budget + 1;
  return false;
}

unsigned SubgroupCache::completion_rank(SubgroupId h) {
  unsigned b = 0;
  while (!completion_at_most(h, b)) ++b;
  // Every smaller budget failed, so the recorded upper bound is exact.
  return entries_[h].upper;
}

std::vector<Elem> SubgroupCache::completion_witness(SubgroupId h) {
  completion_rank(h);
  std::vector<Elem> result;
  while (h != whole_) {
    Elem g = entries_[h].witness;
    result.push_back(g);
    h = join(h, g);
  }
  return result;
}

}  // namespace rankgraph
