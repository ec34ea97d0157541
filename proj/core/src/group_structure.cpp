#include "rankgraph/group_structure.hpp"

#include <algorithm>
#include <numeric>

namespace rankgraph {

namespace {

void sort_subgroups(SubgroupCache& cache, std::vector<SubgroupId>& ids) {
  std::sort(ids.begin(), ids.end(), [&](SubgroupId a, SubgroupId b) {
    if (cache.order(a) != cache.order(b)) return cache.order(a) < cache.order(b);
    return cache.elements(a) < cache.elements(b);
  });
}

bool is_prime_power(std::uint32_t n) {
  if (n < 2) return false;
  std::uint32_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

NormalLattice normal_subgroups(SubgroupCache& cache, std::size_t cap) {
  const FiniteGroup& G = cache.group();
  if (G.size() > cap) throw CapExceeded("normal subgroup enumeration", G.size(), cap);

  std::vector<SubgroupId> class_closures;
  for (const auto& cls : G.conjugacy_classes()) {
    if (cls.front() == FiniteGroup::identity()) continue;
    SubgroupId c = cache.normal_closure(std::span<const Elem>(&cls.front(), 1));
    if (std::find(class_closures.begin(), class_closures.end(), c) == class_closures.end())
      class_closures.push_back(c);
  }

  std::vector<SubgroupId> normals{SubgroupCache::trivial()};
  for (std::size_t k = 0; k < normals.size(); ++k)
    for (SubgroupId c : class_closures) {
      SubgroupId j = cache.join_subgroups(normals[k], c);
      if (std::find(normals.begin(), normals.end(), j) == normals.end()) normals.push_back(j);
    }
  sort_subgroups(cache, normals);

  NormalLattice lattice;
  lattice.normals = normals;
  for (SubgroupId n : normals) {
    if (n == SubgroupCache::trivial()) continue;
    bool minimal = true;
    for (SubgroupId m : normals)
      if (m != SubgroupCache::trivial() && m != n && cache.is_subgroup_of(m, n)) {
        minimal = false;
        break;
      }
    if (minimal) lattice.minimal_normals.push_back(n);
  }
  return lattice;
}

SubgroupId socle(SubgroupCache& cache) {
  auto lattice = normal_subgroups(cache);
  SubgroupId s = SubgroupCache::trivial();
  for (SubgroupId m : lattice.minimal_normals) s = cache.join_subgroups(s, m);
  return s;
}

std::vector<SubgroupId> all_subgroups(SubgroupCache& cache, std::size_t cap) {
  const FiniteGroup& G = cache.group();
  if (G.size() > cap) throw CapExceeded("subgroup lattice", G.size(), cap);

  std::vector<Elem> cyclic_gens;
  std::vector<SubgroupId> cyclic_ids;
  for (Elem g = 0; g < G.size(); ++g) {
    if (!is_prime_power(G.element_order(g))) continue;
    SubgroupId c = cache.cyclic(g);
    if (std::find(cyclic_ids.begin(), cyclic_ids.end(), c) != cyclic_ids.end()) continue;
    cyclic_ids.push_back(c);
    cyclic_gens.push_back(g);
  }

  std::vector<SubgroupId> found{SubgroupCache::trivial()};
  std::vector<bool> seen(cache.count() + 1, false);
  auto mark = [&](SubgroupId id) {
    if (id >= seen.size()) seen.resize(id * 2 + 2, false);
    bool was = seen[id];
    seen[id] = true;
    return !was;
  };
  mark(SubgroupCache::trivial());
  for (std::size_t k = 0; k < found.size(); ++k)
    for (Elem g : cyclic_gens) {
      SubgroupId j = cache.join(found[k], g);
      if (mark(j)) found.push_back(j);
    }
  sort_subgroups(cache, found);
  return found;
}

std::vector<SubgroupId> maximal_subgroups(SubgroupCache& cache, std::size_t cap) {
  auto subgroups = all_subgroups(cache, cap);
  std::vector<SubgroupId> result;
  for (SubgroupId h : subgroups) {
    if (h == cache.whole()) continue;
    bool maximal = true;
    for (SubgroupId k : subgroups) {
      if (k == cache.whole() || k == h) continue;
      if (cache.order(k) <= cache.order(h) || cache.order(k) % cache.order(h) != 0) continue;
      if (cache.is_subgroup_of(h, k)) {
        maximal = false;
        break;
      }
    }
    if (maximal) result.push_back(h);
  }
  return result;
}

SubgroupId frattini(SubgroupCache& cache, std::size_t cap) {
  auto maximals = maximal_subgroups(cache, cap);
  SubgroupId phi = cache.whole();
  for (SubgroupId m : maximals) phi = cache.intersection(phi, m);
  return maximals.empty() ? SubgroupCache::trivial() : phi;
}

bool is_soluble(SubgroupCache& cache, SubgroupId h) {
  while (h != SubgroupCache::trivial()) {
    SubgroupId d = cache.derived(h);
    if (d == h) return false;
    h = d;
  }
  return true;
}

RankCertificate min_rank(SubgroupCache& cache) {
  const FiniteGroup& G = cache.group();
  if (cache.whole() == SubgroupCache::trivial()) return {};
  for (unsigned b = 1;; ++b) {
    for (const auto& cls : G.conjugacy_classes()) {
      Elem rep = cls.front();
      if (rep == FiniteGroup::identity()) continue;
      SubgroupId c = cache.cyclic(rep);
      if (!cache.completion_at_most(c, b - 1)) continue;
      RankCertificate cert;
      cert.d = b;
      cert.witness.push_back(rep);
      for (Elem g : cache.completion_witness(c)) cert.witness.push_back(g);
      return cert;
    }
  }
}

unsigned d_X(SubgroupCache& cache, std::span<const Elem> x) {
  return cache.completion_rank(cache.generated(x));
}

std::vector<Elem> gaschutz_lift(SubgroupCache& cache, SubgroupId m, std::span<const Elem> x,
                                std::span<const Elem> g) {
  if (!cache.is_normal(m)) throw PreconditionError("gaschutz_lift: M is not normal");
  SubgroupId with_x = cache.generated(x);
  SubgroupId full = cache.join_subgroups(cache.generated(g), cache.join_subgroups(with_x, m));
  if (full != cache.whole())
    throw PreconditionError("gaschutz_lift: <g, X, M> is not the whole group");
  if (g.size() < cache.completion_rank(with_x))
    throw PreconditionError("gaschutz_lift: r < d_X(G)");

  const FiniteGroup& G = cache.group();
  const std::vector<Elem> m_elems = cache.elements(m);
  const std::size_t r = g.size();
  std::vector<Elem> corrections(r, FiniteGroup::identity());
  std::vector<SubgroupId> partial(r + 1);
  partial[0] = with_x;

  // Depth-first over M^r with the identity tried first at every position.
  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == r) return partial[r] == cache.whole();
    for (Elem n : m_elems) {
      corrections[depth] = n;
      partial[depth + 1] = cache.join(partial[depth], G.mul(g[depth], n));
      if (self(self, depth + 1)) return true;
    }
    return false;
  };
  if (!search(search, 0)) throw TheoremViolation("gaschutz_lift: no lift in M^r");
  return corrections;
}

QuotientMap quotient_map(SubgroupCache& cache, SubgroupId n, std::size_t cap) {
  const FiniteGroup& G = cache.group();
  if (!cache.is_normal(n)) throw PreconditionError("quotient_map: subgroup is not normal");
  QuotientMap out;
  if (n == SubgroupCache::trivial()) {
    out.group = cache.group_ptr();
    out.image.resize(G.size());
    std::iota(out.image.begin(), out.image.end(), Elem{0});
    return out;
  }
  auto q = quotient(G.perm_group(), G.subgroup_perm_group(cache.generators(n)));
  out.group = FiniteGroup::from_perm_group(q.group, {}, cap);
  out.image.resize(G.size());
  for (Elem g = 0; g < G.size(); ++g) out.image[g] = *out.group->index_of(q.projection(G.perm(g)));
  return out;
}

}  // namespace rankgraph
