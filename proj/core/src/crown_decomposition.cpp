#include "rankgraph/crown_decomposition.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "rankgraph/crown_powers.hpp"
#include "rankgraph/group_structure.hpp"

namespace rankgraph {
namespace {

constexpr Elem off_factor = std::numeric_limits<Elem>::max();

SubgroupId centralizer_of_factor(SubgroupCache& cache, SubgroupId upper, SubgroupId lower) {
  const FiniteGroup& G = cache.group();
  ElementSet members(G.size());
  for (Elem g = 0; g < G.size(); ++g) {
    bool ok = true;
    for (Elem h : cache.generators(upper))
      if (!cache.contains(lower, G.commutator(h, g))) {
        ok = false;
        break;
      }
    if (ok) members.insert(g);
  }
  return cache.from_members(members);
}

ChiefFactor make_factor(SubgroupCache& cache, SubgroupId upper, SubgroupId lower) {
  const FiniteGroup& G = cache.group();
  ChiefFactor f;
  f.upper = upper;
  f.lower = lower;
  f.order = cache.order(upper) / cache.order(lower);
  f.abelian = true;
  for (Elem a : cache.generators(upper)) {
    for (Elem b : cache.generators(upper))
      if (!cache.contains(lower, G.commutator(a, b))) {
        f.abelian = false;
        break;
      }
    if (!f.abelian) break;
  }
  f.centralizer = centralizer_of_factor(cache, upper, lower);
  return f;
}

// An abelian factor is non-Frattini iff some maximal subgroup contains K but not H.
void mark_frattini(SubgroupCache& cache, std::vector<ChiefFactor>& series) {
  bool any_abelian = std::any_of(series.begin(), series.end(),
                                 [](const ChiefFactor& f) { return f.abelian; });
  if (!any_abelian) return;
  auto maximals = maximal_subgroups(cache);
  for (auto& f : series) {
    if (!f.abelian) continue;
    f.frattini = true;
    for (SubgroupId m : maximals)
      if (cache.is_subgroup_of(f.lower, m) && !cache.is_subgroup_of(f.upper, m)) {
        f.frattini = false;
        break;
      }
  }
}

GroupPtr quotient_group(SubgroupCache& cache, SubgroupId n, std::size_t cap) {
  return quotient_map(cache, n, cap).group;
}

// Normal subgroups of G containing `base` properly and minimal with that property.
std::vector<SubgroupId> minimal_over(SubgroupCache& cache, const std::vector<SubgroupId>& normals,
                                     SubgroupId base) {
  std::vector<SubgroupId> above;
  for (SubgroupId s : normals)
    if (s != base && cache.is_subgroup_of(base, s)) above.push_back(s);
  std::vector<SubgroupId> result;
  for (SubgroupId s : above) {
    bool minimal = true;
    for (SubgroupId t : above)
      if (t != s && cache.is_subgroup_of(t, s)) {
        minimal = false;
        break;
      }
    if (minimal) result.push_back(s);
  }
  return result;
}

std::string l_a_id(const ChiefFactor& f, const MonolithicGroup& l) {
  return std::string(f.abelian ? "L_A[abelian," : "L_A[") + "|A|=" + std::to_string(f.order) +
         ",|L|=" + std::to_string(l.group().size()) + "]";
}

}  // namespace

std::vector<ChiefFactor> chief_series(SubgroupCache& cache) {
  auto normals = normal_subgroups(cache).normals;
  std::vector<SubgroupId> chain{SubgroupCache::trivial()};
  while (chain.back() != cache.whole()) {
    SubgroupId bottom = chain.back();
    // Sorted by order, so the first proper normal overgroup is minimal over bottom.
    auto it = std::find_if(normals.begin(), normals.end(), [&](SubgroupId s) {
      return s != bottom && cache.is_subgroup_of(bottom, s);
    });
    if (it == normals.end()) throw TheoremViolation("normal lattice has no overgroup of a proper term");
    chain.push_back(*it);
  }
  std::vector<ChiefFactor> series;
  for (std::size_t i = chain.size() - 1; i > 0; --i)
    series.push_back(make_factor(cache, chain[i], chain[i - 1]));
  mark_frattini(cache, series);
  return series;
}

FactorAction factor_action(SubgroupCache& cache, const ChiefFactor& factor) {
  const FiniteGroup& G = cache.group();
  PermGroup hp = G.subgroup_perm_group(cache.generators(factor.upper));
  PermGroup kp = G.subgroup_perm_group(cache.generators(factor.lower));
  auto q = quotient(hp, kp);
  FactorAction out;
  out.group = FiniteGroup::from_perm_group(q.group);
  const FiniteGroup& F = *out.group;
  out.projection.assign(G.size(), off_factor);
  std::vector<Elem> preimage(F.size(), off_factor);
  for (Elem h : cache.elements(factor.upper)) {
    Elem f = *F.index_of(q.projection(G.perm(h)));
    out.projection[h] = f;
    if (preimage[f] == off_factor) preimage[f] = h;
  }
  for (Elem g : G.generators()) {
    std::vector<Elem> map(F.size());
    for (Elem f = 0; f < F.size(); ++f) map[f] = out.projection[G.conj(preimage[f], g)];
    out.action.push_back(std::move(map));
  }
  return out;
}

bool g_equivalent(SubgroupCache& cache, const ChiefFactor& a, const ChiefFactor& b) {
  if (a.upper == b.upper && a.lower == b.lower) return true;
  if (a.abelian != b.abelian || a.order != b.order) return false;
  if (a.abelian && a.centralizer != b.centralizer) return false;

  auto fa = factor_action(cache, a);
  auto fb = factor_action(cache, b);
  const FiniteGroup& B = *fb.group;

  // Inner automorphisms of B, recorded by their images of B's generators.
  std::set<std::vector<Elem>> inner;
  for (Elem z = 0; z < B.size(); ++z) {
    std::vector<Elem> images;
    for (Elem c : B.generators()) images.push_back(B.conj(c, z));
    inner.insert(std::move(images));
  }

  std::vector<std::vector<Elem>> rho_b_inv;
  for (const auto& map : fb.action) {
    std::vector<Elem> inv(map.size());
    for (Elem x = 0; x < map.size(); ++x) inv[map[x]] = x;
    rho_b_inv.push_back(std::move(inv));
  }

  bool found = false;
  for_each_isomorphism(fa.group, fb.group, [&](const ElementMap& phi) {
    ElementMap phi_inv(phi.size());
    for (Elem x = 0; x < phi.size(); ++x) phi_inv[phi[x]] = x;
    for (std::size_t g = 0; g < fa.action.size(); ++g) {
      // iota = phi rho_A(g) phi^-1 rho_B(g)^-1 must be inner.
      std::vector<Elem> images;
      for (Elem c : B.generators())
        images.push_back(phi[fa.action[g][phi_inv[rho_b_inv[g][c]]]]);
      if (!inner.count(images)) return true;
    }
    found = true;
    return false;
  });
  return found;
}

unsigned delta_G(SubgroupCache& cache, const std::vector<ChiefFactor>& series, std::size_t index) {
  unsigned count = 0;
  for (const auto& f : series)
    if (!f.frattini && g_equivalent(cache, f, series.at(index))) ++count;
  return count;
}

MonolithicPtr build_L_A(SubgroupCache& cache, const ChiefFactor& factor) {
  if (!factor.abelian)
    return std::make_shared<const MonolithicGroup>(
        quotient_group(cache, factor.centralizer, default_table_cap), true);

  auto fa = factor_action(cache, factor);
  const FiniteGroup& A = *fa.group;
  std::vector<Permutation> gens;
  for (Elem h : cache.generators(factor.upper)) {
    Elem shift = fa.projection[h];
    if (shift == FiniteGroup::identity()) continue;
    std::vector<Point> images(A.size());
    for (Elem x = 0; x < A.size(); ++x) images[x] = A.mul(x, shift);
    gens.emplace_back(std::move(images));
  }
  for (const auto& map : fa.action) {
    std::vector<Point> images(map.begin(), map.end());
    Permutation p(std::move(images));
    if (!p.is_identity()) gens.push_back(std::move(p));
  }
  return std::make_shared<const MonolithicGroup>(make_group(A.size(), std::move(gens)), false);
}

Crown crown_of(SubgroupCache& cache, const std::vector<ChiefFactor>& series, std::size_t index,
               std::size_t table_cap) {
  const ChiefFactor& a = series.at(index);
  if (a.frattini) throw PreconditionError("crown_of: Frattini chief factor");
  const FiniteGroup& G = cache.group();

  Crown crown;
  crown.factor = index;
  crown.delta = delta_G(cache, series, index);
  crown.l_a = build_L_A(cache, a);
  crown.l_a_id = l_a_id(a, *crown.l_a);
  const std::size_t l_order = crown.l_a->group().size();

  auto normals = normal_subgroups(cache).normals;
  SubgroupId r = cache.whole();
  for (SubgroupId n : normals) {
    if (cache.order(n) * l_order != G.size()) continue;
    auto over = minimal_over(cache, normals, n);
    if (over.size() != 1) continue;
    auto q = quotient_group(cache, n, table_cap);
    if (!find_isomorphism(q, crown.l_a->group_ptr())) continue;
    if (!g_equivalent(cache, make_factor(cache, over.front(), n), a)) continue;
    ++crown.candidates;
    r = cache.intersection(r, n);
  }
  if (crown.candidates == 0)
    throw TheoremViolation("crown_of: no normal subgroup with quotient L_A and equivalent socle");
  crown.r = r;

  SubgroupId i = r;
  for (SubgroupId s : minimal_over(cache, normals, r)) i = cache.join_subgroups(i, s);
  crown.i = i;

  for (SubgroupId u : normals) {
    if (u == SubgroupCache::trivial() || !cache.is_subgroup_of(u, i)) continue;
    if (cache.order(u) * cache.order(r) != cache.order(i)) continue;
    if (cache.intersection(u, r) != SubgroupCache::trivial()) continue;
    crown.complement = u;
    break;
  }

  const std::size_t quotient_order = G.size() / cache.order(r);
  if (quotient_order <= table_cap) {
    CrownPower power(crown.l_a, crown.delta);
    if (power.expected_order() != quotient_order) {
      crown.power_isomorphic = false;
    } else {
      auto lhs = quotient_group(cache, r, table_cap);
      auto rhs = FiniteGroup::from_perm_group(power.group(), {}, table_cap);
      crown.power_isomorphic = find_isomorphism(lhs, rhs).has_value();
    }
  }
  return crown;
}

std::vector<Crown> crowns(SubgroupCache& cache, std::size_t table_cap) {
  auto series = chief_series(cache);
  std::vector<Crown> result;
  std::vector<bool> covered(series.size(), false);
  for (std::size_t k = 0; k < series.size(); ++k) {
    if (series[k].frattini || covered[k]) continue;
    for (std::size_t j = k; j < series.size(); ++j)
      if (!series[j].frattini && g_equivalent(cache, series[j], series[k])) covered[j] = true;
    result.push_back(crown_of(cache, series, k, table_cap));
  }
  return result;
}

nlohmann::json crown_summary_json(SubgroupCache& cache, const std::string& group_id,
                                  const std::vector<Crown>& list) {
  nlohmann::json out;
  out["group"] = group_id;
  out["order"] = cache.group().size();
  auto& arr = out["crowns"] = nlohmann::json::array();
  for (const auto& c : list) {
    nlohmann::json j;
    j["factor"] = c.factor;
    j["delta"] = c.delta;
    j["R_order"] = cache.order(c.r);
    j["I_order"] = cache.order(c.i);
    j["L_A"] = c.l_a_id;
    j["L_A_order"] = c.l_a->group().size();
    j["complement_order"] =
        c.complement ? nlohmann::json(cache.order(*c.complement)) : nlohmann::json(nullptr);
    j["power_isomorphic"] =
        c.power_isomorphic ? nlohmann::json(*c.power_isomorphic) : nlohmann::json(nullptr);
    arr.push_back(std::move(j));
  }
  return out;
}

}  // namespace rankgraph
