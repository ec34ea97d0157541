#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "rankgraph/automorphisms.hpp"
#include "rankgraph/crown_powers.hpp"
#include "rankgraph/monolithic.hpp"

using namespace rankgraph;

namespace {

MonolithicPtr mono(const std::string& id, bool nonabelian = true) {
  return std::make_shared<const MonolithicGroup>(fixture::group(id), nonabelian);
}

AutGroup x_of(const MonolithicPtr& l) {
  return x_subgroup(automorphism_group(l->group_ptr()), l->socle_members());
}

Order power(std::size_t base, unsigned k) {
  Order r = 1;
  for (unsigned i = 0; i < k; ++i) r *= base;
  return r;
}

}  // namespace

TEST_CASE("monolithic groups expose socle and cosets") {
  auto a5 = mono("A5");
  CHECK(a5->socle().size() == 60);
  CHECK(a5->coset_count() == 1);
  auto s5 = mono("S5");
  CHECK(s5->socle().size() == 60);
  CHECK(s5->coset_count() == 2);
  CHECK_FALSE(s5->socle_abelian());
  CHECK_THROWS_AS(mono("S4"), PreconditionError);
  auto s4 = mono("S4", false);
  CHECK(s4->socle().size() == 4);
  CHECK(s4->socle_abelian());
  CHECK_THROWS_AS(mono("C2^2", false), PreconditionError);
}

TEST_CASE("crown-based power orders") {
  for (auto [id, quotient] : {std::pair{"A5", 1}, {"S5", 2}, {"PSL(2,7)", 1}, {"PGL(2,7)", 2}}) {
    auto l = mono(id);
    for (unsigned k = 1; k <= 4; ++k) {
      CAPTURE(std::string(id));
      CAPTURE(k);
      CrownPower p(l, k);
      CHECK(p.group().order() == power(l->socle().size(), k) * quotient);
      CHECK(p.group().order() == p.expected_order());
      CHECK(p.degree() == k * l->group().degree());
    }
  }
}

TEST_CASE("crown-based power of S5 squared matches the closure oracle") {
  auto l = mono("S5");
  CrownPower p(l, 2);
  std::vector<oracle::Perm> gens;
  for (const auto& g : p.group().generators()) gens.push_back(g.images());
  CHECK(oracle::order(10, gens) == 7200);
}

TEST_CASE("tuple embedding enforces the congruence") {
  auto l = mono("S5");
  CrownPower p(l, 3);
  const auto& L = l->group();
  Elem odd = *L.index_of(Permutation::parse(5, "(0 1)"));
  Elem even = *L.index_of(Permutation::parse(5, "(0 1 2)"));
  Elem odd2 = *L.index_of(Permutation::parse(5, "(0 1 2 3)"));
  CHECK(p.group().contains(p.embed(std::vector<Elem>{odd, odd2, odd})));
  CHECK_THROWS_AS(p.embed(std::vector<Elem>{odd, even, odd}), PreconditionError);
  CHECK(p.circ(odd, std::vector<Elem>{even, 0, even}) ==
        p.embed(std::vector<Elem>{L.mul(odd, even), odd, L.mul(odd, even)}));
  CHECK_THROWS_AS(p.circ(odd, std::vector<Elem>{odd, 0, 0}), PreconditionError);
}

TEST_CASE("delta of A5 for pairs equals the conjugation orbit count") {
  auto l = mono("A5");
  OrbitTable table(l, x_of(l), standard_generating_tuple(*l, 2));
  auto a5 = fixture::catalog().resolve("A5");
  auto s5 = fixture::catalog().resolve("S5");
  auto expected = oracle::generating_pair_orbits(5, fixture::raw_generators(a5),
                                                 fixture::raw_generators(s5));
  CHECK(expected == 19);
  CHECK(delta_Lt(table) == expected);
  CHECK(table.orbit_count() == expected);
  CHECK(table.omega_size() == oracle::generating_pair_count(5, fixture::raw_generators(a5)));
}

TEST_CASE("delta does not depend on the generating tuple") {
  for (const char* id : {"A5", "S5"}) {
    CAPTURE(std::string(id));
    auto l = mono(id);
    auto x = x_of(l);
    SubgroupCache cache(l->group_ptr());
    const auto& L = l->group();
    auto reference = OrbitTable(l, x, standard_generating_tuple(*l, 2)).orbit_count();
    std::mt19937_64 rng(17);
    int tried = 0;
    while (tried < 3) {
      std::vector<Elem> a{static_cast<Elem>(rng() % L.size()), static_cast<Elem>(rng() % L.size())};
      if (cache.generated(a) != cache.whole()) continue;
      CHECK(OrbitTable(l, x, a).orbit_count() == reference);
      ++tried;
    }
  }
}

TEST_CASE("delta of S5 for pairs matches a direct orbit count") {
  auto l = mono("S5");
  auto x = x_of(l);
  auto a = standard_generating_tuple(*l, 2);
  OrbitTable table(l, x, a);
  const auto& L = l->group();
  SubgroupCache cache(l->group_ptr());
  // Generating pairs in the cosets a_1 N x a_2 N, merged under conjugation.
  std::map<std::pair<Elem, Elem>, std::size_t> id;
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem n1 : l->socle())
    for (Elem n2 : l->socle()) {
      std::pair<Elem, Elem> p{L.mul(a[0], n1), L.mul(a[1], n2)};
      if (cache.generated(std::vector<Elem>{p.first, p.second}) != cache.whole()) continue;
      id[p] = pairs.size();
      pairs.push_back(p);
    }
  std::vector<std::size_t> parent(pairs.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (std::size_t k = 0; k < pairs.size(); ++k)
    for (Elem z = 0; z < L.size(); ++z) {
      auto it = id.find({L.conj(pairs[k].first, z), L.conj(pairs[k].second, z)});
      REQUIRE(it != id.end());
      parent[find(k)] = find(it->second);
    }
  std::size_t roots = 0;
  for (std::size_t k = 0; k < pairs.size(); ++k) roots += find(k) == k;
  CHECK(table.omega_size() == pairs.size());
  CHECK(table.orbit_count() == roots);
}

TEST_CASE("orbit labels are constant on X-orbits") {
  auto l = mono("A5");
  auto x = x_of(l);
  OrbitTable table(l, x, standard_generating_tuple(*l, 3));
  std::mt19937_64 rng(2);
  for (int k = 0; k < 500; ++k) {
    std::uint64_t idx = rng() % table.tuple_count();
    std::vector<Elem> entries;
    for (unsigned i = 0; i < 3; ++i) entries.push_back(table.entry(idx, i));
    for (const auto& g : table.x_generators()) {
      std::vector<Elem> moved;
      for (Elem e : entries) moved.push_back(g[e]);
      auto j = table.index_of_entries(moved);
      REQUIRE(j.has_value());
      CHECK(table.label(*j) == table.label(idx));
    }
  }
}

TEST_CASE("delta witness generates the crown-based power") {
  auto l = mono("A5");
  OrbitTable table(l, x_of(l), standard_generating_tuple(*l, 2));
  auto w = verify_delta(table);
  CHECK(w.k == 19);
  CHECK(w.generates);
  CHECK(w.order == power(60, 19));
  CHECK(w.expected_order == power(60, 19));
  REQUIRE(w.generators.size() == 2);
  CHECK(w.generators[0].degree() == 95);
}

TEST_CASE("orbit criterion agrees with direct generation") {
  for (const char* id : {"A5", "S5"}) {
    CAPTURE(std::string(id));
    auto l = mono(id);
    OrbitTable table(l, x_of(l), standard_generating_tuple(*l, 2));
    CrownPower p(l, 2);
    std::mt19937_64 rng(8);
    const auto& socle = l->socle();
    std::size_t yes = 0;
    for (int k = 0; k < 400; ++k) {
      std::vector<std::vector<Elem>> corr(2, std::vector<Elem>(2));
      for (auto& row : corr)
        for (auto& v : row) v = socle[rng() % socle.size()];
      bool via = generation_via_orbits(table, corr);
      yes += via;
      CHECK(via == generates_crown_power(p, table.a(), corr));
    }
    CHECK(yes > 0);
  }
}

TEST_CASE("index partitions form a lattice under meet") {
  IndexPartition a(std::vector<std::uint32_t>{0, 0, 1, 1, 2, 3});
  IndexPartition b(std::vector<std::uint32_t>{0, 1, 1, 2, 2, 3});
  auto m = a.meet(b);
  CHECK(m == b.meet(a));
  CHECK(m == m.meet(m));
  CHECK(a.refines(m));
  CHECK(b.refines(m));
  CHECK(m.block_count() == 2);
  CHECK(m.same_block(0, 4));
  CHECK_FALSE(m.same_block(0, 5));
  auto one = IndexPartition::single_block(6);
  CHECK(a.meet(one) == one);
  CHECK(a.meet(IndexPartition::singletons(6)) == a);
  IndexPartition c(std::vector<std::uint32_t>{5, 5, 2, 2, 9, 7});
  CHECK(c == a);
  std::mt19937_64 rng(6);
  for (int k = 0; k < 100; ++k) {
    std::vector<std::uint32_t> x(8), y(8), z(8);
    for (auto* v : {&x, &y, &z})
      for (auto& e : *v) e = static_cast<std::uint32_t>(rng() % 4);
    IndexPartition px(x), py(y), pz(z);
    CHECK(px.meet(py).meet(pz) == px.meet(py.meet(pz)));
    std::size_t covered = 0;
    for (const auto& block : px.blocks()) covered += block.size();
    CHECK(covered == 8);
  }
}

TEST_CASE("partition meet and bridges for A5 triples") {
  auto l = mono("A5");
  OrbitTable table(l, x_of(l), standard_generating_tuple(*l, 3));
  auto pc = partitions_pi(table);
  CHECK(pc.partitions.size() == 3);
  CHECK(pc.meet_is_single_block);
  auto bc = partition_bridges(table);
  CHECK(bc.pass);
  CHECK(bc.failures == 0);
}

TEST_CASE("delu fraction matches brute force for A5") {
  auto l = mono("A5");
  SubgroupCache cache(l->group_ptr());
  const auto& L = l->group();
  auto elems = fixture::raw_elements(L);
  auto a = standard_generating_tuple(*l, 2);
  for (Elem x : {Elem{0}, Elem{7}, Elem{31}}) {
    std::size_t count = 0;
    for (std::size_t u = 0; u < 60; ++u)
      for (std::size_t v = 0; v < 60; ++v)
        count += oracle::generates(5, {elems[x], elems[u], elems[v]}, 60);
    auto f = delu_fraction(cache, *l, x, a);
    CAPTURE(x);
    CHECK(f.total == 3600);
    CHECK(f.count == count);
    CHECK(f.meets_bound());
  }
  CHECK(DeluFraction{53, 90}.meets_bound());
  CHECK_FALSE(DeluFraction{52, 90}.meets_bound());
}

TEST_CASE("commuting corrections exist for every pair with commutator in the socle") {
  auto l = mono("S5");
  ClnSearch search(l);
  const auto& L = l->group();
  std::size_t tested = 0;
  for (Elem a = 0; a < L.size(); a += 3)
    for (Elem b = 0; b < L.size(); ++b) {
      if (!l->in_socle(L.commutator(a, b))) {
        CHECK_THROWS_AS(search.witness(a, b), PreconditionError);
        continue;
      }
      auto w = search.witness(a, b);
      REQUIRE(w.has_value());
      CHECK(l->in_socle(w->first));
      CHECK(l->in_socle(w->second));
      CHECK(L.commutator(L.mul(a, w->first), L.mul(b, w->second)) == FiniteGroup::identity());
      ++tested;
    }
  CHECK(tested > 0);
}

TEST_CASE("last entry of a generating triple has small relative rank") {
  auto l = mono("A5");
  SubgroupCache cache(l->group_ptr());
  auto b = standard_generating_tuple(*l, 3);
  auto r = unico_rank_check(cache, *l, b);
  CHECK(r.holds);
  CHECK(r.d_last <= 2);
  CHECK_THROWS_AS(unico_rank_check(cache, *l, std::vector<Elem>{b[0], b[1]}), PreconditionError);
}
