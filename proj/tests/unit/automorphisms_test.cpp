#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "rankgraph/automorphisms.hpp"
#include "rankgraph/group_structure.hpp"
#include "rankgraph/monolithic.hpp"
#include "rankgraph/subgroups.hpp"

using namespace rankgraph;

TEST_CASE("automorphism group orders match brute force") {
  for (const char* id : {"S3", "C2^2", "D8", "Q8", "A4", "S4", "C3^2", "D10", "A5"}) {
    CAPTURE(std::string(id));
    auto e = fixture::catalog().resolve(id);
    auto g = to_group(e);
    auto aut = automorphism_group(g);
    // Brute force on a two-element generating set from the library.
    SubgroupCache cache(g);
    std::vector<oracle::Perm> gens;
    for (Elem x : g->generators()) gens.push_back(g->perm(x).images());
    CHECK(aut.order() == oracle::automorphism_count(e.degree, gens));
  }
}

TEST_CASE("every enumerated automorphism preserves the table") {
  for (const char* id : {"S4", "Q8", "A5", "SL(2,3)"}) {
    CAPTURE(std::string(id));
    auto g = fixture::group(id);
    auto aut = automorphism_group(g);
    for (const auto& m : aut.elements()) CHECK(is_automorphism(*g, m));
  }
}

TEST_CASE("inner automorphisms lie in Aut and have index matching the centre") {
  for (const char* id : {"S4", "D8", "Q8", "A5", "SL(2,3)", "C3xS3"}) {
    CAPTURE(std::string(id));
    auto g = fixture::group(id);
    auto aut = automorphism_group(g);
    std::size_t centre = 0;
    for (Elem z = 0; z < g->size(); ++z) {
      bool central = true;
      for (Elem s : g->generators()) central &= g->mul(z, s) == g->mul(s, z);
      centre += central;
      CHECK(aut.contains(inner_automorphism(*g, z)));
    }
    CHECK(aut.inner().order() * centre == g->size());
    CHECK(aut.order() % aut.inner().order() == 0);
  }
}

TEST_CASE("known automorphism group orders") {
  CHECK(automorphism_group(fixture::group("A5")).order() == 120);
  CHECK(automorphism_group(fixture::group("S5")).order() == 120);
  CHECK(automorphism_group(fixture::group("PSL(2,7)")).order() == 336);
  CHECK(automorphism_group(fixture::group("C2^3")).order() == 168);
  CHECK(automorphism_group(fixture::group("F20")).order() == 20);
}

TEST_CASE("isomorphism search distinguishes groups of equal order") {
  CHECK(find_isomorphism(fixture::group("D8"), fixture::group("Q8")) == std::nullopt);
  CHECK(find_isomorphism(fixture::group("S4"), fixture::group("SL(2,3)")) == std::nullopt);
  CHECK(find_isomorphism(fixture::group("C2xC4"), fixture::group("C2^3")) == std::nullopt);
  auto iso = find_isomorphism(fixture::group("PSL(2,5)"), fixture::group("A5"));
  REQUIRE(iso.has_value());
  auto a = fixture::group("PSL(2,5)"), b = fixture::group("A5");
  for (Elem x = 0; x < a->size(); ++x)
    for (Elem y = 0; y < a->size(); y += 7) CHECK((*iso)[a->mul(x, y)] == b->mul((*iso)[x], (*iso)[y]));
  CHECK(find_isomorphism(fixture::group("PSL(2,4)"), fixture::group("A5")).has_value());
  CHECK(find_isomorphism(fixture::group("PGL(2,5)"), fixture::group("S5")).has_value());
}

TEST_CASE("automorphism cap is enforced") {
  CHECK_THROWS_AS(automorphism_group(fixture::group("A5"), 10), CapExceeded);
}

TEST_CASE("X subgroup fixes every coset of the socle") {
  auto l = std::make_shared<const MonolithicGroup>(fixture::group("S5"));
  auto aut = automorphism_group(l->group_ptr());
  auto x = x_subgroup(aut, l->socle_members());
  // Aut(S5) = Inn(S5), and conjugation preserves the sign.
  CHECK(x.order() == 120);
  for (const auto& m : x.elements())
    for (Elem e = 0; e < l->group().size(); ++e) CHECK(l->coset_of(m[e]) == l->coset_of(e));
  auto a5 = std::make_shared<const MonolithicGroup>(fixture::group("A5"));
  CHECK(x_subgroup(automorphism_group(a5->group_ptr()), a5->socle_members()).order() == 120);
  // In D8 over its centre the outer automorphisms swap two reflection cosets,
  // so only the inner ones survive.
  auto d8 = fixture::group("D8");
  SubgroupCache cache(d8);
  auto centre = socle(cache);
  REQUIRE(cache.order(centre) == 2);
  CHECK(x_subgroup(automorphism_group(d8), cache.members(centre)).order() == 4);
}

TEST_CASE("orbit labels do not depend on the chosen generators") {
  auto g = fixture::group("A5");
  auto aut = automorphism_group(g);
  std::vector<std::vector<Elem>> tuples;
  for (Elem a = 0; a < g->size(); ++a)
    for (Elem b = 0; b < g->size(); ++b) tuples.push_back({a, b});
  auto base = orbits_on_tuples(aut.generators(), tuples);
  std::vector<Permutation> other(aut.generators().rbegin(), aut.generators().rend());
  other.push_back(other.front() * other.back());
  std::mt19937_64 rng(1);
  std::shuffle(other.begin(), other.end(), rng);
  auto again = orbits_on_tuples(other, tuples);
  CHECK(again.label == base.label);
  CHECK(again.count == base.count);
  // Generating pairs are permuted freely by Aut(A5) = S5: 2280 / 120 orbits.
  std::set<std::uint32_t> generating;
  SubgroupCache cache(g);
  for (std::size_t k = 0; k < tuples.size(); ++k)
    if (cache.generated(tuples[k]) == cache.whole()) generating.insert(base.label[k]);
  CHECK(generating.size() == 19);
}
