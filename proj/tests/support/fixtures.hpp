#ifndef RANKGRAPH_TESTS_FIXTURES_HPP
#define RANKGRAPH_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "oracles.hpp"
#include "rankgraph/catalog.hpp"
#include "rankgraph/finite_group.hpp"

namespace fixture {

inline const rankgraph::Catalog& catalog() {
  static const rankgraph::Catalog c = rankgraph::Catalog::with_default_file();
  return c;
}

inline rankgraph::GroupPtr group(const std::string& id) {
  return rankgraph::to_group(catalog().resolve(id));
}

inline oracle::Perm raw(const rankgraph::Permutation& p) { return p.images(); }

inline std::vector<oracle::Perm> raw_generators(const rankgraph::CatalogEntry& e) {
  std::vector<oracle::Perm> out;
  for (const auto& g : e.generators) out.push_back(g);
  return out;
}

inline std::vector<oracle::Perm> raw_elements(const rankgraph::FiniteGroup& g) {
  std::vector<oracle::Perm> out;
  for (const auto& p : g.elements()) out.push_back(p.images());
  return out;
}

}  // namespace fixture

#endif
