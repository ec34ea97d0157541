// Brute-force reference implementations for tests. Deliberately naive: they
// work on raw image vectors and std::set closures, sharing no code with core.
#ifndef RANKGRAPH_TESTS_ORACLES_HPP
#define RANKGRAPH_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Perm = std::vector<std::uint32_t>;

inline Perm identity(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

// Left-to-right: apply p first, then q.
inline Perm mul(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

inline Perm inv(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint32_t>(i);
  return r;
}

inline Perm conj(const Perm& a, const Perm& z) { return mul(mul(inv(z), a), z); }

// Every element reachable from the identity by right multiplication.
inline std::set<Perm> closure(std::size_t n, const std::vector<Perm>& gens) {
  std::set<Perm> seen{identity(n)};
  std::queue<Perm> todo;
  todo.push(identity(n));
  while (!todo.empty()) {
    Perm p = todo.front();
    todo.pop();
    for (const auto& g : gens) {
      Perm q = mul(p, g);
      if (seen.insert(q).second) todo.push(q);
    }
  }
  return seen;
}

inline std::size_t order(std::size_t n, const std::vector<Perm>& gens) {
  return closure(n, gens).size();
}

inline bool generates(std::size_t n, const std::vector<Perm>& gens, std::size_t group_order) {
  return order(n, gens) == group_order;
}

// Rank-graph adjacency: some d-subset containing x != y generates G.
// Only d in {2, 3} is supported.
inline bool rank_edge(const std::vector<Perm>& elems, std::size_t x, std::size_t y, unsigned d) {
  const std::size_t n = elems[0].size(), total = elems.size();
  if (x == y) return false;
  if (d == 2) return generates(n, {elems[x], elems[y]}, total);
  for (std::size_t z = 0; z < total; ++z) {
    if (z == x || z == y) continue;
    if (generates(n, {elems[x], elems[y], elems[z]}, total)) return true;
  }
  return false;
}

// All-pairs shortest paths on a dense adjacency matrix. Returns the maximum
// finite distance, or UINT32_MAX when the graph is disconnected.
inline std::uint32_t floyd_warshall_diameter(const std::vector<std::vector<bool>>& adj) {
  constexpr std::uint32_t inf = std::numeric_limits<std::uint32_t>::max() / 2;
  const std::size_t n = adj.size();
  std::vector<std::vector<std::uint32_t>> dist(n, std::vector<std::uint32_t>(n, inf));
  for (std::size_t i = 0; i < n; ++i) {
    dist[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (adj[i][j]) dist[i][j] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
  std::uint32_t best = 0;
  for (const auto& row : dist)
    for (auto v : row) {
      if (v >= inf) return std::numeric_limits<std::uint32_t>::max();
      best = std::max(best, v);
    }
  return best;
}

// Normal subgroups as sets of elements: close {1} under joining normal
// closures of single elements until nothing new appears.
inline std::set<std::set<Perm>> normal_subgroups(const std::set<Perm>& group) {
  const std::size_t n = group.begin()->size();
  auto normal_closure = [&](std::vector<Perm> gens) {
    std::set<Perm> conjugates;
    for (const auto& g : gens)
      for (const auto& z : group) conjugates.insert(conj(g, z));
    return closure(n, std::vector<Perm>(conjugates.begin(), conjugates.end()));
  };
  std::set<std::set<Perm>> found{{identity(n)}};
  std::vector<std::set<Perm>> todo{{identity(n)}};
  while (!todo.empty()) {
    auto h = todo.back();
    todo.pop_back();
    for (const auto& g : group) {
      if (h.count(g)) continue;
      std::vector<Perm> gens(h.begin(), h.end());
      gens.push_back(g);
      auto k = normal_closure(gens);
      if (found.insert(k).second) todo.push_back(k);
    }
  }
  return found;
}

// |Aut(G)| for G generated by gens: count generator images that extend to a
// bijective homomorphism. Expands words over the generators by BFS.
inline std::size_t automorphism_count(std::size_t n, const std::vector<Perm>& gens) {
  auto elems = closure(n, gens);
  std::vector<Perm> list(elems.begin(), elems.end());
  std::map<Perm, std::size_t> index;
  for (std::size_t i = 0; i < list.size(); ++i) index[list[i]] = i;
  const std::size_t k = gens.size();
  std::size_t count = 0;
  std::vector<std::size_t> choice(k, 0);
  while (true) {
    // Try the assignment gens[i] -> list[choice[i]].
    std::map<Perm, Perm> image{{identity(n), identity(n)}};
    std::queue<Perm> todo;
    todo.push(identity(n));
    bool ok = true;
    while (!todo.empty() && ok) {
      Perm p = todo.front();
      todo.pop();
      for (std::size_t i = 0; i < k; ++i) {
        Perm q = mul(p, gens[i]);
        Perm v = mul(image[p], list[choice[i]]);
        auto it = image.find(q);
        if (it == image.end()) {
          image.emplace(q, v);
          todo.push(q);
        } else if (it->second != v) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      std::set<Perm> targets;
      for (auto& [a, b] : image) targets.insert(b);
      if (targets.size() == list.size()) ++count;
    }
    std::size_t pos = 0;
    while (pos < k && ++choice[pos] == list.size()) choice[pos++] = 0;
    if (pos == k) break;
  }
  return count;
}

// Orbit count of generating t-tuples of `sub` under simultaneous conjugation
// by elements of `over` (union-find over tuple indices). Only t = 2.
inline std::size_t generating_pair_orbits(std::size_t n, const std::vector<Perm>& sub_gens,
                                          const std::vector<Perm>& over_gens) {
  auto sub = closure(n, sub_gens);
  auto over = closure(n, over_gens);
  std::vector<Perm> elems(sub.begin(), sub.end());
  std::map<Perm, std::size_t> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = i;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_id;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b)
      if (generates(n, {elems[a], elems[b]}, elems.size())) {
        pair_id[{a, b}] = pairs.size();
        pairs.emplace_back(a, b);
      }
  std::vector<std::size_t> parent(pairs.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (const auto& z : over) {
      auto a = index.at(conj(elems[pairs[p].first], z));
      auto b = index.at(conj(elems[pairs[p].second], z));
      parent[find(p)] = find(pair_id.at({a, b}));
    }
  std::size_t roots = 0;
  for (std::size_t p = 0; p < pairs.size(); ++p) roots += find(p) == p;
  return roots;
}

inline std::size_t generating_pair_count(std::size_t n, const std::vector<Perm>& gens) {
  auto g = closure(n, gens);
  std::vector<Perm> elems(g.begin(), g.end());
  std::size_t count = 0;
  for (const auto& a : elems)
    for (const auto& b : elems) count += generates(n, {a, b}, elems.size());
  return count;
}

}  // namespace oracle

#endif
