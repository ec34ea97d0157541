#include "rankgraph/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_set>

namespace rankgraph {

namespace {

// Smallest group containing `elems` built by adding only elements that are
// not yet members; keeps generator lists short.
PermGroup subgroup_from_elements(std::size_t degree, const std::vector<Permutation>& elems) {
  std::vector<Permutation> gens;
  PermGroup current = PermGroup::trivial(degree);
  for (const auto& e : elems) {
    if (current.contains(e)) continue;
    gens.push_back(e);
    current = PermGroup(degree, gens);
  }
  return current;
}

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw PreconditionError("generator degree mismatch");
  build_chain();
}

std::uint64_t PermGroup::order_u64() const {
  if (order_ > std::numeric_limits<std::uint64_t>::max())
    throw CapExceeded("group order in 64 bits", std::numeric_limits<std::size_t>::max(),
                      std::numeric_limits<std::size_t>::max());
  return static_cast<std::uint64_t>(order_);
}

void PermGroup::recompute_orbit(Level& level) const {
  level.orbit_index.assign(degree_, -1);
  level.orbit.clear();
  level.transversal.clear();
  level.transversal_inverse.clear();
  level.orbit.push_back(level.base_point);
  level.orbit_index[level.base_point] = 0;
  level.transversal.push_back(Permutation::identity(degree_));
  level.transversal_inverse.push_back(Permutation::identity(degree_));
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    for (const auto& s : level.generators) {
      Point img = s[level.orbit[k]];
      if (level.orbit_index[img] >= 0) continue;
      level.orbit_index[img] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(img);
      Permutation u = level.transversal[k] * s;
      level.transversal_inverse.push_back(u.inverse());
      level.transversal.push_back(std::move(u));
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::strip(Permutation g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level& level = levels_[l];
    std::int32_t idx = level.orbit_index[g[level.base_point]];
    if (idx < 0) return {std::move(g), l};
    g = g * level.transversal_inverse[static_cast<std::size_t>(idx)];
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::build_chain() {
  levels_.clear();
  std::vector<Permutation> gens;
  for (const auto& g : generators_)
    if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end())
      gens.push_back(g);
  if (gens.empty()) {
    order_ = 1;
    return;
  }

  auto fixes_base = [&](const Permutation& g, std::size_t upto) {
    for (std::size_t l = 0; l < upto; ++l)
      if (g[levels_[l].base_point] != levels_[l].base_point) return false;
    return true;
  };

  for (const auto& g : gens) {
    if (fixes_base(g, levels_.size())) {
      Level level;
      level.base_point = *g.smallest_moved_point();
      levels_.push_back(std::move(level));
    }
  }
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    for (const auto& g : gens)
      if (fixes_base(g, l)) levels_[l].generators.push_back(g);
    recompute_orbit(levels_[l]);
  }

  // Holt's SCHREIERSIMS: verify Schreier generators level by level from the
  // bottom, dropping back down whenever a new strong generator appears.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    const auto li = static_cast<std::size_t>(i);
    bool dropped = false;
    std::size_t new_level = 0;
    Permutation new_generator;
    for (std::size_t oi = 0; oi < levels_[li].orbit.size() && !dropped; ++oi) {
      for (std::size_t si = 0; si < levels_[li].generators.size(); ++si) {
        const Level& level = levels_[li];
        const Permutation& x = level.generators[si];
        Point image = x[level.orbit[oi]];
        auto target = static_cast<std::size_t>(level.orbit_index[image]);
        Permutation h = level.transversal[oi] * x * level.transversal_inverse[target];
        if (h.is_identity()) continue;
        auto [y, j] = strip(std::move(h), li + 1);
        if (j < levels_.size()) {
          dropped = true;
        } else if (!y.is_identity()) {
          Level fresh;
          fresh.base_point = *y.smallest_moved_point();
          levels_.push_back(std::move(fresh));
          dropped = true;
        }
        if (dropped) {
          new_level = j;
          new_generator = std::move(y);
          break;
        }
      }
    }
    if (dropped) {
      for (std::size_t l = li + 1; l <= new_level; ++l) {
        levels_[l].generators.push_back(new_generator);
        recompute_orbit(levels_[l]);
      }
      i = static_cast<std::ptrdiff_t>(new_level);
    } else {
      --i;
    }
  }

  order_ = 1;
  for (const auto& level : levels_) order_ *= level.orbit.size();
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw PreconditionError("membership test with wrong degree");
  auto [residue, level] = strip(p, 0);
  return level == levels_.size() && residue.is_identity();
}

bool PermGroup::contains_group(const PermGroup& other) const {
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> result;
  for (const auto& level : levels_) result.push_back(level.base_point);
  return result;
}

std::vector<std::size_t> PermGroup::fundamental_orbit_sizes() const {
  std::vector<std::size_t> result;
  for (const auto& level : levels_) result.push_back(level.orbit.size());
  return result;
}

std::vector<Permutation> PermGroup::strong_generators() const {
  std::vector<Permutation> result;
  for (const auto& level : levels_)
    for (const auto& g : level.generators)
      if (std::find(result.begin(), result.end(), g) == result.end()) result.push_back(g);
  return result;
}

std::vector<Permutation> PermGroup::elements(std::size_t cap) const {
  if (order_ > cap)
    throw CapExceeded("element enumeration",
                      order_ > std::numeric_limits<std::size_t>::max()
                          ? std::numeric_limits<std::size_t>::max()
                          : static_cast<std::size_t>(order_),
                      cap);
  std::vector<Permutation> result{Permutation::identity(degree_)};
  // g = v_{k-1} * ... * v_0 with v_l a transversal element of level l.
  for (std::size_t l = levels_.size(); l-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(result.size() * levels_[l].transversal.size());
    for (const auto& p : result)
      for (const auto& u : levels_[l].transversal) next.push_back(p * u);
    result = std::move(next);
  }
  std::sort(result.begin(), result.end());
  return result;
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  Permutation result = Permutation::identity(degree_);
  for (std::size_t l = levels_.size(); l-- > 0;) {
    std::uniform_int_distribution<std::size_t> pick(0, levels_[l].transversal.size() - 1);
    result = result * levels_[l].transversal[pick(rng)];
  }
  return result;
}

bool generates(const PermGroup& g, std::span<const Permutation> elems) {
  for (const auto& e : elems)
    if (!g.contains(e)) throw PreconditionError("element outside the group");
  PermGroup h(g.degree(), std::vector<Permutation>(elems.begin(), elems.end()));
  return h.order() == g.order();
}

std::vector<std::vector<Permutation>> conjugacy_classes(const PermGroup& g, std::size_t cap) {
  auto elems = g.elements(cap);
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
  std::vector<bool> assigned(elems.size(), false);
  std::vector<std::vector<Permutation>> classes;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (assigned[i]) continue;
    std::vector<Permutation> cls{elems[i]};
    assigned[i] = true;
    for (std::size_t k = 0; k < cls.size(); ++k) {
      for (const auto& z : g.generators()) {
        Permutation c = cls[k].conjugate_by(z);
        std::size_t j = index.at(c);
        if (!assigned[j]) {
          assigned[j] = true;
          cls.push_back(std::move(c));
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

PermGroup centralizer(const PermGroup& g, const Permutation& p, std::size_t cap) {
  if (!g.contains(p)) throw PreconditionError("centralizer of an element outside the group");
  std::vector<Permutation> commuting;
  for (auto& z : g.elements(cap))
    if (z * p == p * z) commuting.push_back(std::move(z));
  return subgroup_from_elements(g.degree(), commuting);
}

PermGroup normal_closure(const PermGroup& g, std::span<const Permutation> s) {
  for (const auto& x : s)
    if (!g.contains(x)) throw PreconditionError("normal closure of elements outside the group");
  std::vector<Permutation> gens;
  for (const auto& x : s)
    if (!x.is_identity()) gens.push_back(x);
  PermGroup h(g.degree(), gens);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      for (const auto& z : g.generators()) {
        Permutation c = gens[k].conjugate_by(z);
        if (h.contains(c)) continue;
        gens.push_back(std::move(c));
        h = PermGroup(g.degree(), gens);
        changed = true;
      }
    }
  }
  return h;
}

bool is_normal(const PermGroup& g, const PermGroup& h) {
  for (const auto& x : h.generators())
    for (const auto& z : g.generators())
      if (!h.contains(x.conjugate_by(z))) return false;
  return true;
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Permutation> commutators;
  const auto& gens = g.generators();
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      Permutation c = commutator(gens[a], gens[b]);
      if (!c.is_identity()) commutators.push_back(std::move(c));
    }
  return normal_closure(g, commutators);
}

bool is_soluble(const PermGroup& g) {
  PermGroup current = g;
  while (!current.is_trivial()) {
    PermGroup next = derived_subgroup(current);
    if (next.order() == current.order()) return false;
    current = std::move(next);
  }
  return true;
}

Homomorphism::Homomorphism(PermGroup source, PermGroup target,
                           std::vector<Permutation> generator_images, std::size_t cap)
    : source_(std::move(source)),
      target_(std::move(target)),
      generator_images_(std::move(generator_images)) {
  const auto& gens = source_.generators();
  if (gens.size() != generator_images_.size())
    throw PreconditionError("one image per source generator is required");
  for (const auto& img : generator_images_)
    if (!target_.contains(img)) throw PreconditionError("generator image outside the target");
  if (source_.order() > cap)
    throw CapExceeded("homomorphism table", static_cast<std::size_t>(source_.order()), cap);

  std::deque<Permutation> queue;
  Permutation id = Permutation::identity(source_.degree());
  table_.emplace(id, Permutation::identity(target_.degree()));
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    const Permutation fx = table_.at(x);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Permutation y = x * gens[k];
      Permutation fy = fx * generator_images_[k];
      auto it = table_.find(y);
      if (it == table_.end()) {
        table_.emplace(y, std::move(fy));
        queue.push_back(std::move(y));
      } else if (it->second != fy) {
        throw PreconditionError("generator images do not extend to a homomorphism");
      }
    }
  }
}

const Permutation& Homomorphism::operator()(const Permutation& p) const {
  auto it = table_.find(p);
  if (it == table_.end()) throw PreconditionError("element outside the homomorphism source");
  return it->second;
}

PermGroup Homomorphism::kernel() const {
  std::vector<Permutation> in_kernel;
  for (const auto& [x, fx] : table_)
    if (fx.is_identity()) in_kernel.push_back(x);
  std::sort(in_kernel.begin(), in_kernel.end());
  return subgroup_from_elements(source_.degree(), in_kernel);
}

Quotient quotient(const PermGroup& g, const PermGroup& n, std::size_t cap) {
  if (n.degree() != g.degree() || !g.contains_group(n))
    throw PreconditionError("quotient by a non-subgroup");
  if (!is_normal(g, n)) throw PreconditionError("quotient by a non-normal subgroup");

  auto elems = g.elements(cap);
  auto n_elems = n.elements(cap);
  std::unordered_map<Permutation, std::size_t, PermutationHash> coset_of;
  std::vector<Permutation> reps;
  for (const auto& x : elems) {
    if (coset_of.contains(x)) continue;
    std::size_t c = reps.size();
    reps.push_back(x);
    for (const auto& m : n_elems) coset_of.emplace(m * x, c);
  }

  auto act = [&](const Permutation& h) {
    std::vector<Point> images(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c)
      images[c] = static_cast<Point>(coset_of.at(reps[c] * h));
    return Permutation(std::move(images));
  };

  std::vector<Permutation> images;
  for (const auto& h : g.generators()) images.push_back(act(h));
  PermGroup target(reps.size(), images);
  if (target.order() * n.order() != g.order())
    throw TheoremViolation("coset action of a quotient is not faithful");
  Homomorphism projection(g, target, std::move(images), cap);
  return Quotient{std::move(target), std::move(projection)};
}

}  // namespace rankgraph
