#include "rankgraph/crown_powers.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "rankgraph/group_structure.hpp"
#include "rankgraph/union_find.hpp"

namespace rankgraph {

namespace {

// Block-diagonal permutation acting as L's element coordinates[c] on copy c.
Permutation block_permutation(const FiniteGroup& l, std::span<const Elem> coordinates) {
  const std::size_t deg = l.degree();
  std::vector<Point> images(coordinates.size() * deg);
  for (std::size_t c = 0; c < coordinates.size(); ++c) {
    const Permutation& p = l.perm(coordinates[c]);
    for (std::size_t x = 0; x < deg; ++x)
      images[c * deg + x] = static_cast<Point>(c * deg + p[static_cast<Point>(x)]);
  }
  return Permutation(std::move(images));
}

}  // namespace

CrownPower::CrownPower(MonolithicPtr base, unsigned k) : base_(std::move(base)), k_(k) {
  if (k == 0) throw PreconditionError("CrownPower: k must be positive");
  const FiniteGroup& L = base_->group();
  std::vector<Permutation> gens;
  for (Elem g : L.generators()) {
    std::vector<Elem> diag(k, g);
    gens.push_back(block_permutation(L, diag));
  }
  for (Elem s : base_->socle_generators())
    for (unsigned c = 0; c < k; ++c) {
      std::vector<Elem> coords(k, FiniteGroup::identity());
      coords[c] = s;
      gens.push_back(block_permutation(L, coords));
    }
  group_ = PermGroup(degree(), std::move(gens));
  if (group_.order() != expected_order())
    throw std::logic_error("CrownPower: chain order differs from |L/N| |N|^k");
}

Order CrownPower::expected_order() const {
  Order result = base_->coset_count();
  for (unsigned c = 0; c < k_; ++c) result *= base_->socle().size();
  return result;
}

Permutation CrownPower::embed(std::span<const Elem> coordinates) const {
  if (coordinates.size() != k_) throw PreconditionError("CrownPower::embed: wrong tuple length");
  for (Elem x : coordinates)
    if (base_->coset_of(x) != base_->coset_of(coordinates.front()))
      throw PreconditionError("CrownPower::embed: coordinates are not congruent modulo N");
  return block_permutation(base_->group(), coordinates);
}

Permutation CrownPower::circ(Elem a, std::span<const Elem> m) const {
  if (m.size() != k_) throw PreconditionError("CrownPower::circ: wrong tuple length");
  std::vector<Elem> coords;
  for (Elem n : m) {
    if (!base_->in_socle(n)) throw PreconditionError("CrownPower::circ: component outside N");
    coords.push_back(base_->group().mul(a, n));
  }
  return block_permutation(base_->group(), coords);
}

OrbitTable::OrbitTable(MonolithicPtr base, const AutGroup& x, std::vector<Elem> a, std::size_t cap)
    : base_(std::move(base)), a_(std::move(a)) {
  const FiniteGroup& L = base_->group();
  const unsigned t = this->t();
  if (t == 0) throw PreconditionError("OrbitTable: empty tuple");
  if (x.base().size() != L.size())
    throw PreconditionError("OrbitTable: automorphisms belong to a different group");
  x_generators_ = x.generators();

  SubgroupCache cache(base_->group_ptr());
  if (cache.generated(a_) != cache.whole())
    throw PreconditionError("OrbitTable: the tuple does not generate L");

  const std::uint64_t n = base_->socle().size();
  std::uint64_t total = 1;
  for (unsigned i = 0; i < t; ++i) {
    if (total > cap / n) throw CapExceeded("orbit table |N|^t", SIZE_MAX, cap);
    total *= n;
  }
  labels_.assign(total, outside);

  // Generation by nested joins; once a prefix generates, every completion does.
  std::vector<bool> generating(total, false);
  std::vector<std::uint64_t> stride(t, 1);
  for (unsigned i = t - 1; i-- > 0;) stride[i] = stride[i + 1] * n;
  std::function<void(unsigned, SubgroupId, std::uint64_t)> walk =
      [&](unsigned row, SubgroupId h, std::uint64_t offset) {
        for (std::uint64_t p = 0; p < n; ++p) {
          SubgroupId next = cache.join(h, L.mul(a_[row], base_->socle()[p]));
          std::uint64_t index = offset + p * stride[row];
          if (next == cache.whole()) {
            std::fill(generating.begin() + static_cast<std::ptrdiff_t>(index),
                      generating.begin() + static_cast<std::ptrdiff_t>(index + stride[row]), true);
          } else if (row + 1 < t) {
            walk(row + 1, next, index);
          }
        }
      };
  walk(0, SubgroupCache::trivial(), 0);

  UnionFind element_uf(L.size());
  for (const auto& gamma : x_generators_)
    for (Elem e = 0; e < L.size(); ++e) element_uf.unite(e, gamma[e]);
  std::uint32_t element_count = 0;
  element_orbits_ = element_uf.labels(element_count);

  UnionFind uf(total);
  std::vector<std::uint32_t> positions(t);
  for (const auto& gamma : x_generators_)
    for (std::uint64_t index = 0; index < total; ++index) {
      if (!generating[index]) continue;
      for (unsigned i = 0; i < t; ++i) {
        Elem image = gamma[entry(index, i)];
        std::int32_t pos = base_->socle_position(L.mul(L.inv(a_[i]), image));
        if (pos < 0) throw std::logic_error("OrbitTable: automorphism moves a coset of N");
        positions[i] = static_cast<std::uint32_t>(pos);
      }
      std::uint64_t target = encode(positions);
      if (!generating[target]) throw std::logic_error("OrbitTable: Omega not closed under X");
      uf.unite(static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(target));
    }
  labels_ = uf.labels(orbit_count_, &generating, outside);
  representatives_.assign(orbit_count_, 0);
  std::vector<bool> seen(orbit_count_, false);
  for (std::uint64_t index = 0; index < total; ++index) {
    if (labels_[index] == outside) continue;
    ++omega_size_;
    if (!seen[labels_[index]]) {
      seen[labels_[index]] = true;
      representatives_[labels_[index]] = index;
    }
  }
}

std::uint32_t OrbitTable::position(std::uint64_t index, unsigned row) const {
  const std::uint64_t n = socle_order();
  for (unsigned i = t() - 1; i > row; --i) index /= n;
  return static_cast<std::uint32_t>(index % n);
}

Elem OrbitTable::entry(std::uint64_t index, unsigned row) const {
  return base_->group().mul(a_[row], base_->socle()[position(index, row)]);
}

std::uint64_t OrbitTable::encode(std::span<const std::uint32_t> positions) const {
  std::uint64_t index = 0;
  for (std::uint32_t p : positions) index = index * socle_order() + p;
  return index;
}

std::optional<std::uint64_t> OrbitTable::index_of_entries(std::span<const Elem> entries) const {
  if (entries.size() != t()) throw PreconditionError("OrbitTable: wrong tuple length");
  const FiniteGroup& L = base_->group();
  std::vector<std::uint32_t> positions(t());
  for (unsigned i = 0; i < t(); ++i) {
    std::int32_t pos = base_->socle_position(L.mul(L.inv(a_[i]), entries[i]));
    if (pos < 0) return std::nullopt;
    positions[i] = static_cast<std::uint32_t>(pos);
  }
  return encode(positions);
}

std::vector<Elem> standard_generating_tuple(const MonolithicGroup& l, unsigned t) {
  SubgroupCache cache(l.group_ptr());
  auto cert = min_rank(cache);
  if (t < cert.d) throw PreconditionError("t is smaller than d(L)");
  std::vector<Elem> a = cert.witness;
  a.resize(t, FiniteGroup::identity());
  return a;
}

unsigned delta_Lt(const OrbitTable& table) { return table.orbit_count(); }

DeltaWitness verify_delta(const OrbitTable& table) {
  DeltaWitness w;
  w.k = table.orbit_count();
  const auto& socle = table.base().socle();
  w.corrections.assign(table.t(), std::vector<Elem>(w.k));
  for (unsigned j = 0; j < w.k; ++j)
    for (unsigned i = 0; i < table.t(); ++i)
      w.corrections[i][j] = socle[table.position(table.representatives()[j], i)];
  CrownPower power(table.base_ptr(), w.k);
  for (unsigned i = 0; i < table.t(); ++i)
    w.generators.push_back(power.circ(table.a()[i], w.corrections[i]));
  w.order = PermGroup(power.degree(), w.generators).order();
  w.expected_order = power.expected_order();
  w.generates = w.order == w.expected_order;
  return w;
}

bool generation_via_orbits(const OrbitTable& table,
                           const std::vector<std::vector<Elem>>& corrections) {
  if (corrections.size() != table.t())
    throw PreconditionError("generation_via_orbits: need one row per tuple entry");
  const std::size_t eta = corrections.front().size();
  const FiniteGroup& L = table.base().group();
  std::set<std::uint32_t> seen;
  std::vector<Elem> column(table.t());
  for (std::size_t j = 0; j < eta; ++j) {
    for (unsigned i = 0; i < table.t(); ++i) {
      if (corrections[i].size() != eta)
        throw PreconditionError("generation_via_orbits: ragged correction matrix");
      if (!table.base().in_socle(corrections[i][j]))
        throw PreconditionError("generation_via_orbits: correction outside N");
      column[i] = L.mul(table.a()[i], corrections[i][j]);
    }
    std::uint32_t label = table.label(*table.index_of_entries(column));
    if (label == OrbitTable::outside || !seen.insert(label).second) return false;
  }
  return true;
}

bool generates_crown_power(const CrownPower& power, std::span<const Elem> a,
                           const std::vector<std::vector<Elem>>& corrections) {
  if (corrections.size() != a.size())
    throw PreconditionError("generates_crown_power: need one row per tuple entry");
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < a.size(); ++i) gens.push_back(power.circ(a[i], corrections[i]));
  return PermGroup(power.degree(), std::move(gens)).order() == power.expected_order();
}

IndexPartition::IndexPartition(const std::vector<std::uint32_t>& block_of) {
  std::vector<std::uint32_t> relabel;
  std::vector<std::uint32_t> seen_labels;
  block_of_.resize(block_of.size());
  for (std::size_t j = 0; j < block_of.size(); ++j) {
    auto it = std::find(seen_labels.begin(), seen_labels.end(), block_of[j]);
    if (it == seen_labels.end()) {
      seen_labels.push_back(block_of[j]);
      block_of_[j] = static_cast<std::uint32_t>(seen_labels.size() - 1);
    } else {
      block_of_[j] = static_cast<std::uint32_t>(it - seen_labels.begin());
    }
  }
  block_count_ = seen_labels.size();
}

IndexPartition IndexPartition::single_block(std::size_t n) {
  return IndexPartition(std::vector<std::uint32_t>(n, 0));
}

IndexPartition IndexPartition::singletons(std::size_t n) {
  std::vector<std::uint32_t> labels(n);
  for (std::size_t j = 0; j < n; ++j) labels[j] = static_cast<std::uint32_t>(j);
  return IndexPartition(labels);
}

std::vector<std::vector<std::uint32_t>> IndexPartition::blocks() const {
  std::vector<std::vector<std::uint32_t>> result(block_count_);
  for (std::size_t j = 0; j < block_of_.size(); ++j)
    result[block_of_[j]].push_back(static_cast<std::uint32_t>(j));
  return result;
}

IndexPartition IndexPartition::meet(const IndexPartition& other) const {
  if (other.size() != size()) throw PreconditionError("IndexPartition: size mismatch");
  UnionFind uf(size());
  std::vector<std::uint32_t> first_a(block_count_, UINT32_MAX), first_b(other.block_count_, UINT32_MAX);
  for (std::uint32_t j = 0; j < size(); ++j) {
    auto& fa = first_a[block_of_[j]];
    auto& fb = first_b[other.block_of_[j]];
    if (fa == UINT32_MAX) fa = j; else uf.unite(fa, j);
    if (fb == UINT32_MAX) fb = j; else uf.unite(fb, j);
  }
  std::uint32_t count = 0;
  return IndexPartition(uf.labels(count));
}

bool IndexPartition::refines(const IndexPartition& other) const {
  if (other.size() != size()) return false;
  std::vector<std::uint32_t> image(block_count_, UINT32_MAX);
  for (std::size_t j = 0; j < size(); ++j) {
    auto& slot = image[block_of_[j]];
    if (slot == UINT32_MAX) slot = other.block_of_[j];
    else if (slot != other.block_of_[j]) return false;
  }
  return true;
}

PartitionCheck partitions_pi(const OrbitTable& table, std::span<const std::uint64_t> columns) {
  if (columns.empty()) columns = table.representatives();
  PartitionCheck check;
  const auto& orbit = table.element_orbits();
  for (unsigned i = 0; i < table.t(); ++i) {
    std::vector<std::uint32_t> labels;
    for (std::uint64_t c : columns) labels.push_back(orbit[table.entry(c, i)]);
    check.partitions.emplace_back(labels);
  }
  check.meet = IndexPartition::singletons(columns.size());
  for (const auto& p : check.partitions) check.meet = check.meet.meet(p);
  check.meet_is_single_block = check.meet.block_count() <= 1;
  return check;
}

BridgeCheck partition_bridges(const OrbitTable& table) {
  if (table.t() < 2) throw PreconditionError("partition_bridges: needs t >= 2");
  auto pi = partitions_pi(table);
  const auto& reps = table.representatives();
  BridgeCheck check;
  if (reps.empty()) return check;
  const std::uint64_t n = table.socle_order();
  std::uint64_t rest = 1;
  for (unsigned i = 1; i < table.t(); ++i) rest *= n;
  std::vector<std::uint32_t> positions(table.t());

  for (const auto& block : pi.partitions[0].blocks()) {
    std::uint32_t j = block.front();
    if (pi.partitions[0].same_block(0, j)) continue;
    bool found = false;
    for (std::uint64_t nu = 0; nu < rest && !found; ++nu) {
      std::uint64_t tail = nu;
      for (unsigned i = table.t() - 1; i >= 1; --i) {
        positions[i] = static_cast<std::uint32_t>(tail % n);
        tail /= n;
      }
      positions[0] = table.position(reps[0], 0);
      std::uint32_t u = table.label(table.encode(positions));
      positions[0] = table.position(reps[j], 0);
      std::uint32_t v = table.label(table.encode(positions));
      if (u == OrbitTable::outside || v == OrbitTable::outside) continue;
      found = true;
      bool ok = u != v && pi.partitions[0].same_block(u, 0) && pi.partitions[0].same_block(v, j) &&
                pi.partitions[1].same_block(u, v);
      if (ok) check.bridges.push_back(Bridge{0, u, v, j});
      else ++check.failures;
    }
    if (!found) ++check.failures;
  }
  check.pass = check.failures == 0;
  return check;
}

DeluFraction delu_fraction(SubgroupCache& cache, const MonolithicGroup& l, Elem x,
                           std::span<const Elem> b) {
  const FiniteGroup& L = l.group();
  if (cache.group().size() != L.size()) throw PreconditionError("delu_fraction: cache mismatch");
  SubgroupId base = cache.cyclic(x);
  if (cache.join_subgroups(base, cache.generated(b)) != cache.whole())
    throw PreconditionError("delu_fraction: <l, b> is not L");
  unsigned d_l = cache.completion_rank(base);
  if (b.size() < std::max(2u, d_l)) throw PreconditionError("delu_fraction: d < max(2, d_l(L))");

  const auto& socle = l.socle();
  DeluFraction result;
  result.total = 1;
  for (std::size_t i = 0; i < b.size(); ++i) result.total *= socle.size();
  // below[i]: completions of a generating prefix of length i + 1.
  std::vector<std::uint64_t> below(b.size(), 1);
  for (std::size_t i = b.size() - 1; i-- > 0;) below[i] = below[i + 1] * socle.size();
  std::function<void(std::size_t, SubgroupId)> walk = [&](std::size_t i, SubgroupId h) {
    for (Elem n : socle) {
      SubgroupId next = cache.join(h, L.mul(b[i], n));
      if (next == cache.whole()) result.count += below[i];
      else if (i + 1 < b.size()) walk(i + 1, next);
    }
  };
  walk(0, base);
  return result;
}

ClnSearch::ClnSearch(MonolithicPtr g) : g_(std::move(g)) {
  const FiniteGroup& G = g_->group();
  const std::size_t cosets = g_->coset_count();
  centralizing_.assign(G.size() * cosets, UINT32_MAX);
  for (Elem c = 0; c < G.size(); ++c)
    for (Elem z = 0; z < G.size(); ++z)
      if (G.mul(c, z) == G.mul(z, c)) {
        auto& slot = centralizing_[c * cosets + g_->coset_of(z)];
        if (slot == UINT32_MAX) slot = z;
      }
}

std::optional<std::pair<Elem, Elem>> ClnSearch::witness(Elem a, Elem b) const {
  const FiniteGroup& G = g_->group();
  Elem comm = G.commutator(a, b);
  if (!g_->in_socle(comm)) throw PreconditionError("cln_witness: [a, b] is not in N");
  if (comm == FiniteGroup::identity())
    return std::pair{FiniteGroup::identity(), FiniteGroup::identity()};
  const std::size_t cosets = g_->coset_count();
  for (Elem n : g_->socle()) {
    Elem c = G.mul(a, n);
    Elem z = centralizing_[c * cosets + g_->coset_of(b)];
    if (z == UINT32_MAX) continue;
    return std::pair{n, G.mul(G.inv(b), z)};
  }
  return std::nullopt;
}

std::optional<std::pair<Elem, Elem>> cln_witness(MonolithicPtr g, Elem a, Elem b) {
  return ClnSearch(std::move(g)).witness(a, b);
}

UnicoRankResult unico_rank_check(SubgroupCache& cache, const MonolithicGroup& l,
                                 std::span<const Elem> b) {
  if (b.size() < 3) throw PreconditionError("unico_rank_check: needs t >= 3");
  SubgroupId n = cache.generated(l.socle_generators());
  if (cache.join_subgroups(cache.generated(b), n) != cache.whole())
    throw PreconditionError("unico_rank_check: <b> N is not L");
  UnicoRankResult r;
  r.d_last = cache.completion_rank(cache.cyclic(b.back()));
  r.holds = r.d_last + 1 <= b.size();
  return r;
}

}  // namespace rankgraph
