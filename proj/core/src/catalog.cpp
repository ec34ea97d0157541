#include "rankgraph/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "rankgraph/crown_powers.hpp"
#include "rankgraph/group_structure.hpp"
#include "rankgraph/subgroups.hpp"

namespace rankgraph {
namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<Point> images_of(const Permutation& p) { return p.images(); }

CatalogEntry from_perms(std::string id, std::size_t degree, const std::vector<Permutation>& gens,
                        const Order& expected, std::vector<std::string> tags = {}) {
  PermGroup g(degree, gens);
  if (g.order() != expected)
    throw std::logic_error("catalog builder " + id + ": order " + g.order().str() +
                           " differs from " + expected.str());
  CatalogEntry e;
  e.id = std::move(id);
  e.degree = degree;
  for (const auto& p : gens)
    if (!p.is_identity()) e.generators.push_back(images_of(p));
  e.tags = std::move(tags);
  return e;
}

Permutation cycle(std::size_t degree, std::vector<Point> points) {
  return Permutation::from_cycles(degree, {std::move(points)});
}

Order factorial(unsigned n) {
  Order r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

// GF(p^e) with e <= 3; elements are base-p digit vectors packed as integers.
class GaloisField {
 public:
  explicit GaloisField(unsigned q) : q_(q) {
    for (unsigned p = 2; p <= q; ++p)
      if (q % p == 0) {
        p_ = p;
        break;
      }
    unsigned r = q;
    while (r % p_ == 0) {
      r /= p_;
      ++e_;
    }
    if (r != 1 || e_ > 3) throw PreconditionError("GF(q): q must be a prime power p^e with e <= 3");
    // Monic modulus of degree e without roots (irreducible for e <= 3).
    modulus_.assign(e_ + 1, 0);
    modulus_[e_] = 1;
    if (e_ > 1) {
      for (unsigned code = 0; code < q_; ++code) {
        for (unsigned i = 0, c = code; i < e_; ++i, c /= p_) modulus_[i] = c % p_;
        bool root = false;
        for (unsigned x = 0; x < p_ && !root; ++x) {
          unsigned v = 0;
          for (unsigned i = e_ + 1; i-- > 0;) v = (v * x + modulus_[i]) % p_;
          root = v == 0;
        }
        if (!root) break;
      }
    }
    mul_.assign(q_ * q_, 0);
    for (unsigned a = 0; a < q_; ++a)
      for (unsigned b = 0; b < q_; ++b) mul_[a * q_ + b] = slow_mul(a, b);
    for (unsigned x = 1; x < q_; ++x) {
      unsigned k = 1;
      for (unsigned y = x; y != 1; y = mul(y, x)) ++k;
      if (k == q_ - 1) {
        primitive_ = x;
        break;
      }
    }
  }

  unsigned size() const noexcept { return q_; }
  unsigned add(unsigned a, unsigned b) const {
    unsigned r = 0, w = 1;
    for (unsigned i = 0; i < e_; ++i, a /= p_, b /= p_, w *= p_) r += ((a % p_ + b % p_) % p_) * w;
    return r;
  }
  unsigned neg(unsigned a) const {
    unsigned r = 0, w = 1;
    for (unsigned i = 0; i < e_; ++i, a /= p_, w *= p_) r += ((p_ - a % p_) % p_) * w;
    return r;
  }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned inv(unsigned a) const {
    for (unsigned b = 1; b < q_; ++b)
      if (mul(a, b) == 1) return b;
    throw PreconditionError("GF(q): zero has no inverse");
  }
  unsigned primitive() const noexcept { return primitive_; }

 private:
  unsigned slow_mul(unsigned a, unsigned b) const {
    std::vector<unsigned> pa(e_), pb(e_), prod(2 * e_, 0);
    for (unsigned i = 0; i < e_; ++i, a /= p_, b /= p_) {
      pa[i] = a % p_;
      pb[i] = b % p_;
    }
    for (unsigned i = 0; i < e_; ++i)
      for (unsigned j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
    for (unsigned d = 2 * e_; d-- > e_;) {
      unsigned c = prod[d];
      if (!c) continue;
      for (unsigned i = 0; i <= e_; ++i)
        prod[d - e_ + i] = (prod[d - e_ + i] + (p_ - c) * modulus_[i]) % p_;
    }
    unsigned r = 0;
    for (unsigned i = e_; i-- > 0;) r = r * p_ + prod[i];
    return r;
  }

  unsigned q_, p_ = 0, e_ = 0, primitive_ = 1;
  std::vector<unsigned> modulus_;
  std::vector<unsigned> mul_;
};

// z -> (a z + b) / (c z + d) on GF(q) and the point at infinity (index q).
Permutation mobius(const GaloisField& f, unsigned a, unsigned b, unsigned c, unsigned d) {
  const unsigned q = f.size();
  std::vector<Point> images(q + 1);
  for (unsigned z = 0; z <= q; ++z) {
    unsigned num, den;
    if (z == q) {
      num = a;
      den = c;
    } else {
      num = f.add(f.mul(a, z), b);
      den = f.add(f.mul(c, z), d);
    }
    images[z] = den == 0 ? q : f.mul(num, f.inv(den));
  }
  return Permutation(std::move(images));
}

void check_projective_q(unsigned q) {
  if (q < 2 || q > 32) throw PreconditionError("projective groups: q out of range 2..32");
  GaloisField probe(q);
  (void)probe;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

// Splits at top-level occurrences of `sep`.
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

unsigned parse_number(const std::string& s, const std::string& id) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw PreconditionError("unknown group id: " + id);
  return static_cast<unsigned>(std::stoul(s));
}

}  // namespace

PermGroup to_perm_group(const CatalogEntry& entry) {
  std::vector<Permutation> gens;
  for (const auto& images : entry.generators) gens.emplace_back(images);
  return PermGroup(std::max<std::size_t>(entry.degree, 1), std::move(gens));
}

GroupPtr to_group(const CatalogEntry& entry, std::size_t cap) {
  return FiniteGroup::from_perm_group(to_perm_group(entry), entry.id, cap);
}

void validate_entry(const CatalogEntry& entry, std::size_t cap) {
  auto fail = [&](const std::string& why) {
    throw PreconditionError("catalog entry '" + entry.id + "': " + why);
  };
  if (entry.id.empty()) fail("empty id");
  for (std::size_t k = 0; k < entry.generators.size(); ++k) {
    const auto& images = entry.generators[k];
    if (images.size() != entry.degree) fail("generator " + std::to_string(k) + " has wrong length");
    std::vector<bool> hit(entry.degree, false);
    for (Point x : images) {
      if (x >= entry.degree || hit[x])
        fail("generator " + std::to_string(k) + " is not a bijection");
      hit[x] = true;
    }
  }
  static const std::vector<std::string> known{"soluble", "simple", "monolithic", "almost-simple"};
  for (const auto& tag : entry.tags)
    if (std::find(known.begin(), known.end(), tag) == known.end()) fail("unknown tag " + tag);
  if (entry.tags.empty()) return;

  PermGroup pg = to_perm_group(entry);
  auto has = [&](const char* t) {
    return std::find(entry.tags.begin(), entry.tags.end(), t) != entry.tags.end();
  };
  if (has("soluble") && !is_soluble(pg)) fail("tagged soluble but is not");
  if (!has("simple") && !has("monolithic") && !has("almost-simple")) return;

  SubgroupCache cache(to_group(entry, cap));
  auto lattice = normal_subgroups(cache);
  if (has("simple") && lattice.normals.size() != 2) fail("tagged simple but is not");
  if ((has("monolithic") || has("almost-simple")) && lattice.minimal_normals.size() != 1)
    fail("tagged monolithic but is not");
  if (has("almost-simple")) {
    SubgroupId s = lattice.minimal_normals.front();
    auto sg = FiniteGroup::from_perm_group(cache.group().subgroup_perm_group(cache.generators(s)));
    SubgroupCache inner(sg);
    if (sg->is_abelian() || normal_subgroups(inner).normals.size() != 2)
      fail("tagged almost-simple but the socle is not non-abelian simple");
  }
}

CatalogEntry cyclic(unsigned n) {
  if (n < 1) throw PreconditionError("cyclic: n must be positive");
  std::vector<Point> pts(n);
  std::iota(pts.begin(), pts.end(), Point{0});
  std::vector<Permutation> gens;
  if (n > 1) gens.push_back(cycle(n, pts));
  auto tags = std::vector<std::string>{"soluble"};
  return from_perms("C" + std::to_string(n), n, gens, n, tags);
}

CatalogEntry dihedral(unsigned n) {
  if (n < 3) throw PreconditionError("dihedral: n must be at least 3");
  std::vector<Point> rot(n), ref(n);
  for (unsigned i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    ref[i] = (n - i) % n;
  }
  return from_perms("D" + std::to_string(2 * n), n,
                    {Permutation(std::move(rot)), Permutation(std::move(ref))}, 2 * n, {"soluble"});
}

CatalogEntry symmetric(unsigned n) {
  if (n < 1 || n > 12) throw PreconditionError("symmetric: n out of range 1..12");
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<Point> pts(n);
    std::iota(pts.begin(), pts.end(), Point{0});
    gens.push_back(cycle(n, {0, 1}));
    if (n > 2) gens.push_back(cycle(n, pts));
  }
  std::vector<std::string> tags;
  if (n <= 4) tags.push_back("soluble");
  return from_perms("S" + std::to_string(n), n, gens, factorial(n), tags);
}

CatalogEntry alternating(unsigned n) {
  if (n < 3 || n > 12) throw PreconditionError("alternating: n out of range 3..12");
  std::vector<Permutation> gens{cycle(n, {0, 1, 2})};
  if (n > 3) {
    std::vector<Point> pts;
    for (unsigned i = n % 2 ? 0 : 1; i < n; ++i) pts.push_back(i);
    gens.push_back(cycle(n, pts));
  }
  std::vector<std::string> tags;
  if (n <= 4) tags.push_back("soluble");
  if (n >= 5) tags.push_back("simple");
  return from_perms("A" + std::to_string(n), n, gens, factorial(n) / 2, tags);
}

CatalogEntry elementary_abelian(unsigned p, unsigned k) {
  if (!is_prime(p) || k < 1 || p * k > 64)
    throw PreconditionError("elementary_abelian: p must be prime and p*k <= 64");
  std::vector<Permutation> gens;
  Order expected = 1;
  for (unsigned c = 0; c < k; ++c) {
    std::vector<Point> pts(p);
    std::iota(pts.begin(), pts.end(), static_cast<Point>(c * p));
    gens.push_back(cycle(p * k, pts));
    expected *= p;
  }
  auto id = "C" + std::to_string(p) + (k > 1 ? "^" + std::to_string(k) : "");
  return from_perms(id, p * k, gens, expected, {"soluble"});
}

CatalogEntry direct_product(const std::vector<CatalogEntry>& factors) {
  if (factors.empty()) throw PreconditionError("direct_product: no factors");
  std::size_t degree = 0;
  for (const auto& f : factors) degree += f.degree;
  CatalogEntry e;
  e.degree = degree;
  std::size_t offset = 0;
  bool soluble = true;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const auto& f = factors[k];
    e.id += (k ? "x" : "") + (split_top(f.id, 'x').size() > 1 ? "(" + f.id + ")" : f.id);
    for (const auto& images : f.generators) {
      std::vector<Point> g(degree);
      std::iota(g.begin(), g.end(), Point{0});
      for (std::size_t x = 0; x < f.degree; ++x)
        g[offset + x] = static_cast<Point>(offset + images[x]);
      e.generators.push_back(std::move(g));
    }
    offset += f.degree;
    soluble = soluble && std::find(f.tags.begin(), f.tags.end(), "soluble") != f.tags.end();
  }
  if (soluble) e.tags.push_back("soluble");
  return e;
}

CatalogEntry psl2(unsigned q) {
  check_projective_q(q);
  GaloisField f(q);
  const unsigned w = f.primitive();
  const unsigned minus_one = f.neg(1);
  std::vector<Permutation> gens{mobius(f, 1, 1, 0, 1), mobius(f, f.mul(w, w), 0, 0, 1),
                                mobius(f, 0, minus_one, 1, 0)};
  Order expected = Order(q) * (q * q - 1) / (q % 2 ? 2 : 1);
  std::vector<std::string> tags;
  if (q >= 4) tags.push_back("simple");
  else tags.push_back("soluble");
  return from_perms("PSL(2," + std::to_string(q) + ")", q + 1, gens, expected, tags);
}

CatalogEntry pgl2(unsigned q) {
  check_projective_q(q);
  GaloisField f(q);
  std::vector<Permutation> gens{mobius(f, 1, 1, 0, 1), mobius(f, f.primitive(), 0, 0, 1),
                                mobius(f, 0, f.neg(1), 1, 0)};
  Order expected = Order(q) * (q * q - 1);
  std::vector<std::string> tags;
  if (q >= 4) tags.push_back("almost-simple");
  else tags.push_back("soluble");
  return from_perms("PGL(2," + std::to_string(q) + ")", q + 1, gens, expected, tags);
}

CatalogEntry crown_power_entry(const CatalogEntry& l, unsigned k) {
  auto mono = std::make_shared<const MonolithicGroup>(to_group(l), false);
  CrownPower power(mono, k);
  CatalogEntry e;
  e.id = "crown(" + l.id + "," + std::to_string(k) + ")";
  e.degree = power.degree();
  for (const auto& g : power.group().generators())
    if (!g.is_identity()) e.generators.push_back(images_of(g));
  e.notes = "crown-based power";
  return e;
}

void to_json(nlohmann::json& j, const CatalogEntry& e) {
  j = nlohmann::json{{"id", e.id}, {"degree", e.degree}, {"generators", e.generators}};
  if (!e.tags.empty()) j["tags"] = e.tags;
  if (!e.notes.empty()) j["notes"] = e.notes;
  if (e.automorphisms) j["automorphisms"] = *e.automorphisms;
}

void from_json(const nlohmann::json& j, CatalogEntry& e) {
  e.id = j.at("id").get<std::string>();
  e.degree = j.at("degree").get<std::size_t>();
  e.generators = j.at("generators").get<std::vector<std::vector<Point>>>();
  e.tags = j.value("tags", std::vector<std::string>{});
  e.notes = j.value("notes", std::string{});
  e.automorphisms.reset();
  if (j.contains("automorphisms")) e.automorphisms = j.at("automorphisms");
}

std::vector<CatalogEntry> parse_catalog(const std::string& text, bool validate) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw PreconditionError(std::string("catalog parse error: ") + err.what());
  }
  const nlohmann::json& list = doc.is_object() ? doc.at("entries") : doc;
  if (!list.is_array()) throw PreconditionError("catalog: expected an array of entries");
  std::vector<CatalogEntry> entries;
  for (std::size_t k = 0; k < list.size(); ++k) {
    CatalogEntry e;
    try {
      e = list[k].get<CatalogEntry>();
    } catch (const nlohmann::json::exception& err) {
      throw PreconditionError("catalog entry #" + std::to_string(k) + ": " + err.what());
    }
    if (validate) {
      try {
        validate_entry(e);
      } catch (const PreconditionError& err) {
        throw PreconditionError("catalog entry #" + std::to_string(k) + ": " + err.what());
      }
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path, bool validate) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open catalog " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str(), validate);
}

void save_catalog(const std::vector<CatalogEntry>& entries, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write catalog " + path.string());
  out << nlohmann::json{{"entries", entries}}.dump(1) << '\n';
}

std::filesystem::path default_catalog_path() {
  if (const char* env = std::getenv("RANKGRAPH_DATA_DIR")) return std::filesystem::path(env) / "catalog.json";
#ifdef RANKGRAPH_DATA_DIR
  return std::filesystem::path(RANKGRAPH_DATA_DIR) / "catalog.json";
#else
  return "data/catalog.json";
#endif
}

Catalog::Catalog(std::vector<CatalogEntry> file_entries) : file_entries_(std::move(file_entries)) {}

Catalog Catalog::with_default_file() {
  auto path = default_catalog_path();
  if (!std::filesystem::exists(path)) return Catalog();
  return Catalog(load_catalog(path));
}

CatalogEntry Catalog::resolve(const std::string& raw) const {
  const std::string id = trim(raw);
  for (const auto& e : file_entries_)
    if (e.id == id) return e;

  auto factors = split_top(id, 'x');
  if (factors.size() > 1) {
    std::vector<CatalogEntry> parts;
    for (const auto& f : factors) parts.push_back(resolve(f));
    auto e = direct_product(parts);
    e.id = id;
    return e;
  }

  auto powered = split_top(id, '^');
  if (powered.size() == 2) {
    unsigned k = parse_number(trim(powered[1]), id);
    if (k < 1 || k > 8) throw PreconditionError("direct power out of range: " + id);
    CatalogEntry base = resolve(powered[0]);
    CatalogEntry e;
    if (base.id.size() > 1 && base.id[0] == 'C' && base.degree > 0 && is_prime(static_cast<unsigned>(base.degree)) &&
        base.generators.size() == 1) {
      e = elementary_abelian(static_cast<unsigned>(base.degree), k);
    } else {
      e = direct_product(std::vector<CatalogEntry>(k, base));
    }
    e.id = id;
    return e;
  }
  if (powered.size() > 2) throw PreconditionError("unknown group id: " + id);

  if (id.size() >= 2 && id.front() == '(' && id.back() == ')') {
    auto e = resolve(id.substr(1, id.size() - 2));
    return e;
  }

  auto with_q = [&](const std::string& prefix) -> std::optional<unsigned> {
    if (id.rfind(prefix, 0) != 0 || id.back() != ')') return std::nullopt;
    return parse_number(id.substr(prefix.size(), id.size() - prefix.size() - 1), id);
  };
  if (auto q = with_q("PSL(2,")) return psl2(*q);
  if (auto q = with_q("PGL(2,")) return pgl2(*q);

  if (id.rfind("crown(", 0) == 0 && id.back() == ')') {
    auto args = split_top(id.substr(6, id.size() - 7), ',');
    if (args.size() != 2) throw PreconditionError("crown(<id>,k) expects two arguments: " + id);
    unsigned k = parse_number(trim(args[1]), id);
    if (k < 1 || k > 64) throw PreconditionError("crown power exponent out of range: " + id);
    auto e = crown_power_entry(resolve(args[0]), k);
    return e;
  }

  if (id.size() >= 2) {
    const std::string rest = id.substr(1);
    switch (id[0]) {
      case 'C': return cyclic(parse_number(rest, id));
      case 'S': return symmetric(parse_number(rest, id));
      case 'A': return alternating(parse_number(rest, id));
      case 'D': {
        unsigned order = parse_number(rest, id);
        if (order % 2) throw PreconditionError("dihedral ids use the group order: " + id);
        return dihedral(order / 2);
      }
      default: break;
    }
  }
  throw PreconditionError("unknown group id: " + id);
}

std::vector<std::string> Catalog::standard_ids() const {
  std::vector<std::string> ids{
      // soluble, order <= 200
      "C2^2", "S3", "C2xC4", "C3^2", "D8", "D10", "C2^3", "A4", "D12", "C2xC6", "D14", "C4^2",
      "C2xC8", "D16", "C2xD8", "C3xS3", "C2^4", "D18", "C3xC6", "C2xA4", "S4", "C3xA4", "F20xC3",
      "S3xS3", "C3^3", "D20", "C5^2", "S3xC4", "D8xC3", "C2xS4", "C3xS4", "A4xA4", "C2^2xS3",
      "S3xD10",
      // insoluble, order <= 500
      "A5", "S5", "A5xC2", "PSL(2,7)", "A5xC3", "A5xC2^2", "S5xC2", "PGL(2,7)", "A5xS3", "A6",
      // almost simple beyond 500
      "S6", "PGL(2,9)"};
  for (const auto& e : file_entries_) ids.push_back(e.id);
  return ids;
}

std::vector<CatalogEntry> Catalog::standard_entries() const {
  std::vector<CatalogEntry> out;
  for (const auto& id : standard_ids()) out.push_back(resolve(id));
  return out;
}

MonolithicPtr resolve_monolithic(const Catalog& catalog, const std::string& id,
                                 bool require_nonabelian_socle) {
  return std::make_shared<const MonolithicGroup>(to_group(catalog.resolve(id)),
                                                 require_nonabelian_socle);
}

}  // namespace rankgraph
