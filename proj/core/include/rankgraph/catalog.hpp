#ifndef RANKGRAPH_CATALOG_HPP
#define RANKGRAPH_CATALOG_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rankgraph/finite_group.hpp"
#include "rankgraph/monolithic.hpp"

namespace rankgraph {

/// A permutation group given by generator image arrays.
struct CatalogEntry {
  std::string id;
  std::size_t degree = 0;
  std::vector<std::vector<Point>> generators;
  std::vector<std::string> tags;  // soluble, simple, monolithic, almost-simple
  std::string notes;
  std::optional<nlohmann::json> automorphisms;  // carried through, not interpreted

  bool operator==(const CatalogEntry&) const = default;
};

PermGroup to_perm_group(const CatalogEntry& entry);
GroupPtr to_group(const CatalogEntry& entry, std::size_t cap = default_table_cap);

/// Checks that every generator is a permutation of the right degree and
/// that every tag holds. Throws PreconditionError naming the entry.
void validate_entry(const CatalogEntry& entry, std::size_t cap = default_table_cap);

CatalogEntry cyclic(unsigned n);
/// Symmetries of the regular n-gon; id "D<2n>".
CatalogEntry dihedral(unsigned n);
CatalogEntry symmetric(unsigned n);
CatalogEntry alternating(unsigned n);
CatalogEntry elementary_abelian(unsigned p, unsigned k);
CatalogEntry direct_product(const std::vector<CatalogEntry>& factors);
/// Projective groups acting on the q + 1 points of the projective line.
CatalogEntry psl2(unsigned q);
CatalogEntry pgl2(unsigned q);
/// The crown-based power L_k of a monolithic group on k copies of its domain.
CatalogEntry crown_power_entry(const CatalogEntry& l, unsigned k);

void to_json(nlohmann::json& j, const CatalogEntry& e);
void from_json(const nlohmann::json& j, CatalogEntry& e);

/// Parses {"entries": [...]} or a bare array. Parse errors carry the line;
/// validation errors name the entry index and id.
std::vector<CatalogEntry> parse_catalog(const std::string& text, bool validate = true);
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path, bool validate = true);
void save_catalog(const std::vector<CatalogEntry>& entries, const std::filesystem::path& path);

/// data/catalog.json of the source tree (or RANKGRAPH_DATA_DIR at run time).
std::filesystem::path default_catalog_path();

/// Resolves group ids against builders and catalog-file entries.
///
/// Grammar: factors joined by 'x', each optionally raised to "^k" (direct
/// power); a factor is a file id or one of C<n>, D<2n>, S<n>, A<n>,
/// PSL(2,q), PGL(2,q), crown(<id>,k), or a parenthesized id.
class Catalog {
 public:
  Catalog() = default;
  explicit Catalog(std::vector<CatalogEntry> file_entries);
  static Catalog with_default_file();

  CatalogEntry resolve(const std::string& id) const;
  const std::vector<CatalogEntry>& file_entries() const noexcept { return file_entries_; }

  /// The built-in sweep list (every id resolves) followed by file entries.
  std::vector<std::string> standard_ids() const;
  std::vector<CatalogEntry> standard_entries() const;

 private:
  std::vector<CatalogEntry> file_entries_;
};

/// The resolved group as a MonolithicGroup.
MonolithicPtr resolve_monolithic(const Catalog& catalog, const std::string& id,
                                 bool require_nonabelian_socle = true);

}  // namespace rankgraph

#endif
