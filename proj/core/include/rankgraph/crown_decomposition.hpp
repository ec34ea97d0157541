#ifndef RANKGRAPH_CROWN_DECOMPOSITION_HPP
#define RANKGRAPH_CROWN_DECOMPOSITION_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rankgraph/automorphisms.hpp"
#include "rankgraph/monolithic.hpp"
#include "rankgraph/subgroups.hpp"

namespace rankgraph {

/// H/K with K < H both normal in G and nothing normal strictly between.
struct ChiefFactor {
  SubgroupId upper = 0;  // H
  SubgroupId lower = 0;  // K
  std::size_t order = 0;
  bool abelian = false;
  bool frattini = false;      // H/K inside Frat(G/K)
  SubgroupId centralizer = 0;  // C_G(H/K)
};

/// Chief series from the top down (first factor is G/K_top). Built by
/// repeatedly choosing the first minimal normal subgroup of G over the
/// current bottom term. Non-abelian factors are never Frattini; an abelian
/// factor is Frattini iff every maximal subgroup containing K contains H.
std::vector<ChiefFactor> chief_series(SubgroupCache& cache);

/// A chief factor as a tabulated group with the conjugation action of G.
struct FactorAction {
  GroupPtr group;                          // H/K
  std::vector<Elem> projection;            // element of G -> element of H/K (UINT32_MAX off H)
  std::vector<std::vector<Elem>> action;   // per generator of G, element map of H/K
};

FactorAction factor_action(SubgroupCache& cache, const ChiefFactor& factor);

/// G-equivalence of chief factors, decided from the definition: there is an
/// isomorphism phi: A -> B such that for every generator g of G,
/// phi o rho_A(g) o phi^-1 and rho_B(g) differ by an inner automorphism of B.
/// For abelian factors this is G-isomorphism. Mixed abelian and non-abelian
/// factors are never equivalent.
bool g_equivalent(SubgroupCache& cache, const ChiefFactor& a, const ChiefFactor& b);

/// Number of non-Frattini factors of the series equivalent to series[index].
unsigned delta_G(SubgroupCache& cache, const std::vector<ChiefFactor>& series, std::size_t index);

/// L_A: G/C_G(A) for non-abelian A, and A x| G/C_G(A) acting on the |A|
/// elements of A (translations and conjugation) for abelian A.
MonolithicPtr build_L_A(SubgroupCache& cache, const ChiefFactor& factor);

struct Crown {
  std::size_t factor = 0;  // index into the chief series
  unsigned delta = 0;
  SubgroupId r = 0;        // R_G(A)
  SubgroupId i = 0;        // I_G(A)
  MonolithicPtr l_a;
  std::string l_a_id;
  std::size_t candidates = 0;                 // normal N with G/N = L_A and matching socle
  std::optional<SubgroupId> complement;       // U normal with I = R x U, U nontrivial
  std::optional<bool> power_isomorphic;       // G/R = (L_A)_delta, when the search ran
};

/// The A-crown: intersects the normal N with G/N isomorphic to L_A and
/// soc(G/N) equivalent to A, then reads off I from the socle of G/R. Also
/// searches all normal subgroups for a complement U of R in I and, when
/// sizes allow, checks G/R against the crown-based power.
///
/// Throws PreconditionError for a Frattini factor.
Crown crown_of(SubgroupCache& cache, const std::vector<ChiefFactor>& series, std::size_t index,
               std::size_t table_cap = default_table_cap);

/// One crown per equivalence class of non-Frattini factors.
std::vector<Crown> crowns(SubgroupCache& cache, std::size_t table_cap = default_table_cap);

nlohmann::json crown_summary_json(SubgroupCache& cache, const std::string& group_id,
                                  const std::vector<Crown>& crowns);

}  // namespace rankgraph

#endif
