#ifndef RANKGRAPH_VERIFY_HPP
#define RANKGRAPH_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rankgraph/catalog.hpp"

namespace rankgraph {

struct VerifyParams {
  std::vector<std::string> groups;  // empty: the lemma's default instance set
  std::optional<unsigned> t;
  std::optional<unsigned> eta;
  std::optional<unsigned> d;
  std::optional<std::size_t> samples;
  std::optional<std::size_t> slice;   // exhaustive prefix length (primo)
  std::optional<std::size_t> max_order;
  bool sampled = false;
  std::uint64_t seed = 42;
  std::string x, y;  // cycle notation, lambda only
};

struct VerifyReport {
  std::string lemma;
  bool pass = false;
  std::uint64_t instances = 0;
  std::uint64_t violations = 0;
  std::uint64_t rejected = 0;  // inputs outside the statement's hypotheses
  std::uint64_t seed = 0;
  std::vector<std::string> notes;  // violations and rejections, capped
  nlohmann::json details = nlohmann::json::object();
};

void to_json(nlohmann::json& j, const VerifyReport& r);

const std::vector<std::string>& lemma_ids();

/// Runs the named statement check. Deterministic for a fixed seed.
/// Throws PreconditionError for an unknown id or unusable parameters.
VerifyReport verify_lemma(const Catalog& catalog, const std::string& id,
                          const VerifyParams& params = {});

}  // namespace rankgraph

#endif
