#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "motive/mackey.hpp"

namespace motive {

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
};

using CheckList = std::vector<Check>;

inline bool all_pass(const CheckList &checks) {
  for (const auto &c : checks)
    if (!c.pass) return false;
  return true;
}

struct CheckOptions {
  std::uint64_t seed = 1;
  /// Exhaustive loops are replaced by this many random samples once they get too large.
  int samples = 4000;
};

/// [G/H][G/K] as an orbit decomposition of the product set G/H x G/K.
std::vector<StructureConstants::Term> burnside_product_by_orbits(const BurnsideRing &b, int h, int k);

CheckList group_checks(const SubgroupClassTable &table);
CheckList burnside_checks(const BurnsideRing &b, const CheckOptions &options = {});
CheckList crossed_checks(const CrossedBurnsideRing &c, const CheckOptions &options = {});
/// rho-related checks and block decompositions for every prime dividing |G|.
CheckList center_checks(const CrossedBurnsideRing &c, const CheckOptions &options = {});
/// Invariants of the span algebra, zeta, projection and iota_k over one coefficient ring.
CheckList mackey_checks(const MackeyAlgebra &m, const CoefficientRing &ring);
/// zeta maps onto the centre: rank of its image against dim Z mu_k(G).
Check zeta_surjectivity(const MackeyAlgebra &m, const CoefficientRing &ring);
/// Blocks of Z F_q G against the exhaustive scan, and containment in the span of rho.
CheckList block_checks(const CrossedBurnsideRing &c, int p, std::optional<int> exponent = std::nullopt);

/// Span count by Burnside's lemma on (Omega x Omega)^S, independent of the enumeration.
std::uint64_t span_count_by_formula(const MackeyAlgebra &m);

} // namespace motive
