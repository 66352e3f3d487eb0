#pragma once

// Exhaustive scans checking that descriptor equality, minimal-graph equality
// and the arithmetic/duality characterizations coincide over a parameter box.

#include <cstdint>
#include <string>
#include <vector>

namespace plumb {

struct SurveyReport {
  std::string parameters;  // human-readable scan bounds
  std::int64_t pairs_scanned = 0;
  std::int64_t oriented_homeo = 0;
  std::int64_t unoriented_only = 0;
  std::int64_t bilipschitz_distinct = 0;
  std::int64_t skipped_unrepresentable = 0;  // duals needing a loop vertex
  std::vector<std::string> counterexamples;  // expected empty
  // pairs with equal inner-rate multisets that are still distinct
  std::vector<std::string> same_rates_distinct;

  bool ok() const { return counterexamples.empty(); }
};

/// Pairs (p,q) vs (p,p-q) over all coprime 1 <= q <= p/2, 2 <= p <= pmax:
/// checks bnp_equal <=> equal canonical chains <=> q^2 = -1 (mod p).
SurveyReport survey_lens(std::int64_t pmax);

/// Cusp words up to rotation/reflection with 2 <= k <= kmax and
/// 2 <= b_i <= bmax against their orientation-reversal duals: checks
/// bnp_equal <=> cusp_oriented_homeo; duals of (3,2,...,2) are skipped and
/// counted. Pairs with equal rate multisets but unequal descriptors are
/// recorded.
SurveyReport survey_cusp(std::int64_t kmax, std::int64_t bmax);

}  // namespace plumb
