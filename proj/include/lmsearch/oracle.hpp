#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "lmsearch/domain.hpp"

namespace lmsearch {

// Ground truth for one instance, computed by best-first enumeration of every
// node with f <= theta* plus the first distinct f-value beyond. Profiles are
// immutable once built.
struct OracleProfile {
  std::vector<Cost> values;               // distinct f-values, ascending
  std::vector<std::uint64_t> cum_counts;  // N(values[i])
  Cost theta0 = 0;                        // f(root)
  Cost theta_star = 0;                    // optimal solution cost
  std::uint64_t n_star = 0;               // N(theta_star)
  Cost delta_min = kInf;                  // min f-gap at values <= theta*; +inf if none
  Cost delta_star = kInf;                 // f-gap at theta*; +inf when the fringe is empty

  // N(theta): nodes with f <= theta. 0 below theta0; throws std::out_of_range
  // beyond the enumerated horizon.
  std::uint64_t n_of(Cost theta) const;

  // Smallest distinct value v with N(v) > budget; throws std::out_of_range
  // when no enumerated value exceeds it.
  Cost theta_exceed(std::uint64_t budget) const;
};

struct OracleLimits {
  std::uint64_t node_cap = 5'000'000;
};

// Throws OracleCapExceeded when the enumeration outgrows the cap and
// std::invalid_argument when the (finite) tree holds no goal.
OracleProfile profile(const Domain& domain, const OracleLimits& limits = {});

struct OmegaPair {
  std::uint64_t omega1 = 0;
  std::uint64_t omega2 = 0;
};

// omega1 = ceil(log2(theta*/theta0)) + ceil(log2(theta*/delta_min))
// omega2 = ceil(log2(theta*/theta0)) + max(0, ceil(log2(theta*/(2 delta*))))
// Infinite-gap sentinels contribute zero to their term.
OmegaPair bound_omega(const OracleProfile& p);

// Zoomer guarantee: max{1, 4*omega1} * N(theta*).
std::uint64_t zoomer_bound(const OracleProfile& p);

// Simple-ZZZ guarantee: N0 + 2*(4 + ceil(log2(N*/N0)) + log2(omega2)) * omega2 * N*.
// Collapses to N0 when omega2 == 0 (the first call already solves).
double zzz_bound(const OracleProfile& p, std::uint64_t n0);

// Writes "value,cumulative_count" rows (with header) for debugging.
void write_profile_csv(const OracleProfile& p, std::ostream& os);

}  // namespace lmsearch
