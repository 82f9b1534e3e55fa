#pragma once

// Internal: search for an equivalence T A Q with an r x s zero block in the
// lower-left corner, where r = m + n - s - rho. Shared by the rank-set
// shortcut and the decomposition module.

#include <cstdint>
#include <optional>
#include <vector>

#include "acikit/aci.hpp"

namespace acik::detail {

/// Constant matrix whose left kernel is exactly the set of row functionals
/// annihilating the selected columns identically as polynomials: one column
/// per constant column plus one per variable coefficient column.
Mat annihilation_target(const ACIMatrix& A, const std::vector<int>& cols);

struct ZeroBlockSplit {
  int r = 0;
  int s = 0;
  Equivalence eq;            // apply_equivalence(A, eq) has the zero block
  std::vector<int> cols;     // the s source columns, ascending
};

/// Scans column subsets (size ascending, lexicographic within a size) for one
/// whose columns admit exactly r independent constant left annihilators.
/// Throws SubsetBudgetExceeded when the scan would exceed subset_budget and
/// throw_on_budget is set; otherwise gives up quietly.
std::optional<ZeroBlockSplit> find_zero_block_impl(const ACIMatrix& A, int rho,
                                                   std::int64_t subset_budget,
                                                   bool throw_on_budget);

}  // namespace acik::detail
