#pragma once

#include "acikit/rank.hpp"

namespace acik {

/// Verdict of a single-deletion irreducibility scan.
struct IrreducibilityResult {
  bool irreducible = false;
  std::optional<int> deletable;  // first deletable row/column index (0-based)
};

/// Everything the constant-rank taxonomy decides about a matrix. The flags
/// below `constant` are only meaningful when `constant` is present.
struct Classification {
  RankSummary rank;
  std::optional<int> constant;     // mirror of rank.constant
  bool full_rank = false;          // constant rank equals min{m, n}
  bool square_fr = false;          // constant rank m = n
  bool minimal_fr = false;         // constant rank m < n and column irreducible
  bool maximal_fr = false;         // constant rank n < m and non-augmentable
  bool row_reducible = false;
  bool column_reducible = false;
  bool irreducible = false;        // neither row nor column reducible
  bool column_augmentable = false;
  bool completely_irreducible = false;  // column irreducible and non-augmentable
  std::optional<int> deletable_row;     // witnesses, 0-based
  std::optional<int> deletable_column;
  std::optional<std::vector<Fe>> augmenting_vector;
};

/// No single-column deletion leaves constant rank rho; on reducible, reports
/// the first deletable column (0-based scan). Single-column matrices count as
/// irreducible. Throws NotConstantRank when rank_set(A) != {rho}.
IrreducibilityResult is_column_irreducible(const ACIMatrix& A, int rho, const Budgets& b = {});

/// Row version of the above.
IrreducibilityResult is_row_irreducible(const ACIMatrix& A, int rho, const Budgets& b = {});

/// First constant column v with rank_set([A v]) = {rho + 1}, searching the
/// zero vector and then one representative per projective class (first
/// nonzero coordinate scaled to 1) in ascending lexicographic order; nullopt
/// when no such v exists. Throws NotConstantRank when rank_set(A) != {rho},
/// BudgetExceeded when q^m exceeds the vector budget.
std::optional<std::vector<Fe>> find_augmenting_vector(const ACIMatrix& A, int rho,
                                                      const Budgets& b = {});

Classification classify(const ACIMatrix& A, const Budgets& b = {});

}  // namespace acik
