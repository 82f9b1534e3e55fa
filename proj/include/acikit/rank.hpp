#pragma once

#include <cstdint>
#include <optional>
#include <set>

#include "acikit/aci.hpp"

namespace acik {

/// Caps on the three enumeration axes. Exceeding one throws BudgetExceeded
/// (completions, vectors) or SubsetBudgetExceeded (column subsets).
struct Budgets {
  std::int64_t completions = 1LL << 22;
  std::int64_t vectors = 1LL << 20;
  std::int64_t subsets = 1LL << 16;
};

enum class RankMethod { exhaustive, decomposed };

struct RankSummary {
  std::set<int> rank_set;
  int mrank = 0;  // min over completions
  int Mrank = 0;  // max over completions
  std::optional<int> constant;  // set iff the rank set is a singleton
  std::int64_t completions_examined = 0;
  RankMethod method = RankMethod::exhaustive;
};

/// Rank of a constant matrix (no variables); cheap special case.
int rank_constant(const ACIMatrix& A);

/// Full rank set by enumerating completions. Early exit once every value in
/// {0, ..., min(m, n)} has been seen.
RankSummary rank_set_exhaustive(const ACIMatrix& A, const Budgets& b = {});

/// Whether every completion has rank exactly r; aborts at the first miss.
bool has_constant_rank(const ACIMatrix& A, int r, const Budgets& b = {});

/// Rank set, trying a zero-block decomposition before falling back to full
/// enumeration. The decomposition route only ever certifies singleton sets.
RankSummary rank_set(const ACIMatrix& A, const Budgets& b = {});

/// The constant rank if the rank set is a singleton, otherwise nullopt.
std::optional<int> constant_rank(const ACIMatrix& A, const Budgets& b = {});

}  // namespace acik
