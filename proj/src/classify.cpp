#include "acikit/classify.hpp"

#include <algorithm>

#include "acikit/error.hpp"

namespace acik {

namespace {

void require_constant(const ACIMatrix& A, int rho, const Budgets& b) {
  if (constant_rank(A, b) != std::optional<int>(rho))
    throw Error(Errc::not_constant_rank, "rank set is not {" + std::to_string(rho) + "}");
}

IrreducibilityResult column_scan(const ACIMatrix& A, int rho, const Budgets& b) {
  IrreducibilityResult res;
  if (A.cols() > 1)
    for (int j = 0; j < A.cols(); ++j)
      if (has_constant_rank(A.drop_col(j), rho, b)) {
        res.deletable = j;
        return res;
      }
  res.irreducible = true;
  return res;
}

IrreducibilityResult row_scan(const ACIMatrix& A, int rho, const Budgets& b) {
  IrreducibilityResult res;
  if (A.rows() > 1)
    for (int i = 0; i < A.rows(); ++i)
      if (has_constant_rank(A.drop_row(i), rho, b)) {
        res.deletable = i;
        return res;
      }
  res.irreducible = true;
  return res;
}

std::optional<std::vector<Fe>> augmenting_search(const ACIMatrix& A, int rho, const Budgets& b) {
  int m = A.rows();
  if (rho + 1 > std::min(m, A.cols() + 1)) return std::nullopt;
  long q = A.field().q();
  std::int64_t space = 1;
  for (int i = 0; i < m; ++i) {
    if (space > b.vectors / q + 1) {
      space = b.vectors + 1;
      break;
    }
    space *= q;
  }
  if (space > b.vectors)
    throw Error(Errc::budget_exceeded, "augmenting vector space exceeds budget");
  auto attempt = [&](const std::vector<Fe>& v) { return has_constant_rank(A.augment(v), rho + 1, b); };
  std::vector<Fe> v(m, 0);
  if (attempt(v)) return v;
  // one representative per projective class, ascending lexicographic order:
  // the first nonzero coordinate is scaled to 1, so later leads come first
  for (int lead = m - 1; lead >= 0; --lead) {
    std::fill(v.begin(), v.end(), 0);
    v[lead] = 1;
    while (true) {
      if (attempt(v)) return v;
      int i = m - 1;
      while (i > lead && static_cast<long>(v[i]) + 1 == q) v[i--] = 0;
      if (i == lead) break;
      ++v[i];
    }
  }
  return std::nullopt;
}

}  // namespace

IrreducibilityResult is_column_irreducible(const ACIMatrix& A, int rho, const Budgets& b) {
  require_constant(A, rho, b);
  return column_scan(A, rho, b);
}

IrreducibilityResult is_row_irreducible(const ACIMatrix& A, int rho, const Budgets& b) {
  require_constant(A, rho, b);
  return row_scan(A, rho, b);
}

std::optional<std::vector<Fe>> find_augmenting_vector(const ACIMatrix& A, int rho,
                                                      const Budgets& b) {
  require_constant(A, rho, b);
  return augmenting_search(A, rho, b);
}

Classification classify(const ACIMatrix& A, const Budgets& b) {
  Classification c;
  c.rank = rank_set(A, b);
  c.constant = c.rank.constant;
  if (!c.constant) return c;
  int rho = *c.constant;
  if (rho == 0) return c;  // taxonomy starts at rank 1; flags stay false
  int m = A.rows(), n = A.cols();
  auto col = column_scan(A, rho, b);
  auto row = row_scan(A, rho, b);
  c.column_reducible = !col.irreducible;
  c.deletable_column = col.deletable;
  c.row_reducible = !row.irreducible;
  c.deletable_row = row.deletable;
  c.irreducible = !c.row_reducible && !c.column_reducible;
  c.augmenting_vector = augmenting_search(A, rho, b);
  c.column_augmentable = c.augmenting_vector.has_value();
  c.full_rank = rho == std::min(m, n);
  c.square_fr = rho == m && rho == n;
  c.minimal_fr = rho == m && m < n && !c.column_reducible;
  c.maximal_fr = rho == n && n < m && !c.column_augmentable;
  c.completely_irreducible = !c.column_reducible && !c.column_augmentable;
  return c;
}

}  // namespace acik
