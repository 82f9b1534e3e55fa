#include "acikit/rank.hpp"

#include <algorithm>
#include <cmath>

#include "acikit/error.hpp"
#include "zero_block.hpp"

namespace acik {

namespace {

// Flattened evaluator: walks all completions in canonical order (variables
// lexicographic, first variable most significant) and hands each completed
// matrix to the visitor. Visitor returns false to stop early.
class CompletionWalker {
 public:
  explicit CompletionWalker(const ACIMatrix& A)
      : A_(&A), f_(A.field()), scratch_(A.field(), A.rows(), A.cols()) {
    const auto& vars = A.variables();
    for (int i = 0; i < A.rows(); ++i)
      for (int j = 0; j < A.cols(); ++j) {
        const AffineForm& e = A.at(i, j);
        std::size_t cell = static_cast<std::size_t>(i) * A.cols() + j;
        for (const auto& [v, c] : e.terms) {
          int idx = static_cast<int>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
          terms_.push_back({cell, idx, c});
        }
      }
  }

  std::int64_t total_completions() const {
    long q = f_.q();
    std::int64_t total = 1;
    for (std::size_t i = 0; i < A_->variables().size(); ++i) {
      if (total > (std::int64_t{1} << 62) / q) return std::int64_t{1} << 62;
      total *= q;
    }
    return total;
  }

  template <typename Visit>
  std::int64_t walk(std::int64_t budget, Visit visit) {
    std::int64_t needed = total_completions();
    if (needed > budget)
      throw Error(Errc::budget_exceeded, std::to_string(needed) + " completions needed, budget " +
                                             std::to_string(budget));
    const auto& vars = A_->variables();
    int V = static_cast<int>(vars.size());
    std::vector<Fe> vals(V, 0);
    std::int64_t examined = 0;
    long q = f_.q();
    while (true) {
      ++examined;
      for (int i = 0; i < scratch_.m; ++i)
        for (int j = 0; j < scratch_.n; ++j) scratch_.at(i, j) = A_->at(i, j).constant;
      for (const auto& t : terms_)
        scratch_.a[t.cell] = f_.add(scratch_.a[t.cell], f_.mul(t.coeff, vals[t.var]));
      if (!visit(scratch_)) return examined;
      // odometer: last variable fastest
      int i = V - 1;
      while (i >= 0 && static_cast<long>(vals[i]) + 1 == q) vals[i--] = 0;
      if (i < 0) return examined;
      ++vals[i];
    }
  }

 private:
  struct Term {
    std::size_t cell;
    int var;
    Fe coeff;
  };
  const ACIMatrix* A_;
  Field f_;
  Mat scratch_;
  std::vector<Term> terms_;
};

RankSummary finish(std::set<int> ranks, std::int64_t examined, RankMethod method) {
  RankSummary s;
  s.rank_set = std::move(ranks);
  s.mrank = *s.rank_set.begin();
  s.Mrank = *s.rank_set.rbegin();
  if (s.rank_set.size() == 1) s.constant = s.mrank;
  s.completions_examined = examined;
  s.method = method;
  return s;
}

}  // namespace

int rank_constant(const ACIMatrix& A) {
  if (!A.is_constant()) throw Error(Errc::precondition_violated, "matrix has variables");
  return rank_of(A.complete({}));
}

RankSummary rank_set_exhaustive(const ACIMatrix& A, const Budgets& b) {
  int full = std::min(A.rows(), A.cols());
  std::set<int> ranks;
  CompletionWalker walker(A);
  std::int64_t examined = walker.walk(b.completions, [&](Mat& M) {
    ranks.insert(rank_of_inplace(M));
    return static_cast<int>(ranks.size()) != full + 1;  // stop once every rank occurred
  });
  return finish(std::move(ranks), examined, RankMethod::exhaustive);
}

bool has_constant_rank(const ACIMatrix& A, int r, const Budgets& b) {
  if (r < 0 || r > std::min(A.rows(), A.cols())) return false;
  bool ok = true;
  CompletionWalker walker(A);
  walker.walk(b.completions, [&](Mat& M) {
    ok = rank_of_inplace(M) == r;
    return ok;
  });
  return ok;
}

RankSummary rank_set(const ACIMatrix& A, const Budgets& b) {
  if (A.is_constant()) return finish({rank_constant(A)}, 1, RankMethod::exhaustive);
  int m = A.rows(), n = A.cols();
  Completion zeros;
  for (const auto& v : A.variables()) zeros[v] = 0;
  int rho0 = rank_of(A.complete(zeros));
  if (rho0 < std::min(m, n)) {
    auto split = detail::find_zero_block_impl(A, rho0, b.subsets, /*throw_on_budget=*/false);
    if (split) {
      ACIMatrix B = apply_equivalence(A, split->eq);
      int r = split->r, s = split->s;
      std::vector<int> all_rows(m), top_rows, bot_rows, left_cols, right_cols;
      for (int i = 0; i < m; ++i) all_rows[i] = i;
      for (int i = 0; i < m - r; ++i) top_rows.push_back(i);
      for (int i = m - r; i < m; ++i) bot_rows.push_back(i);
      for (int j = 0; j < s; ++j) left_cols.push_back(j);
      for (int j = s; j < n; ++j) right_cols.push_back(j);
      if (r == m) {
        // the selected columns vanish identically
        RankSummary sub = rank_set(B.submatrix(all_rows, right_cols), b);
        sub.completions_examined += 1;
        sub.method = RankMethod::decomposed;
        return sub;
      }
      if (s == n) {
        RankSummary sub = rank_set(B.submatrix(top_rows, left_cols), b);
        sub.completions_examined += 1;
        sub.method = RankMethod::decomposed;
        return sub;
      }
      RankSummary s11 = rank_set(B.submatrix(top_rows, left_cols), b);
      if (s11.constant == m - r) {
        RankSummary s22 = rank_set(B.submatrix(bot_rows, right_cols), b);
        if (s22.constant == n - s)
          return finish({rho0}, 1 + s11.completions_examined + s22.completions_examined,
                        RankMethod::decomposed);
      }
    }
  }
  return rank_set_exhaustive(A, b);
}

std::optional<int> constant_rank(const ACIMatrix& A, const Budgets& b) {
  return rank_set(A, b).constant;
}

}  // namespace acik
