#include "acikit/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "acikit/error.hpp"
#include "zero_block.hpp"

namespace acik {

const char* block_tag_name(BlockTag t) {
  switch (t) {
    case BlockTag::triangular: return "triangular";
    case BlockTag::minimal_fr: return "minimal_fr";
    case BlockTag::maximal_fr: return "maximal_fr";
  }
  return "?";
}

const char* decomp_case_name(DecompCase c) {
  switch (c) {
    case DecompCase::square: return "square";
    case DecompCase::wide: return "wide";
    case DecompCase::tall: return "tall";
    case DecompCase::split: return "split";
    case DecompCase::top_only: return "top_only";
    case DecompCase::right_only: return "right_only";
  }
  return "?";
}

std::vector<std::vector<Fe>> constant_left_kernel(const ACIMatrix& A,
                                                  const std::vector<int>& cols) {
  if (cols.empty()) throw Error(Errc::empty_selection, "no columns selected");
  for (int j : cols)
    if (j < 0 || j >= A.cols()) throw Error(Errc::index_out_of_range, "column " + std::to_string(j));
  return left_kernel_basis(detail::annihilation_target(A, cols));
}

ZeroBlockCertificate find_zero_block(const ACIMatrix& A, int rho, const Budgets& b) {
  if (rho >= std::min(A.rows(), A.cols()) || constant_rank(A, b) != std::optional<int>(rho))
    throw Error(Errc::not_constant_rank,
                "requires constant rank " + std::to_string(rho) + " below min{m,n}");
  if (A.cols() < 63 && (std::int64_t{1} << A.cols()) > b.subsets)
    throw Error(Errc::subset_budget_exceeded, "2^n column subsets exceed budget");
  auto split = detail::find_zero_block_impl(A, rho, b.subsets, /*throw_on_budget=*/true);
  if (!split)
    throw Error(Errc::verification_failed, "no zero block found for a constant-rank matrix");
  return ZeroBlockCertificate{split->r, split->s, std::move(split->eq)};
}

namespace {

Fe coeff_of(const AffineForm& e, const std::string& var) {
  for (const auto& [v, c] : e.terms)
    if (v == var) return c;
  return 0;
}

Fe dot(const Field& f, const std::vector<Fe>& a, const std::vector<Fe>& b) {
  Fe acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

Mat block_diag(const Mat& a, const Mat& b) {
  Mat r(a.field, a.m + b.m, a.n + b.n);
  for (int i = 0; i < a.m; ++i)
    for (int j = 0; j < a.n; ++j) r.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.m; ++i)
    for (int j = 0; j < b.n; ++j) r.at(a.m + i, a.n + j) = b.at(i, j);
  return r;
}

}  // namespace

std::pair<PivotPlacement, ACIMatrix> pivot_reduce(const ACIMatrix& A) {
  const Field& f = A.field();
  int m = A.rows(), n = A.cols();
  std::vector<AffineForm> W;
  W.reserve(static_cast<std::size_t>(m) * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) W.push_back(A.at(i, j));
  auto at = [&](int i, int j) -> AffineForm& { return W[static_cast<std::size_t>(i) * n + j]; };
  Mat T = identity(f, m);
  std::vector<int> col_src(n);
  for (int j = 0; j < n; ++j) col_src[j] = j;
  std::vector<std::pair<std::string, int>> pivots;
  for (int k = 0; k < std::min(m, n); ++k) {
    // first entry of the untouched block holding a variable; the entry's
    // terms are sorted, so its first term is the lexicographic tie-break
    int pi = -1, pj = -1;
    for (int i = k; i < m && pi < 0; ++i)
      for (int j = k; j < n; ++j)
        if (!at(i, j).terms.empty()) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    const std::string var = at(pi, pj).terms.front().first;
    if (pi != k) {
      for (int j = 0; j < n; ++j) std::swap(at(pi, j), at(k, j));
      for (int j = 0; j < m; ++j) std::swap(T.at(pi, j), T.at(k, j));
    }
    if (pj != k) {
      for (int i = 0; i < m; ++i) std::swap(at(i, pj), at(i, k));
      std::swap(col_src[pj], col_src[k]);
    }
    Fe c = coeff_of(at(k, k), var);
    for (int i = 0; i < m; ++i) {
      if (i == k) continue;
      Fe ci = coeff_of(at(i, k), var);
      if (ci == 0) continue;
      Fe factor = f.neg(f.mul(ci, f.inv(c)));
      for (int j = 0; j < n; ++j)
        at(i, j) = form_add(f, at(i, j), form_scale(f, factor, at(k, j)));
      for (int j = 0; j < m; ++j) T.at(i, j) = f.add(T.at(i, j), f.mul(factor, T.at(k, j)));
    }
    pivots.emplace_back(var, k);
  }
  PivotPlacement placement{std::move(pivots), Equivalence{std::move(T), std::move(col_src)}};
  return {std::move(placement), ACIMatrix::validate(f, m, n, std::move(W))};
}

namespace {

// Constant matrix whose left kernel consists of the functionals t making
// t*A constant everywhere and zero outside column j.
Mat triangular_target(const ACIMatrix& A, int skip_constant_col) {
  const Field& f = A.field();
  int m = A.rows();
  int width = 0;
  for (int j = 0; j < A.cols(); ++j)
    width += static_cast<int>(A.column_vars(j).size()) + (j == skip_constant_col ? 0 : 1);
  Mat K(f, m, width);
  int w = 0;
  for (int j = 0; j < A.cols(); ++j) {
    if (j != skip_constant_col) {
      for (int i = 0; i < m; ++i) K.at(i, w) = A.at(i, j).constant;
      ++w;
    }
    for (const auto& v : A.column_vars(j)) {
      for (int i = 0; i < m; ++i) K.at(i, w) = coeff_of(A.at(i, j), v);
      ++w;
    }
  }
  return K;
}

Equivalence triangularize_impl(const ACIMatrix& A) {
  const Field& f = A.field();
  int n = A.rows();
  if (n == 1) {
    const AffineForm& e = A.at(0, 0);
    if (!e.is_constant() || e.constant == 0)
      throw Error(Errc::not_square_full_rank, "1x1 block is not a nonzero constant");
    Mat T(f, 1, 1);
    T.at(0, 0) = f.inv(e.constant);
    return Equivalence{std::move(T), {0}};
  }
  for (int j = 0; j < n; ++j) {
    auto kernel = left_kernel_basis(triangular_target(A, j));
    std::vector<Fe> cj(n);
    for (int i = 0; i < n; ++i) cj[i] = A.at(i, j).constant;
    for (auto& t : kernel) {
      Fe d = dot(f, t, cj);
      if (d == 0) continue;
      Fe dinv = f.inv(d);
      for (auto& x : t) x = f.mul(dinv, x);
      auto added = extend_to_basis(f, {t}, n);
      Mat T0(f, n, n);
      for (int i = 0; i < n - 1; ++i)
        for (int k = 0; k < n; ++k) T0.at(i, k) = added[i][k];
      for (int k = 0; k < n; ++k) T0.at(n - 1, k) = t[k];
      std::vector<int> q0;
      for (int k = 0; k < n; ++k)
        if (k != j) q0.push_back(k);
      q0.push_back(j);
      Equivalence inner{std::move(T0), std::move(q0)};
      ACIMatrix B = apply_equivalence(A, inner);
      std::vector<int> top(n - 1), left(n - 1);
      for (int k = 0; k < n - 1; ++k) top[k] = left[k] = k;
      Equivalence sub = triangularize_impl(B.submatrix(top, left));
      Equivalence outer{block_diag(sub.T, identity(f, 1)), sub.col_src};
      outer.col_src.push_back(n - 1);
      return compose(outer, inner);
    }
  }
  throw Error(Errc::not_square_full_rank, "no eliminable column found");
}

WideReduction reduce_wide_impl(const ACIMatrix& A, const Budgets& b) {
  const Field& f = A.field();
  int m = A.rows(), n = A.cols();
  ACIMatrix current = A;
  std::vector<int> survivors(n);
  for (int j = 0; j < n; ++j) survivors[j] = j;
  std::vector<int> deleted;
  bool changed = true;
  while (changed && current.cols() > 1) {
    changed = false;
    for (int j = 0; j < current.cols(); ++j)
      if (has_constant_rank(current.drop_col(j), m, b)) {
        deleted.push_back(survivors[j]);
        survivors.erase(survivors.begin() + j);
        current = current.drop_col(j);
        changed = true;
        break;
      }
  }
  std::sort(deleted.begin(), deleted.end());
  int kept = current.cols();
  WideReduction res{BlockTag::minimal_fr, kept, identity_equivalence(f, m, n)};
  if (kept == m) {
    Equivalence tri = triangularize_impl(current);
    res.tag = BlockTag::triangular;
    res.witness.T = std::move(tri.T);
    for (int j = 0; j < kept; ++j) res.witness.col_src[j] = survivors[tri.col_src[j]];
  } else {
    for (int j = 0; j < kept; ++j) res.witness.col_src[j] = survivors[j];
  }
  for (int j = 0; j < static_cast<int>(deleted.size()); ++j)
    res.witness.col_src[kept + j] = deleted[j];
  return res;
}

TallReduction reduce_tall_impl(const ACIMatrix& A, const Budgets& b) {
  const Field& f = A.field();
  int m = A.rows(), n = A.cols();
  ACIMatrix current = A;
  Mat T_total = identity(f, m);
  int stripped = 0;
  while (current.rows() > n) {
    auto v = find_augmenting_vector(current, n, b);
    if (!v) break;
    int mc = current.rows();
    int jstar = -1;
    for (int i = mc - 1; i >= 0; --i)
      if ((*v)[i] != 0) {
        jstar = i;
        break;
      }
    // T' sends v to e1: first row t with t.v = 1 (lexicographically least
    // such functional), remaining rows e_i - v_i t annihilate v
    Mat Tp(f, mc, mc);
    Fe inv = f.inv((*v)[jstar]);
    Tp.at(0, jstar) = inv;
    int row = 1;
    for (int i = 0; i < mc; ++i) {
      if (i == jstar) continue;
      Tp.at(row, i) = 1;
      Tp.at(row, jstar) = f.neg(f.mul((*v)[i], inv));
      ++row;
    }
    ACIMatrix next = apply_equivalence(current, Equivalence{Tp, [&] {
                                         std::vector<int> id(n);
                                         for (int j = 0; j < n; ++j) id[j] = j;
                                         return id;
                                       }()});
    std::vector<int> keep_rows(mc - 1), all_cols(n);
    for (int i = 0; i < mc - 1; ++i) keep_rows[i] = i + 1;
    for (int j = 0; j < n; ++j) all_cols[j] = j;
    ACIMatrix survivor = next.submatrix(keep_rows, all_cols);
    if (!has_constant_rank(survivor, n, b))
      throw Error(Errc::verification_failed, "stripped block lost constant rank");
    T_total = mat_mul(block_diag(identity(f, stripped), Tp), T_total);
    current = std::move(survivor);
    ++stripped;
  }
  int kept = m - stripped;
  TallReduction res{BlockTag::maximal_fr, kept, identity_equivalence(f, m, n)};
  if (kept == n) {
    Equivalence tri = triangularize_impl(current);
    res.tag = BlockTag::triangular;
    T_total = mat_mul(block_diag(identity(f, stripped), tri.T), T_total);
    res.witness.col_src = tri.col_src;
  }
  res.witness.T = std::move(T_total);
  return res;
}

int require_constant_rank(const ACIMatrix& A, const Budgets& b) {
  auto rho = constant_rank(A, b);
  if (!rho) throw Error(Errc::not_constant_rank, "rank set is not a singleton");
  return *rho;
}

}  // namespace

Equivalence triangularize_square(const ACIMatrix& A, const Budgets& b) {
  if (A.rows() != A.cols() || !has_constant_rank(A, A.rows(), b))
    throw Error(Errc::not_square_full_rank, "requires a square matrix of constant full rank");
  return triangularize_impl(A);
}

WideReduction reduce_wide(const ACIMatrix& A, const Budgets& b) {
  if (A.rows() >= A.cols() || !has_constant_rank(A, A.rows(), b))
    throw Error(Errc::precondition_violated, "requires constant rank m with m < n");
  return reduce_wide_impl(A, b);
}

TallReduction reduce_tall(const ACIMatrix& A, const Budgets& b) {
  if (A.cols() >= A.rows() || !has_constant_rank(A, A.cols(), b))
    throw Error(Errc::precondition_violated, "requires constant rank n with n < m");
  return reduce_tall_impl(A, b);
}

BlockDecomposition canonical_decomposition(const ACIMatrix& A, const Budgets& b) {
  const Field& f = A.field();
  int m = A.rows(), n = A.cols();
  int rho = require_constant_rank(A, b);
  if (rho < 1) throw Error(Errc::not_constant_rank, "constant rank 0 has no block layout");
  if (rho == m && rho == n) {
    BlockDecomposition d{DecompCase::square, rho, {}, {}, {}, {}, triangularize_impl(A)};
    d.B = BlockDesc{BlockTag::triangular, 0, n, 0, n, n};
    return d;
  }
  if (rho == m) {
    WideReduction wr = reduce_wide_impl(A, b);
    BlockDecomposition d{DecompCase::wide, rho, {}, {}, {}, {}, wr.witness};
    d.B = BlockDesc{wr.tag, 0, m, 0, wr.kept, m};
    return d;
  }
  if (rho == n) {
    TallReduction tr = reduce_tall_impl(A, b);
    BlockDecomposition d{DecompCase::tall, rho, {}, {}, {}, {}, tr.witness};
    d.C = BlockDesc{tr.tag, m - tr.kept_rows, m, 0, n, n};
    return d;
  }
  auto split = detail::find_zero_block_impl(A, rho, b.subsets, /*throw_on_budget=*/true);
  if (!split)
    throw Error(Errc::verification_failed, "no zero block found for a constant-rank matrix");
  int r = split->r, s = split->s;
  ACIMatrix B0 = apply_equivalence(A, split->eq);
  std::vector<int> top_rows, bot_rows, left_cols, right_cols, all_rows, all_cols;
  for (int i = 0; i < m - r; ++i) top_rows.push_back(i);
  for (int i = m - r; i < m; ++i) bot_rows.push_back(i);
  for (int j = 0; j < s; ++j) left_cols.push_back(j);
  for (int j = s; j < n; ++j) right_cols.push_back(j);
  for (int i = 0; i < m; ++i) all_rows.push_back(i);
  for (int j = 0; j < n; ++j) all_cols.push_back(j);
  if (r == m) {
    // the selected columns vanish identically; only the column side remains
    TallReduction tr = reduce_tall_impl(B0.submatrix(all_rows, right_cols), b);
    Equivalence outer{std::move(tr.witness.T), {}};
    for (int j = 0; j < s; ++j) outer.col_src.push_back(j);
    for (int j = 0; j < n - s; ++j) outer.col_src.push_back(s + tr.witness.col_src[j]);
    BlockDecomposition d{DecompCase::right_only, rho, r, s, {}, {}, compose(outer, split->eq)};
    d.C = BlockDesc{tr.tag, m - tr.kept_rows, m, s, n, n - s};
    return d;
  }
  if (s == n) {
    WideReduction wr = reduce_wide_impl(B0.submatrix(top_rows, all_cols), b);
    Equivalence outer{block_diag(wr.witness.T, identity(f, r)), wr.witness.col_src};
    BlockDecomposition d{DecompCase::top_only, rho, r, s, {}, {}, compose(outer, split->eq)};
    d.B = BlockDesc{wr.tag, 0, m - r, 0, wr.kept, m - r};
    return d;
  }
  WideReduction wr = reduce_wide_impl(B0.submatrix(top_rows, left_cols), b);
  TallReduction tr = reduce_tall_impl(B0.submatrix(bot_rows, right_cols), b);
  Equivalence outer{block_diag(wr.witness.T, tr.witness.T), {}};
  for (int j = 0; j < s; ++j) outer.col_src.push_back(wr.witness.col_src[j]);
  for (int j = 0; j < n - s; ++j) outer.col_src.push_back(s + tr.witness.col_src[j]);
  BlockDecomposition d{DecompCase::split, rho, r, s, {}, {}, compose(outer, split->eq)};
  d.B = BlockDesc{wr.tag, 0, m - r, 0, wr.kept, m - r};
  d.C = BlockDesc{tr.tag, m - tr.kept_rows, m, s, n, n - s};
  return d;
}

namespace {

void check(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::verification_failed, what);
}

void check_zero_region(const ACIMatrix& D, int row0, int row1, int col0, int col1) {
  for (int i = row0; i < row1; ++i)
    for (int j = col0; j < col1; ++j)
      check(D.at(i, j).is_zero(), "zero block entry is not identically zero");
}

void check_block(const ACIMatrix& D, const BlockDesc& desc, bool is_row_side, const Budgets& b) {
  std::vector<int> rows, cols;
  for (int i = desc.row0; i < desc.row1; ++i) rows.push_back(i);
  for (int j = desc.col0; j < desc.col1; ++j) cols.push_back(j);
  ACIMatrix sub = D.submatrix(rows, cols);
  check(desc.rho == (is_row_side ? sub.rows() : sub.cols()), "block rank does not match its shape");
  if (desc.tag == BlockTag::triangular) {
    check(sub.rows() == sub.cols(), "triangular block is not square");
    for (int i = 0; i < sub.rows(); ++i) {
      const AffineForm& diag = sub.at(i, i);
      check(diag.is_constant() && diag.constant == 1, "triangular diagonal is not constant 1");
      for (int j = 0; j < i; ++j)
        check(sub.at(i, j).is_zero(), "triangular block has a nonzero entry below the diagonal");
    }
  } else {
    Classification c = classify(sub, b);
    check(desc.tag == BlockTag::minimal_fr ? c.minimal_fr : c.maximal_fr,
          "block does not have the claimed full-rank flavor");
  }
}

}  // namespace

void verify_decomposition(const ACIMatrix& A, const BlockDecomposition& d, const Budgets& b) {
  ACIMatrix D = apply_equivalence(A, d.witness);
  int m = A.rows(), n = A.cols();
  check(rank_set(D, b).rank_set == rank_set(A, b).rank_set, "witness changed the rank set");
  switch (d.kind) {
    case DecompCase::square:
    case DecompCase::wide:
      check(d.B.has_value() && !d.C.has_value(), "unexpected block layout");
      break;
    case DecompCase::tall:
      check(d.C.has_value() && !d.B.has_value(), "unexpected block layout");
      break;
    case DecompCase::split:
      check(d.B.has_value() && d.C.has_value() && d.r && d.s, "unexpected block layout");
      check(d.B->rho + d.C->rho == d.rho, "block ranks do not sum to the constant rank");
      check_zero_region(D, m - *d.r, m, 0, *d.s);
      break;
    case DecompCase::top_only:
      check(d.B.has_value() && !d.C.has_value() && d.r, "unexpected block layout");
      check_zero_region(D, m - *d.r, m, 0, n);
      break;
    case DecompCase::right_only:
      check(d.C.has_value() && !d.B.has_value() && d.s, "unexpected block layout");
      check_zero_region(D, 0, m, 0, *d.s);
      break;
  }
  if (d.B) check_block(D, *d.B, /*is_row_side=*/true, b);
  if (d.C) check_block(D, *d.C, /*is_row_side=*/false, b);
}

CoreCertificate extract_core(const ACIMatrix& A, const Budgets& b) {
  BlockDecomposition d = canonical_decomposition(A, b);
  const Field& f = A.field();
  int m = A.rows(), n = A.cols();
  std::vector<int> row_order, col_order;
  int core_rows = 0, core_cols = 0;
  auto push_range = [](std::vector<int>& v, int lo, int hi) {
    for (int i = lo; i < hi; ++i) v.push_back(i);
  };
  switch (d.kind) {
    case DecompCase::square:
    case DecompCase::wide:
      push_range(row_order, 0, m);
      push_range(col_order, 0, n);
      core_rows = m;
      core_cols = d.B->col1;
      break;
    case DecompCase::top_only:
      push_range(row_order, 0, m);
      push_range(col_order, 0, n);
      core_rows = d.B->row1;
      core_cols = d.B->col1;
      break;
    case DecompCase::tall:
      push_range(row_order, d.C->row0, m);
      push_range(row_order, 0, d.C->row0);
      push_range(col_order, 0, n);
      core_rows = m - d.C->row0;
      core_cols = n;
      break;
    case DecompCase::right_only:
      push_range(row_order, d.C->row0, m);
      push_range(row_order, 0, d.C->row0);
      push_range(col_order, d.C->col0, n);
      push_range(col_order, 0, d.C->col0);
      core_rows = m - d.C->row0;
      core_cols = n - d.C->col0;
      break;
    case DecompCase::split:
      push_range(row_order, 0, d.B->row1);
      push_range(row_order, d.C->row0, m);
      push_range(row_order, d.B->row1, d.C->row0);
      push_range(col_order, 0, d.B->col1);
      push_range(col_order, d.C->col0, n);
      push_range(col_order, d.B->col1, d.C->col0);
      core_rows = d.B->row1 + (m - d.C->row0);
      core_cols = d.B->col1 + (n - d.C->col0);
      break;
  }
  Mat P(f, m, m);
  for (int i = 0; i < m; ++i) P.at(i, row_order[i]) = 1;
  Equivalence w{mat_mul(P, d.witness.T), std::vector<int>(n)};
  for (int j = 0; j < n; ++j) w.col_src[j] = d.witness.col_src[col_order[j]];
  ACIMatrix transformed = apply_equivalence(A, w);
  std::vector<int> rows, cols;
  push_range(rows, 0, core_rows);
  push_range(cols, 0, core_cols);
  ACIMatrix core = transformed.submatrix(rows, cols);
  Classification c = classify(core, b);
  if (!c.completely_irreducible || c.constant != std::optional<int>(d.rho))
    throw Error(Errc::verification_failed, "extracted block failed the certificate check");
  return CoreCertificate{std::move(w), core_rows, core_cols, std::move(core), d.rho};
}

namespace {

// Deterministic draws independent of standard-library distribution details.
struct Rng {
  std::mt19937_64 g;
  explicit Rng(std::uint64_t seed) : g(seed) {}
  long below(long k) { return static_cast<long>(g() % static_cast<std::uint64_t>(k)); }
  Fe element(long q) { return static_cast<Fe>(below(q)); }
  Fe nonzero(long q) { return static_cast<Fe>(1 + below(q - 1)); }
  bool coin() { return (g() & 1) != 0; }
};

struct VarPool {
  int budget;
  int next = 0;
  std::optional<std::string> fresh() {
    if (next >= budget) return std::nullopt;
    return "v" + std::to_string(++next);
  }
};

AffineForm random_form(const Field& f, Rng& rng, const std::optional<std::string>& var) {
  AffineForm e = AffineForm::from_constant(rng.element(f.q()));
  if (var && rng.coin()) form_add_term(f, e, *var, rng.nonzero(f.q()));
  return e;
}

// rows <= cols; unit upper triangular left part, every completion has full
// row rank. One pooled variable per column, spent while the budget lasts.
std::vector<AffineForm> full_row_rank_grid(const Field& f, int rows, int cols, Rng& rng,
                                           VarPool& pool) {
  std::vector<std::optional<std::string>> col_var(cols);
  for (int j = 0; j < cols; ++j) col_var[j] = pool.fresh();
  std::vector<AffineForm> grid(static_cast<std::size_t>(rows) * cols);
  auto at = [&](int i, int j) -> AffineForm& { return grid[static_cast<std::size_t>(i) * cols + j]; };
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (j < rows && i == j) at(i, j) = AffineForm::from_constant(1);
      else if (j < rows && i > j) at(i, j) = AffineForm{};
      else at(i, j) = random_form(f, rng, col_var[j]);
    }
  return grid;
}

std::vector<AffineForm> full_col_rank_grid(const Field& f, int rows, int cols, Rng& rng,
                                           VarPool& pool) {
  std::vector<std::optional<std::string>> col_var(cols);
  for (int j = 0; j < cols; ++j) col_var[j] = pool.fresh();
  std::vector<AffineForm> grid(static_cast<std::size_t>(rows) * cols);
  auto at = [&](int i, int j) -> AffineForm& { return grid[static_cast<std::size_t>(i) * cols + j]; };
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (i < cols && i == j) at(i, j) = AffineForm::from_constant(1);
      else if (i < cols && i > j) at(i, j) = AffineForm{};
      else at(i, j) = random_form(f, rng, col_var[j]);
    }
  return grid;
}

}  // namespace

ACIMatrix minimal_gadget(const Field& f) {
  long q = f.q();
  std::vector<AffineForm> grid;
  auto var = [](long i) { return "x" + std::to_string(i); };
  for (long i = 0; i < q; ++i) {
    AffineForm e = AffineForm::from_constant(1);
    if (static_cast<Fe>(i) != 0) form_add_term(f, e, var(i + 1), static_cast<Fe>(i));
    grid.push_back(std::move(e));
  }
  grid.push_back(AffineForm::variable(var(q + 1)));
  for (long i = 0; i < q; ++i) grid.push_back(AffineForm::variable(var(i + 1)));
  grid.push_back(AffineForm::from_constant(1));
  return ACIMatrix::validate(f, 2, static_cast<int>(q) + 1, std::move(grid));
}

ACIMatrix maximal_gadget(const Field& f) {
  long q = f.q();
  int n = static_cast<int>(q) + 1;
  std::vector<AffineForm> grid(static_cast<std::size_t>(2 * q) * n);
  auto at = [&](int i, int j) -> AffineForm& { return grid[static_cast<std::size_t>(i) * n + j]; };
  auto var = [](long i) { return "x" + std::to_string(i); };
  for (long i = 0; i < q; ++i) {
    at(i, i) = AffineForm::from_constant(1);
    AffineForm e = AffineForm::from_constant(f.neg(static_cast<Fe>(i)));
    form_add_term(f, e, var(q + 1), 1);
    at(i, n - 1) = std::move(e);
  }
  for (long i = 0; i < q; ++i) {
    at(q + i, i) = AffineForm::variable(var(i + 1));
    at(q + i, n - 1) = AffineForm::from_constant(1);
  }
  return ACIMatrix::validate(f, static_cast<int>(2 * q), n, std::move(grid));
}

Equivalence random_equivalence(const Field& f, int m, int n, std::uint64_t seed) {
  Rng rng(seed);
  Mat T(f, m, m);
  do {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) T.at(i, j) = rng.element(f.q());
  } while (!is_nonsingular(T));
  std::vector<int> col_src(n);
  for (int j = 0; j < n; ++j) col_src[j] = j;
  for (int j = n - 1; j > 0; --j)
    std::swap(col_src[j], col_src[rng.below(j + 1)]);
  return Equivalence{std::move(T), std::move(col_src)};
}

ACIMatrix gen_constant_rank(const Field& f, int m, int n, int rho, const GenOptions& opt) {
  if (m < 1 || n < 1 || rho < 1 || rho > std::min(m, n))
    throw Error(Errc::infeasible_shape, "rank must satisfy 1 <= rho <= min{m,n}");
  long q = f.q();
  Rng rng(opt.seed);
  int budget = opt.max_vars >= 0 ? opt.max_vars
                                 : std::max(1, static_cast<int>(14.0 / std::log2(double(q))));
  VarPool pool{budget};
  auto zero_form = AffineForm{};
  std::vector<AffineForm> grid;
  if (opt.gadget == GadgetChoice::minimal) {
    if (m != 2 || rho != 2 || n < q + 1)
      throw Error(Errc::infeasible_shape, "minimal gadget needs m = rho = 2 and n >= q+1");
    ACIMatrix g = minimal_gadget(f);
    grid.assign(static_cast<std::size_t>(m) * n, zero_form);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < g.cols(); ++j) grid[static_cast<std::size_t>(i) * n + j] = g.at(i, j);
  } else if (opt.gadget == GadgetChoice::maximal) {
    if (n != q + 1 || rho != n || m < 2 * q)
      throw Error(Errc::infeasible_shape, "maximal gadget needs n = rho = q+1 and m >= 2q");
    ACIMatrix g = maximal_gadget(f);
    grid.assign(static_cast<std::size_t>(m) * n, zero_form);
    for (int i = 0; i < g.rows(); ++i)
      for (int j = 0; j < n; ++j) grid[static_cast<std::size_t>(i) * n + j] = g.at(i, j);
  } else if (rho == m && rho == n) {
    grid = full_row_rank_grid(f, m, n, rng, pool);
  } else if (rho == m) {
    grid = full_row_rank_grid(f, m, n, rng, pool);
  } else if (rho == n) {
    grid = full_col_rank_grid(f, m, n, rng, pool);
  } else {
    // zero block shapes: top strip, right strip, or both-sided split
    int variant = rho >= 2 ? static_cast<int>(rng.below(3)) : static_cast<int>(rng.below(2));
    grid.assign(static_cast<std::size_t>(m) * n, zero_form);
    auto blit = [&](const std::vector<AffineForm>& src, int rows, int cols, int i0, int j0) {
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
          grid[static_cast<std::size_t>(i0 + i) * n + (j0 + j)] =
              src[static_cast<std::size_t>(i) * cols + j];
    };
    if (variant == 0) {
      blit(full_row_rank_grid(f, rho, n, rng, pool), rho, n, 0, 0);
    } else if (variant == 1) {
      blit(full_col_rank_grid(f, m, rho, rng, pool), m, rho, 0, n - rho);
    } else {
      int rho1 = 1 + static_cast<int>(rng.below(rho - 1));
      int rho2 = rho - rho1;
      int s = n - rho2;
      blit(full_row_rank_grid(f, rho1, s, rng, pool), rho1, s, 0, 0);
      blit(full_col_rank_grid(f, m - rho1, rho2, rng, pool), m - rho1, rho2, rho1, s);
      for (int i = 0; i < rho1; ++i)
        for (int j = s; j < n; ++j)
          grid[static_cast<std::size_t>(i) * n + j] = AffineForm::from_constant(rng.element(q));
    }
  }
  ACIMatrix base = ACIMatrix::validate(f, m, n, std::move(grid));
  return apply_equivalence(base, random_equivalence(f, m, n, opt.seed ^ 0x9e3779b97f4a7c15ULL));
}

CompositionResult compose_blocks(const ACIMatrix& A11, const ACIMatrix& A22, Filler filler,
                                 std::uint64_t seed, const Budgets& b) {
  if (!A11.field().same(A22.field()))
    throw Error(Errc::field_mismatch, "blocks live over different fields");
  {
    std::set<std::string> seen(A11.variables().begin(), A11.variables().end());
    for (const auto& v : A22.variables())
      if (seen.count(v)) throw Error(Errc::variable_clash, "shared variable '" + v + "'");
  }
  auto flavor = [&](const ACIMatrix& M) -> std::string {
    Classification c = classify(M, b);
    if (c.square_fr) return "square";
    if (c.minimal_fr) return "minimal";
    if (c.maximal_fr) return "maximal";
    throw Error(Errc::not_classified, "block is not square/minimal/maximal full rank");
  };
  std::string top_kind = flavor(A11), bottom_kind = flavor(A22);
  const Field& f = A11.field();
  int m1 = A11.rows(), n1 = A11.cols(), m2 = A22.rows(), n2 = A22.cols();
  Rng rng(seed);
  std::set<std::string> used(A11.variables().begin(), A11.variables().end());
  used.insert(A22.variables().begin(), A22.variables().end());
  int fresh_idx = 0;
  auto fresh = [&] {
    std::string name;
    do name = "t" + std::to_string(fresh_idx++);
    while (used.count(name));
    return name;
  };
  std::vector<AffineForm> grid(static_cast<std::size_t>(m1 + m2) * (n1 + n2));
  auto at = [&](int i, int j) -> AffineForm& {
    return grid[static_cast<std::size_t>(i) * (n1 + n2) + j];
  };
  for (int i = 0; i < m1; ++i)
    for (int j = 0; j < n1; ++j) at(i, j) = A11.at(i, j);
  for (int i = 0; i < m2; ++i)
    for (int j = 0; j < n2; ++j) at(m1 + i, n1 + j) = A22.at(i, j);
  if (filler == Filler::random)
    for (int i = 0; i < m1; ++i)
      for (int j = 0; j < n2; ++j) {
        AffineForm e = AffineForm::from_constant(rng.element(f.q()));
        form_add_term(f, e, fresh(), rng.nonzero(f.q()));
        at(i, n1 + j) = std::move(e);
      }
  std::optional<bool> predicted;
  if (bottom_kind != "minimal") predicted = true;
  return CompositionResult{ACIMatrix::validate(f, m1 + m2, n1 + n2, std::move(grid)), top_kind,
                           bottom_kind, predicted};
}

}  // namespace acik
