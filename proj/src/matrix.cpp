#include "acikit/matrix.hpp"

#include "acikit/error.hpp"

namespace acik {

Mat identity(const Field& f, int n) {
  Mat I(f, n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

Mat mat_mul(const Mat& A, const Mat& B) {
  if (!A.field.same(B.field)) throw Error(Errc::field_mismatch, "matrix product");
  if (A.n != B.m) throw Error(Errc::dimension_mismatch, "matrix product");
  const Field& f = A.field;
  Mat C(f, A.m, B.n);
  for (int i = 0; i < A.m; ++i)
    for (int k = 0; k < A.n; ++k) {
      Fe aik = A.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < B.n; ++j)
        C.at(i, j) = f.add(C.at(i, j), f.mul(aik, B.at(k, j)));
    }
  return C;
}

std::vector<Fe> mat_vec(const Mat& A, const std::vector<Fe>& x) {
  if (static_cast<int>(x.size()) != A.n) throw Error(Errc::dimension_mismatch, "mat_vec");
  const Field& f = A.field;
  std::vector<Fe> y(A.m, 0);
  for (int i = 0; i < A.m; ++i)
    for (int j = 0; j < A.n; ++j)
      if (A.at(i, j) != 0) y[i] = f.add(y[i], f.mul(A.at(i, j), x[j]));
  return y;
}

std::vector<Fe> vec_mat(const std::vector<Fe>& t, const Mat& A) {
  if (static_cast<int>(t.size()) != A.m) throw Error(Errc::dimension_mismatch, "vec_mat");
  const Field& f = A.field;
  std::vector<Fe> y(A.n, 0);
  for (int i = 0; i < A.m; ++i) {
    if (t[i] == 0) continue;
    for (int j = 0; j < A.n; ++j)
      if (A.at(i, j) != 0) y[j] = f.add(y[j], f.mul(t[i], A.at(i, j)));
  }
  return y;
}

int rank_of_inplace(Mat& M) {
  const Field& f = M.field;
  int rank = 0;
  for (int col = 0; col < M.n && rank < M.m; ++col) {
    int piv = -1;
    for (int i = rank; i < M.m; ++i)
      if (M.at(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = col; j < M.n; ++j) std::swap(M.at(piv, j), M.at(rank, j));
    Fe inv = f.inv(M.at(rank, col));
    for (int i = rank + 1; i < M.m; ++i) {
      Fe factor = M.at(i, col);
      if (factor == 0) continue;
      Fe c = f.mul(factor, inv);
      for (int j = col; j < M.n; ++j)
        M.at(i, j) = f.sub(M.at(i, j), f.mul(c, M.at(rank, j)));
    }
    ++rank;
  }
  return rank;
}

int rank_of(Mat M) { return rank_of_inplace(M); }

bool is_nonsingular(const Mat& M) { return M.m == M.n && rank_of(M) == M.m; }

std::optional<Mat> inverse(const Mat& M) {
  if (M.m != M.n) return std::nullopt;
  const Field& f = M.field;
  int n = M.n;
  Mat W(f, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) W.at(i, j) = M.at(i, j);
    W.at(i, n + i) = 1;
  }
  int rank = 0;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = rank; i < n; ++i)
      if (W.at(i, col) != 0) { piv = i; break; }
    if (piv < 0) return std::nullopt;
    if (piv != rank)
      for (int j = 0; j < 2 * n; ++j) std::swap(W.at(piv, j), W.at(rank, j));
    Fe inv = f.inv(W.at(rank, col));
    for (int j = 0; j < 2 * n; ++j) W.at(rank, j) = f.mul(inv, W.at(rank, j));
    for (int i = 0; i < n; ++i) {
      if (i == rank || W.at(i, col) == 0) continue;
      Fe c = W.at(i, col);
      for (int j = 0; j < 2 * n; ++j)
        W.at(i, j) = f.sub(W.at(i, j), f.mul(c, W.at(rank, j)));
    }
    ++rank;
  }
  Mat R(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) R.at(i, j) = W.at(i, n + j);
  return R;
}

std::vector<std::vector<Fe>> left_kernel_basis(const Mat& M) {
  // RREF of M^T (size n x m); free columns of the RREF index kernel vectors.
  const Field& f = M.field;
  int rows = M.n, cols = M.m;
  Mat W(f, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) W.at(i, j) = M.at(j, i);
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (W.at(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < cols; ++j) std::swap(W.at(piv, j), W.at(rank, j));
    Fe inv = f.inv(W.at(rank, col));
    for (int j = 0; j < cols; ++j) W.at(rank, j) = f.mul(inv, W.at(rank, j));
    for (int i = 0; i < rows; ++i) {
      if (i == rank || W.at(i, col) == 0) continue;
      Fe c = W.at(i, col);
      for (int j = 0; j < cols; ++j)
        W.at(i, j) = f.sub(W.at(i, j), f.mul(c, W.at(rank, j)));
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Fe>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Fe> t(cols, 0);
    t[free] = 1;
    for (int r = 0; r < rank; ++r)
      t[pivot_col[r]] = f.neg(W.at(r, free));
    basis.push_back(std::move(t));
  }
  return basis;
}

std::vector<std::vector<Fe>> extend_to_basis(const Field& f,
                                             const std::vector<std::vector<Fe>>& rows, int m) {
  Mat W(f, m, m);
  int filled = 0;
  auto try_add = [&](const std::vector<Fe>& v) {
    for (int j = 0; j < m; ++j) W.at(filled, j) = v[j];
    Mat probe(f, filled + 1, m);
    for (int i = 0; i <= filled; ++i)
      for (int j = 0; j < m; ++j) probe.at(i, j) = W.at(i, j);
    if (rank_of(std::move(probe)) == filled + 1) {
      ++filled;
      return true;
    }
    return false;
  };
  for (const auto& r : rows)
    if (!try_add(r)) throw Error(Errc::bad_input, "dependent rows in extend_to_basis");
  std::vector<std::vector<Fe>> added;
  for (int i = 0; i < m && filled < m; ++i) {
    std::vector<Fe> e(m, 0);
    e[i] = 1;
    if (try_add(e)) added.push_back(std::move(e));
  }
  return added;
}

}  // namespace acik
