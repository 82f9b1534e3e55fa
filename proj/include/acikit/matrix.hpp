#pragma once

#include <optional>
#include <vector>

#include "acikit/field.hpp"

namespace acik {

/// Dense constant matrix over a finite field, row major.
struct Mat {
  Field field;
  int m = 0;
  int n = 0;
  std::vector<Fe> a;

  Mat(Field f, int rows, int cols)
      : field(std::move(f)), m(rows), n(cols), a(static_cast<std::size_t>(rows) * cols, 0) {}

  Fe& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  Fe at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

Mat identity(const Field& f, int n);
Mat mat_mul(const Mat& A, const Mat& B);
std::vector<Fe> mat_vec(const Mat& A, const std::vector<Fe>& x);
std::vector<Fe> vec_mat(const std::vector<Fe>& t, const Mat& A);  // row vector times A

/// Rank by Gaussian elimination; destroys a copy.
int rank_of(Mat M);
int rank_of_inplace(Mat& M);  // scratch-reusing variant

bool is_nonsingular(const Mat& M);
std::optional<Mat> inverse(const Mat& M);

/// Canonical basis of { t : t M = 0 } (left kernel), via RREF of M^T.
std::vector<std::vector<Fe>> left_kernel_basis(const Mat& M);

/// Extends the given independent rows to a basis of F^m by greedily adding
/// standard basis vectors; returns the added vectors in pick order.
std::vector<std::vector<Fe>> extend_to_basis(const Field& f,
                                             const std::vector<std::vector<Fe>>& rows, int m);

}  // namespace acik
