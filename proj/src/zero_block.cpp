#include "zero_block.hpp"

#include "acikit/error.hpp"
#include "acikit/matrix.hpp"

namespace acik::detail {

// Columns annihilated by t iff t kills every constant column and every
// variable coefficient column of the selected columns.
Mat annihilation_target(const ACIMatrix& A, const std::vector<int>& cols) {
  const Field& f = A.field();
  int m = A.rows();
  int width = 0;
  for (int j : cols) width += 1 + static_cast<int>(A.column_vars(j).size());
  Mat K(f, m, width);
  int w = 0;
  for (int j : cols) {
    for (int i = 0; i < m; ++i) K.at(i, w) = A.at(i, j).constant;
    ++w;
    for (const auto& v : A.column_vars(j)) {
      for (int i = 0; i < m; ++i) {
        const auto& terms = A.at(i, j).terms;
        for (const auto& [name, c] : terms)
          if (name == v) K.at(i, w) = c;
      }
      ++w;
    }
  }
  return K;
}

std::optional<ZeroBlockSplit> find_zero_block_impl(const ACIMatrix& A, int rho,
                                                   std::int64_t subset_budget,
                                                   bool throw_on_budget) {
  const Field& f = A.field();
  int m = A.rows(), n = A.cols();
  std::int64_t examined = 0;
  for (int s = 1; s <= n; ++s) {
    int r = m + n - s - rho;
    if (r < 1 || r > m) continue;
    std::vector<int> cols(s);
    for (int i = 0; i < s; ++i) cols[i] = i;
    while (true) {
      if (++examined > subset_budget) {
        if (throw_on_budget)
          throw Error(Errc::subset_budget_exceeded, "column subset scan exceeded budget");
        return std::nullopt;
      }
      auto kernel = left_kernel_basis(annihilation_target(A, cols));
      if (static_cast<int>(kernel.size()) == r) {
        auto added = extend_to_basis(f, kernel, m);
        Mat T(f, m, m);
        int row = 0;
        auto put_row = [&](const std::vector<Fe>& v) {
          for (int j = 0; j < m; ++j) T.at(row, j) = v[j];
          ++row;
        };
        for (const auto& v : added) put_row(v);
        for (const auto& v : kernel) put_row(v);
        std::vector<int> col_src = cols;
        std::vector<bool> in(n, false);
        for (int j : cols) in[j] = true;
        for (int j = 0; j < n; ++j)
          if (!in[j]) col_src.push_back(j);
        return ZeroBlockSplit{r, s, Equivalence{std::move(T), std::move(col_src)}, cols};
      }
      // next lexicographic s-combination of {0..n-1}
      int i = s - 1;
      while (i >= 0 && cols[i] == n - s + i) --i;
      if (i < 0) break;
      ++cols[i];
      for (int j = i + 1; j < s; ++j) cols[j] = cols[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace acik::detail
