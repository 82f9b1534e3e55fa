#include "acikit/geometry.hpp"

#include "acikit/error.hpp"

namespace acik {

SubspaceMatrix subspaces_to_aci(const Field& f, const std::vector<AffineSubspace>& subspaces) {
  if (subspaces.empty()) throw Error(Errc::empty_selection, "no subspaces given");
  int m = static_cast<int>(subspaces[0].base.size());
  if (m < 1) throw Error(Errc::dimension_mismatch, "ambient dimension must be >= 1");
  for (const auto& s : subspaces) {
    if (static_cast<int>(s.base.size()) != m)
      throw Error(Errc::dimension_mismatch, "all subspaces must live in the same F^m");
    for (const auto& d : s.directions)
      if (static_cast<int>(d.size()) != m)
        throw Error(Errc::dimension_mismatch, "direction length differs from the base point");
  }
  bool reduced = false;
  int n = static_cast<int>(subspaces.size());
  std::vector<AffineForm> grid(static_cast<std::size_t>(m) * n);
  for (int j = 0; j < n; ++j) {
    const auto& s = subspaces[j];
    // keep only an independent prefix-greedy subset of the directions
    std::vector<const std::vector<Fe>*> basis;
    for (const auto& d : s.directions) {
      Mat probe(f, static_cast<int>(basis.size()) + 1, m);
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (int k = 0; k < m; ++k) probe.at(static_cast<int>(i), k) = (*basis[i])[k];
      for (int k = 0; k < m; ++k) probe.at(static_cast<int>(basis.size()), k) = d[k];
      if (rank_of(std::move(probe)) == static_cast<int>(basis.size()) + 1) basis.push_back(&d);
      else reduced = true;
    }
    for (int i = 0; i < m; ++i) {
      AffineForm e = AffineForm::from_constant(s.base[i]);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        Fe c = (*basis[k])[i];
        if (c != 0)
          form_add_term(f, e, "x" + std::to_string(j + 1) + "_" + std::to_string(k + 1), c);
      }
      grid[static_cast<std::size_t>(i) * n + j] = std::move(e);
    }
  }
  return SubspaceMatrix{ACIMatrix::validate(f, m, n, std::move(grid)), reduced};
}

std::set<int> span_dim_set(const Field& f, const std::vector<AffineSubspace>& subspaces,
                           const Budgets& b) {
  return rank_set(subspaces_to_aci(f, subspaces).matrix, b).rank_set;
}

}  // namespace acik
