#pragma once

#include "acikit/rank.hpp"

namespace acik {

/// Affine subspace of F^m: base point plus a list of direction vectors.
struct AffineSubspace {
  std::vector<Fe> base;
  std::vector<std::vector<Fe>> directions;
};

struct SubspaceMatrix {
  ACIMatrix matrix;
  bool reduced_directions = false;  // some dependent directions were dropped
};

/// One column per subspace: base constants plus one fresh variable per
/// direction (names x<j>_<k>, 1-based). Dependent direction lists are reduced
/// to a basis first, with a warning flag.
SubspaceMatrix subspaces_to_aci(const Field& f, const std::vector<AffineSubspace>& subspaces);

/// Dimensions of the span of one point picked from each subspace (together
/// with the origin), over all choices; equals the rank set of the bridge
/// matrix.
std::set<int> span_dim_set(const Field& f, const std::vector<AffineSubspace>& subspaces,
                           const Budgets& b = {});

}  // namespace acik
