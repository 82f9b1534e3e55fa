#pragma once

#include <string>

#include "acikit/geometry.hpp"

namespace acik {

/// Parses a matrix document:
///   field <q> [poly c0,c1,...,ck]
///   [ entry, entry ; entry, entry ]
/// Entries are sums of terms; a term is a coefficient, a variable, or
/// coefficient '*' variable. '#' starts a comment. Extension-field
/// coefficients are written g:<digits> with base-p digits, most significant
/// first (g:21 in F_9 is 2g+1); plain integers below p denote subfield values.
ACIMatrix parse_matrix(const std::string& text);

/// Canonical text form; parse_matrix(serialize_matrix(A)) == A.
std::string serialize_matrix(const ACIMatrix& A);

struct SubspaceDocument {
  Field field;
  std::vector<AffineSubspace> subspaces;
};

/// Parses a subspace document: a field line followed by one line per
/// subspace, "subspace base a,b,... dir a,b,... dir ...".
SubspaceDocument parse_subspaces(const std::string& text);

std::string element_token(const Field& f, Fe a);
Fe parse_element_token(const Field& f, const std::string& token);

}  // namespace acik
