#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "acikit/matrix.hpp"

namespace acik {

/// Degree <= 1 polynomial entry: constant + sum of coeff * variable.
/// Terms are kept sorted by variable name and never hold a zero coefficient.
struct AffineForm {
  Fe constant = 0;
  std::vector<std::pair<std::string, Fe>> terms;

  bool is_constant() const { return terms.empty(); }
  bool is_zero() const { return constant == 0 && terms.empty(); }

  static AffineForm from_constant(Fe c) { return AffineForm{c, {}}; }
  static AffineForm variable(const std::string& name, Fe coeff = 1);

  friend bool operator==(const AffineForm& a, const AffineForm& b) {
    return a.constant == b.constant && a.terms == b.terms;
  }
};

AffineForm form_add(const Field& f, const AffineForm& a, const AffineForm& b);
AffineForm form_scale(const Field& f, Fe c, const AffineForm& a);
/// Adds a single term, merging and dropping zero coefficients.
void form_add_term(const Field& f, AffineForm& a, const std::string& var, Fe coeff);

/// Total assignment of field values to variables.
using Completion = std::map<std::string, Fe>;

/// m x n grid of affine forms with the column-independence invariant:
/// every variable appears in at most one column.
class ACIMatrix {
 public:
  /// Validates the grid (row major, size m*n). Throws CrossColumnVariable or
  /// EmptyMatrix.
  static ACIMatrix validate(const Field& field, int m, int n,
                            std::vector<AffineForm> entries);

  const Field& field() const { return field_; }
  int rows() const { return m_; }
  int cols() const { return n_; }
  const AffineForm& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * n_ + j];
  }
  /// All variables, sorted lexicographically. Fixes the enumeration order.
  const std::vector<std::string>& variables() const { return vars_; }
  /// Column of a variable.
  int column_of(const std::string& var) const;
  const std::set<std::string>& column_vars(int j) const { return column_vars_[j]; }
  bool is_constant() const { return vars_.empty(); }

  Mat complete(const Completion& c) const;

  ACIMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
  ACIMatrix drop_row(int i) const;
  ACIMatrix drop_col(int j) const;
  ACIMatrix augment(const std::vector<Fe>& v) const;

  /// Renames every variable via the map; unmapped variables keep their name.
  ACIMatrix rename_vars(const std::map<std::string, std::string>& renaming) const;
  /// Convenience: prefixes every variable name.
  ACIMatrix prefix_vars(const std::string& prefix) const;

  friend bool operator==(const ACIMatrix& a, const ACIMatrix& b) {
    return a.field_.same(b.field_) && a.m_ == b.m_ && a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  ACIMatrix(Field f, int m, int n, std::vector<AffineForm> entries);
  Field field_;
  int m_, n_;
  std::vector<AffineForm> entries_;
  std::vector<std::string> vars_;
  std::map<std::string, int> var_column_;
  std::vector<std::set<std::string>> column_vars_;
};

/// Equivalence witness: B = T * A * Q with T nonsingular constant and Q a
/// column permutation. col_src[j] is the input column landing at output j.
struct Equivalence {
  Mat T;
  std::vector<int> col_src;
};

Equivalence identity_equivalence(const Field& f, int m, int n);
/// apply(A, compose(outer, inner)) == apply(apply(A, inner), outer).
Equivalence compose(const Equivalence& outer, const Equivalence& inner);
ACIMatrix apply_equivalence(const ACIMatrix& A, const Equivalence& e);

bool is_valid_variable_name(const std::string& name);

}  // namespace acik
