#include "acikit/aci.hpp"

#include <algorithm>
#include <cctype>

#include "acikit/error.hpp"

namespace acik {

AffineForm AffineForm::variable(const std::string& name, Fe coeff) {
  AffineForm f;
  if (coeff != 0) f.terms.emplace_back(name, coeff);
  return f;
}

void form_add_term(const Field& f, AffineForm& a, const std::string& var, Fe coeff) {
  if (coeff == 0) return;
  auto it = std::lower_bound(a.terms.begin(), a.terms.end(), var,
                             [](const auto& t, const std::string& v) { return t.first < v; });
  if (it != a.terms.end() && it->first == var) {
    it->second = f.add(it->second, coeff);
    if (it->second == 0) a.terms.erase(it);
  } else {
    a.terms.insert(it, {var, coeff});
  }
}

AffineForm form_add(const Field& f, const AffineForm& a, const AffineForm& b) {
  AffineForm r = a;
  r.constant = f.add(r.constant, b.constant);
  for (const auto& [v, c] : b.terms) form_add_term(f, r, v, c);
  return r;
}

AffineForm form_scale(const Field& f, Fe c, const AffineForm& a) {
  AffineForm r;
  if (c == 0) return r;
  r.constant = f.mul(c, a.constant);
  r.terms.reserve(a.terms.size());
  for (const auto& [v, coeff] : a.terms) r.terms.emplace_back(v, f.mul(c, coeff));
  return r;
}

bool is_valid_variable_name(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
  for (char ch : name)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  return true;
}

ACIMatrix::ACIMatrix(Field f, int m, int n, std::vector<AffineForm> entries)
    : field_(std::move(f)), m_(m), n_(n), entries_(std::move(entries)), column_vars_(n) {
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < m_; ++i)
      for (const auto& [v, c] : at(i, j).terms) {
        (void)c;
        auto [it, fresh] = var_column_.try_emplace(v, j);
        if (!fresh && it->second != j)
          throw Error(Errc::cross_column_variable,
                      "variable '" + v + "' appears in columns " +
                          std::to_string(it->second) + " and " + std::to_string(j));
        column_vars_[j].insert(v);
      }
  vars_.reserve(var_column_.size());
  for (const auto& [v, j] : var_column_) {
    (void)j;
    vars_.push_back(v);
  }
}

ACIMatrix ACIMatrix::validate(const Field& field, int m, int n,
                              std::vector<AffineForm> entries) {
  if (m <= 0 || n <= 0) throw Error(Errc::empty_matrix, "matrix must have positive dimensions");
  if (entries.size() != static_cast<std::size_t>(m) * n)
    throw Error(Errc::dimension_mismatch, "entry count does not match shape");
  long q = field.q();
  for (const auto& e : entries) {
    if (e.constant >= q) throw Error(Errc::unknown_field_element, "constant out of field range");
    for (const auto& [v, c] : e.terms) {
      if (!is_valid_variable_name(v)) throw Error(Errc::bad_input, "bad variable name '" + v + "'");
      if (c == 0 || c >= q) throw Error(Errc::unknown_field_element, "coefficient out of field range");
    }
    for (std::size_t i = 1; i < e.terms.size(); ++i)
      if (!(e.terms[i - 1].first < e.terms[i].first))
        throw Error(Errc::bad_input, "entry terms not sorted by variable");
  }
  return ACIMatrix(field, m, n, std::move(entries));
}

int ACIMatrix::column_of(const std::string& var) const {
  auto it = var_column_.find(var);
  if (it == var_column_.end()) throw Error(Errc::foreign_assignment, "unknown variable '" + var + "'");
  return it->second;
}

Mat ACIMatrix::complete(const Completion& c) const {
  for (const auto& [v, val] : c) {
    if (!var_column_.count(v))
      throw Error(Errc::foreign_assignment, "assignment for unknown variable '" + v + "'");
    if (val >= field_.q()) throw Error(Errc::unknown_field_element, "value out of field range");
  }
  for (const auto& v : vars_)
    if (!c.count(v)) throw Error(Errc::missing_assignment, "no value for variable '" + v + "'");
  Mat M(field_, m_, n_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < n_; ++j) {
      const AffineForm& e = at(i, j);
      Fe v = e.constant;
      for (const auto& [name, coeff] : e.terms) v = field_.add(v, field_.mul(coeff, c.at(name)));
      M.at(i, j) = v;
    }
  return M;
}

ACIMatrix ACIMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
  if (rows.empty() || cols.empty()) throw Error(Errc::empty_selection, "empty row or column selection");
  for (int i : rows)
    if (i < 0 || i >= m_) throw Error(Errc::index_out_of_range, "row " + std::to_string(i));
  for (int j : cols)
    if (j < 0 || j >= n_) throw Error(Errc::index_out_of_range, "column " + std::to_string(j));
  std::vector<AffineForm> es;
  es.reserve(rows.size() * cols.size());
  for (int i : rows)
    for (int j : cols) es.push_back(at(i, j));
  return ACIMatrix(field_, static_cast<int>(rows.size()), static_cast<int>(cols.size()),
                   std::move(es));
}

ACIMatrix ACIMatrix::drop_row(int i) const {
  if (i < 0 || i >= m_) throw Error(Errc::index_out_of_range, "row " + std::to_string(i));
  if (m_ == 1) throw Error(Errc::empty_matrix, "cannot drop the only row");
  std::vector<int> rows;
  for (int r = 0; r < m_; ++r)
    if (r != i) rows.push_back(r);
  std::vector<int> cols(n_);
  for (int j = 0; j < n_; ++j) cols[j] = j;
  return submatrix(rows, cols);
}

ACIMatrix ACIMatrix::drop_col(int j) const {
  if (j < 0 || j >= n_) throw Error(Errc::index_out_of_range, "column " + std::to_string(j));
  if (n_ == 1) throw Error(Errc::empty_matrix, "cannot drop the only column");
  std::vector<int> rows(m_);
  for (int i = 0; i < m_; ++i) rows[i] = i;
  std::vector<int> cols;
  for (int c = 0; c < n_; ++c)
    if (c != j) cols.push_back(c);
  return submatrix(rows, cols);
}

ACIMatrix ACIMatrix::augment(const std::vector<Fe>& v) const {
  if (static_cast<int>(v.size()) != m_)
    throw Error(Errc::dimension_mismatch, "augmenting column length must equal row count");
  for (Fe x : v)
    if (x >= field_.q()) throw Error(Errc::unknown_field_element, "value out of field range");
  std::vector<AffineForm> es;
  es.reserve(static_cast<std::size_t>(m_) * (n_ + 1));
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < n_; ++j) es.push_back(at(i, j));
    es.push_back(AffineForm::from_constant(v[i]));
  }
  return ACIMatrix(field_, m_, n_ + 1, std::move(es));
}

ACIMatrix ACIMatrix::rename_vars(const std::map<std::string, std::string>& renaming) const {
  auto mapped = [&](const std::string& v) {
    auto it = renaming.find(v);
    return it == renaming.end() ? v : it->second;
  };
  std::vector<AffineForm> es;
  es.reserve(entries_.size());
  for (const auto& e : entries_) {
    AffineForm r;
    r.constant = e.constant;
    for (const auto& [v, c] : e.terms) form_add_term(field_, r, mapped(v), c);
    es.push_back(std::move(r));
  }
  return validate(field_, m_, n_, std::move(es));
}

ACIMatrix ACIMatrix::prefix_vars(const std::string& prefix) const {
  std::map<std::string, std::string> renaming;
  for (const auto& v : vars_) renaming[v] = prefix + v;
  return rename_vars(renaming);
}

Equivalence identity_equivalence(const Field& f, int m, int n) {
  Equivalence e{identity(f, m), std::vector<int>(n)};
  for (int j = 0; j < n; ++j) e.col_src[j] = j;
  return e;
}

Equivalence compose(const Equivalence& outer, const Equivalence& inner) {
  Equivalence e{mat_mul(outer.T, inner.T), std::vector<int>(outer.col_src.size())};
  for (std::size_t j = 0; j < outer.col_src.size(); ++j)
    e.col_src[j] = inner.col_src[outer.col_src[j]];
  return e;
}

ACIMatrix apply_equivalence(const ACIMatrix& A, const Equivalence& e) {
  if (!A.field().same(e.T.field)) throw Error(Errc::field_mismatch, "equivalence field");
  if (e.T.m != A.rows() || e.T.n != A.rows() ||
      static_cast<int>(e.col_src.size()) != A.cols())
    throw Error(Errc::dimension_mismatch, "equivalence shape");
  if (!is_nonsingular(e.T)) throw Error(Errc::singular_t, "row transform is singular");
  std::vector<bool> seen(A.cols(), false);
  for (int s : e.col_src) {
    if (s < 0 || s >= A.cols() || seen[s])
      throw Error(Errc::bad_input, "column map is not a permutation");
    seen[s] = true;
  }
  const Field& f = A.field();
  std::vector<AffineForm> es;
  es.reserve(static_cast<std::size_t>(A.rows()) * A.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) {
      AffineForm acc;
      for (int k = 0; k < A.rows(); ++k) {
        Fe t = e.T.at(i, k);
        if (t == 0) continue;
        acc = form_add(f, acc, form_scale(f, t, A.at(k, e.col_src[j])));
      }
      es.push_back(std::move(acc));
    }
  return ACIMatrix::validate(f, A.rows(), A.cols(), std::move(es));
}

}  // namespace acik
