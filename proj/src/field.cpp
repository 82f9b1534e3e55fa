#include "acikit/field.hpp"

#include <map>

#include "acikit/error.hpp"

namespace acik {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::not_prime: return "NotPrime";
    case Errc::reducible_modpoly: return "ReducibleModPoly";
    case Errc::no_default_poly: return "NoDefaultPoly";
    case Errc::zero_inverse: return "ZeroInverse";
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::cross_column_variable: return "CrossColumnVariable";
    case Errc::empty_matrix: return "EmptyMatrix";
    case Errc::missing_assignment: return "MissingAssignment";
    case Errc::foreign_assignment: return "ForeignAssignment";
    case Errc::singular_t: return "SingularT";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::empty_selection: return "EmptySelection";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::subset_budget_exceeded: return "SubsetBudgetExceeded";
    case Errc::not_constant_rank: return "NotConstantRank";
    case Errc::not_square_full_rank: return "NotSquareFullRank";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::verification_failed: return "VerificationFailed";
    case Errc::variable_clash: return "VariableClash";
    case Errc::not_classified: return "NotClassified";
    case Errc::infeasible_shape: return "InfeasibleShape";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::unknown_field_element: return "UnknownFieldElement";
    case Errc::bad_input: return "BadInput";
  }
  return "Error";
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Polynomials over F_p as ascending coefficient vectors; trailing zeros trimmed.
using Poly = std::vector<int>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// f mod g, g monic.
Poly poly_mod(Poly f, const Poly& g, long p) {
  trim(f);
  while (f.size() >= g.size()) {
    long lead = f.back();
    std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) {
      long v = f[shift + i] - lead * g[i];
      f[shift + i] = static_cast<int>(((v % p) + p) % p);
    }
    trim(f);
  }
  return f;
}

// Trial division against all monic polynomials of degree 1..deg/2.
bool poly_irreducible(const Poly& f, long p) {
  int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    // enumerate monic g of degree d: p^d coefficient choices
    long total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    for (long code = 0; code < total; ++code) {
      Poly g(d + 1, 0);
      long c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

const std::map<long, Poly>& default_polys() {
  static const std::map<long, Poly> t = {
      {4, {1, 1, 1}},        // x^2 + x + 1
      {8, {1, 1, 0, 1}},     // x^3 + x + 1
      {9, {2, 2, 1}},        // x^2 + 2x + 2
      {16, {1, 1, 0, 0, 1}}, // x^4 + x + 1
      {25, {2, 4, 1}},       // x^2 + 4x + 2
      {27, {1, 2, 0, 1}},    // x^3 + 2x + 1
  };
  return t;
}

constexpr long kTableLimit = 4096;  // q above this: digitwise arithmetic only

}  // namespace

struct Field::Impl {
  long p;
  int k;
  long q;
  Poly modpoly;  // size k+1 for k > 1, empty for k == 1
  bool default_poly = false;
  bool tables = false;
  std::vector<Fe> add_t, mul_t, neg_t, inv_t;

  std::vector<int> digits(Fe a) const {
    std::vector<int> ds(k);
    long v = a;
    for (int i = 0; i < k; ++i) {
      ds[i] = static_cast<int>(v % p);
      v /= p;
    }
    return ds;
  }

  Fe from_digits(const std::vector<int>& ds) const {
    long v = 0;
    for (int i = k - 1; i >= 0; --i) v = v * p + ds[i];
    return static_cast<Fe>(v);
  }

  Fe add_raw(Fe a, Fe b) const {
    if (k == 1) return static_cast<Fe>((static_cast<long>(a) + b) % p);
    auto da = digits(a), db = digits(b);
    for (int i = 0; i < k; ++i) da[i] = static_cast<int>((da[i] + db[i]) % p);
    return from_digits(da);
  }

  Fe neg_raw(Fe a) const {
    if (k == 1) return static_cast<Fe>((p - a) % p);
    auto da = digits(a);
    for (int i = 0; i < k; ++i) da[i] = static_cast<int>((p - da[i]) % p);
    return from_digits(da);
  }

  Fe mul_raw(Fe a, Fe b) const {
    if (k == 1) return static_cast<Fe>((static_cast<long>(a) * b) % p);
    auto da = digits(a), db = digits(b);
    Poly prod(2 * k - 1, 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        prod[i + j] = static_cast<int>((prod[i + j] + static_cast<long>(da[i]) * db[j]) % p);
    Poly r = poly_mod(prod, modpoly, p);
    r.resize(k, 0);
    return from_digits(r);
  }

  Fe inv_raw(Fe a) const {
    // a^(q-2) by square-and-multiply
    Fe result = 1, base = a;
    long e = q - 2;
    while (e > 0) {
      if (e & 1) result = mul_raw(result, base);
      base = mul_raw(base, base);
      e >>= 1;
    }
    return result;
  }

  void build_tables() {
    tables = true;
    add_t.resize(static_cast<std::size_t>(q) * q);
    mul_t.resize(static_cast<std::size_t>(q) * q);
    neg_t.resize(q);
    inv_t.assign(q, 0);
    for (long a = 0; a < q; ++a) {
      neg_t[a] = neg_raw(static_cast<Fe>(a));
      for (long b = 0; b < q; ++b) {
        add_t[a * q + b] = add_raw(static_cast<Fe>(a), static_cast<Fe>(b));
        Fe m = mul_raw(static_cast<Fe>(a), static_cast<Fe>(b));
        mul_t[a * q + b] = m;
        if (m == 1) inv_t[a] = static_cast<Fe>(b);
      }
    }
  }
};

Field Field::make(long p, int k, std::optional<std::vector<int>> modpoly) {
  if (!is_prime(p)) throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
  if (k < 1) throw Error(Errc::bad_input, "extension degree must be >= 1");
  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->k = k;
  long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > (1L << 30)) throw Error(Errc::bad_input, "field too large");
  }
  impl->q = q;
  if (k > 1) {
    if (modpoly) {
      impl->modpoly = *modpoly;
    } else {
      auto it = default_polys().find(q);
      if (it == default_polys().end())
        throw Error(Errc::no_default_poly,
                    "no built-in modulus polynomial for q = " + std::to_string(q));
      impl->modpoly = it->second;
      impl->default_poly = true;
    }
    if (static_cast<int>(impl->modpoly.size()) != k + 1 || impl->modpoly[k] != 1)
      throw Error(Errc::bad_input, "modulus polynomial must be monic of degree k");
    for (int c : impl->modpoly)
      if (c < 0 || c >= p) throw Error(Errc::bad_input, "modulus coefficient out of range");
    if (!poly_irreducible(impl->modpoly, p))
      throw Error(Errc::reducible_modpoly, "modulus polynomial is reducible over F_p");
  } else if (modpoly && !modpoly->empty()) {
    throw Error(Errc::bad_input, "modulus polynomial not allowed for k = 1");
  }
  if (q <= kTableLimit) impl->build_tables();
  return Field(std::move(impl));
}

Field Field::make_q(long q, std::optional<std::vector<int>> modpoly) {
  if (q < 2) throw Error(Errc::bad_input, "field size must be >= 2");
  long p = q;
  for (long d = 2; d * d <= q; ++d)
    if (q % d == 0) { p = d; break; }
  if (!is_prime(p)) throw Error(Errc::not_prime, std::to_string(q) + " is not a prime power");
  int k = 0;
  long t = q;
  while (t > 1) {
    if (t % p != 0) throw Error(Errc::not_prime, std::to_string(q) + " is not a prime power");
    t /= p;
    ++k;
  }
  return make(p, k, std::move(modpoly));
}

long Field::p() const { return impl_->p; }
int Field::k() const { return impl_->k; }
long Field::q() const { return impl_->q; }
const std::vector<int>& Field::modpoly() const { return impl_->modpoly; }
bool Field::has_default_poly() const { return impl_->default_poly; }

Fe Field::add(Fe a, Fe b) const {
  return impl_->tables ? impl_->add_t[static_cast<std::size_t>(a) * impl_->q + b]
                       : impl_->add_raw(a, b);
}

Fe Field::sub(Fe a, Fe b) const { return add(a, neg(b)); }

Fe Field::mul(Fe a, Fe b) const {
  return impl_->tables ? impl_->mul_t[static_cast<std::size_t>(a) * impl_->q + b]
                       : impl_->mul_raw(a, b);
}

Fe Field::neg(Fe a) const { return impl_->tables ? impl_->neg_t[a] : impl_->neg_raw(a); }

Fe Field::inv(Fe a) const {
  if (a == 0) throw Error(Errc::zero_inverse, "inverse of zero");
  return impl_->tables ? impl_->inv_t[a] : impl_->inv_raw(a);
}

std::vector<int> Field::digits(Fe a) const { return impl_->digits(a); }

Fe Field::from_digits(const std::vector<int>& ds) const {
  if (static_cast<int>(ds.size()) != impl_->k)
    throw Error(Errc::bad_input, "digit vector length must equal k");
  for (int d : ds)
    if (d < 0 || d >= impl_->p) throw Error(Errc::bad_input, "digit out of range");
  return impl_->from_digits(ds);
}

std::vector<Fe> Field::elements() const {
  std::vector<Fe> es(impl_->q);
  for (long i = 0; i < impl_->q; ++i) es[i] = static_cast<Fe>(i);
  return es;
}

bool Field::same(const Field& other) const {
  if (impl_ == other.impl_) return true;
  return impl_->p == other.impl_->p && impl_->k == other.impl_->k &&
         impl_->modpoly == other.impl_->modpoly;
}

}  // namespace acik
