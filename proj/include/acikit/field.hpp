#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace acik {

/// Field element, encoded as the base-p integer whose digits are the
/// coefficients of the residue polynomial (constant coefficient least
/// significant). The canonical element order is plain integer order,
/// so element 0 is the zero and element 1 the one of the field.
using Fe = std::uint32_t;

/// Immutable description of F_q, q = p^k. Cheap to copy (shared impl).
/// Arithmetic is table driven for small q and digitwise otherwise.
class Field {
 public:
  /// Builds F_p (k = 1) or F_{p^k} given a monic irreducible modulus
  /// polynomial (ascending coefficients, length k+1). For k > 1 without an
  /// explicit polynomial, a built-in one is used when q is in
  /// {4, 8, 9, 16, 25, 27}.
  static Field make(long p, int k,
                    std::optional<std::vector<int>> modpoly = std::nullopt);

  /// Builds the field with q elements, factoring q = p^k itself.
  static Field make_q(long q,
                      std::optional<std::vector<int>> modpoly = std::nullopt);

  long p() const;
  int k() const;
  long q() const;
  const std::vector<int>& modpoly() const;  // empty when k == 1
  bool has_default_poly() const;            // modpoly came from the built-in table

  Fe zero() const { return 0; }
  Fe one() const { return 1; }

  Fe add(Fe a, Fe b) const;
  Fe sub(Fe a, Fe b) const;
  Fe mul(Fe a, Fe b) const;
  Fe neg(Fe a) const;
  Fe inv(Fe a) const;  // throws zero_inverse on a == 0

  /// Digits of a in base p, constant coefficient first; length k.
  std::vector<int> digits(Fe a) const;
  Fe from_digits(const std::vector<int>& ds) const;

  /// All q elements in canonical order: 0, 1, ...
  std::vector<Fe> elements() const;

  bool same(const Field& other) const;  // identical (p, k, modpoly)

  friend bool operator==(const Field& a, const Field& b) { return a.same(b); }

 private:
  struct Impl;
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

bool is_prime(long n);

}  // namespace acik
