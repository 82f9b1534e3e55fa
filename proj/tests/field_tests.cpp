#include <doctest.h>

#include "acikit/error.hpp"
#include "acikit/field.hpp"
#include "acikit/matrix.hpp"

using namespace acik;

namespace {

void check_field_axioms(const Field& f) {
  auto els = f.elements();
  REQUIRE(static_cast<long>(els.size()) == f.q());
  for (Fe a : els) {
    CHECK(f.add(a, 0) == a);
    CHECK(f.mul(a, 1) == a);
    CHECK(f.add(a, f.neg(a)) == 0);
    if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    for (Fe b : els) {
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
      for (Fe c : els) {
        CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
}

}  // namespace

TEST_CASE("field axioms for all supported small orders") {
  for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L, 16L, 25L, 27L}) check_field_axioms(Field::make_q(q));
}

TEST_CASE("field constructor rejections") {
  CHECK_THROWS_AS(Field::make(6, 1), Error);
  CHECK_THROWS_AS(Field::make(4, 1), Error);
  CHECK_THROWS_AS(Field::make_q(12), Error);  // 12 is not a prime power
  // x^2 + 1 factors over F_3 as (x+1)(x+2)... actually x^2+1 is irreducible
  // over F_3; x^2 + 2x + 1 = (x+1)^2 is not.
  CHECK_THROWS_AS(Field::make(3, 2, std::vector<int>{1, 2, 1}), Error);
  CHECK_NOTHROW(Field::make(3, 2, std::vector<int>{1, 0, 1}));
  CHECK_THROWS_AS(Field::make_q(49), Error);  // no built-in modulus for 49
  CHECK_NOTHROW(Field::make_q(49, std::vector<int>{3, 1, 1}));
}

TEST_CASE("digit codec round-trips") {
  Field f = Field::make_q(27);
  for (Fe a = 0; a < 27; ++a) CHECK(f.from_digits(f.digits(a)) == a);
  CHECK(f.digits(0) == std::vector<int>{0, 0, 0});
}

TEST_CASE("zero has no inverse") {
  Field f = Field::make_q(5);
  CHECK_THROWS_AS(f.inv(0), Error);
}

TEST_CASE("matrix rank, inverse and kernels") {
  Field f = Field::make_q(3);
  Mat M(f, 3, 3);
  // [1 2 0; 0 1 1; 1 0 1]: det = 1*(1) - 2*(-1) + 0 = 3 = 0 mod 3
  Fe vals[9] = {1, 2, 0, 0, 1, 1, 1, 0, 1};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) M.at(i, j) = vals[3 * i + j];
  CHECK(rank_of(M) == 2);
  CHECK(!is_nonsingular(M));
  CHECK(!inverse(M).has_value());

  auto kernel = left_kernel_basis(M);
  REQUIRE(kernel.size() == 1);
  for (const auto& t : kernel) {
    auto tm = vec_mat(t, M);
    for (Fe x : tm) CHECK(x == 0);
  }

  Mat I = identity(f, 3);
  CHECK(rank_of(I) == 3);
  auto inv = inverse(I);
  REQUIRE(inv.has_value());
  CHECK(inv->a == I.a);
}

TEST_CASE("extend_to_basis completes independent rows") {
  Field f = Field::make_q(2);
  std::vector<std::vector<Fe>> rows = {{1, 1, 0}, {0, 1, 1}};
  auto added = extend_to_basis(f, rows, 3);
  REQUIRE(added.size() == 1);
  Mat M(f, 3, 3);
  for (int j = 0; j < 3; ++j) {
    M.at(0, j) = rows[0][j];
    M.at(1, j) = rows[1][j];
    M.at(2, j) = added[0][j];
  }
  CHECK(is_nonsingular(M));
  CHECK_THROWS_AS(extend_to_basis(f, {{1, 0, 1}, {1, 0, 1}}, 3), Error);
}
