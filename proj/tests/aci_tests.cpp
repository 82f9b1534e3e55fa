#include <doctest.h>

#include "acikit/decompose.hpp"
#include "acikit/error.hpp"
#include "helpers.hpp"

using namespace acik;
using acik::testing::mat;

TEST_CASE("validate rejects a variable in two columns") {
  Field f = Field::make_q(2);
  std::vector<AffineForm> grid = {AffineForm::variable("x"), AffineForm::variable("x")};
  try {
    ACIMatrix::validate(f, 1, 2, std::move(grid));
    FAIL("expected CrossColumnVariable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::cross_column_variable);
  }
}

TEST_CASE("validate rejects empty shapes and bad elements") {
  Field f = Field::make_q(2);
  CHECK_THROWS_AS(ACIMatrix::validate(f, 0, 1, {}), Error);
  std::vector<AffineForm> grid = {AffineForm::from_constant(7)};
  CHECK_THROWS_AS(ACIMatrix::validate(f, 1, 1, std::move(grid)), Error);
}

TEST_CASE("same variable twice in one column is fine") {
  ACIMatrix A = mat("field 2 [ x, 1 ; x+1, 0 ]");
  CHECK(A.variables() == std::vector<std::string>{"x"});
  CHECK(A.column_of("x") == 0);
}

TEST_CASE("completion evaluates entries") {
  ACIMatrix A = mat("field 3 [ x+1, 2*y ; 2, y ]");
  Mat M = A.complete({{"x", 2}, {"y", 1}});
  CHECK(M.at(0, 0) == 0);
  CHECK(M.at(0, 1) == 2);
  CHECK(M.at(1, 0) == 2);
  CHECK(M.at(1, 1) == 1);
  CHECK_THROWS_AS(A.complete({{"x", 1}}), Error);                            // missing y
  CHECK_THROWS_AS(A.complete({{"x", 1}, {"y", 0}, {"z", 0}}), Error);        // foreign z
}

TEST_CASE("submatrix and drops preserve entries") {
  ACIMatrix A = mat("field 2 [ x, 1, 0 ; 1, y, 1 ]");
  ACIMatrix S = A.submatrix({1}, {0, 2});
  CHECK(S.rows() == 1);
  CHECK(S.cols() == 2);
  CHECK(S.at(0, 0) == AffineForm::from_constant(1));
  CHECK(A.drop_row(0) == A.submatrix({1}, {0, 1, 2}));
  CHECK(A.drop_col(1) == A.submatrix({0, 1}, {0, 2}));
}

TEST_CASE("augment appends a constant column") {
  ACIMatrix A = mat("field 2 [ x ; 1 ]");
  ACIMatrix B = A.augment({1, 0});
  CHECK(B.cols() == 2);
  CHECK(B.at(0, 1) == AffineForm::from_constant(1));
  CHECK(B.at(1, 1) == AffineForm::from_constant(0));
}

TEST_CASE("rename and prefix keep the grid shape") {
  ACIMatrix A = mat("field 2 [ x, y ]");
  ACIMatrix R = A.rename_vars({{"x", "u"}});
  CHECK(R.variables() == std::vector<std::string>{"u", "y"});
  ACIMatrix P = A.prefix_vars("t_");
  CHECK(P.variables() == std::vector<std::string>{"t_x", "t_y"});
}

TEST_CASE("apply_equivalence rejects bad witnesses") {
  ACIMatrix A = mat("field 2 [ x, 1 ; 1, 0 ]");
  Field f = A.field();
  Mat singular(f, 2, 2);
  CHECK_THROWS_AS(apply_equivalence(A, Equivalence{singular, {0, 1}}), Error);
  CHECK_THROWS_AS(apply_equivalence(A, Equivalence{identity(f, 2), {0, 0}}), Error);
  CHECK_THROWS_AS(apply_equivalence(A, Equivalence{identity(f, 3), {0, 1}}), Error);
}

TEST_CASE("equivalence composition matches sequential application") {
  ACIMatrix A = mat("field 3 [ x, 1, 2*y ; 1, z+2, 0 ; 0, 1, y+1 ]");
  const Field& f = A.field();
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Equivalence e1 = random_equivalence(f, 3, 3, seed);
    Equivalence e2 = random_equivalence(f, 3, 3, seed + 1000);
    ACIMatrix step = apply_equivalence(apply_equivalence(A, e1), e2);
    ACIMatrix fused = apply_equivalence(A, compose(e2, e1));
    CHECK(step == fused);
  }
}

TEST_CASE("identity equivalence is neutral") {
  ACIMatrix A = mat("field 2 [ x, 1 ; 0, y ]");
  CHECK(apply_equivalence(A, identity_equivalence(A.field(), 2, 2)) == A);
}
