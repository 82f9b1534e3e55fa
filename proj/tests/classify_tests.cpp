#include <doctest.h>

#include "acikit/classify.hpp"
#include "acikit/error.hpp"
#include "helpers.hpp"

using namespace acik;
using acik::testing::mat;

TEST_CASE("constant rank precondition is enforced") {
  ACIMatrix A = mat("field 2 [ x1, 0 ; 0, x2 ]");
  try {
    is_column_irreducible(A, 2);
    FAIL("expected NotConstantRank");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_constant_rank);
  }
  Classification c = classify(A);
  CHECK(!c.constant.has_value());
  CHECK(!c.full_rank);
}

TEST_CASE("zero matrix classifies with all flags down") {
  Classification c = classify(mat("field 2 [ 0, 0 ; 0, 0 ]"));
  CHECK(c.constant == 0);
  CHECK(!c.full_rank);
  CHECK(!c.irreducible);
  CHECK(!c.row_reducible);
  CHECK(!c.completely_irreducible);
}

TEST_CASE("square full rank matrix") {
  Classification c = classify(mat("field 2 [ 1, x ; 0, 1 ]"));
  CHECK(c.constant == 2);
  CHECK(c.square_fr);
  CHECK(c.full_rank);
  CHECK(c.completely_irreducible);
  CHECK(!c.minimal_fr);
  CHECK(!c.maximal_fr);
}

TEST_CASE("minimal full rank wide example") {
  ACIMatrix A = mat(
      "field 2 [ 1, y2, y3, 0, 0 ;"
      " 0, 0, y3, y4, 1 ;"
      " y1, 1, 1, 1, y5 ]");
  Classification c = classify(A);
  CHECK(c.constant == 3);
  CHECK(c.full_rank);
  CHECK(c.minimal_fr);
  CHECK(c.completely_irreducible);
  CHECK(!c.column_reducible);
}

TEST_CASE("augmentation trap: units fail but a combined column works") {
  ACIMatrix A = mat("field 2 [ x1, 1, 1 ; 1, 0, x4 ; x1, 0, x4 ; x2, 0, 1 ; 0, x3, 1 ]");
  Classification c = classify(A);
  CHECK(c.constant == 3);
  CHECK(!c.maximal_fr);
  CHECK(c.column_augmentable);
  REQUIRE(c.augmenting_vector.has_value());
  CHECK(*c.augmenting_vector == std::vector<Fe>{1, 0, 1, 0, 0});
  CHECK(has_constant_rank(A.augment(*c.augmenting_vector), 4));
  // none of the canonical unit columns augments to constant rank 4
  for (int i = 0; i < 5; ++i) {
    std::vector<Fe> e(5, 0);
    e[static_cast<std::size_t>(i)] = 1;
    CHECK(rank_set_exhaustive(A.augment(e)).rank_set == std::set<int>{3, 4});
  }
}

TEST_CASE("irreducible but not completely irreducible pair") {
  ACIMatrix E = mat("field 2 [ x ; x+1 ]");
  Classification ce = classify(E);
  CHECK(ce.constant == 1);
  CHECK(ce.irreducible);
  CHECK(!ce.row_reducible);
  // augmenting with the all-ones column gives constant rank 2, so the matrix
  // is augmentable and in particular not completely irreducible
  CHECK(ce.column_augmentable);
  CHECK(!ce.maximal_fr);
  CHECK(!ce.completely_irreducible);

  ACIMatrix F = mat("field 2 [ x ; 1 ]");
  Classification cf = classify(F);
  CHECK(cf.constant == 1);
  CHECK(cf.row_reducible);
  CHECK(cf.deletable_row == 0);
  CHECK(!cf.irreducible);
}

TEST_CASE("row scan reports the first deletable row") {
  // row 1 duplicates row 0 symbolically
  ACIMatrix A = mat("field 2 [ x, 1 ; x, 1 ; 1, 0 ]");
  Classification c = classify(A);
  CHECK(c.constant == 2);
  CHECK(c.row_reducible);
  CHECK(c.deletable_row == 0);
}

TEST_CASE("find_augmenting_vector respects the vector budget") {
  ACIMatrix A = mat("field 2 [ x ; x+1 ]");
  Budgets tiny;
  tiny.vectors = 2;  // q^m = 4 > 2
  try {
    find_augmenting_vector(A, 1, tiny);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::budget_exceeded);
  }
}

TEST_CASE("single row and column matrices count as irreducible scans") {
  Classification c = classify(mat("field 2 [ 1 ]"));
  CHECK(c.constant == 1);
  CHECK(c.square_fr);
  CHECK(c.irreducible);
}
