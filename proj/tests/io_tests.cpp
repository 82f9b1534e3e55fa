#include <doctest.h>

#include "acikit/decompose.hpp"
#include "acikit/error.hpp"
#include "helpers.hpp"

using namespace acik;
using acik::testing::mat;

namespace {

void check_syntax_error(const std::string& text) {
  try {
    parse_matrix(text);
    FAIL("expected SyntaxError for: ", text);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::syntax_error);
  }
}

}  // namespace

TEST_CASE("parse handles whitespace, comments and signs") {
  ACIMatrix A = mat(
      "# leading comment\n"
      "field 3  # trailing comment\n"
      "[ -x + 2 , 1 ;\n"
      "  2*y, -1 ]\n");
  CHECK(A.at(0, 0).constant == 2);
  CHECK(A.at(0, 0).terms == std::vector<std::pair<std::string, Fe>>{{"x", 2}});
  CHECK(A.at(1, 1).constant == 2);
}

TEST_CASE("integers reduce modulo p in prime fields only") {
  CHECK(mat("field 5 [ 7 ]").at(0, 0).constant == 2);
  CHECK_THROWS_AS(mat("field 4 [ 2 ]"), Error);
}

TEST_CASE("extension field coefficient notation") {
  ACIMatrix A = mat("field 9 [ g:21 + g:12*x ]");
  Field f = A.field();
  CHECK(A.at(0, 0).constant == f.from_digits({1, 2}));  // 2g + 1
  CHECK(A.at(0, 0).terms.front().second == f.from_digits({2, 1}));
  CHECK(element_token(f, f.from_digits({1, 2})) == "g:21");
  CHECK(element_token(f, 0) == "g:0");
  CHECK(parse_element_token(f, "g:2") == 2);
}

TEST_CASE("explicit modulus polynomial round-trips") {
  ACIMatrix A = mat("field 49 poly 3,1,1 [ g:11, 1 ]");
  CHECK(A.field().q() == 49);
  std::string s = serialize_matrix(A);
  CHECK(s.find("poly 3,1,1") != std::string::npos);
  CHECK(parse_matrix(s) == A);
}

TEST_CASE("serialize emits the canonical form") {
  ACIMatrix A = mat("field 2 [ 1 + x, 0 ; x , 1+1 ]");
  CHECK(serialize_matrix(A) == "field 2\n[ x+1, 0 ; x, 0 ]\n");
}

TEST_CASE("round trip is the identity on assorted matrices") {
  const char* texts[] = {
      "field 2 [ x1+y1, x2+1, 1 ; x1, 1, 1 ]",
      "field 9 [ g:10*a + g:2, 1 ; 0, b ]",
      "field 5 [ 4*v + 3, 2 ]",
      "field 27 [ g:112*z ]",
  };
  for (const char* t : texts) {
    ACIMatrix A = mat(t);
    CHECK(parse_matrix(serialize_matrix(A)) == A);
  }
}

TEST_CASE("round trip on generated matrices") {
  for (long q : {2L, 3L, 4L, 9L}) {
    Field f = Field::make_q(q);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      GenOptions opt;
      opt.seed = seed;
      ACIMatrix A = gen_constant_rank(f, 3, 4, 2, opt);
      CHECK(parse_matrix(serialize_matrix(A)) == A);
    }
  }
}

TEST_CASE("syntax errors carry positions and are code SyntaxError") {
  check_syntax_error("");
  check_syntax_error("field");
  check_syntax_error("field x [ 1 ]");
  check_syntax_error("field 2 [ 1, ]");
  check_syntax_error("field 2 [ 1 ; 1, 0 ]");   // ragged rows
  check_syntax_error("field 2 [ 1, 0 ");        // unclosed
  check_syntax_error("field 2 [ 1 ] trailing");
  check_syntax_error("field 2 [ 1 * ]");
  check_syntax_error("field 2 [ g:1 ]");        // g: notation in a prime field
  check_syntax_error("field 9 [ g:3 ]");        // digit out of range
}

TEST_CASE("field line errors") {
  CHECK_THROWS_AS(mat("field 6 [ 1 ]"), Error);
  CHECK_THROWS_AS(mat("field 49 [ 1 ]"), Error);  // no built-in modulus
}

TEST_CASE("subspace documents parse") {
  SubspaceDocument doc = parse_subspaces(
      "field 2\n"
      "subspace base 1,0,0 dir 0,1,0\n"
      "subspace base 0,1,1 dir 1,1,0 dir 0,0,1\n");
  CHECK(doc.field.q() == 2);
  REQUIRE(doc.subspaces.size() == 2);
  CHECK(doc.subspaces[0].base == std::vector<Fe>{1, 0, 0});
  CHECK(doc.subspaces[1].directions.size() == 2);
  CHECK_THROWS_AS(parse_subspaces("field 2\n"), Error);
}
