#include <doctest.h>

#include "acikit/error.hpp"
#include "acikit/geometry.hpp"
#include "helpers.hpp"

using namespace acik;

namespace {

// Dimension of span{p_1, ..., p_n} for one point picked per subspace, over
// every choice, by direct enumeration of the direction coefficients.
std::set<int> brute_dim_set(const Field& f, const std::vector<AffineSubspace>& subs) {
  int m = static_cast<int>(subs[0].base.size());
  int n = static_cast<int>(subs.size());
  std::vector<std::size_t> counts;
  std::size_t total = 1;
  for (const auto& s : subs) {
    std::size_t c = 1;
    for (std::size_t k = 0; k < s.directions.size(); ++k) c *= static_cast<std::size_t>(f.q());
    counts.push_back(c);
    total *= c;
  }
  std::set<int> dims;
  for (std::size_t idx = 0; idx < total; ++idx) {
    Mat M(f, m, n);
    std::size_t rest = idx;
    for (int j = 0; j < n; ++j) {
      std::size_t choice = rest % counts[j];
      rest /= counts[j];
      std::vector<Fe> p = subs[j].base;
      for (const auto& d : subs[j].directions) {
        Fe coeff = static_cast<Fe>(choice % static_cast<std::size_t>(f.q()));
        choice /= static_cast<std::size_t>(f.q());
        for (int i = 0; i < m; ++i) p[i] = f.add(p[i], f.mul(coeff, d[i]));
      }
      for (int i = 0; i < m; ++i) M.at(i, j) = p[i];
    }
    dims.insert(rank_of(std::move(M)));
  }
  return dims;
}

}  // namespace

TEST_CASE("bridge matrix columns encode base plus directions") {
  Field f = Field::make_q(2);
  std::vector<AffineSubspace> subs = {
      {{1, 0, 0}, {{0, 1, 0}}},
      {{0, 1, 1}, {{1, 1, 0}, {0, 0, 1}}},
  };
  SubspaceMatrix bridge = subspaces_to_aci(f, subs);
  CHECK(bridge.matrix.rows() == 3);
  CHECK(bridge.matrix.cols() == 2);
  CHECK(!bridge.reduced_directions);
  CHECK(bridge.matrix.variables() ==
        std::vector<std::string>{"x1_1", "x2_1", "x2_2"});
}

TEST_CASE("dependent directions are reduced to a basis") {
  Field f = Field::make_q(2);
  std::vector<AffineSubspace> subs = {
      {{1, 0}, {{0, 1}, {0, 1}}},
  };
  SubspaceMatrix bridge = subspaces_to_aci(f, subs);
  CHECK(bridge.reduced_directions);
  CHECK(bridge.matrix.variables().size() == 1);
}

TEST_CASE("span dimension set matches brute force") {
  Field f2 = Field::make_q(2);
  Field f3 = Field::make_q(3);
  struct Case {
    Field f;
    std::vector<AffineSubspace> subs;
  };
  std::vector<Case> cases;
  cases.push_back({f2,
                   {{{1, 0, 0}, {{0, 1, 0}}},
                    {{0, 1, 1}, {{1, 1, 0}, {0, 0, 1}}},
                    {{1, 1, 0}, {}}}});
  cases.push_back({f2,
                   {{{0, 0, 0}, {{1, 0, 0}, {0, 1, 0}}},
                    {{0, 0, 1}, {{1, 1, 1}}}}});
  cases.push_back({f3,
                   {{{1, 2}, {{1, 0}}},
                    {{0, 1}, {{2, 1}}}}});
  for (const auto& c : cases) {
    CHECK(span_dim_set(c.f, c.subs) == brute_dim_set(c.f, c.subs));
  }
}

TEST_CASE("shape mismatches are rejected") {
  Field f = Field::make_q(2);
  CHECK_THROWS_AS(subspaces_to_aci(f, {}), Error);
  CHECK_THROWS_AS(subspaces_to_aci(f, {{{1, 0}, {}}, {{1}, {}}}), Error);
  CHECK_THROWS_AS(subspaces_to_aci(f, {{{1, 0}, {{1, 0, 0}}}}), Error);
}
