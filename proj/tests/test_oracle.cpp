#include "support.hpp"

#include "eigencone/errors.hpp"
#include "eigencone/oracle.hpp"

#include <doctest.h>

#include <set>

using namespace testing;

namespace {
// Weyl dimension formula.
Rational weyl_dim(const RootSystem& rs, const Weight& lambda) {
  Rational d = 1;
  const Weight lr = lambda + rs.rho();
  for (const Root& b : rs.positive_roots()) {
    const Weight bw = rs.root_weight(b);
    d *= rs.inner(lr, bw) / rs.inner(rs.rho(), bw);
  }
  return d;
}

std::int64_t character_dim(const Context& c, const std::vector<int>& lambda) {
  std::int64_t total = 0;
  for (const auto& [mu, m] : dominant_character(c.roots(), lambda)) {
    std::set<Weight> orbit;
    const Weight w(to_rational(std::span<const int>(mu)));
    for (WeylId x = 0; x < c.weyl().size(); ++x) orbit.insert(c.weyl().act(x, w));
    total += m * static_cast<std::int64_t>(orbit.size());
  }
  return total;
}

// sl2 Clebsch-Gordan: invariants of V_a x V_b x V_c.
int cg(int a, int b, int c) {
  if ((a + b + c) % 2) return 0;
  return (a <= b + c && b <= a + c && c <= a + b) ? 1 : 0;
}
}  // namespace

TEST_CASE("characters match the Weyl dimension formula") {
  for (const char* label : {"A2", "B2", "G2", "D4", "B3"}) {
    const Context& c = ctx(label);
    const int r = c.roots().rank();
    for (int i = 0; i < r; ++i)
      for (int k = 1; k <= 2; ++k) {
        std::vector<int> lam(r, 0);
        lam[i] = k;
        CAPTURE(label);
        CAPTURE(i);
        CHECK(Rational(character_dim(c, lam)) == weyl_dim(c.roots(), Weight(to_rational(std::span<const int>(lam)))));
      }
  }
  const Context& d4 = ctx("D4");
  CHECK(character_dim(d4, {0, 1, 0, 0}) == 28);
  CHECK(character_dim(d4, {1, 0, 0, 0}) == 8);
}

TEST_CASE("sl2 Clebsch-Gordan") {
  const Context& c = ctx("A1");
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b)
      for (int d = 0; d <= 6; ++d) CHECK(invariant_dim(c, T({{a}, {b}, {d}})) == cg(a, b, d));
  CHECK(invariant_dim(c, T({{1}, {1}, {1}, {1}})) == 2);
  CHECK(invariant_dim(c, T({{2}, {2}, {2}, {2}})) == 3);
  CHECK(tensor_multiplicity(c, {3}, {2}, {1}) == 1);
  CHECK(tensor_multiplicity(c, {3}, {2}, {2}) == 0);
}

TEST_CASE("rank 2 and D4 values") {
  CHECK(invariant_dim(ctx("A2"), T({{1, 1}, {1, 1}, {1, 1}})) == 2);
  CHECK(invariant_dim(ctx("A2"), T({{1, 0}, {1, 0}, {1, 0}})) == 1);
  CHECK(invariant_dim(ctx("A2"), T({{1, 0}, {0, 1}})) == 1);
  CHECK(invariant_dim(ctx("A2"), T({{1, 0}, {1, 0}})) == 0);
  const Context& d4 = ctx("D4");
  CHECK(invariant_dim(d4, T({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 1, 0}})) == 1);
  CHECK(invariant_dim(d4, T({{0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 2, 0}})) == 1);
  CHECK(invariant_dim(d4, T({{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}})) == 0);
  CHECK(invariant_dim(d4, T({{0, 2, 0, 0}, {0, 0, 0, 2}, {0, 0, 2, 0}})) == 0);
  CHECK(invariant_dim(d4, T({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}})) == 1);
  // adjoint^3 of so(8): the Lie bracket gives the only invariant
  CHECK(invariant_dim(d4, T({{0, 1, 0, 0}, {0, 1, 0, 0}, {0, 1, 0, 0}})) == 1);
  CHECK(tensor_multiplicity(d4, {1, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}) == 1);
}

TEST_CASE("oracle bounds and input checks") {
  const Context& c = ctx("D4");
  OracleOptions small;
  small.max_height = 3;
  CHECK_THROWS_AS(invariant_dim(c, T({{0, 4, 0, 0}, {0, 0, 1, 0}, {0, 0, 1, 0}}), small), ResourceError);
  CHECK_THROWS_AS(invariant_dim(c, T({{0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 1, 0}})), PreconditionError);
  CHECK_THROWS_AS(invariant_dim(c, T({{0, 1, 0}, {0, 1, 0}})), PreconditionError);
  CHECK_THROWS_AS(dominant_character(c.roots(), {1, -1, 0, 0}), PreconditionError);
}
