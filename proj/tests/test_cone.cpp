#include "support.hpp"

#include "eigencone/cone.hpp"
#include "eigencone/errors.hpp"
#include "eigencone/faces.hpp"

#include <doctest.h>

#include <set>

using namespace testing;

namespace {
HRep from_rows(int n, const std::vector<std::vector<int>>& ineq, const std::vector<std::vector<int>>& eq = {}) {
  HRep h(n);
  for (const auto& r : ineq) {
    const ZVector z(r.begin(), r.end());
    h.add_inequality(std::span<const Integer>(z));
  }
  for (const auto& r : eq) {
    const ZVector z(r.begin(), r.end());
    h.add_equality(std::span<const Integer>(z));
  }
  return h;
}

ZVector flat(const RayTuple& t) { return t.primitive(); }
}  // namespace

TEST_CASE("orthant and simplex cones") {
  const auto rays = extremal_rays(from_rows(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(rays == std::vector<Ray>{ZVector{0, 0, 1}, ZVector{0, 1, 0}, ZVector{1, 0, 0}});
  // square pyramid: x3 >= |x1|, x3 >= |x2|
  const auto pyr = extremal_rays(from_rows(3, {{1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}}));
  CHECK(pyr.size() == 4);
  CHECK(cone_dimension(pyr) == 3);
  // a plane section of the orthant
  const auto sec = extremal_rays(from_rows(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{1, -1, 0}}));
  CHECK(sec == std::vector<Ray>{ZVector{0, 0, 1}, ZVector{1, 1, 0}});
}

TEST_CASE("rows are stored primitive") {
  HRep h(2);
  const QVector r{Rational(2, 3), Rational(4, 3)};
  h.add_inequality(std::span<const Rational>(r));
  CHECK(h.inequalities[0] == ZVector{1, 2});
  const ZVector e{-2, 4};
  h.add_equality(std::span<const Integer>(e));
  CHECK(h.equalities[0] == ZVector{1, -2});
  h.add_inequality(std::span<const Rational>(r));
  h.normalize();
  CHECK(h.inequalities.size() == 1);
}

TEST_CASE("A1 tensor cone") {
  const Context& c = ctx("A1");
  const HRep h = tensor_cone_hrep(c, 3);
  const auto rays = extremal_rays(h);
  CHECK(rays == std::vector<Ray>{ZVector{0, 1, 1}, ZVector{1, 0, 1}, ZVector{1, 1, 0}});
  for (const Ray& r : rays) {
    CHECK(h.contains(std::span<const Integer>(r)));
    CHECK(is_extremal(h, r));
  }
}

TEST_CASE("face rays on the P_2 face") {
  const Context& c = ctx("D4");
  const HRep fh = face_hrep(c, d4_p2_face());
  DDStats stats;
  const auto rays = extremal_rays(fh, &stats);
  CHECK(rays.size() == 11);
  CHECK(stats.max_intermediate_rays >= rays.size());
  CHECK(cone_dimension(rays) == 11);
  std::set<Ray> got(rays.begin(), rays.end());
  CHECK(got.count(flat(T({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 1, 0}}))));
  CHECK(got.count(flat(T({{0, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}}))));
}

TEST_CASE("extremality checks") {
  const Context& c = ctx("D4");
  const HRep h = tensor_cone_hrep(c, 3);
  CHECK(is_extremal(h, flat(T({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 1, 0}}))));
  // sum of two basic classes on a P_4 face
  CHECK_FALSE(is_extremal(h, flat(T({{1, 0, 1, 1}, {0, 1, 0, 1}, {1, 0, 1, 0}}))));
  CHECK_THROWS_AS(is_extremal(h, flat(T({{0, 2, 0, 0}, {0, 0, 0, 2}, {0, 0, 2, 0}}))), PreconditionError);
  CHECK_THROWS_AS(is_extremal(h, ZVector(12, 0)), PreconditionError);
}

TEST_CASE("restriction to a facet") {
  const Context& c = ctx("D4");
  const HRep h = tensor_cone_hrep(c, 3);
  const HRep fh = face_hrep(c, d4_p2_face());
  const auto face_rays = extremal_rays(fh);
  ZVector interior(12, 0);
  for (const Ray& r : face_rays)
    for (int i = 0; i < 12; ++i) interior[i] += r[i];
  const auto tight = tight_inequalities(h, interior);
  REQUIRE(tight.size() == 1);
  const auto restricted = extremal_rays(restrict_to_face(h, tight));
  CHECK(restricted == face_rays);
  CHECK(cone_dimension(restricted) == 11);
}

TEST_CASE("non-pointed input") {
  const HRep h = from_rows(2, {{1, 0}});
  try {
    extremal_rays(h);
    FAIL("expected NotPointedError");
  } catch (const NotPointedError& e) {
    CHECK(e.lineality()[0] == 0);
    CHECK(e.lineality()[1] != 0);
  }
  CHECK_THROWS_AS(extremal_rays(from_rows(2, {{1, 0}})), PreconditionError);
}

TEST_CASE("text round trips") {
  const Context& c = ctx("D4");
  const HRep fh = face_hrep(c, d4_p2_face());
  const HRep back = read_hrep(write_hrep(fh));
  CHECK(back.dim == fh.dim);
  CHECK(back.inequalities == fh.inequalities);
  CHECK(back.equalities == fh.equalities);
  const auto rays = extremal_rays(fh);
  int dim = 0;
  CHECK(read_rays(write_rays(12, rays), &dim) == rays);
  CHECK(dim == 12);
  CHECK(read_hrep("# comment\ndim 2\n0 1 0\n1 1 -1\n").equalities.size() == 1);
  CHECK_THROWS_AS(read_hrep("0 1 x\n"), ParseError);
  CHECK_THROWS_AS(read_hrep("dim 2\n0 1 0 4\n"), ParseError);
  CHECK_THROWS_AS(read_hrep("2 1 0\n"), ParseError);
}

TEST_CASE("determinism and double inclusion") {
  const Context& c = ctx("B3");
  const HRep h = tensor_cone_hrep(c, 3);
  const auto a = extremal_rays(h);
  const auto b = extremal_rays(h);
  CHECK(a == b);
  for (const Ray& r : a) {
    CHECK(h.contains(std::span<const Integer>(r)));
    CHECK(is_extremal(h, r));
    CHECK_FALSE(tight_inequalities(h, r).empty());
  }
  // every inequality is tight on a set of rays of full facet rank
  for (std::size_t i = 0; i < h.inequalities.size(); ++i) {
    std::vector<Ray> on;
    for (const Ray& r : a) {
      Integer v = 0;
      for (std::size_t k = 0; k < r.size(); ++k) v += h.inequalities[i][k] * r[k];
      CHECK(v >= 0);
      if (v == 0) on.push_back(r);
    }
    CHECK(cone_dimension(on) == static_cast<std::size_t>(h.dim - 1));
  }
}
