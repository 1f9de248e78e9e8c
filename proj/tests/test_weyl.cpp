#include "support.hpp"

#include "eigencone/errors.hpp"

#include <doctest.h>

#include <set>

using namespace testing;

namespace {
// Inversion set by brute force over R^+.
std::set<int> brute_inversions(const WeylGroup& w, WeylId v) {
  std::set<int> out;
  const RootSystem& rs = w.roots();
  for (int b = 0; b < rs.num_positive_roots(); ++b) {
    const Weight img = w.act(w.inverse(v), rs.root_weight(rs.root(b)));
    const QVector a = rs.to_root_basis(img);
    bool negative = false;
    for (const auto& c : a)
      if (c < 0) negative = true;
    if (negative) out.insert(b);
  }
  return out;
}
}  // namespace

TEST_CASE("orders and identities") {
  CHECK(ctx("A1").weyl().size() == 2);
  CHECK(ctx("A3").weyl().size() == 24);
  CHECK(ctx("D4").weyl().size() == 192);
  CHECK(ctx("G2").weyl().size() == 12);
  const WeylGroup& w = ctx("D4").weyl();
  CHECK(w.length(w.longest()) == 12);
  for (WeylId x = 0; x < w.size(); ++x) {
    CHECK(w.inverse(w.inverse(x)) == x);
    CHECK(w.multiply(x, w.inverse(x)) == w.identity());
  }
}

TEST_CASE("action on weights") {
  const Context& c = ctx("D4");
  const WeylGroup& w = c.weyl();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) CHECK(w.act(w.simple_reflection(i), c.roots().fundamental_weight(j)) == c.roots().fundamental_weight(j));
  const Weight om2 = c.roots().fundamental_weight(1);
  CHECK(w.act(w.parse("s4 s3 s1 s2"), om2) == W({-1, 2, -1, -1}));
  CHECK(w.act(w.parse("s3 s1 s2 s4 s3 s1 s2"), om2) == W({-1, 0, -1, 1}));
  CHECK(w.act(w.parse("s1 s2 s4 s2 s3 s1 s2"), om2) == W({-1, 0, 1, -1}));
}

TEST_CASE("word parsing") {
  const WeylGroup& w = ctx("D4").weyl();
  CHECK(w.parse("s4 s3 s1 s2") == w.parse("s4s3s1s2"));
  CHECK(w.parse("1") == w.identity());
  CHECK(w.parse("e") == w.identity());
  CHECK(w.parse(w.word_string(w.longest())) == w.longest());
  CHECK_THROWS_AS(w.parse("s5"), ParseError);
  CHECK_THROWS_AS(w.parse("s1 t2"), ParseError);
  // rightmost letter acts first: s1 s2 (omega_2) = s1(omega_2 - alpha_2)
  const RootSystem& rs = ctx("D4").roots();
  const Weight expect = rs.fundamental_weight(1) - rs.simple_root(1) - rs.simple_root(0);
  CHECK(w.act(w.parse("s1 s2"), rs.fundamental_weight(1)) == expect);
}

TEST_CASE("minimal coset representatives") {
  const Context& c = ctx("D4");
  const WeylGroup& w = c.weyl();
  const auto reps = w.minimal_reps(c.parabolic({2}));
  CHECK(reps.size() == 24);
  for (const char* x : {"s4 s3 s1 s2", "s3 s1 s2 s4 s3 s1 s2", "s1 s2 s4 s2 s3 s1 s2"})
    CHECK(std::find(reps.begin(), reps.end(), w.parse(x)) != reps.end());
  CHECK(ctx("A1").weyl().minimal_reps(Parabolic::borel(ctx("A1").roots())).size() == 2);
  for (int k = 1; k <= 4; ++k) {
    const Parabolic p = c.parabolic({k});
    CHECK(w.minimal_reps(p).size() * w.parabolic_order(p) == w.size());
  }
  for (std::size_t i = 1; i < reps.size(); ++i) CHECK(w.length(reps[i - 1]) <= w.length(reps[i]));
}

TEST_CASE("covers") {
  const Context& c = ctx("D4");
  const WeylGroup& w = c.weyl();
  const Parabolic p = c.parabolic({2});
  const WeylId v = w.parse("s3 s1 s2 s4 s3 s1 s2");
  bool found = false;
  for (const CoverDatum& d : w.covers(v, p))
    if (d.lower == w.left_multiply(2, v) && d.simple && d.beta == c.roots().simple_root_index(2)) found = true;
  CHECK(found);
  CHECK_THROWS_AS(w.covers(w.simple_reflection(0), p), PreconditionError);
  const Context& a1 = ctx("A1");
  const auto cv = a1.weyl().covers(1, Parabolic::borel(a1.roots()));
  REQUIRE(cv.size() == 1);
  CHECK(cv[0].lower == 0);
  CHECK(cv[0].simple);
  // total simple-cover count over (u, v, w) of the P_2 face
  const FaceSpec f = d4_p2_face();
  int simple = 0;
  for (WeylId x : f.words)
    for (const CoverDatum& d : w.covers(x, p)) simple += d.simple;
  CHECK(simple == 7);
}

TEST_CASE("cover_test") {
  const Context& c = ctx("D4");
  const WeylGroup& w = c.weyl();
  const Parabolic p = c.parabolic({2});
  const WeylId u = w.parse("s4 s3 s1 s2");
  CHECK(w.cover_test(u, 1, p));
  CHECK_FALSE(w.cover_test(u, 0, p));
  // u^{-1} alpha_2 = alpha_1 + 2 alpha_2 + alpha_3 + alpha_4
  const int img = w.act_root(w.inverse(u), c.roots().simple_root_index(1));
  CHECK(c.roots().root(img) == Root{1, 2, 1, 1});
  CHECK(ctx("A1").weyl().cover_test(0, 0, Parabolic::borel(ctx("A1").roots())));
}

TEST_CASE("cover_test criteria agree exhaustively") {
  for (const char* label : {"A3", "D4"}) {
    const Context& c = ctx(label);
    const WeylGroup& w = c.weyl();
    const int r = c.roots().rank();
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
      std::vector<int> levi;
      for (int i = 0; i < r; ++i)
        if (mask >> i & 1) levi.push_back(i);
      const Parabolic p(c.roots(), levi);
      for (WeylId u : w.minimal_reps(p))
        for (int l = 0; l < r; ++l) {
          const WeylId su = w.left_multiply(l, u);
          const bool by_length = w.length(su) == w.length(u) + 1 && w.in_minimal_reps(su, p);
          CHECK(w.cover_test(u, l, p) == by_length);
        }
    }
  }
}

TEST_CASE("inversion sets and lengths") {
  for (const char* label : {"A3", "B3", "D4"}) {
    const WeylGroup& w = ctx(label).weyl();
    for (WeylId x = 0; x < w.size(); ++x) {
      const auto inv = w.inversion_set(x);
      CHECK(static_cast<int>(inv.size()) == w.length(x));
      CHECK(std::set<int>(inv.begin(), inv.end()) == brute_inversions(w, x));
    }
  }
  const WeylGroup& w = ctx("D4").weyl();
  CHECK(w.inversion_set(w.identity()).empty());
  CHECK(w.inversion_set(w.simple_reflection(2)) == std::vector<int>{ctx("D4").roots().simple_root_index(2)});
  CHECK(w.inversion_set(w.parse("s3 s1 s2 s4 s3 s1 s2")).size() == 7);
}

TEST_CASE("descent sets") {
  const Context& c = ctx("D4");
  const WeylGroup& w = c.weyl();
  const Parabolic b = Parabolic::borel(c.roots());
  CHECK(w.delta_sets(w.identity(), b).delta_prime.empty());
  CHECK(w.delta_sets(w.longest(), b).delta_prime == std::vector<int>{0, 1, 2, 3});
  const Parabolic p = c.parabolic({2});
  const DeltaSets d = w.delta_sets(w.parse("s3 s1 s2 s4 s3 s1 s2"), p);
  CHECK(std::find(d.delta_prime.begin(), d.delta_prime.end(), 2) != d.delta_prime.end());
  for (WeylId x : w.minimal_reps(p)) {
    const DeltaSets ds = w.delta_sets(x, p);
    for (int a : ds.delta_prime) CHECK(std::find(ds.delta.begin(), ds.delta.end(), a) != ds.delta.end());
  }
}

TEST_CASE("inversion set identity along simple covers") {
  const Context& c = ctx("D4");
  const WeylGroup& w = c.weyl();
  const RootSystem& rs = c.roots();
  for (int k = 1; k <= 4; ++k) {
    const Parabolic p = c.parabolic({k});
    for (WeylId x : w.minimal_reps(p))
      for (const CoverDatum& d : w.covers(x, p)) {
        if (!d.simple) continue;
        const auto phi_v = w.inversion_set(d.lower);
        const auto phi_w = w.inversion_set(d.upper);
        std::set<int> image;
        for (int b : phi_v) image.insert(w.act_root(w.reflection(d.beta), b));
        std::set<int> rest(phi_w.begin(), phi_w.end());
        for (int b : image) {
          CHECK(rest.count(b) == 1);
          rest.erase(b);
        }
        CHECK(rest == std::set<int>{d.beta});
        (void)rs;
      }
  }
}

TEST_CASE("simple covers correspond to negative simple roots") {
  const Context& c = ctx("D4");
  const WeylGroup& w = c.weyl();
  for (int k = 1; k <= 4; ++k) {
    const Parabolic p = c.parabolic({k});
    for (WeylId x : w.minimal_reps(p)) {
      std::set<int> from_covers, from_roots;
      for (const CoverDatum& d : w.covers(x, p))
        if (d.simple)
          for (int l = 0; l < 4; ++l)
            if (c.roots().simple_root_index(l) == d.beta) from_covers.insert(l);
      for (int l = 0; l < 4; ++l)
        if (!w.is_positive_root(w.act_root(w.inverse(x), c.roots().simple_root_index(l)))) from_roots.insert(l);
      CHECK(from_covers == from_roots);
    }
  }
}
