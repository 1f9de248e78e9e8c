#pragma once

#include "eigencone/context.hpp"
#include "eigencone/faces.hpp"
#include "eigencone/raytuple.hpp"

#include <initializer_list>
#include <vector>

namespace testing {

using namespace eigencone;

inline const Context& ctx(const char* label) {
  static std::map<std::string, std::unique_ptr<Context>> cache;
  auto& slot = cache[label];
  if (!slot) slot = std::make_unique<Context>(label);
  return *slot;
}

inline Weight W(std::initializer_list<int> c) { return Weight(to_rational(std::span<const int>(std::vector<int>(c)))); }

inline RayTuple T(std::initializer_list<std::vector<int>> entries) {
  std::vector<Weight> ws;
  for (const auto& e : entries) ws.emplace_back(to_rational(std::span<const int>(e)));
  return RayTuple(std::move(ws));
}

/// The D4 face on P_2 with u = s4s3s1s2, v = s3s1s2s4s3s1s2, w = s1s2s4s2s3s1s2.
inline FaceSpec d4_p2_face() {
  const Context& c = ctx("D4");
  const WeylGroup& w = c.weyl();
  return FaceSpec{3, c.parabolic({2}),
                  {w.parse("s4 s3 s1 s2"), w.parse("s3 s1 s2 s4 s3 s1 s2"), w.parse("s1 s2 s4 s2 s3 s1 s2")}};
}

inline FaceSpec face(const char* label, std::vector<int> omitted, std::initializer_list<const char*> words) {
  const Context& c = ctx(label);
  FaceSpec f{static_cast<int>(words.size()), c.parabolic(std::move(omitted)), {}};
  for (const char* x : words) f.words.push_back(c.weyl().parse(x));
  return f;
}

}  // namespace testing
