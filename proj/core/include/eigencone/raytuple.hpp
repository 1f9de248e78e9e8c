#pragma once

#include "eigencone/rootdata.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace eigencone {

enum class Provenance { basic, induced, dd, user };

std::string_view to_string(Provenance p);
Provenance parse_provenance(std::string_view text);

/// An s-tuple of weights, read as a point or ray of the tensor cone.
struct RayTuple {
  std::vector<Weight> weights;
  Provenance tag = Provenance::user;

  RayTuple() = default;
  explicit RayTuple(std::vector<Weight> w, Provenance t = Provenance::user)
      : weights(std::move(w)), tag(t) {}
  static RayTuple zero(int s, int rank, Provenance t = Provenance::user);
  /// Inverse of flatten().
  static RayTuple from_flat(std::span<const Integer> flat, int s, int rank,
                            Provenance t = Provenance::dd);
  static RayTuple from_flat(std::span<const Rational> flat, int s, int rank,
                            Provenance t = Provenance::user);

  int s() const { return static_cast<int>(weights.size()); }
  int rank() const { return weights.empty() ? 0 : weights.front().rank(); }
  bool is_zero() const;
  bool is_dominant() const;

  /// Concatenated fundamental-weight coordinates.
  QVector flatten() const;
  /// Positive rescaling to coprime integer coordinates (idempotent).
  ZVector primitive() const;
  RayTuple normalized() const;
  /// Same ray up to positive scaling.
  bool same_ray(const RayTuple& other) const;

  RayTuple& operator+=(const RayTuple& o);
  RayTuple& operator-=(const RayTuple& o);
  RayTuple& operator*=(const Rational& k);
  friend RayTuple operator+(RayTuple a, const RayTuple& b) { return a += b; }
  friend RayTuple operator-(RayTuple a, const RayTuple& b) { return a -= b; }
  friend RayTuple operator*(const Rational& k, RayTuple a) { return a *= k; }
  /// Equality of coordinates; the tag is ignored.
  friend bool operator==(const RayTuple& a, const RayTuple& b) { return a.weights == b.weights; }
};

/// "(ω2, ω3, ω3)".
std::string to_string(const RayTuple& t);

}  // namespace eigencone
