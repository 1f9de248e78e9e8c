#include "eigencone/raytuple.hpp"

#include "eigencone/errors.hpp"

namespace eigencone {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::basic: return "basic";
    case Provenance::induced: return "induced";
    case Provenance::dd: return "dd";
    case Provenance::user: return "user";
  }
  return "user";
}

Provenance parse_provenance(std::string_view text) {
  if (text == "basic") return Provenance::basic;
  if (text == "induced") return Provenance::induced;
  if (text == "dd") return Provenance::dd;
  if (text == "user") return Provenance::user;
  throw ParseError("unknown provenance tag '" + std::string(text) + "'");
}

RayTuple RayTuple::zero(int s, int rank, Provenance t) {
  return RayTuple(std::vector<Weight>(s, Weight::zero(rank)), t);
}

RayTuple RayTuple::from_flat(std::span<const Integer> flat, int s, int rank, Provenance t) {
  const QVector q = to_rational(flat);
  return from_flat(std::span<const Rational>(q), s, rank, t);
}

RayTuple RayTuple::from_flat(std::span<const Rational> flat, int s, int rank, Provenance t) {
  if (s < 0 || rank < 0 || flat.size() != static_cast<std::size_t>(s) * rank)
    throw PreconditionError("RayTuple::from_flat: expected " + std::to_string(s * rank) + " coordinates, got " +
                            std::to_string(flat.size()));
  std::vector<Weight> w;
  for (int j = 0; j < s; ++j) w.emplace_back(QVector(flat.begin() + j * rank, flat.begin() + (j + 1) * rank));
  return RayTuple(std::move(w), t);
}

bool RayTuple::is_zero() const {
  for (const auto& w : weights)
    if (!w.is_zero()) return false;
  return true;
}

bool RayTuple::is_dominant() const {
  for (const auto& w : weights)
    if (!w.is_dominant()) return false;
  return true;
}

QVector RayTuple::flatten() const {
  QVector out;
  for (const auto& w : weights) out.insert(out.end(), w.coords.begin(), w.coords.end());
  return out;
}

ZVector RayTuple::primitive() const {
  const QVector f = flatten();
  return eigencone::primitive(std::span<const Rational>(f));
}

RayTuple RayTuple::normalized() const {
  const ZVector z = primitive();
  return from_flat(std::span<const Integer>(z), s(), rank(), tag);
}

bool RayTuple::same_ray(const RayTuple& other) const {
  return s() == other.s() && rank() == other.rank() && primitive() == other.primitive();
}

namespace {
void require_shape(const RayTuple& a, const RayTuple& b) {
  if (a.s() != b.s() || a.rank() != b.rank()) throw PreconditionError("RayTuple: shape mismatch");
}
}  // namespace

RayTuple& RayTuple::operator+=(const RayTuple& o) {
  require_shape(*this, o);
  for (std::size_t j = 0; j < weights.size(); ++j) weights[j] += o.weights[j];
  return *this;
}

RayTuple& RayTuple::operator-=(const RayTuple& o) {
  require_shape(*this, o);
  for (std::size_t j = 0; j < weights.size(); ++j) weights[j] -= o.weights[j];
  return *this;
}

RayTuple& RayTuple::operator*=(const Rational& k) {
  for (auto& w : weights) w *= k;
  return *this;
}

std::string to_string(const RayTuple& t) {
  std::string out = "(";
  for (std::size_t j = 0; j < t.weights.size(); ++j) {
    if (j) out += ", ";
    out += to_string(t.weights[j]);
  }
  return out + ")";
}

}  // namespace eigencone
