#pragma once

// Exact polyhedral cones: H-representation to extremal rays by the double
// description method, membership and extremality tests, face restriction,
// and a plain-text format.
//
// Text format (one row per line, '#' starts a comment):
//   dim <n>
//   <kind> a_1 ... a_n      H-rows; kind 0 = (a.x >= 0), 1 = (a.x == 0)
//   r_1 ... r_n             V-rows (rays)

#include "eigencone/arith.hpp"
#include "eigencone/errors.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eigencone {

using Ray = ZVector;

struct HRep {
  int dim = 0;
  std::vector<ZVector> inequalities;  ///< a . x >= 0
  std::vector<ZVector> equalities;    ///< a . x == 0

  HRep() = default;
  explicit HRep(int n) : dim(n) {}

  /// Appends a row reduced to primitive form; returns its index.
  std::size_t add_inequality(std::span<const Integer> row);
  std::size_t add_inequality(std::span<const Rational> row);
  std::size_t add_equality(std::span<const Integer> row);
  std::size_t add_equality(std::span<const Rational> row);
  /// Drops zero rows and duplicates (keeping first occurrences).
  void normalize();

  bool contains(std::span<const Integer> x) const;
  bool contains(std::span<const Rational> x) const;
};

class NotPointedError : public PreconditionError {
 public:
  explicit NotPointedError(ZVector lineality);
  const ZVector& lineality() const { return lineality_; }

 private:
  ZVector lineality_;
};

struct DDStats {
  std::size_t max_intermediate_rays = 0;
  std::size_t adjacency_tests = 0;
};

/// Minimal generating rays of a pointed cone, sorted lexicographically.
/// Throws NotPointedError naming a lineality vector otherwise.
std::vector<Ray> extremal_rays(const HRep& h, DDStats* stats = nullptr);

/// Indices of the inequalities tight at x.
std::vector<std::size_t> tight_inequalities(const HRep& h, std::span<const Integer> x);

/// True iff the constraints tight at r have rank dim - 1. Throws
/// PreconditionError if r violates h or is zero.
bool is_extremal(const HRep& h, std::span<const Integer> r);

/// Turns the selected inequalities into equalities.
HRep restrict_to_face(const HRep& h, std::span<const std::size_t> tight);

/// Dimension of the cone spanned by the rays.
std::size_t cone_dimension(const std::vector<Ray>& rays);

std::string write_hrep(const HRep& h);
HRep read_hrep(std::string_view text);
std::string write_rays(int dim, const std::vector<Ray>& rays);
std::vector<Ray> read_rays(std::string_view text, int* dim = nullptr);

}  // namespace eigencone
