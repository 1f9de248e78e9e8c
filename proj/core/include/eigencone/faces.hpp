#pragma once

// Regular faces F(w, P) of the tensor cone and the inequalities
//   sum_j (w_j^{-1} lambda_j)(x_k) <= 0,   alpha_k not in Delta(P),
// evaluated on the weight side.

#include "eigencone/cone.hpp"
#include "eigencone/context.hpp"
#include "eigencone/raytuple.hpp"

#include <vector>

namespace eigencone {

struct FaceSpec {
  int s = 0;
  Parabolic parabolic;
  std::vector<WeylId> words;

  friend bool operator==(const FaceSpec& a, const FaceSpec& b) {
    return a.s == b.s && a.parabolic == b.parabolic && a.words == b.words;
  }
};

/// A linear functional on (h*)^s: f(lambda) = sum_j blocks[j] . coords(lambda_j).
struct LinearForm {
  std::vector<QVector> blocks;

  Rational evaluate(const RayTuple& t) const;
  /// Coprime integer row over the flattened coordinates.
  ZVector primitive_row() const;
};

/// A simple Bruhat cover v -(alpha_ell)-> w_j on a face.
struct TypeIPair {
  int j;
  WeylId v;
  int ell;
  friend bool operator==(const TypeIPair&, const TypeIPair&) = default;
};

/// Checks the FaceSpec invariants (words in W^P, codimensions sum to
/// dim G/P, deformed coefficient exactly 1); throws PreconditionError.
void validate_face(const Context& ctx, const FaceSpec& face);

/// All maximal-P regular facets for s factors, in deterministic order
/// (P by omitted node, then word tuples by id). With `quotient_symmetry`
/// only the lexicographically least tuple of each S_s orbit is kept.
std::vector<FaceSpec> enumerate_regular_facets(const Context& ctx, int s, bool quotient_symmetry = false);

/// The functional sum_j (w_j^{-1} lambda_j)(x_k).
LinearForm face_form(const Context& ctx, const FaceSpec& face, int k);

/// Throws PreconditionError when k lies in Delta(P).
Rational eval_inequality(const Context& ctx, const FaceSpec& face, const RayTuple& x, int k);

/// sum_j omega_k(w_j^{-1} kappa(lambda_j)) computed on the coweight side;
/// equals (alpha_k, alpha_k)/2 times eval_inequality.
Rational eval_inequality_coweight(const Context& ctx, const FaceSpec& face, const RayTuple& x, int k);

/// Membership in the tensor cone: dominance plus every regular facet inequality.
bool tens_membership(const Context& ctx, const RayTuple& x);

/// x in the cone and every equality of the face vanishes.
bool on_face(const Context& ctx, const FaceSpec& face, const RayTuple& x);

std::vector<TypeIPair> typeI_pairs(const Context& ctx, const FaceSpec& face);

/// H-representation of the tensor cone: dominance rows followed by one row
/// per regular facet (in enumerate_regular_facets order).
HRep tensor_cone_hrep(const Context& ctx, int s);

/// tensor_cone_hrep with the face's equalities added.
HRep face_hrep(const Context& ctx, const FaceSpec& face);

/// Coweight-side action of w on h (independent of the weight-side tables).
Coweight act_coweight(const WeylGroup& w, WeylId elem, const Coweight& h);

std::string to_string(const Context& ctx, const FaceSpec& face);

}  // namespace eigencone
