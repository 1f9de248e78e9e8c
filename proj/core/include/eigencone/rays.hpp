#pragma once

// Rays on regular faces: basic divisor classes D(j,v), induction from the
// Levi subgroup, Levi cone recursion, decomposition along type I pairs and
// the per-face classification.

#include "eigencone/cone.hpp"
#include "eigencone/faces.hpp"
#include "eigencone/raytuple.hpp"

#include <optional>
#include <vector>

namespace eigencone {

/// D(j,v) for a type I pair v -(alpha_ell)-> w_j (ell simple). Coefficients
/// are ordinary intersection numbers. Throws PreconditionError unless
/// (j, v) is a simple cover inside W^P.
RayTuple basic_divisor_class(const Context& ctx, const FaceSpec& face, int j, WeylId v);

/// Same formula for a cover v -(beta)-> w_j with beta not simple; the
/// result is expected to vanish. Throws PreconditionError on a simple or
/// invalid cover.
RayTuple classify_nonsimple(const Context& ctx, const FaceSpec& face, int j, WeylId v);

/// Subtracts multiples of omega_k (k outside the Levi) from every entry so
/// that each entry vanishes on x_k.
RayTuple shift_to_degree0(const Context& ctx, const RayTuple& mu, const Parabolic& p);

/// Induction of a degree-0 tuple to the face:
///   lambda = (w_j mu_j)_j - sum_{(j,v,l)} <w_j mu_j, alpha_l^vee> D(j,v).
/// Throws PreconditionError naming (j,k) if some mu_j(x_k) != 0.
RayTuple induct(const Context& ctx, const FaceSpec& face, const RayTuple& mu);

/// The same linear formula without the degree-0 check (used for tuples of
/// G-weights such as (omega_k, 0, ..., 0)).
RayTuple induct_general(const Context& ctx, const FaceSpec& face, const RayTuple& mu);

/// Coweight-side induction: y_j = w_j h_j minus
/// sum (2/(alpha_l,alpha_l)) alpha_l(y_j) kappa(D(j,v)).
std::vector<Coweight> induct_coweight(const Context& ctx, const FaceSpec& face, const std::vector<Coweight>& h);

/// Extremal rays of prod_factors Gamma(s, factor) for the Levi of P, each
/// supported on one factor and written in G's fundamental weights.
std::vector<RayTuple> levi_cone_rays(const Context& ctx, const Parabolic& p, int s);

struct Decomposition {
  std::vector<Rational> coeffs;  ///< one per type I pair, in typeI_pairs order
  RayTuple residual;
};

/// x = sum a_b D_b + residual with a_b = <x_j, alpha_l^vee>. Throws
/// PreconditionError if x is off the face and InconsistencyError if the
/// residual leaves the cone.
Decomposition decompose_on_face(const Context& ctx, const FaceSpec& face, const RayTuple& x);

struct LeviImage {
  RayTuple levi_ray;      ///< embedded Levi ray
  RayTuple image;         ///< normalized induction image (zero if it vanishes)
  bool zero = false;
  bool extremal = false;  ///< image is an extremal ray of the face
};

struct FaceReport {
  FaceSpec face;
  int q = 0;
  std::vector<TypeIPair> pairs;
  std::vector<RayTuple> basic_rays;  ///< in pairs order
  std::vector<RayTuple> face_rays;   ///< all extremal rays of the face, from DD
  std::vector<RayTuple> type2_rays;
  std::vector<LeviImage> levi;
  int zero_count = 0;                ///< c
  std::vector<RayTuple> exotic;      ///< nonzero, non-extremal images
  int total = 0;
};

/// Full classification; throws InconsistencyError if the count identity
/// c = q - (s-1)|Delta \ Delta(P)| or the surjectivity of induction fails.
FaceReport classify_face(const Context& ctx, const FaceSpec& face);

}  // namespace eigencone
