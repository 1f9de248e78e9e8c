#include "eigencone/rays.hpp"

#include <algorithm>
#include <set>

namespace eigencone {

namespace {

struct Cover {
  WeylId upper;
  int beta;    // positive root index
  int simple;  // simple index or -1
};

// v -> w_j with w_j = s_beta v, l(w_j) = l(v) + 1, both in W^P.
Cover find_cover(const Context& ctx, const FaceSpec& face, int j, WeylId v) {
  const WeylGroup& w = ctx.weyl();
  if (j < 0 || j >= face.s) throw PreconditionError("pair index j=" + std::to_string(j + 1) + " out of range");
  if (v >= w.size()) throw PreconditionError("Weyl id out of range");
  const WeylId wj = face.words[j];
  if (!w.in_minimal_reps(v, face.parabolic))
    throw PreconditionError(w.word_string(v) + " is not a minimal coset representative");
  if (w.length(wj) != w.length(v) + 1)
    throw PreconditionError(w.word_string(v) + " is not covered by " + w.word_string(wj));
  const WeylId refl = w.multiply(wj, w.inverse(v));
  for (int b = 0; b < ctx.roots().num_positive_roots(); ++b)
    if (w.reflection(b) == refl) {
      int simple = -1;
      for (int i = 0; i < ctx.roots().rank(); ++i)
        if (ctx.roots().simple_root_index(i) == b) simple = i;
      return {wj, b, simple};
    }
  throw PreconditionError(w.word_string(wj) + " is not s_beta " + w.word_string(v) + " for a root beta");
}

RayTuple divisor_formula(const Context& ctx, const FaceSpec& face, int j, WeylId v) {
  const RootSystem& rs = ctx.roots();
  const WeylGroup& w = ctx.weyl();
  const Schubert sch = ctx.schubert();
  std::vector<WeylId> u = face.words;
  u[j] = v;
  RayTuple out = RayTuple::zero(face.s, rs.rank(), Provenance::basic);
  for (int k = 0; k < face.s; ++k) {
    for (int l = 0; l < rs.rank(); ++l) {
      if (!w.cover_test(u[k], l, face.parabolic)) continue;
      std::vector<WeylId> uh = u;
      uh[k] = w.left_multiply(l, u[k]);
      out.weights[k].coords[l] = Rational(sch.multi_coeff(uh, face.parabolic));
    }
  }
  return out;
}

RayTuple apply_induction(const Context& ctx, const FaceSpec& face, const RayTuple& mu) {
  const WeylGroup& w = ctx.weyl();
  if (mu.s() != face.s || mu.rank() != ctx.roots().rank())
    throw PreconditionError("induct: tuple shape does not match the face");
  RayTuple out(std::vector<Weight>(), Provenance::induced);
  for (int j = 0; j < face.s; ++j) out.weights.push_back(w.act(face.words[j], mu.weights[j]));
  const RayTuple wmu = out;
  for (const TypeIPair& p : typeI_pairs(ctx, face)) {
    const Rational c = wmu.weights[p.j].coords[p.ell];
    if (c == 0) continue;
    out -= c * basic_divisor_class(ctx, face, p.j, p.v);
  }
  out.tag = Provenance::induced;
  return out;
}

std::set<ZVector> primitive_set(const std::vector<RayTuple>& rays) {
  std::set<ZVector> out;
  for (const auto& r : rays) out.insert(r.primitive());
  return out;
}

}  // namespace

RayTuple basic_divisor_class(const Context& ctx, const FaceSpec& face, int j, WeylId v) {
  const Cover c = find_cover(ctx, face, j, v);
  if (c.simple < 0)
    throw PreconditionError("(" + std::to_string(j + 1) + ", " + ctx.weyl().word_string(v) +
                            ") is a non-simple cover; use classify_nonsimple");
  return divisor_formula(ctx, face, j, v);
}

RayTuple classify_nonsimple(const Context& ctx, const FaceSpec& face, int j, WeylId v) {
  const Cover c = find_cover(ctx, face, j, v);
  if (c.simple >= 0)
    throw PreconditionError("(" + std::to_string(j + 1) + ", " + ctx.weyl().word_string(v) +
                            ") is a simple cover; use basic_divisor_class");
  return divisor_formula(ctx, face, j, v);
}

RayTuple shift_to_degree0(const Context& ctx, const RayTuple& mu, const Parabolic& p) {
  const RootSystem& rs = ctx.roots();
  const auto& om = p.omitted_nodes();
  const std::size_t m = om.size();
  if (m == 0) return mu;
  // M[a][b] = omega_{om[b]}(x_{om[a]})
  QMatrix sub(m, QVector(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) sub[a][b] = rs.inverse_cartan()[om[a]][om[b]];
  const QMatrix inv = inverse(sub);
  RayTuple out = mu;
  for (auto& wt : out.weights) {
    QVector rhs(m);
    for (std::size_t a = 0; a < m; ++a) rhs[a] = rs.eval_x(wt, om[a]);
    for (std::size_t b = 0; b < m; ++b) {
      Rational t = 0;
      for (std::size_t a = 0; a < m; ++a) t += inv[b][a] * rhs[a];
      wt.coords[om[b]] -= t;
    }
  }
  return out;
}

RayTuple induct(const Context& ctx, const FaceSpec& face, const RayTuple& mu) {
  if (mu.s() != face.s || mu.rank() != ctx.roots().rank())
    throw PreconditionError("induct: tuple shape does not match the face");
  for (int j = 0; j < face.s; ++j)
    for (int k : face.parabolic.omitted_nodes()) {
      const Rational e = ctx.roots().eval_x(mu.weights[j], k);
      if (e != 0)
        throw PreconditionError("induct: input is not of degree 0; entry " + std::to_string(j + 1) + " at x_" +
                                std::to_string(k + 1) + " is " + to_string(e));
    }
  return apply_induction(ctx, face, mu);
}

RayTuple induct_general(const Context& ctx, const FaceSpec& face, const RayTuple& mu) {
  return apply_induction(ctx, face, mu);
}

std::vector<Coweight> induct_coweight(const Context& ctx, const FaceSpec& face, const std::vector<Coweight>& h) {
  const RootSystem& rs = ctx.roots();
  const WeylGroup& w = ctx.weyl();
  if (static_cast<int>(h.size()) != face.s) throw PreconditionError("induct_coweight: wrong tuple length");
  std::vector<Coweight> y;
  for (int j = 0; j < face.s; ++j) y.push_back(act_coweight(w, face.words[j], h[j]));
  const std::vector<Coweight> y0 = y;
  for (const TypeIPair& p : typeI_pairs(ctx, face)) {
    const Rational c = y0[p.j].coords[p.ell] / rs.half_norm(p.ell);
    if (c == 0) continue;
    const RayTuple d = basic_divisor_class(ctx, face, p.j, p.v);
    for (int k = 0; k < face.s; ++k) {
      const Coweight kd = rs.kappa(d.weights[k]);
      for (int i = 0; i < rs.rank(); ++i) y[k].coords[i] -= c * kd.coords[i];
    }
  }
  return y;
}

std::vector<RayTuple> levi_cone_rays(const Context& ctx, const Parabolic& p, int s) {
  const RootSystem& rs = ctx.roots();
  std::vector<RayTuple> out;
  for (const SimpleFactor& f : p.levi_factors()) {
    const std::size_t n = f.nodes.size();
    IntMatrix sub(n, std::vector<int>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) sub[a][b] = rs.cartan()[f.nodes[a]][f.nodes[b]];
    const Context local(RootSystem::from_cartan(std::move(sub)));
    for (const Ray& r : extremal_rays(tensor_cone_hrep(local, s))) {
      RayTuple t = RayTuple::zero(s, rs.rank(), Provenance::dd);
      for (int j = 0; j < s; ++j)
        for (std::size_t a = 0; a < n; ++a) t.weights[j].coords[f.nodes[a]] = Rational(r[j * n + a]);
      out.push_back(std::move(t));
    }
  }
  return out;
}

Decomposition decompose_on_face(const Context& ctx, const FaceSpec& face, const RayTuple& x) {
  if (!on_face(ctx, face, x)) throw PreconditionError("decompose_on_face: " + to_string(x) + " is not on the face");
  Decomposition d;
  d.residual = x;
  for (const TypeIPair& p : typeI_pairs(ctx, face)) {
    const Rational a = x.weights[p.j].coords[p.ell];
    d.coeffs.push_back(a);
    if (a != 0) d.residual -= a * basic_divisor_class(ctx, face, p.j, p.v);
  }
  for (const TypeIPair& p : typeI_pairs(ctx, face))
    if (d.residual.weights[p.j].coords[p.ell] != 0)
      throw InconsistencyError("decompose_on_face: residual does not vanish on a type I pair");
  if (!on_face(ctx, face, d.residual))
    throw InconsistencyError("decompose_on_face: residual " + to_string(d.residual) + " leaves the face");
  d.residual.tag = x.tag;
  return d;
}

FaceReport classify_face(const Context& ctx, const FaceSpec& face) {
  validate_face(ctx, face);
  const int r = ctx.roots().rank();
  FaceReport rep;
  rep.face = face;
  rep.pairs = typeI_pairs(ctx, face);
  rep.q = static_cast<int>(rep.pairs.size());
  for (const auto& p : rep.pairs) rep.basic_rays.push_back(basic_divisor_class(ctx, face, p.j, p.v));

  const HRep h = face_hrep(ctx, face);
  for (const Ray& ray : extremal_rays(h))
    rep.face_rays.push_back(RayTuple::from_flat(std::span<const Integer>(ray), face.s, r, Provenance::dd));
  rep.total = static_cast<int>(rep.face_rays.size());

  const std::set<ZVector> basic = primitive_set(rep.basic_rays);
  const std::set<ZVector> face_set = primitive_set(rep.face_rays);
  for (const auto& b : rep.basic_rays)
    if (!face_set.count(b.primitive()))
      throw InconsistencyError("classify_face: basic class " + to_string(b) + " is not an extremal ray of the face");
  for (const auto& ray : rep.face_rays)
    if (!basic.count(ray.primitive())) rep.type2_rays.push_back(ray);

  std::set<ZVector> hit;
  for (RayTuple mu : levi_cone_rays(ctx, face.parabolic, face.s)) {
    LeviImage li;
    li.levi_ray = mu;
    RayTuple img = induct(ctx, face, shift_to_degree0(ctx, mu, face.parabolic));
    if (img.is_zero()) {
      li.zero = true;
      li.image = img;
      ++rep.zero_count;
    } else {
      li.image = img.normalized();
      const ZVector key = li.image.primitive();
      li.extremal = face_set.count(key) > 0;
      if (li.extremal) {
        hit.insert(key);
      } else {
        if (!on_face(ctx, face, li.image))
          throw InconsistencyError("classify_face: induction image " + to_string(li.image) + " is off the face");
        rep.exotic.push_back(li.image);
      }
    }
    rep.levi.push_back(std::move(li));
  }

  for (const auto& t2 : rep.type2_rays)
    if (!hit.count(t2.primitive()))
      throw InconsistencyError("classify_face: type II ray " + to_string(t2) + " is not an induction image");
  const int expected_c = rep.q - (face.s - 1) * static_cast<int>(face.parabolic.omitted_nodes().size());
  if (rep.zero_count != expected_c)
    throw InconsistencyError("classify_face: c = " + std::to_string(rep.zero_count) + " but q - (s-1)|Delta-Delta(P)| = " +
                             std::to_string(expected_c));
  return rep;
}

}  // namespace eigencone
