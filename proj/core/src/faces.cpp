#include "eigencone/faces.hpp"

#include <algorithm>
#include <functional>

namespace eigencone {

Rational LinearForm::evaluate(const RayTuple& t) const {
  if (t.weights.size() != blocks.size()) throw PreconditionError("LinearForm: tuple has wrong length");
  Rational out = 0;
  for (std::size_t j = 0; j < blocks.size(); ++j)
    out += dot(std::span<const Rational>(blocks[j]), std::span<const Rational>(t.weights[j].coords));
  return out;
}

ZVector LinearForm::primitive_row() const {
  QVector flat;
  for (const auto& b : blocks) flat.insert(flat.end(), b.begin(), b.end());
  return primitive(std::span<const Rational>(flat));
}

void validate_face(const Context& ctx, const FaceSpec& face) {
  const auto& w = ctx.weyl();
  if (face.s < 1 || static_cast<int>(face.words.size()) != face.s)
    throw PreconditionError("face: expected " + std::to_string(face.s) + " words, got " +
                            std::to_string(face.words.size()));
  if (face.parabolic.rank() != ctx.roots().rank()) throw PreconditionError("face: parabolic of wrong rank");
  if (face.parabolic.omitted_nodes().empty()) throw PreconditionError("face: parabolic must be proper");
  for (WeylId x : face.words) {
    if (x >= w.size()) throw PreconditionError("face: Weyl id out of range");
    if (!w.in_minimal_reps(x, face.parabolic))
      throw PreconditionError("face: " + w.word_string(x) + " is not a minimal coset representative for " +
                              face.parabolic.levi_label());
  }
  const Schubert sch = ctx.schubert();
  int total = 0;
  for (WeylId x : face.words) total += sch.codim(x, face.parabolic);
  if (total != sch.dim(face.parabolic))
    throw PreconditionError("face: codimensions sum to " + std::to_string(total) + ", expected " +
                            std::to_string(sch.dim(face.parabolic)));
  const LeviMovability lm = levi_movable(sch, face.words, face.parabolic);
  if (!lm.movable || lm.coefficient != 1)
    throw PreconditionError("face: deformed coefficient is " + (lm.movable ? lm.coefficient.str() : std::string("0")) +
                            ", expected 1");
}

std::vector<FaceSpec> enumerate_regular_facets(const Context& ctx, int s, bool quotient_symmetry) {
  if (s < 1) throw PreconditionError("enumerate_regular_facets: s must be positive");
  const RootSystem& rs = ctx.roots();
  const WeylGroup& w = ctx.weyl();
  const Schubert sch = ctx.schubert();
  std::vector<FaceSpec> out;
  for (int k = 0; k < rs.rank(); ++k) {
    const Parabolic p = Parabolic::omitting(rs, {k});
    const int dim = sch.dim(p);
    const std::vector<WeylId> reps = w.minimal_reps(p);
    std::vector<int> len;
    std::vector<Rational> chik;
    for (WeylId x : reps) {
      len.push_back(w.length(x));
      chik.push_back(rs.eval_x(chi(w, x, p), k));
    }
    const Rational chi_e = rs.eval_x(chi(w, w.identity(), p), k);
    // Sum of lengths must be (s-1) dim; gap: sum chi_{w_j}(x_k) == chi_e(x_k).
    const int target = (s - 1) * dim;
    std::vector<std::size_t> pick(s);
    std::function<void(int, std::size_t, int, Rational)> rec = [&](int j, std::size_t from, int lsum, Rational csum) {
      if (j == s) {
        if (lsum != target || csum != chi_e) return;
        std::vector<WeylId> words;
        for (std::size_t i : pick) words.push_back(reps[i]);
        if (sch.multi_coeff(words, p) != 1) return;
        out.push_back(FaceSpec{s, p, std::move(words)});
        return;
      }
      const int rest = s - j - 1;
      for (std::size_t i = quotient_symmetry ? from : 0; i < reps.size(); ++i) {
        const int l = lsum + len[i];
        if (l > target) continue;
        if (l + rest * dim < target) continue;
        pick[j] = i;
        rec(j + 1, i, l, csum + chik[i]);
      }
    };
    rec(0, 0, 0, Rational(0));
  }
  return out;
}

LinearForm face_form(const Context& ctx, const FaceSpec& face, int k) {
  const RootSystem& rs = ctx.roots();
  const WeylGroup& w = ctx.weyl();
  LinearForm f;
  for (WeylId x : face.words) {
    const WeylId xinv = w.inverse(x);
    QVector block(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) block[i] = rs.eval_x(w.act(xinv, rs.fundamental_weight(i)), k);
    f.blocks.push_back(std::move(block));
  }
  return f;
}

namespace {
void require_omitted(const FaceSpec& face, int k) {
  if (k < 0 || k >= face.parabolic.rank() || face.parabolic.in_levi(k))
    throw PreconditionError("inequality index " + std::to_string(k + 1) + " lies in the Levi of the face");
}
void require_shape(const Context& ctx, const FaceSpec& face, const RayTuple& x) {
  if (x.s() != face.s || x.rank() != ctx.roots().rank())
    throw PreconditionError("tuple shape does not match the face");
}
}  // namespace

Rational eval_inequality(const Context& ctx, const FaceSpec& face, const RayTuple& x, int k) {
  require_omitted(face, k);
  require_shape(ctx, face, x);
  const RootSystem& rs = ctx.roots();
  const WeylGroup& w = ctx.weyl();
  Rational out = 0;
  for (int j = 0; j < face.s; ++j) out += rs.eval_x(w.act(w.inverse(face.words[j]), x.weights[j]), k);
  return out;
}

Coweight act_coweight(const WeylGroup& w, WeylId elem, const Coweight& h) {
  const IntMatrix& a = w.roots().cartan();
  const int r = w.rank();
  Coweight out = h;
  const auto& word = w.word(elem);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int i = *it;
    const Rational ai = out.coords[i];  // alpha_i(h)
    if (ai == 0) continue;
    for (int j = 0; j < r; ++j)
      if (a[i][j] != 0) out.coords[j] -= ai * a[i][j];
  }
  return out;
}

Rational eval_inequality_coweight(const Context& ctx, const FaceSpec& face, const RayTuple& x, int k) {
  require_omitted(face, k);
  require_shape(ctx, face, x);
  const RootSystem& rs = ctx.roots();
  const WeylGroup& w = ctx.weyl();
  const QMatrix& ainv = rs.inverse_cartan();
  Rational out = 0;
  for (int j = 0; j < face.s; ++j) {
    const Coweight h = act_coweight(w, w.inverse(face.words[j]), rs.kappa(x.weights[j]));
    for (int i = 0; i < rs.rank(); ++i) out += ainv[i][k] * h.coords[i];
  }
  return out;
}

bool tens_membership(const Context& ctx, const RayTuple& x) {
  if (x.rank() != ctx.roots().rank()) throw PreconditionError("tuple rank does not match the group");
  if (!x.is_dominant()) return false;
  for (const FaceSpec& f : ctx.regular_facets(x.s()))
    if (eval_inequality(ctx, f, x, f.parabolic.omitted_nodes().front()) > 0) return false;
  return true;
}

bool on_face(const Context& ctx, const FaceSpec& face, const RayTuple& x) {
  if (!tens_membership(ctx, x)) return false;
  for (int k : face.parabolic.omitted_nodes())
    if (eval_inequality(ctx, face, x, k) != 0) return false;
  return true;
}

std::vector<TypeIPair> typeI_pairs(const Context& ctx, const FaceSpec& face) {
  const RootSystem& rs = ctx.roots();
  const WeylGroup& w = ctx.weyl();
  std::vector<TypeIPair> out;
  for (int j = 0; j < face.s; ++j) {
    const WeylId x = face.words[j];
    const WeylId xinv = w.inverse(x);
    for (int l = 0; l < rs.rank(); ++l) {
      if (w.is_positive_root(w.act_root(xinv, rs.simple_root_index(l)))) continue;
      const WeylId v = w.left_multiply(l, x);
      if (w.length(v) + 1 != w.length(x) || !w.in_minimal_reps(v, face.parabolic))
        throw InconsistencyError("typeI_pairs: s_l w is not a cover inside W^P");
      out.push_back({j, v, l});
    }
  }
  return out;
}

HRep tensor_cone_hrep(const Context& ctx, int s) {
  const int r = ctx.roots().rank();
  HRep h(s * r);
  for (int i = 0; i < s * r; ++i) {
    ZVector row(s * r, 0);
    row[i] = 1;
    h.add_inequality(std::span<const Integer>(row));
  }
  for (const FaceSpec& f : ctx.regular_facets(s)) {
    ZVector row = face_form(ctx, f, f.parabolic.omitted_nodes().front()).primitive_row();
    for (auto& c : row) c = -c;
    h.add_inequality(std::span<const Integer>(row));
  }
  return h;
}

HRep face_hrep(const Context& ctx, const FaceSpec& face) {
  HRep h = tensor_cone_hrep(ctx, face.s);
  for (int k : face.parabolic.omitted_nodes()) {
    const ZVector row = face_form(ctx, face, k).primitive_row();
    h.add_equality(std::span<const Integer>(row));
  }
  return h;
}

std::string to_string(const Context& ctx, const FaceSpec& face) {
  std::string out = "P{";
  const auto& om = face.parabolic.omitted_nodes();
  for (std::size_t i = 0; i < om.size(); ++i) out += (i ? "," : "") + std::to_string(om[i] + 1);
  out += "} (";
  for (std::size_t j = 0; j < face.words.size(); ++j)
    out += (j ? ", " : "") + ctx.weyl().word_string(face.words[j]);
  return out + ")";
}

}  // namespace eigencone
