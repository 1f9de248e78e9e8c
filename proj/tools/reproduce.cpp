#include "cli.hpp"

#include "common.hpp"

#include "eigencone/errors.hpp"
#include "eigencone/rays.hpp"
#include "eigencone/serialize.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>

namespace eigencone::cli {

using nlohmann::json;

namespace {

class Checker {
 public:
  Checker(std::ostream& out, bool json_mode) : out_(out), json_(json_mode) {}

  void line(const std::string& text) {
    if (!json_) out_ << text << "\n";
  }

  template <class T>
  void check(const std::string& name, const T& expected, const T& actual, const std::string& shown) {
    const bool ok = expected == actual;
    checks_.push_back({{"name", name}, {"ok", ok}, {"value", shown}});
    if (!ok) diffs_.push_back(name);
    line("  " + name + ": " + shown + (ok ? "" : "   <-- mismatch"));
  }

  void check_text(const std::string& name, const std::string& expected, const std::string& actual) {
    const bool ok = expected == actual;
    checks_.push_back({{"name", name}, {"ok", ok}, {"expected", expected}, {"actual", actual}});
    if (!ok) diffs_.push_back(name + "\n    - expected " + expected + "\n    + actual   " + actual);
    line("  " + name + ": " + actual + (ok ? "" : "   <-- mismatch"));
  }

  int finish(std::string_view target, std::ostream& err) {
    if (json_) {
      out_ << json{{"target", target}, {"ok", diffs_.empty()}, {"checks", checks_}}.dump(2) << "\n";
    } else {
      out_ << (diffs_.empty() ? "all " + std::to_string(checks_.size()) + " values match the stored table"
                              : std::to_string(diffs_.size()) + " of " + std::to_string(checks_.size()) +
                                    " values differ from the stored table")
           << "\n";
    }
    for (const auto& d : diffs_) err << "mismatch: " << d << "\n";
    return diffs_.empty() ? kOk : kGoldenMismatch;
  }

 private:
  std::ostream& out_;
  bool json_;
  json checks_ = json::array();
  std::vector<std::string> diffs_;
};

RayTuple tuple_of(const json& weights) {
  std::vector<Weight> ws;
  for (const auto& row : weights) {
    QVector c;
    for (const auto& x : row) c.emplace_back(x.get<long long>());
    ws.emplace_back(std::move(c));
  }
  return RayTuple(std::move(ws));
}

Weight weight_of(const json& row) {
  QVector c;
  for (const auto& x : row) c.emplace_back(x.get<long long>());
  return Weight(std::move(c));
}

std::set<std::string> ray_strings(const std::vector<RayTuple>& rays) {
  std::set<std::string> out;
  for (const auto& r : rays) out.insert(to_string(r.normalized()));
  return out;
}

std::string join(const std::set<std::string>& s) {
  std::string out;
  for (const auto& x : s) out += (out.empty() ? "" : "; ") + x;
  return out;
}

std::unique_ptr<Context> context_for(const json& g) {
  ContextOptions co;
  co.cache_dir = default_cache_dir();
  return std::make_unique<Context>(g.at("type").get<std::string>(), co);
}

FaceSpec face_of(const Context& ctx, const json& g, const std::vector<std::string>& words) {
  FaceSpec f{g.at("s").get<int>(), ctx.parabolic(g.at("parabolic").get<std::vector<int>>()), {}};
  for (const auto& w : words) f.words.push_back(ctx.weyl().parse(w));
  validate_face(ctx, f);
  return f;
}

int run_ex1(const json& g, Checker& ck, std::ostream& err) {
  const auto ctx = context_for(g);
  const WeylGroup& W = ctx->weyl();
  const Parabolic P = ctx->parabolic(g.at("parabolic").get<std::vector<int>>());
  std::map<std::string, WeylId> named;
  for (const auto& [k, v] : g.at("words").items()) named[k] = W.parse(v.get<std::string>());
  // "s2 u": a word followed by one of the named elements.
  auto resolve = [&](const std::string& expr) {
    const auto pos = expr.find_last_of(' ');
    const std::string name = pos == std::string::npos ? expr : expr.substr(pos + 1);
    const WeylId base = named.at(name);
    return pos == std::string::npos ? base : W.multiply(W.parse(expr.substr(0, pos)), base);
  };
  auto tuple = [&](const json& names) {
    std::vector<WeylId> out;
    for (const auto& n : names) out.push_back(resolve(n.get<std::string>()));
    return out;
  };
  const Schubert sch = ctx->schubert();
  ck.line("D4, P = P_2, u = " + g["words"]["u"].get<std::string>() + ", v = " + g["words"]["v"].get<std::string>() +
          ", w = " + g["words"]["w"].get<std::string>());
  for (const char* key : {"deformed", "ordinary_only"}) {
    const json& d = g.at(key);
    const auto ws = tuple(d.at("tuple"));
    const LeviMovability lm = levi_movable(sch, ws, P);
    std::string label;
    for (const auto& n : d.at("tuple")) label += (label.empty() ? "" : ", ") + n.get<std::string>();
    ck.check_text("levi-movable (" + label + ")", std::string(d.at("movable").get<bool>() ? "true" : "false"),
                  std::string(lm.movable ? "true" : "false"));
    ck.check_text("ordinary coefficient (" + label + ")", std::to_string(d.at("coefficient").get<int>()),
                  lm.coefficient.str());
    ck.check_text("deformed coefficient (" + label + ")",
                  std::to_string(d.at("movable").get<bool>() ? d.at("coefficient").get<int>() : 0),
                  lm.movable ? lm.coefficient.str() : std::string("0"));
  }
  for (const auto& p : g.at("products")) {
    std::string label;
    for (const auto& n : p.at("tuple")) label += (label.empty() ? "" : ", ") + n.get<std::string>();
    ck.check_text("product (" + label + ")", std::to_string(p.at("coefficient").get<int>()),
                  sch.multi_coeff(tuple(p.at("tuple")), P).str());
  }
  const auto covers = g.at("first_entry_tests").at("covers").get<std::vector<int>>();
  for (int l = 1; l <= ctx->roots().rank(); ++l) {
    const bool expected = std::find(covers.begin(), covers.end(), l) != covers.end();
    const WeylId u = named.at("u");
    const bool got = W.cover_test(u, l - 1, P);
    ck.check_text("s" + std::to_string(l) + " u covers u inside W^P (length " + std::to_string(W.length(W.left_multiply(l - 1, u))) + ")",
                  expected ? "true" : "false", got ? "true" : "false");
  }
  ck.line("  note: " + g.at("note").get<std::string>());
  const FaceSpec face{3, P, tuple(json::array({"u", "v", "w"}))};
  validate_face(*ctx, face);
  const auto [j, v] = parse_pair(*ctx, face, g.at("divisor").at("pair").get<std::string>());
  const RayTuple d = basic_divisor_class(*ctx, face, j, v);
  ck.check_text("D(2, s3 v)", to_string(tuple_of(g.at("divisor").at("weights"))), to_string(d));
  (void)err;
  return 0;
}

int run_subbie(const json& g, Checker& ck) {
  const auto ctx = context_for(g);
  const FaceSpec face = face_of(*ctx, g, g.at("words").get<std::vector<std::string>>());
  const FaceReport r = classify_face(*ctx, face);
  ck.line("face " + to_string(*ctx, face));
  ck.check_text("q", std::to_string(g.at("q").get<int>()), std::to_string(r.q));
  std::vector<RayTuple> t1, t2;
  for (const auto& x : g.at("type1")) t1.push_back(tuple_of(x));
  for (const auto& x : g.at("type2")) t2.push_back(tuple_of(x));
  ck.check_text("type I rays", join(ray_strings(t1)), join(ray_strings(r.basic_rays)));
  ck.check_text("type II rays", join(ray_strings(t2)), join(ray_strings(r.type2_rays)));
  const auto levi = levi_cone_rays(*ctx, face.parabolic, face.s);
  ck.check_text("Levi rays", std::to_string(g.at("induction").size()), std::to_string(levi.size()));
  int zeros = 0;
  for (const auto& row : g.at("induction")) {
    const RayTuple mu = tuple_of(row.at("levi"));
    const bool present = std::any_of(levi.begin(), levi.end(), [&](const RayTuple& l) { return l == mu; });
    const RayTuple img = induct(*ctx, face, shift_to_degree0(*ctx, mu, face.parabolic));
    if (img.is_zero()) ++zeros;
    ck.check_text("Ind " + to_string(mu) + (present ? "" : " (not a Levi ray)"),
                  to_string(tuple_of(row.at("image"))), present ? to_string(img) : "missing");
  }
  ck.check_text("c", std::to_string(g.at("c").get<int>()), std::to_string(r.zero_count));
  ck.check_text("zeros in the induction table", std::to_string(g.at("c").get<int>()), std::to_string(zeros));
  const int omitted = static_cast<int>(face.parabolic.omitted_nodes().size());
  ck.check_text("c = q - (s-1)|Delta - Delta(P)|",
                std::to_string(r.zero_count) + " = " + std::to_string(r.q) + " - (" + std::to_string(face.s) + "-1)*" +
                    std::to_string(omitted),
                std::to_string(r.q - (face.s - 1) * omitted) + " = " + std::to_string(r.q) + " - (" +
                    std::to_string(face.s) + "-1)*" + std::to_string(omitted));
  ck.check_text("total rays (double description)", std::to_string(g.at("total").get<int>()), std::to_string(r.total));
  return 0;
}

int run_apples(const json& g, Checker& ck) {
  const auto ctx = context_for(g);
  const WeylGroup& W = ctx->weyl();
  const FaceSpec face = face_of(*ctx, g, g.at("words").get<std::vector<std::string>>());
  const int k = g.at("k").get<int>() - 1;
  const int r = ctx->roots().rank();
  const Weight om = ctx->roots().fundamental_weight(k);
  const char* names[] = {"u", "v", "w"};
  ck.line("face " + to_string(*ctx, face) + ", k = " + std::to_string(k + 1));
  for (int j = 0; j < face.s; ++j)
    ck.check_text(std::string(names[j % 3]) + " omega_" + std::to_string(k + 1), to_string(weight_of(g.at("images")[j])),
                  to_string(W.act(face.words[j], om)));
  const RayTuple expected = tuple_of(g.at("induced"));
  for (int j = 0; j < face.s; ++j) {
    RayTuple mu = RayTuple::zero(face.s, r);
    mu.weights[j] = om;
    const RayTuple img = induct_general(*ctx, face, mu);
    ck.check_text("Ind " + to_string(mu), to_string(expected), to_string(img));
  }
  ck.check_text("face inequality at x_" + std::to_string(k + 1), std::to_string(g.at("inequality").get<int>()),
                to_string(eval_inequality(*ctx, face, expected, k)));
  ck.check_text("in the tensor cone", g.at("member").get<bool>() ? "true" : "false",
                tens_membership(*ctx, expected) ? "true" : "false");
  const auto pairs = typeI_pairs(*ctx, face);
  for (const auto& row : g.at("pairs")) {
    const int j = row.at("j").get<int>() - 1;
    const int l = row.at("ell").get<int>() - 1;
    auto it = std::find_if(pairs.begin(), pairs.end(), [&](const TypeIPair& p) { return p.j == j && p.ell == l; });
    const std::string label = "j=" + std::to_string(j + 1) + " l=" + std::to_string(l + 1);
    if (it == pairs.end()) {
      ck.check_text("pair " + label, "present", "missing");
      continue;
    }
    const Weight wj = W.act(face.words[j], om);
    ck.check_text("pair " + label + " pairing", std::to_string(row.at("pairing").get<int>()), to_string(wj.coords[l]));
    ck.check_text("pair " + label + " divisor", to_string(tuple_of(row.at("divisor"))),
                  to_string(basic_divisor_class(*ctx, face, it->j, it->v)));
  }
  return 0;
}

std::vector<RayTuple> permutations(const RayTuple& t) {
  std::vector<int> perm(t.s());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<RayTuple> out;
  do {
    RayTuple p;
    for (int i : perm) p.weights.push_back(t.weights[i]);
    out.push_back(p);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

int run_p4(const json& g, Checker& ck) {
  const auto ctx = context_for(g);
  const Parabolic P = ctx->parabolic(g.at("parabolic").get<std::vector<int>>());
  const int s = g.at("s").get<int>();
  const auto levi = levi_cone_rays(*ctx, P, s);
  std::vector<RayTuple> generated;
  for (const auto& x : g.at("levi_generators"))
    for (const auto& p : permutations(tuple_of(x))) generated.push_back(p);
  ck.check_text("Levi rays", std::to_string(g.at("levi_rays").get<int>()), std::to_string(levi.size()));
  ck.check_text("Levi rays = generators and permutations", join(ray_strings(generated)), join(ray_strings(levi)));
  ck.line("  Weyl triple | q | c | exotic | total");
  std::vector<FaceReport> reports;
  for (const auto& row : g.at("rows")) {
    const FaceSpec face = face_of(*ctx, g, row.at("words").get<std::vector<std::string>>());
    reports.push_back(classify_face(*ctx, face));
    const FaceReport& r = reports.back();
    std::string triple;
    for (const auto& w : row.at("words")) triple += (triple.empty() ? "(" : ", ") + w.get<std::string>();
    triple += ")";
    auto fmt = [](int q, int c, int e, int t) {
      return std::to_string(q) + " | " + std::to_string(c) + " | " + std::to_string(e) + " | " + std::to_string(t);
    };
    ck.check_text(triple,
                  fmt(row.at("q").get<int>(), row.at("c").get<int>(), row.at("exotic").get<int>(), row.at("total").get<int>()),
                  fmt(r.q, r.zero_count, static_cast<int>(r.exotic.size()), r.total));
    const int levi_n = static_cast<int>(r.levi.size());
    ck.check_text(triple + " total = q + " + std::to_string(levi_n) + " - c - e",
                  std::to_string(r.total), std::to_string(r.q + levi_n - r.zero_count - static_cast<int>(r.exotic.size())));
  }
  const json& ex = g.at("exotic_example");
  const FaceReport& r = reports.at(ex.at("row").get<std::size_t>() - 1);
  const RayTuple mu = tuple_of(ex.at("levi"));
  const RayTuple ray = tuple_of(ex.at("ray"));
  auto it = std::find_if(r.levi.begin(), r.levi.end(), [&](const LeviImage& l) { return l.levi_ray == mu; });
  ck.check_text("Ind " + to_string(mu), to_string(ray), it == r.levi.end() ? "missing" : to_string(it->image));
  ck.check_text("  extremal on the face", "false", it != r.levi.end() && it->extremal ? "true" : "false");
  RayTuple sum = RayTuple::zero(s, ctx->roots().rank());
  const std::set<std::string> face_rays = ray_strings(r.face_rays);
  for (const auto& part : ex.at("parts")) {
    const RayTuple p = tuple_of(part);
    sum += p;
    ck.check_text("  " + to_string(p) + " is an extremal ray of the face", "true",
                  face_rays.count(to_string(p)) ? "true" : "false");
  }
  ck.check_text("  sum of the two rays", to_string(ray), to_string(sum));
  return 0;
}

}  // namespace

int reproduce(std::string_view target, bool json_mode, std::ostream& out, std::ostream& err) {
  const std::string_view text = golden(target);
  if (text.empty()) throw ParseError("unknown reproduce target '" + std::string(target) + "'");
  return reproduce_against(target, text, json_mode, out, err);
}

int reproduce_against(std::string_view target, std::string_view text, bool json_mode, std::ostream& out,
                      std::ostream& err) {
  const auto names = golden_names();
  if (std::find(names.begin(), names.end(), target) == names.end())
    throw ParseError("unknown reproduce target '" + std::string(target) + "'");
  json g;
  try {
    g = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("golden table: ") + e.what());
  }
  Checker ck(out, json_mode);
  ck.line("reproduce " + std::string(target));
  if (target == "ex1")
    run_ex1(g, ck, err);
  else if (target == "subbie")
    run_subbie(g, ck);
  else if (target == "apples")
    run_apples(g, ck);
  else
    run_p4(g, ck);
  return ck.finish(target, err);
}

}  // namespace eigencone::cli
