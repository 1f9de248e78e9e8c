#include "cli.hpp"

#include "common.hpp"

#include "eigencone/cone.hpp"
#include "eigencone/errors.hpp"
#include "eigencone/oracle.hpp"
#include "eigencone/rays.hpp"
#include "eigencone/serialize.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace eigencone::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string type = "D4";
  int s = 0;
  std::string parabolic;
  std::string words;
  std::vector<std::string> pairs;
  std::string tuple;
  std::string format = "text";
  std::string cache_dir;
  int oracle_max_n = 0;
  int oracle_max_height = 20;
  bool quotient = false;
  bool shift = false;
  bool general = false;
  std::string target;
};

json ray_json(const RayTuple& t) { return json::parse(ray_to_json(t)); }

std::unique_ptr<Context> make_context(const Options& o) {
  ContextOptions co;
  co.cache_dir = o.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(o.cache_dir);
  return std::make_unique<Context>(o.type, co);
}

void require(bool ok, const char* what) {
  if (!ok) throw ParseError(what);
}

json face_json(const Context& ctx, const FaceSpec& f) { return json::parse(face_input_to_json(describe_face(ctx, f))); }

int cmd_facets(const Options& o, std::ostream& out) {
  const auto ctx = make_context(o);
  const int s = o.s > 0 ? o.s : 3;
  std::vector<FaceSpec> facets = enumerate_regular_facets(*ctx, s, o.quotient);
  if (!o.parabolic.empty()) {
    const Parabolic p = ctx->parabolic(parse_nodes(o.parabolic));
    std::erase_if(facets, [&](const FaceSpec& f) { return !(f.parabolic == p); });
  }
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& f : facets) arr.push_back(face_json(*ctx, f));
    out << arr.dump(2) << "\n";
  } else {
    for (const auto& f : facets) out << to_string(*ctx, f) << "\n";
    out << facets.size() << " regular facets\n";
  }
  return kOk;
}

int cmd_face_rays(const Options& o, std::ostream& out) {
  require(!o.parabolic.empty() && !o.words.empty(), "face-rays needs --parabolic and --words");
  const auto ctx = make_context(o);
  const FaceSpec face = parse_face(*ctx, o.parabolic, o.words, o.s);
  const FaceReport r = classify_face(*ctx, face);
  if (o.format == "json") {
    json j;
    j["face"] = face_json(*ctx, face);
    j["q"] = r.q;
    j["c"] = r.zero_count;
    j["exotic"] = r.exotic.size();
    j["total"] = r.total;
    for (const auto& t : r.basic_rays) j["type1"].push_back(ray_json(t));
    j["type2"] = json::array();
    for (const auto& t : r.type2_rays) j["type2"].push_back(ray_json(t));
    j["induction"] = json::array();
    for (const auto& l : r.levi)
      j["induction"].push_back({{"levi", ray_json(l.levi_ray)}, {"image", ray_json(l.image)}, {"extremal", l.extremal}});
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "face " << to_string(*ctx, face) << "\n";
  out << "q = " << r.q << "  c = " << r.zero_count << "  exotic = " << r.exotic.size() << "  total = " << r.total << "\n";
  out << "type I rays:\n";
  for (std::size_t i = 0; i < r.pairs.size(); ++i)
    out << "  D(" << r.pairs[i].j + 1 << ", " << word(*ctx, r.pairs[i].v) << ")  alpha_" << r.pairs[i].ell + 1 << "  "
        << to_string(r.basic_rays[i]) << "\n";
  out << "type II rays:\n";
  for (const auto& t : r.type2_rays) out << "  " << to_string(t) << "\n";
  out << "induction from the Levi:\n";
  for (const auto& l : r.levi)
    out << "  " << to_string(l.levi_ray) << " -> " << to_string(l.image)
        << (l.zero ? "" : l.extremal ? "" : "  (not extremal)") << "\n";
  return kOk;
}

int cmd_divisor(const Options& o, std::ostream& out) {
  require(!o.parabolic.empty() && !o.words.empty() && !o.pairs.empty(),
          "divisor needs --parabolic, --words and --pair");
  const auto ctx = make_context(o);
  const FaceSpec face = parse_face(*ctx, o.parabolic, o.words, o.s);
  json arr = json::array();
  for (const auto& p : o.pairs) {
    const auto [j, v] = parse_pair(*ctx, face, p);
    const RayTuple d = basic_divisor_class(*ctx, face, j, v);
    if (o.format == "json")
      arr.push_back({{"pair", p}, {"v", word(*ctx, v)}, {"ray", ray_json(d)}});
    else
      out << "D(" << j + 1 << ", " << word(*ctx, v) << ") = " << to_string(d) << "\n";
  }
  if (o.format == "json") out << arr.dump(2) << "\n";
  return kOk;
}

int cmd_induct(const Options& o, std::ostream& out) {
  require(!o.parabolic.empty() && !o.words.empty() && !o.tuple.empty(),
          "induct needs --parabolic, --words and --tuple");
  const auto ctx = make_context(o);
  const FaceSpec face = parse_face(*ctx, o.parabolic, o.words, o.s);
  RayTuple mu = parse_tuple(o.tuple, ctx->roots().rank());
  if (mu.s() != face.s) throw PreconditionError("--tuple has " + std::to_string(mu.s()) + " entries, face has " + std::to_string(face.s));
  if (o.shift) mu = shift_to_degree0(*ctx, mu, face.parabolic);
  const RayTuple img = o.general ? induct_general(*ctx, face, mu) : induct(*ctx, face, mu);
  if (o.format == "json")
    out << json{{"input", to_string(mu)}, {"image", ray_json(img)}}.dump(2) << "\n";
  else
    out << to_string(mu) << " -> " << to_string(img) << "\n";
  return kOk;
}

int cmd_membership(const Options& o, std::ostream& out) {
  require(!o.tuple.empty(), "membership needs --tuple");
  const auto ctx = make_context(o);
  const RayTuple x = parse_tuple(o.tuple, ctx->roots().rank());
  if (o.s > 0 && x.s() != o.s) throw PreconditionError("--tuple has " + std::to_string(x.s()) + " entries, --s is " + std::to_string(o.s));
  const bool member = tens_membership(*ctx, x);
  json j{{"tuple", to_string(x)}, {"member", member}};
  std::string oracle_line;
  if (o.oracle_max_n > 0) {
    OracleOptions opts;
    opts.max_height = o.oracle_max_height;
    int found = 0;
    for (int n = 1; n <= o.oracle_max_n && !found; ++n)
      if (invariant_dim(*ctx, Rational(n) * x, opts) > 0) found = n;
    j["oracle_n"] = found;
    oracle_line = found ? "invariants at N = " + std::to_string(found) : "no invariants for N <= " + std::to_string(o.oracle_max_n);
  }
  if (o.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << to_string(x) << (member ? " is" : " is not") << " in the tensor cone\n";
    if (!oracle_line.empty()) out << oracle_line << "\n";
  }
  return kOk;
}

ZVector orbit_key(const RayTuple& t) {
  std::vector<int> perm(t.s());
  std::iota(perm.begin(), perm.end(), 0);
  ZVector best;
  do {
    RayTuple p;
    for (int i : perm) p.weights.push_back(t.weights[i]);
    ZVector z = p.primitive();
    if (best.empty() || z < best) best = std::move(z);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

int cmd_cone_rays(const Options& o, std::ostream& out) {
  const auto ctx = make_context(o);
  const int s = o.s > 0 ? o.s : 3;
  const int r = ctx->roots().rank();
  std::vector<RayTuple> rays;
  for (const Ray& ray : extremal_rays(tensor_cone_hrep(*ctx, s)))
    rays.push_back(RayTuple::from_flat(std::span<const Integer>(ray), s, r, Provenance::dd));
  std::map<ZVector, int> orbits;
  if (o.quotient) {
    std::vector<RayTuple> reps;
    for (const auto& t : rays) {
      const ZVector key = orbit_key(t);
      if (orbits[key]++ == 0) reps.push_back(RayTuple::from_flat(std::span<const Integer>(key), s, r, Provenance::dd));
    }
    rays = std::move(reps);
  }
  if (o.format == "json") {
    out << rays_to_json(rays) << "\n";
  } else {
    for (const auto& t : rays) {
      out << to_string(t);
      if (o.quotient) out << "  orbit size " << orbits[t.primitive()];
      out << "\n";
    }
    out << rays.size() << (o.quotient ? " ray orbits under factor permutations\n" : " extremal rays\n");
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extremal rays of eigencones and tensor cones", "eigencone-cli"};
  app.require_subcommand(1);
  Options o;

  auto add_type = [&](CLI::App* c) {
    c->add_option("--type", o.type, "Cartan label, e.g. D4 or A1xA1");
    c->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    c->add_option("--cache-dir", o.cache_dir, "Directory for Schubert product tables");
  };
  auto add_face = [&](CLI::App* c) {
    c->add_option("--s", o.s, "Number of factors");
    c->add_option("--parabolic", o.parabolic, "Omitted simple roots, 1-based, comma separated");
    c->add_option("--words", o.words, "Weyl words separated by ';'");
  };

  auto* facets = app.add_subcommand("facets", "List regular facets");
  add_type(facets);
  facets->add_option("--s", o.s, "Number of factors");
  facets->add_option("--parabolic", o.parabolic, "Only facets for this maximal parabolic");
  facets->add_flag("--quotient-symmetry", o.quotient, "Keep one tuple per factor permutation orbit");

  auto* face_rays = app.add_subcommand("face-rays", "Classify the extremal rays of a face");
  add_type(face_rays);
  add_face(face_rays);

  auto* divisor = app.add_subcommand("divisor", "Basic divisor classes D(j,v)");
  add_type(divisor);
  add_face(divisor);
  divisor->add_option("--pair", o.pairs, "j:word, a trailing u/v/w stands for w_j")->take_all();

  auto* ind = app.add_subcommand("induct", "Induction from the Levi to a face");
  add_type(ind);
  add_face(ind);
  ind->add_option("--tuple", o.tuple, "Weights separated by ';', coordinates by ','");
  ind->add_flag("--shift", o.shift, "Shift the input to degree 0 first");
  ind->add_flag("--general", o.general, "Skip the degree-0 check");

  auto* mem = app.add_subcommand("membership", "Tensor cone membership");
  add_type(mem);
  mem->add_option("--s", o.s, "Number of factors");
  mem->add_option("--tuple", o.tuple, "Weights separated by ';', coordinates by ','");
  mem->add_option("--oracle-max-n", o.oracle_max_n, "Also search invariants of N*tuple for N up to this");
  mem->add_option("--oracle-max-height", o.oracle_max_height, "Largest entry height for the invariant oracle");

  auto* cone = app.add_subcommand("cone-rays", "Extremal rays of the whole tensor cone");
  add_type(cone);
  cone->add_option("--s", o.s, "Number of factors");
  cone->add_flag("--quotient-symmetry", o.quotient, "Print one ray per factor permutation orbit");

  auto* rep = app.add_subcommand("reproduce", "Recompute a stored table and compare");
  rep->add_option("target", o.target, "ex1, subbie, apples or p4-table")->required();
  rep->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  rep->add_option("--cache-dir", o.cache_dir, "Directory for Schubert product tables");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*facets) return cmd_facets(o, out);
    if (*face_rays) return cmd_face_rays(o, out);
    if (*divisor) return cmd_divisor(o, out);
    if (*ind) return cmd_induct(o, out);
    if (*mem) return cmd_membership(o, out);
    if (*cone) return cmd_cone_rays(o, out);
    if (*rep) {
      if (golden(o.target).empty()) throw ParseError("unknown reproduce target '" + o.target + "'");
      if (!o.cache_dir.empty()) setenv("EIGENCONE_CACHE_DIR", o.cache_dir.c_str(), 1);
      return reproduce(o.target, o.format == "json", out, err);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

}  // namespace eigencone::cli
