#include "eigencone/serialize.hpp"

#include <nlohmann/json.hpp>

namespace eigencone {

using nlohmann::json;

namespace {

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string("JSON: ") + e.what());
  }
}

json ray_json(const RayTuple& t) {
  bool integral = true;
  for (const auto& w : t.weights)
    for (const auto& c : w.coords)
      if (denominator(c) != 1) integral = false;
  const RayTuple src = integral ? t : t.normalized();
  json weights = json::array();
  for (const auto& w : src.weights) {
    json row = json::array();
    for (const auto& c : w.coords) row.push_back(static_cast<long long>(numerator(c)));
    weights.push_back(std::move(row));
  }
  return json{{"weights", std::move(weights)}, {"tag", std::string(to_string(t.tag))}};
}

RayTuple ray_from(const json& j) {
  if (!j.is_object() || !j.contains("weights")) throw ParseError("ray JSON needs a \"weights\" array");
  std::vector<Weight> ws;
  std::size_t rank = 0;
  for (const auto& row : j.at("weights")) {
    QVector c;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw ParseError("ray JSON coordinates must be integers");
      c.emplace_back(x.get<long long>());
    }
    if (!ws.empty() && c.size() != rank) throw ParseError("ray JSON rows differ in length");
    rank = c.size();
    ws.emplace_back(std::move(c));
  }
  Provenance tag = Provenance::user;
  if (j.contains("tag")) tag = parse_provenance(j.at("tag").get<std::string>());
  return RayTuple(std::move(ws), tag);
}

}  // namespace

FaceInput parse_face_json(std::string_view text) {
  return guarded([&] {
    const json j = json::parse(text);
    FaceInput in;
    in.type = j.at("type").get<std::string>();
    in.parabolic = j.at("parabolic").get<std::vector<int>>();
    in.words = j.at("words").get<std::vector<std::string>>();
    in.s = j.contains("s") ? j.at("s").get<int>() : static_cast<int>(in.words.size());
    return in;
  });
}

std::string face_input_to_json(const FaceInput& in) {
  return json{{"type", in.type}, {"s", in.s}, {"parabolic", in.parabolic}, {"words", in.words}}.dump();
}

FaceSpec make_face(const Context& ctx, const FaceInput& in) {
  if (static_cast<int>(in.words.size()) != in.s)
    throw PreconditionError("face: s = " + std::to_string(in.s) + " but " + std::to_string(in.words.size()) +
                            " words given");
  FaceSpec f{in.s, ctx.parabolic(in.parabolic), {}};
  for (const auto& w : in.words) f.words.push_back(ctx.weyl().parse(w));
  validate_face(ctx, f);
  return f;
}

FaceInput describe_face(const Context& ctx, const FaceSpec& face) {
  FaceInput in;
  in.type = ctx.roots().label();
  in.s = face.s;
  for (int k : face.parabolic.omitted_nodes()) in.parabolic.push_back(k + 1);
  for (WeylId w : face.words) in.words.push_back(ctx.weyl().word_string(w));
  return in;
}

std::string ray_to_json(const RayTuple& t) { return ray_json(t).dump(); }

RayTuple parse_ray_json(std::string_view text) {
  return guarded([&] { return ray_from(json::parse(text)); });
}

std::string rays_to_json(const std::vector<RayTuple>& rays) {
  json arr = json::array();
  for (const auto& r : rays) arr.push_back(ray_json(r));
  return arr.dump();
}

std::vector<RayTuple> parse_rays_json(std::string_view text) {
  return guarded([&] {
    std::vector<RayTuple> out;
    const json j = json::parse(text);
    if (!j.is_array()) throw ParseError("expected a JSON array of rays");
    for (const auto& r : j) out.push_back(ray_from(r));
    return out;
  });
}

}  // namespace eigencone
