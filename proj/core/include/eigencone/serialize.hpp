#pragma once

// JSON forms of face data and ray tuples.
//   face: {"type":"D4","s":3,"parabolic":[2],"words":["s4 s3 s1 s2", ...]}
//         "parabolic" lists the omitted nodes, 1-based.
//   ray:  {"weights":[[c_1,...,c_r], ...],"tag":"basic|induced|dd|user"}
//         integral tuples are written as they are; others are rescaled to
//         primitive integers first.

#include "eigencone/faces.hpp"
#include "eigencone/raytuple.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace eigencone {

struct FaceInput {
  std::string type;
  int s = 0;
  std::vector<int> parabolic;  ///< omitted nodes, 1-based
  std::vector<std::string> words;
};

FaceInput parse_face_json(std::string_view text);
std::string face_input_to_json(const FaceInput& in);

/// Resolves the words against ctx and validates the face.
FaceSpec make_face(const Context& ctx, const FaceInput& in);
FaceInput describe_face(const Context& ctx, const FaceSpec& face);

std::string ray_to_json(const RayTuple& t);
RayTuple parse_ray_json(std::string_view text);

std::string rays_to_json(const std::vector<RayTuple>& rays);
std::vector<RayTuple> parse_rays_json(std::string_view text);

}  // namespace eigencone
