#pragma once

// Helpers shared by the subcommands.

#include "eigencone/context.hpp"
#include "eigencone/faces.hpp"
#include "eigencone/raytuple.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace eigencone::cli {

std::vector<std::string> split(std::string_view text, char sep);

/// "0,1,0,0; 0,0,1,0; ..." with optional fractions ("-1/2").
RayTuple parse_tuple(std::string_view text, int rank);

/// "1" or "2,4" into 1-based nodes.
std::vector<int> parse_nodes(std::string_view text);

/// "2:s3v": j = 2, v = s3 * w_2. A trailing u, v or w stands for w_j; a
/// plain word is taken literally.
std::pair<int, WeylId> parse_pair(const Context& ctx, const FaceSpec& face, std::string_view text);

/// Face from --parabolic and --words; validated.
FaceSpec parse_face(const Context& ctx, std::string_view parabolic, std::string_view words, int s);

/// Word in the written form used for output ("s4 s3 s1 s2", "1" for e).
std::string word(const Context& ctx, WeylId w);

}  // namespace eigencone::cli
