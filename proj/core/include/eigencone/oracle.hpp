#pragma once

// Independent tensor-invariant oracle: dim (V_{l_1} x ... x V_{l_s})^G for
// dominant integral weights, from Freudenthal multiplicities and the
// Brauer-Klimyk rule.

#include "eigencone/context.hpp"
#include "eigencone/raytuple.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace eigencone {

struct OracleOptions {
  /// Largest allowed height (sum of fundamental-weight coordinates) of any
  /// single entry; larger input throws ResourceError.
  int max_height = 20;
};

/// Dominant weights of V_lambda with multiplicities (Freudenthal).
std::map<std::vector<int>, std::int64_t> dominant_character(const RootSystem& rs, const std::vector<int>& lambda);

/// Multiplicity of V_nu in V_a x V_b.
std::int64_t tensor_multiplicity(const Context& ctx, const std::vector<int>& a, const std::vector<int>& b,
                                 const std::vector<int>& nu);

std::int64_t invariant_dim(const Context& ctx, const RayTuple& t, const OracleOptions& opts = {});

}  // namespace eigencone
