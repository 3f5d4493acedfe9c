#pragma once

// JSON forms shared by the CLI:
//   matrix  {"rows": N, "cols": M, "entries": [["1/2", "0"], ...]}
//   padic   {"p": "t^2 + t + 1", "N": 3, "digits": ["1", "t", "0"]}
// Polynomials and scalars are strings (see Poly::to_string, FieldElement::to_string).

#include <nlohmann/json.hpp>

#include "bicomm/commalg.hpp"
#include "bicomm/deriv.hpp"
#include "bicomm/modstruct.hpp"
#include "bicomm/padic.hpp"

namespace bicomm {

using json = nlohmann::json;

json mat_to_json(const Mat& m);
/// Entries may be strings or integers. Throws Error(Parse) on malformed input.
Mat mat_from_json(const json& j, FieldSpec spec);

json algebra_to_json(const AlgebraBasis& b);

json padic_to_json(const TruncatedPAdic& x);
TruncatedPAdic padic_from_json(const json& j, FieldSpec spec);

/// primes as polynomial strings, projections and component bases as matrices.
json module_structure_to_json(const ModuleStructure& ms);

json range_kernel_to_json(const RangeKernelReport& r);

}  // namespace bicomm
