#pragma once

// File formats. Matrices are split into real and imaginary parts:
//   Event          {"r": r, "re": [[...]], "im": [[...]]}
//   BrokenEvent    {"r": 2n, "n": n, "re": ..., "im": ...}   ("n" optional)
//   DensityMatrix  {"n": n, "re": ..., "im": ...}
//   Poincare       {"lambda": {"re": ..., "im": ...}, "beta": Event}
//   System         {"P": Event, "l": {"re": ..., "im": ...}}
// Structural problems raise ErrorCode::Parse; an "re" that is not symmetric
// or an "im" that is not antisymmetric raises NonHermitianInput.
//
// Output uses a fixed key order and prints every double with 17 significant
// digits, so equal inputs give byte-identical text.

#include "hyperchron/mechanics.hpp"
#include "hyperchron/projection.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace hyperchron::json {

using Json = nlohmann::ordered_json;

Json parse(std::string_view text);

/// Complex matrix from {"re": [[...]], "im": [[...]]}; "im" may be omitted.
CMatrix matrix_from(const Json& j);
Json matrix_to(const CMatrix& m);

Event event_from(const Json& j, const Tolerance& tol = {});
Json event_to(const Event& e);

BrokenEvent broken_event_from(const Json& j, const Tolerance& tol = {});
Json broken_event_to(const BrokenEvent& e);

/// Hermitian unit-trace matrix; positivity is checked by the caller.
CandidateMap candidate_from(const Json& j, const Tolerance& tol = {});
Json density_to(const CMatrix& rho);

PoincareElement poincare_from(const Json& j, const Tolerance& tol = {});
Json poincare_to(const PoincareElement& g);

ElementarySystem system_from(const Json& j, const Tolerance& tol = {});
Json system_to(const ElementarySystem& s);

Json causal_class_to(const CausalClass& c);
Json counterexample_to(const Counterexample& c);

/// Serialize with 2-space indentation and %.17g numbers.
std::string dump(const Json& j);

/// %.17g, with NaN and infinities rendered as null.
std::string format_double(double v);

}  // namespace hyperchron::json
