#pragma once

#include <json.hpp>

#include "ter/algebra.hpp"
#include "ter/subalgebra.hpp"

namespace ter {

using Json = nlohmann::ordered_json;

Json to_json(const ConductanceVector& c);
Json coeffs_to_json(const AlgebraElement& x);
Json to_json(const AlgebraElement& x);
Json to_json(const SubalgebraPoint& b);
Json to_json(const LaurentElement& x);

ConductanceVector conductances_from_json(const Json& j);
AlgebraElement element_from_json(const Json& j);
// Reads the "coeffs" style object for a known ambient.
AlgebraElement coeffs_from_json(const ConductanceVector& c, const Json& coeffs);
// Extra fields are ignored; the point is re-canonicalized and closure-checked.
SubalgebraPoint point_from_json(const Json& j);

}  // namespace ter
