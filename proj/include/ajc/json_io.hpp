#pragma once

#include <json.hpp>

#include "ajc/ajcheck.hpp"
#include "ajc/apoly.hpp"
#include "ajc/degrees.hpp"
#include "ajc/laurent.hpp"
#include "ajc/qtorus.hpp"
#include "ajc/recurrence.hpp"

namespace ajc::jsonio {

using Json = nlohmann::ordered_json;

// LaurentT: [[exponent, "coefficient"], ...] in increasing exponent order.
Json to_json(const LaurentT& f);
LaurentT laurent_from_json(const Json& j);
// PolyTM: [[t-exponent, M-exponent, "coefficient"], ...].
Json to_json(const PolyTM& f);
PolyTM polytm_from_json(const Json& j);
// TorusOp: [[L-exponent, PolyTM], ...].
Json to_json(const TorusOp& op);
TorusOp torus_from_json(const Json& j);
// CommPoly: [[L-exponent, M-exponent, "rational"], ...]; the recorded unit is not serialized.
Json to_json(const CommPoly& p);
CommPoly commpoly_from_json(const Json& j);
// QuasiPoly: {period, a[], b[], c[], N} with rationals as strings.
Json to_json(const QuasiPoly& q);
QuasiPoly quasi_from_json(const Json& j);

Json to_json(const RecurrenceCandidate& c);
Json to_json(const AJVerdict& v);
Json to_json(const NewtonPolygon& p);

}  // namespace ajc::jsonio
