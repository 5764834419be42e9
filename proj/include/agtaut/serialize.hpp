#pragma once

// JSON forms of the library values.  Rationals are strings "p/q" (or "n"
// for integers); from_json accepts both.

#include "agtaut/gw.hpp"
#include "agtaut/isogeny.hpp"
#include "agtaut/qseries.hpp"
#include "agtaut/taut_ring.hpp"

#include <json.hpp>

namespace agtaut {

using Json = nlohmann::json;

// {"g": int, "terms": [{"indices": [int, ..], "coeff": "p/q"}, ..]}
Json to_json(TautClass const& c);
TautClass taut_class_from_json(Json const& j);

// {"order": D, "coeffs": ["p/q", ..]}
Json to_json(QSeries const& s);
QSeries qseries_from_json(Json const& j);

// {"degree": "n", "route": "closed_form" | "stratified" | "enumeration"}
Json to_json(DegreeResult const& r);
DegreeResult degree_from_json(Json const& j);

// {"g": int, "d": int, "i": int, "insertion": str, "value": "p/q"}
Json to_json(GWPrediction const& p);

}  // namespace agtaut
