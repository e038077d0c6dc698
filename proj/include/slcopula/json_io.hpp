#pragma once

// JSON encodings of specs and reports. Malformed input raises SpecError.
//
// Diagonal specs:
//   {"variant":"m","m":0.5}            {"variant":"p","p":0.8}
//   {"variant":"beta","beta":0.5}      {"variant":"step","side":"right","a":0.4}
//   {"variant":"mixture","atoms":[{"m":0.0,"w":0.5},{"m":1.0,"w":0.5}]}
//   {"variant":"tabulated","knots":[[0,0],[0.5,0.3],[1,1]]}
//   {"variant":"reflected","inner":{...}}
//   {"variant":"combination","parts":[{"w":0.5,"spec":{...}}, ...]}

#include <json.hpp>

#include "slcopula/association.hpp"
#include "slcopula/asymmetry.hpp"
#include "slcopula/choquet.hpp"
#include "slcopula/diagonal.hpp"
#include "slcopula/extremity.hpp"
#include "slcopula/semilinear.hpp"

namespace slc {

using Json = nlohmann::ordered_json;

Diagonal diagonal_from_json(const Json& j);
Json to_json(const Diagonal& d);

DiscreteMeasure measure_from_json(const Json& j);
Json to_json(const DiscreteMeasure& mu);

PiecewiseQuadratic piecewise_from_json(const Json& j);
Json to_json(const PiecewiseQuadratic& pw);

Json to_json(const Tolerance& tol);
Json to_json(const ClassReport& r);
Json to_json(const ExtremityReport& r);
Json to_json(const MeasureTriple& t);
Json to_json(const PositivityReport& r);
Json to_json(const AsymmetryBounds& b);
Json to_json(const Attainment& a);

/// Parses text as JSON, mapping parse errors to SpecError.
Json parse_json(const std::string& text);

}  // namespace slc
