#pragma once

#include "spanlab.hpp"

#include <json.hpp>

namespace torelli {

// plain nlohmann::json keeps object keys sorted, which the byte-identical
// output contract relies on
using json = nlohmann::json;

json vec_to_json(const Vec& v);
json mat_to_json(const IntMat& m);  // row-major integer arrays
json table_to_json(const SurfaceModel& m);
json wedge_to_json(const SurfaceModel& m, const Wedge3& w);     // {triples: [[a,b,c,coeff]...]}
json boolpoly_to_json(const SurfaceModel& m, const BoolPoly& p);  // {monomials: [...]}, "1" for the unit
json notation_to_json(const SurfaceModel& m, const ChainNotation& n);
json word_to_json(const SurfaceModel& m, const GroupWord& w);
json graph_to_json(const GraphModel& g);

}  // namespace torelli
