#pragma once
// JSON encodings of the library's values. Numbers are written as IEEE doubles
// with 17 significant digits, so every double survives a round trip exactly.

#include <string>

#include "json.hpp"

#include "gdet/bipoly.hpp"
#include "gdet/geometry.hpp"
#include "gdet/inner.hpp"
#include "gdet/pick.hpp"

namespace gdet::json {

using nlohmann::json;

json from_complex(cplx c);
/// Accepts [re, im] or a bare number. `field` names the value in diagnostics.
cplx to_complex(const json& j, const std::string& field);

/// {"space":"zw"|"sp","bidegree":[d1,d2],"coeffs":[[[re,im],...],...]}
json from_poly(const BiPoly& p);
BiPoly to_poly(const json& j, const std::string& field = "poly");

/// {"num": poly, "den": poly}
json from_ratfun(const RatFun& f);
RatFun to_ratfun(const json& j, const std::string& field = "ratfun");

/// {"s":[re,im],"p":[re,im]}
json from_point(const PointG& pt);
PointG to_point(const json& j, const std::string& field = "point");

/// {"m": int, "eta": poly, "phase": [re,im]}
json from_inner(const InnerFun& f);
InnerFun to_inner(const json& j, const std::string& field = "inner");

/// {"f": inner, "xi": poly, "epsilon": real}
json from_eps_family(const EpsFamily& g);
EpsFamily to_eps_family(const json& j, const std::string& field = "eps_family");

/// {"kernel":"szego"|"bergman"|"symg","nodes":[...],"values":[...]}; disk
/// nodes are complex numbers, symg nodes are points.
PickProblem to_pick_problem(const json& j);
json from_pick_problem(const PickProblem& p);

/// Serializes with 17-significant-digit doubles.
std::string dump(const json& j, int indent = -1);

json parse_file(const std::string& path);

}  // namespace gdet::json
