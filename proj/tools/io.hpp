#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "probekit/chekanov.hpp"
#include "probekit/monodromy.hpp"
#include "probekit/reduction.hpp"
#include "probekit/verdict.hpp"

namespace probekit::io {

using nlohmann::json;

// INT | INT/INT | a/b+c/d√D | a/b-c/d√D, plus the short forms "√2",
// "2√2", "1-√3". "sqrt" may stand in for "√".
Scalar parse_scalar(std::string_view s);
Point parse_point(std::string_view s);
IntVector parse_int_vector(std::string_view s);
// "lo..hi" per coordinate, comma separated
Window parse_window(std::string_view s);

// A file path, or "preset:<name>".
Polytope parse_polytope(const std::string& source);
Polytope polytope_from_json(const json& j);
AffineSlice slice_from_json(const json& j);

json to_json(const Scalar& s);
json to_json(const Point& x);
json to_json(const IntVector& v);
json to_json(const IntMatrix& m);
json to_json(const Polytope& P);
json to_json(const Invariants& inv);
json to_json(const Probe& s);
json to_json(const ProbeMove& m);
json to_json(const MatrixGroup& g);
json to_json(const AmbientResult& r);
json to_json(const Verdict& v);
json to_json(const Admissibility& a);
json to_json(const ReductionResult& r);
json to_json(const chekanov::Move& m);
json to_json(const chekanov::ProbeWord& w);

}  // namespace probekit::io
