#pragma once

#include <optional>
#include <string>
#include <vector>

#include "probekit/monodromy.hpp"
#include "probekit/orbit.hpp"

namespace probekit {

struct Verdict {
  enum class Kind { Equivalent, Distinct, Unknown };
  Kind kind = Kind::Unknown;
  std::vector<ProbeMove> path;          // Equivalent
  std::string reason;                   // "d", "count", "gamma", "ambient"
  std::optional<AmbientResult> ambient; // Distinct by ambient infeasibility, or the inconclusive attempt
  Invariants from, to;
  bool invariants_apply = true;         // false when normals do not span
};

std::string to_string(Verdict::Kind k);

// Obstruction first (invariants), then construction (probe search), then the
// ambient integer constraints.
Verdict decide(const Polytope& P, const Point& x, const Point& y, const OrbitParams& params, long ambient_bound = 3);

}  // namespace probekit
