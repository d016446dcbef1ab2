#include "probekit/verdict.hpp"

#include "probekit/errors.hpp"

namespace probekit {

std::string to_string(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Equivalent: return "Equivalent";
    case Verdict::Kind::Distinct: return "Distinct";
    case Verdict::Kind::Unknown: return "Unknown";
  }
  return "?";
}

Verdict decide(const Polytope& P, const Point& x, const Point& y, const OrbitParams& params, long ambient_bound) {
  if (x.size() != P.dim() || y.size() != P.dim()) fail(ErrorKind::DimensionMismatch, "points must match the polytope dimension");
  Verdict v;
  v.from = invariants(P, x);
  v.to = invariants(P, y);
  v.invariants_apply = P.normals_span();
  if (v.from.d != v.to.d) v.reason = "d";
  else if (v.from.count != v.to.count) v.reason = "count";
  else if (v.from.gamma != v.to.gamma) v.reason = "gamma";
  if (!v.reason.empty()) {
    v.kind = Verdict::Kind::Distinct;
    return v;
  }
  if (auto path = connect(P, x, y, params)) {
    v.kind = Verdict::Kind::Equivalent;
    v.path = std::move(*path);
    return v;
  }
  if (P.normals_span()) {
    auto r = solve_ambient(P, x, y, ambient_bound);
    if (r.status == AmbientResult::Status::Infeasible) {
      v.kind = Verdict::Kind::Distinct;
      v.reason = "ambient";
    }
    v.ambient = std::move(r);
  }
  return v;
}

}  // namespace probekit
