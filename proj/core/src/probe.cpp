#include "probekit/probe.hpp"

#include <optional>
#include <string>
#include <variant>

#include "probekit/errors.hpp"

namespace probekit {

Point Probe::exit_point() const { return at(length); }

Point Probe::at(const Scalar& t) const { return entry_point + t * direction; }

namespace {

std::variant<Probe, ErrorKind> cast(const Polytope& P, const Point& x, const IntVector& v) {
  struct Hit {
    std::optional<Scalar> t;
    std::size_t facet = 0;
    bool tie = false;
  };
  Hit fwd, bwd;
  auto consider = [](Hit& h, const Scalar& t, std::size_t i) {
    if (!h.t || t < *h.t) {
      h.t = t;
      h.facet = i;
      h.tie = false;
    } else if (t == *h.t) {
      h.tie = true;
    }
  };
  for (std::size_t i = 0; i < P.size(); ++i) {
    Int s = dot(v, P.normal(i));
    if (s == 0) continue;
    Scalar l = P.ell(i, x);
    if (s < 0) consider(fwd, l / Scalar(Int(-s)), i);
    else consider(bwd, l / Scalar(s), i);
  }
  if (!fwd.t || !bwd.t) return ErrorKind::UnboundedRay;
  if (fwd.tie || bwd.tie) return ErrorKind::HitsLowerFace;
  Int in = dot(v, P.normal(bwd.facet)), out = dot(v, P.normal(fwd.facet));
  if (in != 1 || out != -1) return ErrorKind::NotTransverse;
  Probe s;
  s.direction = v;
  s.entry = bwd.facet;
  s.exit = fwd.facet;
  s.entry_normal = P.normal(bwd.facet);
  s.exit_normal = P.normal(fwd.facet);
  s.entry_point = x - (*bwd.t) * v;
  s.length = *bwd.t + *fwd.t;
  return s;
}

}  // namespace

Probe shoot(const Polytope& P, const Point& x, const IntVector& v) {
  P.require_interior(x);
  if (v.size() != P.dim()) fail(ErrorKind::DimensionMismatch, "direction " + to_string(v) + " in dimension " + std::to_string(P.dim()));
  if (content(v) != 1) fail(ErrorKind::NotPrimitive, "direction " + to_string(v) + " is not primitive");
  auto r = cast(P, x, v);
  if (auto* k = std::get_if<ErrorKind>(&r)) {
    std::string where = "line through " + to_string(x) + " along " + to_string(v);
    switch (*k) {
      case ErrorKind::UnboundedRay: fail(*k, where + " leaves every facet behind in one direction");
      case ErrorKind::HitsLowerFace: fail(*k, where + " ends on a face of codimension >= 2");
      default: fail(*k, where + " is not integrally transverse at an endpoint");
    }
  }
  return std::get<Probe>(std::move(r));
}

Scalar position(const Probe& s, const Point& x) {
  if (x.size() != s.direction.size()) fail(ErrorKind::DimensionMismatch, "point and probe dimensions differ");
  std::size_t j = 0;
  while (s.direction[j] == 0) ++j;
  Scalar t = (x[j] - s.entry_point[j]) / Scalar(s.direction[j]);
  if (s.at(t) != x || t.sign() <= 0 || t >= s.length) fail(ErrorKind::NotOnProbe, to_string(x) + " is not strictly inside the probe");
  return t;
}

Point partner(const Probe& s, const Point& x) { return s.at(s.length - position(s, x)); }

IntMatrix involution(const Probe& s) {
  std::size_t n = s.direction.size();
  IntMatrix phi = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) phi(i, j) += (s.exit_normal[i] - s.entry_normal[i]) * s.direction[j];
  return phi;
}

ProbeMove probe_move(const Probe& s, const Point& x) { return {s, x, partner(s, x), involution(s)}; }

std::vector<IntVector> canonical_directions(std::size_t n, long max_norm) {
  std::vector<IntVector> out;
  IntVector v(n, Int(-max_norm));
  for (;;) {
    std::size_t j = 0;
    while (j < n && v[j] == 0) ++j;
    if (j < n && v[j] > 0 && content(v) == 1) out.push_back(v);
    std::size_t k = n;
    while (k > 0 && v[k - 1] == max_norm) v[--k] = -max_norm;
    if (k == 0) break;
    v[k - 1] += 1;
  }
  return out;
}

std::vector<Probe> enumerate(const Polytope& P, const Point& x, long max_norm) {
  if (max_norm < 1) fail(ErrorKind::ValidationError, "max_norm must be positive");
  P.require_interior(x);
  std::vector<Probe> out;
  for (const auto& v : canonical_directions(P.dim(), max_norm)) {
    auto r = cast(P, x, v);
    if (auto* s = std::get_if<Probe>(&r)) out.push_back(std::move(*s));
  }
  return out;
}

}  // namespace probekit
