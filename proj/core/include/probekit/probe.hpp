#pragma once

#include <vector>

#include "probekit/lattice.hpp"
#include "probekit/polytope.hpp"

namespace probekit {

// Segment p + t v, 0 <= t <= T, entering through facet `entry` (<v, xi> = 1)
// and leaving through facet `exit` (<v, xi'> = -1).
struct Probe {
  IntVector direction;
  std::size_t entry = 0;
  std::size_t exit = 0;
  IntVector entry_normal;
  IntVector exit_normal;
  Point entry_point;
  Scalar length;

  Point exit_point() const;
  Point at(const Scalar& t) const;
  friend bool operator==(const Probe&, const Probe&) = default;
};

struct ProbeMove {
  Probe probe;
  Point from;
  Point to;
  IntMatrix transport;
};

Probe shoot(const Polytope& P, const Point& x, const IntVector& v);
// Parameter t with x = p + t v; throws NotOnProbe unless 0 < t < T.
Scalar position(const Probe& s, const Point& x);
Point partner(const Probe& s, const Point& x);
IntMatrix involution(const Probe& s);
ProbeMove probe_move(const Probe& s, const Point& x);

// Primitive vectors of sup-norm <= max_norm whose first nonzero entry is
// positive, in lexicographic order.
std::vector<IntVector> canonical_directions(std::size_t n, long max_norm);
std::vector<Probe> enumerate(const Polytope& P, const Point& x, long max_norm);

}  // namespace probekit
