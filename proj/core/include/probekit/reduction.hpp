#pragma once

#include <string>
#include <vector>

#include "probekit/polytope.hpp"

namespace probekit {

// V = { base + W y }, the columns of W a basis of lin(V) ∩ Z^n.
struct AffineSlice {
  Point base;
  std::vector<IntVector> dirs;
  bool repaired = false;  // the given dirs spanned a proper sublattice and were replaced

  static AffineSlice make(Point base, std::vector<IntVector> dirs);
  // Solution set of <a_i, x> = c_i.
  static AffineSlice from_equations(const std::vector<IntVector>& a, const std::vector<Scalar>& c);

  std::size_t dim() const { return dirs.size(); }
  Point lift(const Point& y) const;
};

struct FaceCertificate {
  std::vector<std::size_t> active;      // facets of Delta containing the face
  Point point;                          // a point of the face on the slice
  std::vector<IntVector> face_lattice;  // lin(F) ∩ Z^n
  std::vector<Int> divisors;            // Smith divisors of face_lattice ∪ dirs
  bool pass = false;
};

struct Admissibility {
  bool ok = false;
  // Faces of Delta met by V that are minimal with that property. Larger faces
  // have larger lattices and pass whenever one of these does.
  std::vector<FaceCertificate> faces;
  static constexpr const char* criterion = "face directions together with slice directions generate Z^n";
};
Admissibility admissible(const Polytope& P, const AffineSlice& V);

struct ReductionResult {
  Polytope reduced;
  std::vector<std::size_t> facet_origin;
  AffineSlice slice;
  Admissibility certificate;

  Point lift(const Point& y) const { return slice.lift(y); }
};
ReductionResult reduce(const Polytope& P, const AffineSlice& V);

// x -> (l_1(x), ..., l_N(x)) into the orthant of R^N, and the lattice K of
// integer relations among the normals.
struct DelzantLift {
  IntMatrix normals;  // N x n, row i = xi_i
  std::vector<Scalar> offsets;
  std::vector<IntVector> kernel;

  std::vector<Scalar> operator()(const Point& x) const;
};
DelzantLift delzant_lift(const Polytope& P);

}  // namespace probekit
