#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "probekit/lattice.hpp"
#include "probekit/scalar.hpp"

namespace probekit {

using Point = std::vector<Scalar>;

std::string to_string(const Point& x);
Scalar pair(const Point& x, const IntVector& xi);  // <x, xi>
Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Scalar& s, const IntVector& v);
Point to_point(const IntVector& v);

struct Facet {
  IntVector normal;
  Scalar offset;
};

// Delta = { x : <x, xi_i> + lambda_i >= 0 }. Facet order is the caller's and
// is never changed. The interior is checked to be nonempty on construction.
class Polytope {
 public:
  Polytope(std::size_t dim, std::vector<Facet> facets, std::int64_t field = 1);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return facets_.size(); }
  const std::vector<Facet>& facets() const { return facets_; }
  const Facet& facet(std::size_t i) const { return facets_.at(i); }
  const IntVector& normal(std::size_t i) const { return facets_.at(i).normal; }
  std::int64_t field() const { return field_; }
  const Point& witness() const { return witness_; }
  // True when the normals span R^n, i.e. Delta arises by reduction from C^N.
  bool normals_span() const { return spans_; }

  Scalar ell(std::size_t i, const Point& x) const;
  std::vector<Scalar> ell(const Point& x) const;
  bool is_interior(const Point& x) const;
  bool contains(const Point& x) const;
  void require_interior(const Point& x) const;

  Polytope with_field(std::int64_t D) const;

 private:
  std::size_t dim_;
  std::vector<Facet> facets_;
  std::int64_t field_;
  Point witness_;
  bool spans_ = false;
};

std::vector<Scalar> ell(const Polytope& P, const Point& x);

// Canonical (Hermite) basis of the subgroup of Q(sqrt D) generated by `gens`,
// read as a lattice in Q^2 through the coordinates (rat, quad).
std::vector<Scalar> gamma_lattice(const std::vector<Scalar>& gens);

struct Invariants {
  Scalar d;
  std::size_t count = 0;
  std::vector<Scalar> gamma;
  std::vector<Scalar> reduced;
  // Normals span R^n. Without this the lift to C^N behind the obstruction
  // is unavailable and the invariants are informational only.
  bool reduction_type = false;

  bool same_class(const Invariants& o) const { return d == o.d && count == o.count && gamma == o.gamma; }
};
Invariants invariants(const Polytope& P, const Point& x);
Invariants invariants_of_values(const std::vector<Scalar>& ell_values);

struct Vertex {
  Point point;
  std::vector<std::size_t> facets;
  Int det;
};
std::vector<Vertex> check_delzant(const Polytope& P);

// Image of Delta under x -> M x + t (M row-major, |det M| = 1).
Polytope apply_affine(const Polytope& P, const IntMatrix& M, const Point& t);
Point apply_affine(const IntMatrix& M, const Point& t, const Point& x);

struct BoundaryData {
  IntMatrix boundary;            // n x N, columns xi_i
  std::vector<IntVector> h2;     // kernel lattice of the boundary map
};
BoundaryData boundary_data(const Polytope& P);

// The germ below is only meaningful under the standing hypothesis that the
// displacement energy of T(x) equals d(x) near x; callers must say so.
struct DisplacementEnergyAssumption {
  explicit constexpr DisplacementEnergyAssumption(bool acknowledged) : ok(acknowledged) {}
  bool ok;
};
inline constexpr DisplacementEnergyAssumption assume_displacement_energy{true};

struct EnergyGerm {
  Scalar d;
  std::vector<std::size_t> active;
};
EnergyGerm de_germ(const Polytope& P, const Point& x, DisplacementEnergyAssumption assumption);
Scalar germ_value(const Polytope& P, const Point& x, const EnergyGerm& g, const Point& a);

// Integral affine identification of two polytopes: B = { c*M x + t : x in A }
// with M in GL(n,Z). Scaling c > 0 is only searched when allowed.
struct AffineMatch {
  IntMatrix M;
  Point t;
  Scalar scale;
  std::vector<std::size_t> facet_map;  // facet i of A -> facet facet_map[i] of B
};
std::optional<AffineMatch> integral_affine_match(const Polytope& A, const Polytope& B, bool allow_scaling = false);

}  // namespace probekit

namespace probekit {

struct DelzantReport {
  std::vector<Vertex> vertices;
  std::optional<Vertex> violation;  // first vertex that is not smooth
  bool ok() const { return !violation; }
};
DelzantReport delzant_report(const Polytope& P);

}  // namespace probekit
