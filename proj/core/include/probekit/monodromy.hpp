#pragma once

#include <string>
#include <utility>
#include <vector>

#include "probekit/orbit.hpp"

namespace probekit {

struct MatrixGroup {
  std::vector<IntMatrix> generators;
  std::vector<IntMatrix> elements;  // sorted; complete unless truncated
  bool truncated = false;
  std::size_t cap = 0;

  bool finite() const { return !truncated; }
  std::size_t order() const { return elements.size(); }
  bool contains(const IntMatrix& m) const;
};

MatrixGroup close_group(const std::vector<IntMatrix>& generators, std::size_t n, std::size_t cap);

// Holonomy of probe loops based at `base`: fundamental cycles of a spanning
// tree (self-loops included), then closure up to `cap` elements.
MatrixGroup holonomy_group(const OrbitGraph& graph, const Point& base, std::size_t cap);

// Distinguished facets: indices attaining d(x).
std::vector<std::size_t> distinguished(const Polytope& P, const Point& x);

struct AmbientCheck {
  bool distinguished = false;  // distinguished columns are a bijection I(x) -> I(y)
  bool maslov = false;         // every column sums to 1
  bool area = false;           // sum_j A_ji l_j(y) = l_i(x)
  bool h2 = false;             // A r = r on H_2(X)
  bool induced_defined = false;
  IntMatrix induced;
  bool all() const { return distinguished && maslov && area && h2; }
};
AmbientCheck check_ambient(const Polytope& P, const Point& x, const Point& y, const IntMatrix& A);

// Map on H_1 = Z^n induced by A on the relative classes.
IntMatrix induced_map(const Polytope& P, const IntMatrix& A);

struct AmbientSolution {
  IntMatrix A;
  IntMatrix induced;
  std::vector<std::pair<std::size_t, std::size_t>> perm;
};

struct BijectionOutcome {
  enum class Kind { LinearInfeasible, DeterminantObstruction, Solved, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::vector<std::pair<std::size_t, std::size_t>> perm;
  IntMatrix system;
  IntVector rhs;
  std::vector<Rat> certificate;       // LinearInfeasible
  IntVector particular;               // affine solution family z0 + K s
  std::vector<IntVector> kernel;
  std::vector<Rat> det_polynomial;    // DeterminantObstruction: det(induced(z0 + s K)) in s
  std::size_t solutions = 0;
};

struct AmbientResult {
  enum class Status { Solutions, Infeasible, Inconclusive };
  Status status = Status::Inconclusive;
  std::vector<AmbientSolution> solutions;
  std::vector<BijectionOutcome> outcomes;
};

AmbientResult solve_ambient(const Polytope& P, const Point& x, const Point& y, long bound);
// Rebuilds the constraint system independently and checks one outcome's proof.
bool verify_outcome(const Polytope& P, const Point& x, const Point& y, const BijectionOutcome& o);
bool verify_infeasible(const Polytope& P, const Point& x, const Point& y, const AmbientResult& r);

std::string to_string(AmbientResult::Status s);
std::string to_string(BijectionOutcome::Kind k);

}  // namespace probekit
