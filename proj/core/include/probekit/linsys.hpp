#pragma once

#include <optional>
#include <vector>

#include "probekit/scalar.hpp"

namespace probekit {

enum class Rel { Ge, Gt, Eq };

// a . x + b  (rel)  0
struct LinearConstraint {
  std::vector<Scalar> a;
  Scalar b;
  Rel rel = Rel::Ge;
};

// Exact Fourier-Motzkin elimination with back substitution. Returns a point
// satisfying every constraint, or nothing if the system is infeasible.
std::optional<std::vector<Scalar>> find_point(const std::vector<LinearConstraint>& cons, std::size_t n);

struct AffineSolution {
  std::vector<Scalar> particular;
  std::vector<std::vector<Scalar>> nullspace;
};

// Solve A x = b over the scalar field (A given row by row, n unknowns).
std::optional<AffineSolution> solve_linear(const std::vector<std::vector<Scalar>>& A, const std::vector<Scalar>& b, std::size_t n);
std::size_t rank_of(const std::vector<std::vector<Scalar>>& rows, std::size_t n);

}  // namespace probekit
