#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "probekit/scalar.hpp"

namespace probekit {

using IntVector = std::vector<Int>;

IntVector make_vector(std::initializer_list<long> xs);
std::string to_string(const IntVector& v);
Int dot(const IntVector& a, const IntVector& b);
Int sup_norm(const IntVector& v);
bool is_zero(const IntVector& v);
Int content(const IntVector& v);  // gcd of entries, 0 for the zero vector

// Dense integer matrix stored row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  IntMatrix transpose() const;
  bool is_identity() const;
  std::string str() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& a, const IntVector& v);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;
  friend std::strong_ordering operator<=>(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

Int det(const IntMatrix& m);
// Exact inverse of a matrix with determinant +-1.
IntMatrix inverse_unimodular(const IntMatrix& m);

// Column Hermite form: A * U = H with U unimodular, H lower triangular in
// column-echelon shape (first `rank` columns nonzero), positive pivots,
// entries left of a pivot reduced into [0, pivot).
struct Hermite {
  IntMatrix H;
  IntMatrix U;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;  // pivot row of column k, k < rank
};
Hermite hermite(const IntMatrix& A);

// Canonical basis of the lattice spanned by the given columns.
std::vector<IntVector> lattice_basis(const std::vector<IntVector>& gens, std::size_t n);

std::pair<IntVector, Int> primitive_part(const IntVector& v);
std::vector<IntVector> kernel_lattice(const IntMatrix& M);
IntMatrix extend_to_basis(const IntVector& v);
std::vector<Int> smith_divisors(const IntMatrix& M);
bool generates_full_lattice(const std::vector<IntVector>& vs, std::size_t n);
bool generates_full_lattice(const std::vector<IntVector>& vs);

// Integer solutions of C z = r. When none exist, `certificate` holds a
// rational vector u with u^T C integral and u^T r not an integer.
struct IntegerSolution {
  bool feasible = false;
  IntVector particular;
  std::vector<IntVector> kernel;
  std::vector<Rat> certificate;
};
IntegerSolution solve_integer(const IntMatrix& C, const IntVector& r);
bool verify_infeasibility(const IntMatrix& C, const IntVector& r, const std::vector<Rat>& u);

}  // namespace probekit
