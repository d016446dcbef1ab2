#include "probekit/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "probekit/errors.hpp"

namespace probekit {

IntVector make_vector(std::initializer_list<long> xs) {
  IntVector v;
  v.reserve(xs.size());
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

Int dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "dot of lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int sup_norm(const IntVector& v) {
  Int m = 0;
  for (const auto& x : v) m = std::max<Int>(m, abs(x));
  return m;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

Int content(const IntVector& v) {
  Int g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) fail(ErrorKind::DimensionMismatch, "ragged matrix literal");
    for (long x : r) a_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) fail(ErrorKind::DimensionMismatch, "row length");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) fail(ErrorKind::DimensionMismatch, "column length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(a_.begin() + static_cast<long>(i * cols_), a_.begin() + static_cast<long>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

std::string IntMatrix::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) s += ",";
    s += "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) s += ",";
      s += (*this)(i, j).get_str();
    }
    s += "]";
  }
  return s + "]";
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorKind::DimensionMismatch, "matrix product shapes");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols_ != v.size()) fail(ErrorKind::DimensionMismatch, "matrix-vector shapes");
  IntVector r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * v[j];
  return r;
}

std::strong_ordering operator<=>(const IntMatrix& a, const IntMatrix& b) {
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  for (std::size_t i = 0; i < a.a_.size(); ++i) {
    int c = cmp(a.a_[i], b.a_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Int det(const IntMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::DimensionMismatch, "det of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  Int d = det(m);
  if (d != 1 && d != -1) fail(ErrorKind::NotUnimodular, "det = " + d.get_str());
  std::size_t n = m.rows();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    Rat piv = a[c][c];
    for (auto& x : a[c]) x /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = a[i][n + j].get_num();
  return inv;
}

namespace {

// col_k <- s col_k + t col_j ; col_j <- u col_k + v col_j (old values)
void combine_columns(IntMatrix& M, std::size_t k, std::size_t j, const Int& s, const Int& t, const Int& u, const Int& v) {
  for (std::size_t i = 0; i < M.rows(); ++i) {
    Int a = M(i, k), b = M(i, j);
    M(i, k) = s * a + t * b;
    M(i, j) = u * a + v * b;
  }
}

void add_column_multiple(IntMatrix& M, std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t i = 0; i < M.rows(); ++i) M(i, dst) += q * M(i, src);
}

void negate_column(IntMatrix& M, std::size_t k) {
  for (std::size_t i = 0; i < M.rows(); ++i) M(i, k) = -M(i, k);
}

}  // namespace

Hermite hermite(const IntMatrix& A) {
  Hermite h{A, IntMatrix::identity(A.cols()), 0, {}};
  IntMatrix& H = h.H;
  IntMatrix& U = h.U;
  std::size_t n = A.cols(), k = 0;
  for (std::size_t i = 0; i < A.rows() && k < n; ++i) {
    for (std::size_t j = k + 1; j < n; ++j) {
      if (H(i, j) == 0) continue;
      Int a = H(i, k), b = H(i, j), g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Int u = -b / g, v = a / g;
      combine_columns(H, k, j, s, t, u, v);
      combine_columns(U, k, j, s, t, u, v);
    }
    if (H(i, k) == 0) continue;
    if (H(i, k) < 0) {
      negate_column(H, k);
      negate_column(U, k);
    }
    for (std::size_t j = 0; j < k; ++j) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), H(i, j).get_mpz_t(), H(i, k).get_mpz_t());
      if (q == 0) continue;
      add_column_multiple(H, j, k, -q);
      add_column_multiple(U, j, k, -q);
    }
    h.pivot_rows.push_back(i);
    ++k;
  }
  h.rank = k;
  return h;
}

std::vector<IntVector> lattice_basis(const std::vector<IntVector>& gens, std::size_t n) {
  if (gens.empty()) return {};
  Hermite h = hermite(IntMatrix::from_columns(gens, n));
  std::vector<IntVector> basis;
  for (std::size_t k = 0; k < h.rank; ++k) basis.push_back(h.H.column(k));
  return basis;
}

std::pair<IntVector, Int> primitive_part(const IntVector& v) {
  Int g = content(v);
  if (g == 0) fail(ErrorKind::ZeroVector, "primitive part of zero vector");
  IntVector w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] / g;
  return {w, g};
}

std::vector<IntVector> kernel_lattice(const IntMatrix& M) {
  Hermite h = hermite(M);
  std::vector<IntVector> gens;
  for (std::size_t k = h.rank; k < M.cols(); ++k) gens.push_back(h.U.column(k));
  return lattice_basis(gens, M.cols());
}

IntMatrix extend_to_basis(const IntVector& v) {
  if (content(v) != 1) fail(ErrorKind::NotPrimitive, to_string(v) + " is not primitive");
  Hermite h = hermite(IntMatrix::from_rows({v}, v.size()));
  return inverse_unimodular(h.U).transpose();
}

std::vector<Int> smith_divisors(const IntMatrix& M) {
  IntMatrix a = M;
  std::size_t m = a.rows(), n = a.cols();
  std::vector<Int> d;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (a(i, j) != 0 && (!found || abs(a(i, j)) < abs(a(pi, pj)))) {
          found = true;
          pi = i;
          pj = j;
        }
    if (!found) break;
    for (;;) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(t, j), a(pi, j));
      for (std::size_t i = 0; i < m; ++i) std::swap(a(i, t), a(i, pj));
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        Int q = a(i, t) / a(t, t);
        for (std::size_t j = t; j < n; ++j) a(i, j) -= q * a(t, j);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        Int q = a(t, j) / a(t, t);
        for (std::size_t i = t; i < m; ++i) a(i, j) -= q * a(i, t);
        if (a(t, j) != 0) clean = false;
      }
      if (clean) {
        // enforce divisibility of the trailing block
        std::size_t bad_i = m;
        for (std::size_t i = t + 1; i < m && bad_i == m; ++i)
          for (std::size_t j = t + 1; j < n; ++j)
            if (a(i, j) % a(t, t) != 0) {
              bad_i = i;
              break;
            }
        if (bad_i == m) break;
        for (std::size_t j = t; j < n; ++j) a(t, j) += a(bad_i, j);
      }
      pi = t;
      pj = t;
      for (std::size_t i = t; i < m; ++i)
        if (a(i, t) != 0 && abs(a(i, t)) < abs(a(pi, pj))) pi = i, pj = t;
      for (std::size_t j = t; j < n; ++j)
        if (a(t, j) != 0 && abs(a(t, j)) < abs(a(pi, pj))) pi = t, pj = j;
    }
    d.push_back(abs(a(t, t)));
  }
  return d;
}

bool generates_full_lattice(const std::vector<IntVector>& vs, std::size_t n) {
  for (const auto& v : vs)
    if (v.size() != n) fail(ErrorKind::DimensionMismatch, "vector of length " + std::to_string(v.size()) + " in Z^" + std::to_string(n));
  if (n == 0) return true;
  if (vs.empty()) return false;
  auto d = smith_divisors(IntMatrix::from_columns(vs, n));
  return d.size() == n && std::all_of(d.begin(), d.end(), [](const Int& x) { return x == 1; });
}

bool generates_full_lattice(const std::vector<IntVector>& vs) {
  if (vs.empty()) fail(ErrorKind::DimensionMismatch, "empty generator list has no ambient dimension");
  return generates_full_lattice(vs, vs.front().size());
}

namespace {

// y with y^T L = h^T for lower-triangular invertible L (square, given by
// pivot rows of H restricted to its first `rank` columns).
std::vector<Rat> solve_left_triangular(const IntMatrix& H, const std::vector<std::size_t>& prow, const std::vector<Rat>& h) {
  std::size_t r = prow.size();
  std::vector<Rat> y(r);
  for (std::size_t kk = r; kk-- > 0;) {
    Rat s = h[kk];
    for (std::size_t l = kk + 1; l < r; ++l) s -= y[l] * Rat(H(prow[l], kk));
    y[kk] = s / Rat(H(prow[kk], kk));
  }
  return y;
}

}  // namespace

IntegerSolution solve_integer(const IntMatrix& C, const IntVector& r) {
  if (r.size() != C.rows()) fail(ErrorKind::DimensionMismatch, "right-hand side length");
  Hermite h = hermite(C);
  std::size_t rank = h.rank;
  std::vector<Rat> w(rank);
  for (std::size_t k = 0; k < rank; ++k) {
    std::size_t i = h.pivot_rows[k];
    Rat s = r[i];
    for (std::size_t j = 0; j < k; ++j) s -= Rat(h.H(i, j)) * w[j];
    w[k] = s / Rat(h.H(i, k));
  }
  IntegerSolution out;
  std::vector<bool> is_pivot(C.rows(), false);
  for (auto i : h.pivot_rows) is_pivot[i] = true;
  for (std::size_t i = 0; i < C.rows(); ++i) {
    if (is_pivot[i]) continue;
    Rat res = r[i];
    for (std::size_t j = 0; j < rank; ++j) res -= Rat(h.H(i, j)) * w[j];
    if (res == 0) continue;
    std::vector<Rat> hrow(rank);
    for (std::size_t j = 0; j < rank; ++j) hrow[j] = h.H(i, j);
    auto y = solve_left_triangular(h.H, h.pivot_rows, hrow);
    out.certificate.assign(C.rows(), Rat(0));
    Rat scale = 1 / (2 * res);
    out.certificate[i] = scale;
    for (std::size_t k = 0; k < rank; ++k) out.certificate[h.pivot_rows[k]] -= y[k] * scale;
    return out;
  }
  for (std::size_t k = 0; k < rank; ++k) {
    if (w[k].get_den() == 1) continue;
    std::vector<Rat> e(rank, Rat(0));
    e[k] = 1;
    auto y = solve_left_triangular(h.H, h.pivot_rows, e);
    out.certificate.assign(C.rows(), Rat(0));
    for (std::size_t kk = 0; kk < rank; ++kk) out.certificate[h.pivot_rows[kk]] = y[kk];
    return out;
  }
  out.feasible = true;
  IntVector wi(C.cols());
  for (std::size_t k = 0; k < rank; ++k) wi[k] = w[k].get_num();
  out.particular = h.U * wi;
  for (std::size_t k = rank; k < C.cols(); ++k) out.kernel.push_back(h.U.column(k));
  return out;
}

bool verify_infeasibility(const IntMatrix& C, const IntVector& r, const std::vector<Rat>& u) {
  if (u.size() != C.rows() || r.size() != C.rows()) return false;
  for (std::size_t j = 0; j < C.cols(); ++j) {
    Rat s = 0;
    for (std::size_t i = 0; i < C.rows(); ++i) s += u[i] * Rat(C(i, j));
    if (s.get_den() != 1) return false;
  }
  Rat s = 0;
  for (std::size_t i = 0; i < C.rows(); ++i) s += u[i] * Rat(r[i]);
  return s.get_den() != 1;
}

}  // namespace probekit
