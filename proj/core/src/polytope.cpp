#include "probekit/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "probekit/errors.hpp"
#include "probekit/linsys.hpp"

namespace probekit {

std::string to_string(const Point& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ",";
    s += x[i].str();
  }
  return s + ")";
}

Scalar pair(const Point& x, const IntVector& xi) {
  if (x.size() != xi.size()) fail(ErrorKind::DimensionMismatch, "point of length " + std::to_string(x.size()) + " against covector of length " + std::to_string(xi.size()));
  Scalar s;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (xi[j] != 0) s += x[j] * Scalar(xi[j]);
  return s;
}

Point operator+(const Point& a, const Point& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "point sum");
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Point operator-(const Point& a, const Point& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "point difference");
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Point operator*(const Scalar& s, const IntVector& v) {
  Point r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * Scalar(v[i]);
  return r;
}

Point to_point(const IntVector& v) {
  Point r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Scalar(v[i]);
  return r;
}

Polytope::Polytope(std::size_t dim, std::vector<Facet> facets, std::int64_t field)
    : dim_(dim), facets_(std::move(facets)), field_(field) {
  if (field_ != 1 && !is_squarefree(field_)) fail(ErrorKind::FieldMismatch, "field discriminant " + std::to_string(field_) + " is not square-free");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    const auto& f = facets_[i];
    if (f.normal.size() != dim_) fail(ErrorKind::DimensionMismatch, "facet " + std::to_string(i) + " normal has length " + std::to_string(f.normal.size()));
    if (is_zero(f.normal)) fail(ErrorKind::ZeroVector, "facet " + std::to_string(i) + " has zero normal");
    if (content(f.normal) != 1) fail(ErrorKind::NotPrimitive, "facet " + std::to_string(i) + " normal " + to_string(f.normal) + " is not primitive");
    if (f.offset.disc() != 1 && f.offset.disc() != field_) fail(ErrorKind::FieldMismatch, "facet " + std::to_string(i) + " offset " + f.offset.str() + " lies outside the declared field");
    if (!seen.insert(to_string(f.normal) + "|" + f.offset.str()).second) fail(ErrorKind::DuplicateFacet, "facet " + std::to_string(i) + " repeats an earlier facet");
  }
  std::vector<LinearConstraint> cons;
  for (const auto& f : facets_) {
    LinearConstraint c;
    for (const auto& x : f.normal) c.a.emplace_back(x);
    c.b = f.offset;
    c.rel = Rel::Gt;
    cons.push_back(std::move(c));
  }
  auto w = find_point(cons, dim_);
  if (!w) fail(ErrorKind::InfeasibleEmpty, "polytope has empty interior");
  witness_ = *w;
  std::vector<IntVector> normals;
  for (const auto& f : facets_) normals.push_back(f.normal);
  spans_ = dim_ == 0 || (!normals.empty() && lattice_basis(normals, dim_).size() == dim_);
}

Scalar Polytope::ell(std::size_t i, const Point& x) const {
  if (x.size() != dim_) fail(ErrorKind::DimensionMismatch, "point " + to_string(x) + " in dimension " + std::to_string(dim_));
  return pair(x, facets_.at(i).normal) + facets_[i].offset;
}

std::vector<Scalar> Polytope::ell(const Point& x) const {
  std::vector<Scalar> v;
  v.reserve(facets_.size());
  for (std::size_t i = 0; i < facets_.size(); ++i) v.push_back(ell(i, x));
  return v;
}

bool Polytope::is_interior(const Point& x) const {
  for (std::size_t i = 0; i < facets_.size(); ++i)
    if (ell(i, x).sign() <= 0) return false;
  return true;
}

bool Polytope::contains(const Point& x) const {
  for (std::size_t i = 0; i < facets_.size(); ++i)
    if (ell(i, x).sign() < 0) return false;
  return true;
}

void Polytope::require_interior(const Point& x) const {
  if (!is_interior(x)) fail(ErrorKind::NotInterior, to_string(x) + " is not an interior point");
}

Polytope Polytope::with_field(std::int64_t D) const { return Polytope(dim_, facets_, D); }

std::vector<Scalar> ell(const Polytope& P, const Point& x) { return P.ell(x); }

std::vector<Scalar> gamma_lattice(const std::vector<Scalar>& gens) {
  std::int64_t D = 1;
  Int L = 1;
  for (const auto& g : gens) {
    if (g.disc() != 1) {
      if (D != 1 && D != g.disc()) fail(ErrorKind::FieldMismatch, "generators from two quadratic fields");
      D = g.disc();
    }
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), g.rat().get_den_mpz_t());
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), g.quad().get_den_mpz_t());
  }
  std::vector<IntVector> cols;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    Rat r = g.rat() * L, q = g.quad() * L;
    cols.push_back({r.get_num(), q.get_num()});
  }
  std::vector<Scalar> basis;
  for (const auto& b : lattice_basis(cols, 2)) basis.emplace_back(Rat(b[0], L), Rat(b[1], L), D);
  return basis;
}

Invariants invariants_of_values(const std::vector<Scalar>& v) {
  if (v.empty()) fail(ErrorKind::DimensionMismatch, "no facets, d is undefined");
  Invariants inv;
  inv.d = *std::min_element(v.begin(), v.end());
  std::vector<Scalar> diffs;
  for (const auto& x : v) {
    if (x == inv.d) ++inv.count;
    else diffs.push_back(x - inv.d);
  }
  inv.gamma = gamma_lattice(diffs);
  std::sort(diffs.begin(), diffs.end());
  inv.reduced = diffs;
  return inv;
}

Invariants invariants(const Polytope& P, const Point& x) {
  P.require_interior(x);
  Invariants inv = invariants_of_values(P.ell(x));
  inv.reduction_type = P.normals_span();
  return inv;
}

namespace {

template <class F>
void for_each_subset(std::size_t N, std::size_t k, F&& f) {
  if (k > N) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == N - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

DelzantReport delzant_report(const Polytope& P) {
  std::size_t n = P.dim(), N = P.size();
  DelzantReport rep;
  std::set<std::string> seen;
  for_each_subset(N, n, [&](const std::vector<std::size_t>& S) {
    if (rep.violation) return;
    std::vector<IntVector> rows;
    for (auto i : S) rows.push_back(P.normal(i));
    if (det(IntMatrix::from_rows(rows, n)) == 0) return;
    std::vector<std::vector<Scalar>> A;
    std::vector<Scalar> b;
    for (auto i : S) {
      A.push_back(to_point(P.normal(i)));
      b.push_back(-P.facet(i).offset);
    }
    auto sol = solve_linear(A, b, n);
    const Point& x = sol->particular;
    if (!P.contains(x) || !seen.insert(to_string(x)).second) return;
    Vertex v{x, {}, 0};
    for (std::size_t i = 0; i < N; ++i)
      if (P.ell(i, x).is_zero()) v.facets.push_back(i);
    std::vector<IntVector> act;
    for (auto i : v.facets) act.push_back(P.normal(i));
    if (v.facets.size() != n) {
      v.det = det(IntMatrix::from_rows(rows, n));
      rep.violation = v;
      return;
    }
    v.det = det(IntMatrix::from_rows(act, n));
    if (v.det != 1 && v.det != -1) rep.violation = v;
    rep.vertices.push_back(std::move(v));
  });
  return rep;
}

std::vector<Vertex> check_delzant(const Polytope& P) {
  auto rep = delzant_report(P);
  if (rep.violation) {
    std::string f;
    for (auto i : rep.violation->facets) f += (f.empty() ? "" : ",") + std::to_string(i);
    fail(ErrorKind::NotDelzant, "vertex " + to_string(rep.violation->point) + " on facets {" + f + "} has det " + rep.violation->det.get_str());
  }
  return rep.vertices;
}

Polytope apply_affine(const Polytope& P, const IntMatrix& M, const Point& t) {
  if (M.rows() != P.dim() || M.cols() != P.dim() || t.size() != P.dim()) fail(ErrorKind::DimensionMismatch, "affine map shape");
  IntMatrix L = inverse_unimodular(M).transpose();
  std::vector<Facet> out;
  for (const auto& f : P.facets()) {
    IntVector xi = L * f.normal;
    out.push_back({xi, f.offset - pair(t, xi)});
  }
  return Polytope(P.dim(), std::move(out), P.field());
}

Point apply_affine(const IntMatrix& M, const Point& t, const Point& x) {
  Point y(M.rows());
  for (std::size_t i = 0; i < M.rows(); ++i) y[i] = pair(x, M.row(i)) + t[i];
  return y;
}

BoundaryData boundary_data(const Polytope& P) {
  std::vector<IntVector> cols;
  for (const auto& f : P.facets()) cols.push_back(f.normal);
  IntMatrix B = IntMatrix::from_columns(cols, P.dim());
  return {B, kernel_lattice(B)};
}

EnergyGerm de_germ(const Polytope& P, const Point& x, DisplacementEnergyAssumption assumption) {
  if (!assumption.ok) fail(ErrorKind::AssumptionNotAcknowledged, "the germ requires e(X,T(x)) = d(x) near x");
  P.require_interior(x);
  auto v = P.ell(x);
  EnergyGerm g{*std::min_element(v.begin(), v.end()), {}};
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == g.d) g.active.push_back(i);
  return g;
}

Scalar germ_value(const Polytope& P, const Point& x, const EnergyGerm& g, const Point& a) {
  Point y = x + a;
  Scalar m = P.ell(g.active.front(), y);
  for (auto i : g.active) m = min(m, P.ell(i, y));
  return m;
}

namespace {

std::optional<std::pair<Point, Scalar>> solve_translation(const Polytope& A, const Polytope& B, const std::vector<std::size_t>& pi, bool scaled) {
  std::size_t n = A.dim();
  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;
  for (std::size_t i = 0; i < A.size(); ++i) {
    const auto& fb = B.facet(pi[i]);
    std::vector<Scalar> row;
    if (scaled) row.push_back(A.facet(i).offset);
    for (std::size_t j = 0; j < n; ++j) row.push_back(Scalar(Int(-fb.normal[j])));
    rows.push_back(row);
    rhs.push_back(scaled ? fb.offset : fb.offset - A.facet(i).offset);
  }
  auto sol = solve_linear(rows, rhs, scaled ? n + 1 : n);
  if (!sol) return std::nullopt;
  if (!scaled) return std::make_pair(sol->particular, Scalar(1));
  Scalar c = sol->particular[0];
  if (c.sign() <= 0) return std::nullopt;
  return std::make_pair(Point(sol->particular.begin() + 1, sol->particular.end()), c);
}

}  // namespace

std::optional<AffineMatch> integral_affine_match(const Polytope& A, const Polytope& B, bool allow_scaling) {
  if (A.dim() != B.dim() || A.size() != B.size()) return std::nullopt;
  std::size_t n = A.dim(), N = A.size();
  std::vector<std::size_t> pi(N);
  std::iota(pi.begin(), pi.end(), 0);
  do {
    // L xi_i = xi'_{pi(i)}, unknowns L(r,c) at r*n + c
    IntMatrix C(N * n, n * n);
    IntVector r(N * n);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t c = 0; c < n; ++c) C(i * n + row, row * n + c) = A.normal(i)[c];
        r[i * n + row] = B.normal(pi[i])[row];
      }
    auto sol = solve_integer(C, r);
    if (!sol.feasible) continue;
    std::size_t k = sol.kernel.size();
    if (k > 6) continue;
    std::vector<long> s(k, -2);
    for (;;) {
      IntVector z = sol.particular;
      for (std::size_t q = 0; q < k; ++q)
        for (std::size_t e = 0; e < z.size(); ++e) z[e] += s[q] * sol.kernel[q][e];
      IntMatrix L(n, n);
      for (std::size_t e = 0; e < n * n; ++e) L(e / n, e % n) = z[e];
      Int d = det(L);
      if (d == 1 || d == -1) {
        auto tr = solve_translation(A, B, pi, false);
        if (!tr && allow_scaling) tr = solve_translation(A, B, pi, true);
        if (tr) return AffineMatch{inverse_unimodular(L).transpose(), tr->first, tr->second, pi};
      }
      std::size_t q = 0;
      while (q < k && s[q] == 2) s[q++] = -2;
      if (q == k) break;
      ++s[q];
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  return std::nullopt;
}

}  // namespace probekit
