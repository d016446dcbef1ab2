#include "probekit/reduction.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "probekit/errors.hpp"
#include "probekit/linsys.hpp"

namespace probekit {

namespace {

std::vector<IntVector> standard_basis(std::size_t n) {
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, Int(0));
    e[i] = 1;
    out.push_back(e);
  }
  return out;
}

// Integer vectors orthogonal to every row.
std::vector<IntVector> annihilator(const std::vector<IntVector>& rows, std::size_t n) {
  if (rows.empty()) return standard_basis(n);
  return kernel_lattice(IntMatrix::from_rows(rows, n));
}

// eta_i = W^T xi_i
IntVector restrict_normal(const IntVector& xi, const std::vector<IntVector>& W) {
  IntVector eta;
  for (const auto& w : W) eta.push_back(dot(w, xi));
  return eta;
}

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

void require_meets_interior(const Polytope& P, const AffineSlice& V) {
  if (V.base.size() != P.dim()) fail(ErrorKind::DimensionMismatch, "slice base " + to_string(V.base) + " in dimension " + std::to_string(P.dim()));
  std::vector<LinearConstraint> cons;
  for (std::size_t i = 0; i < P.size(); ++i) {
    LinearConstraint c;
    for (const auto& e : restrict_normal(P.normal(i), V.dirs)) c.a.emplace_back(e);
    c.b = P.ell(i, V.base);
    c.rel = Rel::Gt;
    cons.push_back(std::move(c));
  }
  if (!find_point(cons, V.dim())) fail(ErrorKind::SliceMissesPolytope, "slice through " + to_string(V.base) + " does not meet the interior");
}

}  // namespace

AffineSlice AffineSlice::make(Point base, std::vector<IntVector> dirs) {
  std::size_t n = base.size();
  for (const auto& d : dirs)
    if (d.size() != n) fail(ErrorKind::DimensionMismatch, "slice direction " + to_string(d) + " in dimension " + std::to_string(n));
  AffineSlice V;
  V.base = std::move(base);
  if (dirs.empty()) return V;
  if (lattice_basis(dirs, n).size() != dirs.size()) fail(ErrorKind::ValidationError, "slice directions are linearly dependent");
  auto sd = smith_divisors(IntMatrix::from_columns(dirs, n));
  if (std::all_of(sd.begin(), sd.end(), [](const Int& x) { return x == 1; })) {
    V.dirs = std::move(dirs);
  } else {
    V.dirs = annihilator(annihilator(dirs, n), n);
    V.repaired = true;
  }
  return V;
}

AffineSlice AffineSlice::from_equations(const std::vector<IntVector>& a, const std::vector<Scalar>& c) {
  if (a.empty()) fail(ErrorKind::ValidationError, "no equations");
  std::size_t n = a.front().size();
  std::vector<std::vector<Scalar>> A;
  for (const auto& row : a) {
    if (row.size() != n) fail(ErrorKind::DimensionMismatch, "equation rows differ in length");
    A.push_back(to_point(row));
  }
  auto sol = solve_linear(A, c, n);
  if (!sol) fail(ErrorKind::SliceMissesPolytope, "equations are inconsistent");
  return make(sol->particular, annihilator(a, n));
}

Point AffineSlice::lift(const Point& y) const {
  if (y.size() != dirs.size()) fail(ErrorKind::DimensionMismatch, "slice coordinates " + to_string(y));
  Point x = base;
  for (std::size_t j = 0; j < dirs.size(); ++j) x = x + y[j] * dirs[j];
  return x;
}

Admissibility admissible(const Polytope& P, const AffineSlice& V) {
  require_meets_interior(P, V);
  const std::size_t n = P.dim(), k = V.dim();
  std::vector<std::size_t> moving;
  std::vector<IntVector> etas;
  for (std::size_t i = 0; i < P.size(); ++i) {
    IntVector eta = restrict_normal(P.normal(i), V.dirs);
    if (is_zero(eta)) continue;
    moving.push_back(i);
    etas.push_back(eta);
  }
  Admissibility out;
  out.ok = true;
  if (etas.empty()) return out;
  const std::size_t r = lattice_basis(etas, k).size();
  std::set<std::vector<std::size_t>> seen;
  // A minimal face of the slice is cut out by r facets with independent
  // restricted normals; every other l_j is constant on it.
  for_each_subset(etas.size(), r, [&](const std::vector<std::size_t>& S) {
    std::vector<IntVector> rows;
    for (auto s : S) rows.push_back(etas[s]);
    if (lattice_basis(rows, k).size() != r) return;
    std::vector<std::vector<Scalar>> A;
    std::vector<Scalar> b;
    for (auto s : S) {
      A.push_back(to_point(etas[s]));
      b.push_back(-P.ell(moving[s], V.base));
    }
    auto sol = solve_linear(A, b, k);
    if (!sol) return;
    Point x = V.lift(sol->particular);
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < P.size(); ++i) {
      int sg = P.ell(i, x).sign();
      if (sg < 0) return;
      if (sg == 0) active.push_back(i);
    }
    if (!seen.insert(active).second) return;
    FaceCertificate c;
    c.active = active;
    c.point = x;
    std::vector<IntVector> xi;
    for (auto i : active) xi.push_back(P.normal(i));
    c.face_lattice = annihilator(xi, n);
    std::vector<IntVector> gens = c.face_lattice;
    gens.insert(gens.end(), V.dirs.begin(), V.dirs.end());
    c.divisors = gens.empty() ? std::vector<Int>{} : smith_divisors(IntMatrix::from_columns(gens, n));
    c.pass = generates_full_lattice(gens, n);
    out.ok = out.ok && c.pass;
    out.faces.push_back(std::move(c));
  });
  return out;
}

ReductionResult reduce(const Polytope& P, const AffineSlice& V) {
  if (V.base.size() != P.dim()) fail(ErrorKind::DimensionMismatch, "slice base " + to_string(V.base) + " in dimension " + std::to_string(P.dim()));
  const std::size_t k = V.dim();
  // candidate hyperplanes keyed by (primitive eta, scaled offset)
  std::map<std::pair<std::string, std::string>, std::size_t> firsts;
  std::vector<std::size_t> origin;
  std::vector<IntVector> etas;
  std::vector<Scalar> offs;
  for (std::size_t i = 0; i < P.size(); ++i) {
    IntVector eta = restrict_normal(P.normal(i), V.dirs);
    Scalar l = P.ell(i, V.base);
    if (is_zero(eta)) {
      if (l.sign() < 0) fail(ErrorKind::SliceMissesPolytope, "facet " + std::to_string(i) + " excludes the slice");
      if (l.sign() == 0) fail(ErrorKind::SliceInsideFacet, "slice lies in facet " + std::to_string(i));
      continue;
    }
    auto [prim, g] = primitive_part(eta);
    auto key = std::make_pair(to_string(prim), (l / Scalar(g)).str());
    if (firsts.count(key)) continue;
    firsts[key] = i;
    origin.push_back(i);
    etas.push_back(eta);
    offs.push_back(l);
  }
  Admissibility cert = admissible(P, V);
  if (!cert.ok) fail(ErrorKind::NotAdmissible, "some face met by the slice fails the lattice test");

  std::vector<Facet> facets;
  std::vector<std::size_t> kept_origin;
  for (std::size_t j = 0; j < etas.size(); ++j) {
    std::vector<LinearConstraint> cons;
    for (std::size_t m = 0; m < etas.size(); ++m) {
      LinearConstraint c;
      c.a = to_point(etas[m]);
      c.b = offs[m];
      c.rel = m == j ? Rel::Eq : Rel::Gt;
      cons.push_back(std::move(c));
    }
    if (!find_point(cons, k)) continue;
    if (content(etas[j]) != 1)
      fail(ErrorKind::InducedNotPrimitive, "facet " + std::to_string(origin[j]) + " restricts to " + to_string(etas[j]));
    facets.push_back({etas[j], offs[j]});
    kept_origin.push_back(origin[j]);
  }
  ReductionResult out{Polytope(k, std::move(facets), P.field()), std::move(kept_origin), V, std::move(cert)};
  check_delzant(out.reduced);
  return out;
}

std::vector<Scalar> DelzantLift::operator()(const Point& x) const {
  if (x.size() != normals.cols()) fail(ErrorKind::DimensionMismatch, "point " + to_string(x));
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < normals.rows(); ++i) out.push_back(pair(x, normals.row(i)) + offsets[i]);
  return out;
}

DelzantLift delzant_lift(const Polytope& P) {
  if (!P.normals_span()) fail(ErrorKind::NormalsDoNotSpan, "normals span a proper subspace; no lift to the orthant");
  DelzantLift L;
  std::vector<IntVector> rows;
  for (const auto& f : P.facets()) {
    rows.push_back(f.normal);
    L.offsets.push_back(f.offset);
  }
  L.normals = IntMatrix::from_rows(rows, P.dim());
  L.kernel = kernel_lattice(L.normals.transpose());
  return L;
}

}  // namespace probekit
