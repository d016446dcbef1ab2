#include "probekit/monodromy.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "probekit/errors.hpp"

namespace probekit {

bool MatrixGroup::contains(const IntMatrix& m) const { return std::binary_search(elements.begin(), elements.end(), m); }

MatrixGroup close_group(const std::vector<IntMatrix>& generators, std::size_t n, std::size_t cap) {
  MatrixGroup G;
  G.cap = cap;
  std::set<IntMatrix> gens;
  for (const auto& g : generators)
    if (!g.is_identity()) gens.insert(g);
  G.generators.assign(gens.begin(), gens.end());
  std::vector<IntMatrix> moves = G.generators;
  for (const auto& g : G.generators) {
    IntMatrix inv = inverse_unimodular(g);
    if (!gens.count(inv)) moves.push_back(inv);
  }
  std::set<IntMatrix> seen{IntMatrix::identity(n)};
  std::deque<IntMatrix> queue{IntMatrix::identity(n)};
  while (!queue.empty() && !G.truncated) {
    IntMatrix e = queue.front();
    queue.pop_front();
    for (const auto& g : moves) {
      IntMatrix m = g * e;
      if (seen.count(m)) continue;
      if (seen.size() >= cap) {
        G.truncated = true;
        break;
      }
      seen.insert(m);
      queue.push_back(std::move(m));
    }
  }
  G.elements.assign(seen.begin(), seen.end());
  return G;
}

MatrixGroup holonomy_group(const OrbitGraph& graph, const Point& base, std::size_t cap) {
  auto b = graph.find(base);
  if (!b) fail(ErrorKind::BaseNotInGraph, to_string(base) + " is not a node of the orbit graph");
  std::size_t n = base.size(), V = graph.nodes.size();
  std::vector<std::vector<std::size_t>> adj(V);
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    adj[graph.edges[e].from].push_back(e);
    if (graph.edges[e].to != graph.edges[e].from) adj[graph.edges[e].to].push_back(e);
  }
  std::vector<std::optional<IntMatrix>> T(V);
  std::vector<bool> tree(graph.edges.size(), false);
  T[*b] = IntMatrix::identity(n);
  std::deque<std::size_t> queue{*b};
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (auto e : adj[u]) {
      const auto& E = graph.edges[e];
      std::size_t w = E.from == u ? E.to : E.from;
      if (T[w]) continue;
      T[w] = E.move.transport * *T[u];
      tree[e] = true;
      queue.push_back(w);
    }
  }
  std::vector<IntMatrix> gens;
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    const auto& E = graph.edges[e];
    if (tree[e] || !T[E.from] || !T[E.to]) continue;
    gens.push_back(inverse_unimodular(*T[E.to]) * E.move.transport * *T[E.from]);
  }
  return close_group(gens, n, cap);
}

std::vector<std::size_t> distinguished(const Polytope& P, const Point& x) {
  auto v = P.ell(x);
  Scalar d = *std::min_element(v.begin(), v.end());
  std::vector<std::size_t> I;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == d) I.push_back(i);
  return I;
}

IntMatrix induced_map(const Polytope& P, const IntMatrix& A) {
  std::size_t n = P.dim(), N = P.size();
  if (A.rows() != N || A.cols() != N) fail(ErrorKind::DimensionMismatch, "ambient matrix must be N x N");
  IntMatrix B = boundary_data(P).boundary;
  IntMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    IntVector e(n);
    e[k] = 1;
    auto c = solve_integer(B, e);
    if (!c.feasible) fail(ErrorKind::NotReductionType, "facet normals do not generate the lattice");
    IntVector img = B * (A * c.particular);
    for (std::size_t i = 0; i < n; ++i) out(i, k) = img[i];
  }
  return out;
}

AmbientCheck check_ambient(const Polytope& P, const Point& x, const Point& y, const IntMatrix& A) {
  std::size_t N = P.size();
  if (A.rows() != N || A.cols() != N) fail(ErrorKind::DimensionMismatch, "ambient matrix must be N x N");
  auto lx = P.ell(x), ly = P.ell(y);
  auto Ix = distinguished(P, x), Iy = distinguished(P, y);
  AmbientCheck rep;

  rep.distinguished = Ix.size() == Iy.size();
  std::set<std::size_t> hit;
  for (auto j : Ix) {
    std::size_t ones = 0, at = 0;
    bool unit = true;
    for (std::size_t i = 0; i < N; ++i) {
      if (A(i, j) == 1) ++ones, at = i;
      else if (A(i, j) != 0) unit = false;
    }
    if (!unit || ones != 1 || !std::binary_search(Iy.begin(), Iy.end(), at) || !hit.insert(at).second) rep.distinguished = false;
  }

  rep.maslov = true;
  for (std::size_t j = 0; j < N; ++j) {
    Int s = 0;
    for (std::size_t i = 0; i < N; ++i) s += A(i, j);
    if (s != 1) rep.maslov = false;
  }

  rep.area = true;
  for (std::size_t i = 0; i < N; ++i) {
    Scalar s;
    for (std::size_t j = 0; j < N; ++j)
      if (A(j, i) != 0) s += Scalar(A(j, i)) * ly[j];
    if (s != lx[i]) rep.area = false;
  }

  rep.h2 = true;
  for (const auto& r : boundary_data(P).h2)
    if (A * r != r) rep.h2 = false;

  try {
    rep.induced = induced_map(P, A);
    rep.induced_defined = rep.h2;
  } catch (const Error&) {
    rep.induced_defined = false;
  }
  return rep;
}

namespace {

using Perm = std::vector<std::pair<std::size_t, std::size_t>>;

// Integer rows of the four constraints for one bijection; unknown A(i,j)
// sits at index j*N + i.
std::pair<IntMatrix, IntVector> build_system(const Polytope& P, const Point& x, const Point& y, const Perm& perm) {
  std::size_t N = P.size();
  auto lx = P.ell(x), ly = P.ell(y);
  std::vector<IntVector> rows;
  IntVector rhs;
  auto var = [N](std::size_t i, std::size_t j) { return j * N + i; };

  for (auto [j, m] : perm)
    for (std::size_t i = 0; i < N; ++i) {
      IntVector row(N * N);
      row[var(i, j)] = 1;
      rows.push_back(row);
      rhs.emplace_back(i == m ? 1 : 0);
    }
  for (std::size_t j = 0; j < N; ++j) {
    IntVector row(N * N);
    for (std::size_t i = 0; i < N; ++i) row[var(i, j)] = 1;
    rows.push_back(row);
    rhs.emplace_back(1);
  }
  for (std::size_t i = 0; i < N; ++i) {
    for (int part = 0; part < 2; ++part) {
      auto coord = [part](const Scalar& s) { return part == 0 ? s.rat() : s.quad(); };
      bool any = coord(lx[i]) != 0;
      Int L = coord(lx[i]).get_den();
      for (std::size_t j = 0; j < N; ++j) {
        any = any || coord(ly[j]) != 0;
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), coord(ly[j]).get_den_mpz_t());
      }
      if (part == 1 && !any) continue;
      IntVector row(N * N);
      for (std::size_t j = 0; j < N; ++j) row[var(j, i)] = Rat(coord(ly[j]) * L).get_num();
      rows.push_back(row);
      rhs.push_back(Rat(coord(lx[i]) * L).get_num());
    }
  }
  for (const auto& r : boundary_data(P).h2)
    for (std::size_t i = 0; i < N; ++i) {
      IntVector row(N * N);
      for (std::size_t j = 0; j < N; ++j) row[var(i, j)] = r[j];
      rows.push_back(row);
      rhs.push_back(r[i]);
    }
  return {IntMatrix::from_rows(rows, N * N), rhs};
}

IntMatrix as_matrix(const IntVector& z, std::size_t N) {
  IntMatrix A(N, N);
  for (std::size_t j = 0; j < N; ++j)
    for (std::size_t i = 0; i < N; ++i) A(i, j) = z[j * N + i];
  return A;
}

IntVector along(const IntVector& z0, const std::vector<IntVector>& K, const std::vector<long>& s) {
  IntVector z = z0;
  for (std::size_t q = 0; q < K.size(); ++q)
    for (std::size_t e = 0; e < z.size(); ++e) z[e] += s[q] * K[q][e];
  return z;
}

// Coefficients (constant first) of s -> det(induced(z0 + s k)).
std::vector<Rat> det_polynomial(const Polytope& P, const IntVector& z0, const IntVector& k) {
  std::size_t n = P.dim(), N = P.size();
  std::size_t m = n + 1;
  std::vector<std::vector<Rat>> V(m, std::vector<Rat>(m + 1));
  for (std::size_t r = 0; r < m; ++r) {
    Rat pw = 1;
    for (std::size_t c = 0; c < m; ++c) {
      V[r][c] = pw;
      pw *= static_cast<long>(r);
    }
    V[r][m] = det(induced_map(P, as_matrix(along(z0, {k}, {static_cast<long>(r)}), N)));
  }
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t p = c;
    while (V[p][c] == 0) ++p;
    std::swap(V[p], V[c]);
    Rat piv = V[c][c];
    for (auto& v : V[c]) v /= piv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == c || V[r][c] == 0) continue;
      Rat f = V[r][c];
      for (std::size_t q = 0; q <= m; ++q) V[r][q] -= f * V[c][q];
    }
  }
  std::vector<Rat> coeffs(m);
  for (std::size_t c = 0; c < m; ++c) coeffs[c] = V[c][m];
  return coeffs;
}

Rat evaluate(const std::vector<Rat>& p, const Int& s) {
  Rat v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * Rat(s) + p[i];
  return v;
}

// All integer roots of p(s) - c, or nothing if p - c vanishes identically.
// The search range is the Cauchy root bound.
std::optional<std::vector<Int>> integer_roots(std::vector<Rat> p, long c) {
  p[0] -= c;
  std::size_t deg = p.size();
  while (deg > 0 && p[deg - 1] == 0) --deg;
  if (deg == 0) return std::nullopt;
  std::vector<Int> roots;
  if (deg == 1) return roots;
  Rat bound = 0;
  for (std::size_t i = 0; i + 1 < deg; ++i) bound = std::max<Rat>(bound, Rat(abs(p[i] / p[deg - 1])));
  Int B = Int(bound.get_num() / bound.get_den()) + 1;
  if (B > 1000000) fail(ErrorKind::ValidationError, "determinant polynomial root bound too large");
  for (Int s = -B; s <= B; ++s)
    if (evaluate(p, s) == 0) roots.push_back(s);
  return roots;
}

void validate(const Polytope& P, const Point& x, const Point& y) {
  if (x.size() != P.dim() || y.size() != P.dim()) fail(ErrorKind::DimensionMismatch, "points must match the polytope dimension");
  if (!P.normals_span()) fail(ErrorKind::NotReductionType, "facet normals do not span; the relative-class framework does not apply");
  P.require_interior(x);
  P.require_interior(y);
}

constexpr std::size_t kMaxEnumeration = 2000000;

}  // namespace

AmbientResult solve_ambient(const Polytope& P, const Point& x, const Point& y, long bound) {
  validate(P, x, y);
  if (bound < 0) fail(ErrorKind::ValidationError, "bound must be nonnegative");
  std::size_t N = P.size();
  auto Ix = distinguished(P, x), Iy = distinguished(P, y);
  AmbientResult res;
  if (Ix.size() != Iy.size()) {
    res.status = AmbientResult::Status::Infeasible;
    return res;
  }
  bool inconclusive = false;
  std::vector<std::size_t> target = Iy;
  do {
    BijectionOutcome o;
    for (std::size_t t = 0; t < Ix.size(); ++t) o.perm.emplace_back(Ix[t], target[t]);
    std::tie(o.system, o.rhs) = build_system(P, x, y, o.perm);
    auto sol = solve_integer(o.system, o.rhs);
    auto accept = [&](const IntVector& z) {
      IntMatrix A = as_matrix(z, N);
      IntMatrix M = induced_map(P, A);
      Int d = det(M);
      if (d != 1 && d != -1) return;
      res.solutions.push_back({A, M, o.perm});
      ++o.solutions;
    };
    if (!sol.feasible) {
      o.kind = BijectionOutcome::Kind::LinearInfeasible;
      o.certificate = sol.certificate;
    } else {
      o.particular = sol.particular;
      o.kernel = sol.kernel;
      std::size_t f = sol.kernel.size();
      if (f == 0) {
        accept(sol.particular);
        if (!o.solutions) {
          o.kind = BijectionOutcome::Kind::DeterminantObstruction;
          o.det_polynomial = {Rat(det(induced_map(P, as_matrix(sol.particular, N))))};
        }
      } else if (f == 1) {
        o.det_polynomial = det_polynomial(P, sol.particular, sol.kernel[0]);
        std::set<Int> params;
        bool all = false;
        for (long c : {1L, -1L}) {
          auto r = integer_roots(o.det_polynomial, c);
          if (!r) all = true;
          else params.insert(r->begin(), r->end());
        }
        if (all)
          for (long s = -bound; s <= bound; ++s) params.insert(Int(s));
        for (const auto& s : params) {
          IntVector z = sol.particular;
          for (std::size_t e = 0; e < z.size(); ++e) z[e] += s * sol.kernel[0][e];
          accept(z);
        }
        if (!o.solutions) o.kind = BijectionOutcome::Kind::DeterminantObstruction;
      } else {
        std::size_t total = 1;
        for (std::size_t q = 0; q < f && total <= kMaxEnumeration; ++q) total *= static_cast<std::size_t>(2 * bound + 1);
        if (total <= kMaxEnumeration) {
          std::vector<long> s(f, -bound);
          for (;;) {
            accept(along(sol.particular, sol.kernel, s));
            std::size_t q = 0;
            while (q < f && s[q] == bound) s[q++] = -bound;
            if (q == f) break;
            ++s[q];
          }
        }
        if (!o.solutions) inconclusive = true;
      }
      if (o.solutions) o.kind = BijectionOutcome::Kind::Solved;
    }
    res.outcomes.push_back(std::move(o));
  } while (std::next_permutation(target.begin(), target.end()));

  if (!res.solutions.empty()) res.status = AmbientResult::Status::Solutions;
  else if (inconclusive) res.status = AmbientResult::Status::Inconclusive;
  else res.status = AmbientResult::Status::Infeasible;
  return res;
}

bool verify_outcome(const Polytope& P, const Point& x, const Point& y, const BijectionOutcome& o) {
  auto [C, r] = build_system(P, x, y, o.perm);
  if (!(C == o.system) || r != o.rhs) return false;
  using K = BijectionOutcome::Kind;
  if (o.kind == K::LinearInfeasible) return verify_infeasibility(C, r, o.certificate);
  if (o.kind != K::DeterminantObstruction) return false;
  // the family z0 + K s must be exactly the integer solution set
  if (C * o.particular != r) return false;
  for (const auto& k : o.kernel)
    if (!is_zero(C * k)) return false;
  if (lattice_basis(o.kernel, C.cols()) != kernel_lattice(C)) return false;
  std::size_t N = P.size();
  if (o.kernel.empty()) {
    Int d = det(induced_map(P, as_matrix(o.particular, N)));
    return d != 1 && d != -1;
  }
  if (o.kernel.size() != 1) return false;
  if (det_polynomial(P, o.particular, o.kernel[0]) != o.det_polynomial) return false;
  for (long c : {1L, -1L}) {
    auto roots = integer_roots(o.det_polynomial, c);
    if (!roots || !roots->empty()) return false;
  }
  return true;
}

bool verify_infeasible(const Polytope& P, const Point& x, const Point& y, const AmbientResult& r) {
  if (r.status != AmbientResult::Status::Infeasible) return false;
  auto Ix = distinguished(P, x), Iy = distinguished(P, y);
  if (Ix.size() != Iy.size()) return true;
  std::size_t expect = 1;
  for (std::size_t k = 2; k <= Ix.size(); ++k) expect *= k;
  if (r.outcomes.size() != expect) return false;
  std::set<Perm> perms;
  for (const auto& o : r.outcomes) {
    if (!verify_outcome(P, x, y, o)) return false;
    perms.insert(o.perm);
  }
  return perms.size() == expect;
}

std::string to_string(AmbientResult::Status s) {
  switch (s) {
    case AmbientResult::Status::Solutions: return "solutions";
    case AmbientResult::Status::Infeasible: return "infeasible";
    case AmbientResult::Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_string(BijectionOutcome::Kind k) {
  switch (k) {
    case BijectionOutcome::Kind::LinearInfeasible: return "linear_infeasible";
    case BijectionOutcome::Kind::DeterminantObstruction: return "determinant_obstruction";
    case BijectionOutcome::Kind::Solved: return "solved";
    case BijectionOutcome::Kind::Inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace probekit
