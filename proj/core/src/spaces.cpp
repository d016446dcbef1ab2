#include "probekit/spaces.hpp"

#include <algorithm>
#include <set>

#include "probekit/errors.hpp"

namespace probekit::spaces {

namespace {

const std::vector<std::pair<std::string, Kind>> kNames = {
    {"cp2", Kind::Cp2},
    {"s2s2_monotone", Kind::S2S2Monotone},
    {"c_x_s2", Kind::CxS2},
    {"c2_x_ts1", Kind::C2xTS1},
    {"ts1_x_s2", Kind::TS1xS2},
};

std::int64_t field_of(const Point& x) {
  std::int64_t D = 1;
  for (const auto& c : x)
    if (c.disc() != 1) D = c.disc();
  return D;
}

Facet facet(std::initializer_list<long> normal, long offset) { return {make_vector(normal), Scalar(offset)}; }

std::vector<Point> clip(std::vector<Point> pts, const std::optional<Window>& w) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (w) std::erase_if(pts, [&](const Point& p) { return !w->contains(p); });
  return pts;
}

const Window& need_window(const std::optional<Window>& w, const std::string& what) {
  if (!w) fail(ErrorKind::ValidationError, what + " has an infinite class; a window is required");
  return *w;
}

// Integers m with lo <= base + m * step <= hi, step > 0.
std::pair<Int, Int> steps_in(const Scalar& base, const Scalar& step, const Scalar& lo, const Scalar& hi) {
  Int a = -((base - lo) / step).floor();  // ceil((lo - base) / step)
  Int b = ((hi - base) / step).floor();
  return {a, b};
}

OracleGroup finite(std::vector<IntMatrix> gens, std::size_t n, std::string description) {
  OracleGroup g;
  g.form = OracleGroup::Form::Finite;
  g.generators = gens;
  std::set<IntMatrix> seen{IntMatrix::identity(n)};
  std::vector<IntMatrix> frontier{IntMatrix::identity(n)};
  while (!frontier.empty()) {
    std::vector<IntMatrix> next;
    for (const auto& a : frontier)
      for (const auto& s : gens) {
        IntMatrix b = s * a;
        if (seen.insert(b).second) next.push_back(b);
      }
    frontier = std::move(next);
  }
  g.elements.assign(seen.begin(), seen.end());
  g.order = g.elements.size();
  auto els = g.elements;
  g.contains = [els](const IntMatrix& m) { return std::binary_search(els.begin(), els.end(), m); };
  g.description = std::move(description);
  return g;
}

OracleGroup trivial(std::size_t n) { return finite({}, n, "trivial"); }

// {[[1,0],[2k,e]] : k in Z, e = +-1}
OracleGroup shear_family() {
  OracleGroup g;
  g.form = OracleGroup::Form::Parametric;
  g.generators = {IntMatrix{{1, 0}, {0, -1}}, IntMatrix{{1, 0}, {2, -1}}};
  g.contains = [](const IntMatrix& m) {
    return m.rows() == 2 && m.cols() == 2 && m(0, 0) == 1 && m(0, 1) == 0 && (m(1, 1) == 1 || m(1, 1) == -1) &&
           mpz_even_p(m(1, 0).get_mpz_t());
  };
  g.sample = [](long b) {
    std::vector<IntMatrix> out;
    for (long k = -b; k <= b; ++k)
      for (long e : {-1, 1}) out.push_back(IntMatrix{{1, 0}, {2 * k, e}});
    std::sort(out.begin(), out.end());
    return out;
  };
  g.description = "[[1,0],[2k,+-1]], k in Z";
  return g;
}

Scalar mod(const Scalar& a, const Scalar& m) { return a - Scalar(Int((a / m).floor())) * m; }

// --- C x S^2 ---------------------------------------------------------------

std::vector<Point> orbit_cxs2(const Point& x, const std::optional<Window>& w) {
  const Scalar &x1 = x[0], &x2 = x[1];
  Scalar d = min(x1 + 1, min(x2 + 1, 1 - x2));
  if (d == 1) return clip({x}, w);
  Scalar h = 1 - d;
  if (x1 == -h && (x2 == h || x2 == -h)) return clip({{-h, h}, {-h, -h}}, w);
  Scalar t;
  if (x1 == -h) {
    t = x2.abs();
  } else {
    Scalar r = mod(x1, 2 * h);
    t = r <= h ? r : 2 * h - r;
  }
  const Window& win = need_window(w, "c_x_s2");
  std::vector<Point> pts;
  auto run = [&](const Scalar& start) {
    auto [a, b] = steps_in(start, 2 * h, win.lo[0], win.hi[0]);
    if (a < 0) a = 0;
    for (Int m = a; m <= b; ++m)
      for (const Scalar& y2 : {h, -h}) pts.push_back({start + Scalar(m) * (2 * h), y2});
  };
  if (t.is_zero()) {
    run(0);
    pts.push_back({-h, 0});
  } else if (t == h) {
    run(h);
  } else {
    run(t);
    run(-t);
    pts.push_back({-h, t});
    pts.push_back({-h, -t});
  }
  return clip(std::move(pts), w);
}

OracleGroup monodromy_cxs2(const Point& x) {
  const Scalar &x1 = x[0], &x2 = x[1];
  if (x2.is_zero() && x1.sign() > 0) {
    OracleGroup g = shear_family();
    g.description = "Z2 x| Z generated by diag(1,-1) and [[1,0],[2,-1]]; elements " + g.description;
    return g;
  }
  if (x2.is_zero()) return finite({IntMatrix{{1, 0}, {0, -1}}}, 2, "<diag(1,-1)>");
  if (x1 == -x2 && x2.sign() > 0) return finite({IntMatrix{{0, -1}, {-1, 0}}}, 2, "<[[0,-1],[-1,0]]>");
  if (x1 == x2 && x2.sign() < 0) return finite({IntMatrix{{0, 1}, {1, 0}}}, 2, "<[[0,1],[1,0]]>, conjugate by the vertical probe");
  Scalar d = min(x1 + 1, min(x2 + 1, 1 - x2));
  Scalar h = 1 - d;
  if (x1 == -h) return trivial(2);
  if (x1.is_zero()) return finite({IntMatrix{{-1, 0}, {0, 1}}}, 2, "<diag(-1,1)>");
  if (mod(x1, 2 * h).is_zero()) {
    OracleGroup g;
    g.form = OracleGroup::Form::OrderOnly;
    g.order = 2;
    g.description = "order 2, conjugate to <diag(1,-1)> at (-h,0)";
    return g;
  }
  return trivial(2);
}

// --- S^2 x S^2, CP^2 -------------------------------------------------------

OracleGroup monodromy_s2s2(const Point& x) {
  IntMatrix D{{x[0].sign() < 0 ? -1 : 1, 0}, {0, x[1].sign() < 0 ? -1 : 1}};
  IntMatrix P = IntMatrix::identity(2);
  if (x[0].abs() > x[1].abs()) P = IntMatrix{{0, 1}, {1, 0}};
  IntMatrix M = P * D;
  Scalar p = min(x[0].abs(), x[1].abs()), q = max(x[0].abs(), x[1].abs());
  std::vector<IntMatrix> gens;
  std::string desc;
  if (q.is_zero()) {
    gens = {IntMatrix{{1, 0}, {0, -1}}, IntMatrix{{-1, 0}, {0, 1}}};
    desc = "diag(+-1,+-1)";
  } else if (p == q) {
    gens = {IntMatrix{{0, 1}, {1, 0}}};
    desc = "order 2, conjugate of the swap";
  } else if (p.is_zero()) {
    gens = {IntMatrix{{-1, 0}, {0, 1}}};
    desc = "order 2, conjugate of diag(-1,1)";
  } else {
    return trivial(2);
  }
  IntMatrix Mi = inverse_unimodular(M);
  for (auto& g : gens) g = Mi * g * M;
  return finite(gens, 2, desc);
}

std::vector<std::vector<std::size_t>> perms3() { return {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}; }

std::vector<Point> orbit_cp2(const Polytope& P, const Point& x, const std::optional<Window>& w) {
  auto l = P.ell(x);
  std::vector<Point> pts;
  for (const auto& pi : perms3()) pts.push_back({l[pi[0]] - 1, l[pi[1]] - 1});
  return clip(std::move(pts), w);
}

OracleGroup monodromy_cp2(const Polytope& P, const Point& x) {
  auto l = P.ell(x);
  std::vector<IntMatrix> gens;
  for (const auto& pi : perms3()) {
    if (l[pi[0]] != l[0] || l[pi[1]] != l[1] || l[pi[2]] != l[2]) continue;
    gens.push_back(IntMatrix::from_columns({P.normal(pi[0]), P.normal(pi[1])}, 2));
  }
  return finite(gens, 2, "integral symmetries of the simplex fixing x");
}

// --- C^n -------------------------------------------------------------------

std::vector<Point> orbit_cn(const Point& x, const std::optional<Window>& w) {
  Invariants inv = invariants_of_values(x);
  if (inv.gamma.empty()) return clip({x}, w);
  if (inv.gamma.size() > 1) fail(ErrorKind::NotInClosedForm, "excess lattice of rank 2; classes are dense");
  const Window& win = need_window(w, "cn");
  Scalar g = inv.gamma[0].abs();
  const std::size_t N = x.size();
  std::vector<std::vector<Int>> choices(N);
  std::size_t total = 1;
  for (std::size_t i = 0; i < N; ++i) {
    auto [a, b] = steps_in(inv.d, g, win.lo[i], win.hi[i]);
    if (a < 0) a = 0;
    for (Int m = a; m <= b; ++m) choices[i].push_back(m);
    if (choices[i].empty()) return {};
    total *= choices[i].size();
    if (total > 5000000) fail(ErrorKind::ValidationError, "window too large for enumeration");
  }
  std::vector<Point> pts;
  std::vector<std::size_t> idx(N, 0);
  for (;;) {
    std::size_t zeros = 0;
    Int gcd = 0;
    for (std::size_t i = 0; i < N; ++i) {
      const Int& m = choices[i][idx[i]];
      if (m == 0) ++zeros;
      mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), m.get_mpz_t());
    }
    if (zeros == inv.count && gcd == 1) {
      Point p;
      for (std::size_t i = 0; i < N; ++i) p.push_back(inv.d + Scalar(choices[i][idx[i]]) * g);
      pts.push_back(std::move(p));
    }
    std::size_t k = N;
    while (k > 0 && idx[k - 1] + 1 == choices[k - 1].size()) idx[--k] = 0;
    if (k == 0) break;
    ++idx[k - 1];
  }
  return clip(std::move(pts), w);
}

// Columns of M are images of e_j: permute the distinguished e_i, keep the
// Maslov class (column sums 1) and the area class (M^T a = a).
OracleGroup monodromy_cn(const Point& a) {
  Invariants inv = invariants_of_values(a);
  std::vector<std::size_t> dist;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] == inv.d) dist.push_back(i);
  OracleGroup g;
  g.form = OracleGroup::Form::Constraints;
  g.contains = [a, dist](const IntMatrix& M) {
    std::size_t n = a.size();
    if (M.rows() != n || M.cols() != n) return false;
    Int dt = det(M);
    if (dt != 1 && dt != -1) return false;
    for (std::size_t j = 0; j < n; ++j) {
      Int s = 0;
      Scalar area = 0;
      for (std::size_t i = 0; i < n; ++i) {
        s += M(i, j);
        area += Scalar(M(i, j)) * a[i];
      }
      if (s != 1 || area != a[j]) return false;
    }
    std::set<std::size_t> image;
    for (auto j : dist) {
      auto col = M.column(j);
      std::size_t hit = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (col[i] == 0) continue;
        if (col[i] != 1 || hit != n) return false;
        hit = i;
      }
      if (hit == n || !std::binary_search(dist.begin(), dist.end(), hit)) return false;
      image.insert(hit);
    }
    return image.size() == dist.size();
  };
  g.description = "unimodular maps permuting distinguished e_i and fixing Maslov and area classes";
  return g;
}

// --- C^2 x T*S^1, T*S^1 x S^2 ----------------------------------------------

OracleGroup monodromy_c2ts1(const Point& x) {
  if (x[0] != x[1]) return trivial(3);
  OracleGroup g;
  g.form = OracleGroup::Form::Parametric;
  g.generators = {IntMatrix{{1, 0, 1}, {0, 1, -1}, {0, 0, 1}}, IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}};
  g.contains = [](const IntMatrix& m) {
    if (m.rows() != 3 || m.cols() != 3) return false;
    if (m(2, 0) != 0 || m(2, 1) != 0 || m(2, 2) != 1) return false;
    bool id = m(0, 0) == 1 && m(0, 1) == 0 && m(1, 0) == 0 && m(1, 1) == 1;
    bool sw = m(0, 0) == 0 && m(0, 1) == 1 && m(1, 0) == 1 && m(1, 1) == 0;
    return (id || sw) && m(0, 2) == -m(1, 2);
  };
  g.sample = [](long b) {
    std::vector<IntMatrix> out;
    for (long m = -b; m <= b; ++m) {
      out.push_back(IntMatrix{{1, 0, m}, {0, 1, -m}, {0, 0, 1}});
      out.push_back(IntMatrix{{0, 1, m}, {1, 0, -m}, {0, 0, 1}});
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  g.description = "G^m and G^m S, G = [[1,0,1],[0,1,-1],[0,0,1]], S = coordinate swap";
  return g;
}

bool maps_onto(const IntMatrix& A, const std::vector<IntVector>& from, const std::vector<IntVector>& to) {
  std::set<IntVector> image, target(to.begin(), to.end());
  for (const auto& v : from) image.insert(A * v);
  return image == target;
}

std::vector<IntVector> distinguished_normals(const Polytope& P, const Point& x) {
  auto l = P.ell(x);
  Scalar d = *std::min_element(l.begin(), l.end());
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < l.size(); ++i)
    if (l[i] == d) out.push_back(P.normal(i));
  return out;
}

bool unimodular(const IntMatrix& A) {
  Int d = det(A);
  return d == 1 || d == -1;
}

bool h1_c2ts1(const Polytope& P, const Point& x, const Point& y, const IntMatrix& A) {
  if (A.rows() != 3 || A.cols() != 3) return false;
  if (A(2, 0) != 0 || A(2, 1) != 0 || A(2, 2) != 1) return false;
  if (!unimodular(A)) return false;
  if (min(x[0], x[1]) != min(y[0], y[1])) return false;
  if (!maps_onto(A, distinguished_normals(P, x), distinguished_normals(P, y))) return false;
  // Maslov: e1, e2 have index 2, e3 has index 0
  for (std::size_t j = 0; j < 3; ++j)
    if (A(0, j) + A(1, j) != (j < 2 ? 1 : 0)) return false;
  // Liouville class: lambda(e_j) = x_j
  for (std::size_t j = 0; j < 3; ++j) {
    Scalar s = 0;
    for (std::size_t i = 0; i < 3; ++i) s += Scalar(A(i, j)) * y[i];
    if (s != x[j]) return false;
  }
  return true;
}

bool h1_ts1s2(const Polytope& P, const Point& x, const Point& y, const IntMatrix& A) {
  if (A.rows() != 2 || A.cols() != 2) return false;
  if (A(0, 0) != 1 || A(0, 1) != 0) return false;
  if (!unimodular(A)) return false;
  if (x[1].abs() != y[1].abs()) return false;
  if (!maps_onto(A, distinguished_normals(P, x), distinguished_normals(P, y))) return false;
  if (!mpz_even_p(A(1, 0).get_mpz_t())) return false;
  return x[0] == y[0] + Scalar(A(1, 0)) * y[1];
}

}  // namespace

PresetId PresetId::parse(const std::string& name) {
  for (const auto& [s, k] : kNames)
    if (s == name) return {k, 0};
  if (name.rfind("cn:", 0) == 0) {
    std::size_t pos = 0;
    long n = -1;
    try {
      n = std::stol(name.substr(3), &pos);
    } catch (const std::exception&) {
    }
    if (pos == name.size() - 3 && n >= 1 && n <= 64) return {Kind::Cn, static_cast<std::size_t>(n)};
  }
  fail(ErrorKind::UnknownPreset, "'" + name + "'");
}

std::string PresetId::name() const {
  if (kind == Kind::Cn) return "cn:" + std::to_string(n);
  for (const auto& [s, k] : kNames)
    if (k == kind) return s;
  return "?";
}

std::vector<PresetInfo> preset_list() {
  return {
      {"cn:N", "orthant R^N_{>=0}", "x_i >= 0 for i = 0..N-1"},
      {"cp2", "simplex", "x1 >= -1, x2 >= -1, x1 + x2 <= 1"},
      {"s2s2_monotone", "[-1,1]^2", "x1 <= 1, x2 <= 1, x1 >= -1, x2 >= -1"},
      {"c_x_s2", "R_{>=-1} x [-1,1]", "x1 >= -1, x2 >= -1, x2 <= 1"},
      {"c2_x_ts1", "R^2_{>=0} x R", "x1 >= 0, x2 >= 0"},
      {"ts1_x_s2", "R x [-1,1]", "x2 >= -1, x2 <= 1"},
  };
}

Polytope preset(const PresetId& id) {
  switch (id.kind) {
    case Kind::Cn: {
      if (id.n == 0) fail(ErrorKind::UnknownPreset, "cn needs a dimension");
      std::vector<Facet> fs;
      for (std::size_t i = 0; i < id.n; ++i) {
        IntVector e(id.n, Int(0));
        e[i] = 1;
        fs.push_back({e, Scalar(0)});
      }
      return Polytope(id.n, std::move(fs));
    }
    case Kind::Cp2: return Polytope(2, {facet({1, 0}, 1), facet({0, 1}, 1), facet({-1, -1}, 1)});
    case Kind::S2S2Monotone: return Polytope(2, {facet({-1, 0}, 1), facet({0, -1}, 1), facet({1, 0}, 1), facet({0, 1}, 1)});
    case Kind::CxS2: return Polytope(2, {facet({1, 0}, 1), facet({0, 1}, 1), facet({0, -1}, 1)});
    case Kind::C2xTS1: return Polytope(3, {facet({1, 0, 0}, 0), facet({0, 1, 0}, 0)});
    case Kind::TS1xS2: return Polytope(2, {facet({0, 1}, 1), facet({0, -1}, 1)});
  }
  fail(ErrorKind::UnknownPreset, "unhandled preset");
}

Polytope preset(const std::string& name) { return preset(PresetId::parse(name)); }

std::vector<Point> oracle_orbit(const PresetId& id, const Point& x, const std::optional<Window>& window) {
  Polytope P = preset(id).with_field(field_of(x));
  P.require_interior(x);
  if (window && (window->lo.size() != P.dim() || window->hi.size() != P.dim()))
    fail(ErrorKind::DimensionMismatch, "window dimension");
  switch (id.kind) {
    case Kind::S2S2Monotone: {
      std::vector<Point> pts;
      for (int s1 : {-1, 1})
        for (int s2 : {-1, 1}) {
          pts.push_back({Scalar(s1) * x[0], Scalar(s2) * x[1]});
          pts.push_back({Scalar(s1) * x[1], Scalar(s2) * x[0]});
        }
      return clip(std::move(pts), window);
    }
    case Kind::Cp2: return orbit_cp2(P, x, window);
    case Kind::CxS2: return orbit_cxs2(x, window);
    case Kind::C2xTS1: {
      Scalar delta = x[1] - x[0];
      if (delta.is_zero()) return clip({x}, window);
      const Window& w = need_window(window, "c2_x_ts1");
      Scalar step = delta.abs();
      auto [a, b] = steps_in(x[2], step, w.lo[2], w.hi[2]);
      std::vector<Point> pts;
      for (Int k = a; k <= b; ++k) {
        Scalar z = x[2] + Scalar(k) * step;
        pts.push_back({x[0], x[1], z});
        pts.push_back({x[1], x[0], z});
      }
      return clip(std::move(pts), window);
    }
    case Kind::TS1xS2: {
      if (x[1].is_zero()) return clip({x}, window);
      const Window& w = need_window(window, "ts1_x_s2");
      Scalar step = 2 * x[1].abs();
      auto [a, b] = steps_in(x[0], step, w.lo[0], w.hi[0]);
      std::vector<Point> pts;
      for (Int k = a; k <= b; ++k) {
        Scalar z = x[0] + Scalar(k) * step;
        pts.push_back({z, x[1]});
        pts.push_back({z, -x[1]});
      }
      return clip(std::move(pts), window);
    }
    case Kind::Cn: return orbit_cn(x, window);
  }
  fail(ErrorKind::UnknownPreset, "unhandled preset");
}

OracleGroup oracle_monodromy(const PresetId& id, const Point& x) {
  Polytope P = preset(id).with_field(field_of(x));
  P.require_interior(x);
  switch (id.kind) {
    case Kind::S2S2Monotone: return monodromy_s2s2(x);
    case Kind::Cp2: return monodromy_cp2(P, x);
    case Kind::CxS2: return monodromy_cxs2(x);
    case Kind::C2xTS1: return monodromy_c2ts1(x);
    case Kind::TS1xS2: {
      if (!x[1].is_zero()) return trivial(2);
      return shear_family();
    }
    case Kind::Cn: return monodromy_cn(x);
  }
  fail(ErrorKind::UnknownPreset, "unhandled preset");
}

bool h1_constraints(const PresetId& id, const Point& x, const Point& y, const IntMatrix& A) {
  Polytope P = preset(id);
  P.require_interior(x);
  P.require_interior(y);
  switch (id.kind) {
    case Kind::C2xTS1: return h1_c2ts1(P, x, y, A);
    case Kind::TS1xS2: return h1_ts1s2(P, x, y, A);
    default: fail(ErrorKind::ValidationError, "H_1 constraints are only encoded for c2_x_ts1 and ts1_x_s2");
  }
}

std::vector<IntMatrix> h1_search(const PresetId& id, const Point& x, const Point& y, long bound) {
  std::vector<IntMatrix> out;
  if (id.kind == Kind::TS1xS2) {
    for (long a = -bound; a <= bound; ++a)
      for (long b = -bound; b <= bound; ++b)
        for (long c = -bound; c <= bound; ++c)
          for (long d = -bound; d <= bound; ++d) {
            IntMatrix A{{a, b}, {c, d}};
            if (h1_constraints(id, x, y, A)) out.push_back(A);
          }
  } else if (id.kind == Kind::C2xTS1) {
    // last row fixed; the Maslov rows determine the second row, so only
    // matrices of the box satisfying them are visited
    auto in = [&](long v) { return -bound <= v && v <= bound; };
    for (long a1 = -bound; a1 <= bound; ++a1)
      for (long a2 = -bound; a2 <= bound; ++a2)
        for (long b1 = -bound; b1 <= bound; ++b1) {
          long a3 = 1 - a1, a4 = 1 - a2, b2 = -b1;
          if (!in(a3) || !in(a4) || !in(b2)) continue;
          IntMatrix A{{a1, a2, b1}, {a3, a4, b2}, {0, 0, 1}};
          if (h1_constraints(id, x, y, A)) out.push_back(A);
        }
  } else {
    fail(ErrorKind::ValidationError, "H_1 constraints are only encoded for c2_x_ts1 and ts1_x_s2");
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace probekit::spaces
