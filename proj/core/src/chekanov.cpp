#include "probekit/chekanov.hpp"

#include <algorithm>

#include "probekit/errors.hpp"
#include "probekit/orbit.hpp"
#include "probekit/polytope.hpp"

namespace probekit::chekanov {

namespace {

void require_positive(const std::vector<Scalar>& a) {
  if (a.empty()) fail(ErrorKind::DimensionMismatch, "empty tuple");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].sign() <= 0) fail(ErrorKind::NonPositiveEntry, "entry " + std::to_string(i) + " = " + a[i].str());
}

std::int64_t field_of(const std::vector<Scalar>& a) {
  std::int64_t D = 1;
  for (const auto& x : a)
    if (x.disc() != 1) D = x.disc();
  return D;
}

Polytope orthant(std::size_t N, std::int64_t D) {
  std::vector<Facet> fs;
  for (std::size_t i = 0; i < N; ++i) {
    IntVector e(N, Int(0));
    e[i] = 1;
    fs.push_back({e, Scalar(0)});
  }
  return Polytope(N, std::move(fs), D);
}

IntVector direction_of(const Move& m, std::size_t N) {
  IntVector v(N, Int(0));
  if (auto* s = std::get_if<Swap>(&m)) {
    v[s->i] = 1;
    v[s->j] = -1;
  } else {
    const auto& e = std::get<Elswap>(m);
    v[e.i] = 1;
    v[e.j] = 1;
    v[e.k] = -1;
  }
  return v;
}

bool distinct(std::initializer_list<std::size_t> idx, std::size_t N) {
  std::vector<std::size_t> v(idx);
  for (auto i : v)
    if (i >= N) return false;
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

void apply_move(std::vector<Scalar>& a, const Move& m) {
  if (auto* s = std::get_if<Swap>(&m)) {
    std::swap(a[s->i], a[s->j]);
  } else {
    const auto& e = std::get<Elswap>(m);
    Scalar ai = a[e.i], aj = a[e.j], ak = a[e.k];
    a[e.i] = ak;
    a[e.j] = aj + ak - ai;
    a[e.k] = ai;
  }
}

// Subtractive Euclid on the excesses followed by sorting. Every step keeps
// the entries positive and the multiset of anchors (entries equal to d).
ProbeWord to_canonical(std::vector<Scalar> a) {
  const std::size_t N = a.size();
  const Scalar d = *std::min_element(a.begin(), a.end());
  ProbeWord w;
  for (std::size_t step = 0;; ++step) {
    if (step > 1000000) fail(ErrorKind::WordSearchExhausted, "Euclid did not terminate");
    std::size_t p = N, q = N, m = N;
    for (std::size_t i = 0; i < N; ++i) {
      if (a[i] == d) {
        if (m == N) m = i;
        continue;
      }
      if (p == N || a[i] > a[p]) p = i;
      if (q == N || a[i] < a[q]) q = i;
    }
    if (p == N || a[p] == a[q]) break;
    Move mv = Elswap{q, p, m};
    apply_move(a, mv);
    w.push_back(mv);
  }
  for (std::size_t i = 0; i < N; ++i) {
    std::size_t best = i;
    for (std::size_t j = i + 1; j < N; ++j)
      if (a[j] < a[best]) best = j;
    if (best != i && a[best] != a[i]) {
      Move mv = Swap{i, best};
      apply_move(a, mv);
      w.push_back(mv);
    }
  }
  return w;
}

// Reads a probe move in the orthant back as a Swap or Elswap.
Move move_from_probe(const Probe& s) {
  const auto& v = s.direction;
  std::vector<std::size_t> nz;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) nz.push_back(i);
  if (nz.size() == 2) return Swap{s.entry, s.exit};
  std::size_t j = 0;
  for (auto i : nz)
    if (i != s.entry && i != s.exit) j = i;
  if (v[j] > 0) return Elswap{s.entry, j, s.exit};
  return Elswap{s.exit, j, s.entry};
}

bool word_shape(const IntVector& v) {
  int nz = 0;
  Int sum = 0;
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x != 1 && x != -1) return false;
    ++nz;
    sum += x;
  }
  return (nz == 2 && sum == 0) || (nz == 3 && (sum == 1 || sum == -1));
}

}  // namespace

ReducedVector reduce(const std::vector<Scalar>& a) {
  require_positive(a);
  Invariants inv = invariants_of_values(a);
  return {inv.d, inv.count, inv.reduced};
}

bool equivalent(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  if (a.size() != b.size())
    fail(ErrorKind::LengthMismatch, std::to_string(a.size()) + " vs " + std::to_string(b.size()) + " entries");
  require_positive(a);
  require_positive(b);
  return invariants_of_values(a).same_class(invariants_of_values(b));
}

Scalar integral_affine_length(const std::vector<Scalar>& entries) {
  for (const auto& x : entries)
    if (x.sign() <= 0) fail(ErrorKind::NonPositiveEntry, x.str());
  auto g = gamma_lattice(entries);
  if (g.size() != 1) fail(ErrorKind::RankNotOne, "excess lattice has rank " + std::to_string(g.size()));
  return g[0].abs();
}

std::string to_string(const Move& m) {
  if (auto* s = std::get_if<Swap>(&m)) return "Swap(" + std::to_string(s->i) + "," + std::to_string(s->j) + ")";
  const auto& e = std::get<Elswap>(m);
  return "Elswap(" + std::to_string(e.i) + "," + std::to_string(e.j) + "," + std::to_string(e.k) + ")";
}

ProbeWord probe_word(const std::vector<Scalar>& a, const std::vector<Scalar>& b, const WordSearch& search) {
  if (!equivalent(a, b)) fail(ErrorKind::NotEquivalent, "invariants of the two tuples differ");
  if (a == b) return {};
  if (auto sa = a, sb = b; std::ranges::sort(sa), std::ranges::sort(sb), sa == sb) {
    // a permutation: transpositions only
    ProbeWord w;
    std::vector<Scalar> x = a;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == b[i]) continue;
      std::size_t j = i + 1;
      while (x[j] != b[i]) ++j;
      std::swap(x[i], x[j]);
      w.push_back(Swap{i, j});
    }
    return w;
  }
  std::vector<Scalar> excess;
  for (const auto& x : reduce(a).entries) excess.push_back(x);
  if (gamma_lattice(excess).size() <= 1) {
    ProbeWord w = to_canonical(a), wb = to_canonical(b);
    w.insert(w.end(), wb.rbegin(), wb.rend());
    return w;
  }
  std::int64_t D = std::max(field_of(a), field_of(b));
  Polytope P = orthant(a.size(), D);
  OrbitParams params;
  params.max_norm = 1;
  params.max_points = search.max_points;
  params.max_depth = search.max_depth;
  params.direction_filter = word_shape;
  auto path = connect(P, a, b, params);
  if (!path) fail(ErrorKind::WordSearchExhausted, "no probe word within the search limits");
  ProbeWord w;
  for (const auto& mv : *path) w.push_back(move_from_probe(mv.probe));
  return w;
}

std::vector<Scalar> replay(const std::vector<Scalar>& a, const ProbeWord& word) {
  require_positive(a);
  const std::size_t N = a.size();
  Polytope P = orthant(N, field_of(a));
  std::vector<Scalar> x = a;
  for (std::size_t n = 0; n < word.size(); ++n) {
    const Move& m = word[n];
    auto bad = [&](const std::string& why) {
      fail(ErrorKind::PreconditionViolated, "move " + std::to_string(n) + " " + to_string(m) + ": " + why);
    };
    if (auto* s = std::get_if<Swap>(&m)) {
      if (!distinct({s->i, s->j}, N)) bad("indices out of range or repeated");
    } else {
      const auto& e = std::get<Elswap>(m);
      if (!distinct({e.i, e.j, e.k}, N)) bad("indices out of range or repeated");
      if (!(x[e.i] < x[e.j])) bad("needs a_i < a_j");
    }
    Point expected;
    try {
      expected = partner(shoot(P, x, direction_of(m, N)), x);
    } catch (const Error& err) {
      bad(err.what());
    }
    apply_move(x, m);
    if (x != expected) bad("disagrees with the probe partner " + probekit::to_string(expected));
  }
  return x;
}

}  // namespace probekit::chekanov
