// One line per acceptance criterion; exit status is the number of failures.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "probekit/chekanov.hpp"
#include "probekit/reduction.hpp"
#include "probekit/verdict.hpp"
#include "support.hpp"

using namespace probekit;
using namespace probekit::testing;
using spaces::PresetId;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) note << "failed: " << what << "; ";
    pass = pass && ok;
  }
};

std::vector<Point> sorted(std::vector<Point> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Window box(std::size_t n, long lo, long hi) {
  Window w;
  for (std::size_t i = 0; i < n; ++i) {
    w.lo.emplace_back(lo);
    w.hi.emplace_back(hi);
  }
  return w;
}

void involution_laws(Outcome& o) {
  std::mt19937_64 rng(1001);
  std::size_t probes = 0;
  for (int round = 0; probes < 1200 && round < 200; ++round) {
    for (const auto& name : preset_names()) {
      auto P = spaces::preset(name);
      Point x = random_interior(P, rng, 3, 10);
      for (const auto& s : enumerate(P, x, P.dim() == 3 ? 2 : 3)) {
        ++probes;
        IntMatrix phi = involution(s);
        bool ok = phi * phi == IntMatrix::identity(P.dim()) && det(phi) == -1 && phi * s.entry_normal == s.exit_normal;
        for (const auto& a : kernel_lattice(IntMatrix::from_rows({s.direction}, P.dim()))) ok = ok && phi * a == a;
        o.require(ok, name + " at " + to_string(x) + " along " + to_string(s.direction));
      }
    }
  }
  o.require(probes >= 1000, "fewer than 1000 probes sampled");
  o.note << probes << " probes";
}

void invariants_along_moves(Outcome& o) {
  std::mt19937_64 rng(1002);
  std::size_t nodes = 0;
  for (const auto& name : preset_names()) {
    auto P = spaces::preset(name);
    if (!P.normals_span()) continue;
    for (int t = 0; t < 5; ++t) {
      Point x = random_interior(P, rng, 3, 8);
      OrbitParams p;
      p.max_norm = P.dim() == 3 ? 1 : 3;
      p.max_points = 150;
      p.window = box(P.dim(), -4, 8);
      auto g = explore(P, x, p);
      auto inv = invariants(P, x);
      for (const auto& n : g.nodes) {
        ++nodes;
        o.require(invariants(P, n.point).same_class(inv), name + " node " + to_string(n.point));
      }
    }
  }
  o.note << nodes << " nodes";
}

void monotone_s2s2(Outcome& o) {
  auto id = PresetId::parse("s2s2_monotone");
  auto P = spaces::preset(id);
  const std::vector<std::pair<Point, std::size_t>> orbits = {
      {{q(1, 5), q(1, 2)}, 8}, {{q(1, 2), q(1, 2)}, 4}, {{0, q(1, 2)}, 4}, {{0, 0}, 1}};
  for (const auto& [x, n] : orbits) {
    OrbitParams p;
    auto g = explore(P, x, p);
    o.require(g.window_size() == n, "orbit size at " + to_string(x));
    o.require(sorted(g.window_points()) == sorted(spaces::oracle_orbit(id, x)), "orbit at " + to_string(x));
  }
  const std::vector<std::pair<Point, std::size_t>> groups = {
      {{0, 0}, 4}, {{q(1, 2), q(1, 2)}, 2}, {{q(1, 3), q(1, 3)}, 2}, {{0, q(1, 2)}, 2}, {{q(1, 5), q(1, 2)}, 1}};
  for (const auto& [x, n] : groups) {
    OrbitParams p;
    auto H = holonomy_group(explore(P, x, p), x, 100);
    auto O = spaces::oracle_monodromy(id, x);
    o.require(H.finite() && H.order() == n, "group order at " + to_string(x));
    o.require(H.elements == O.elements, "group at " + to_string(x));
  }
  o.note << "4 orbits, 5 groups";
}

void cp2(Outcome& o) {
  auto id = PresetId::parse("cp2");
  auto P = spaces::preset(id);
  std::mt19937_64 rng(1004);
  std::size_t max_orbit = 0;
  for (int t = 0; t < 30; ++t) {
    Point x = random_interior(P, rng, 1, 10);
    OrbitParams p;
    auto g = explore(P, x, p);
    max_orbit = std::max(max_orbit, g.window_size());
    o.require(g.window_size() <= 6, "orbit larger than 6");
    o.require(sorted(g.window_points()) == sorted(spaces::oracle_orbit(id, x)), "orbit at " + to_string(x));
  }
  Point x = {q(-1, 2), q(-1, 5)}, y = {q(-1, 2), q(1, 10)};
  o.require(invariants(P, x).same_class(invariants(P, y)), "invariants differ");
  auto amb = solve_ambient(P, x, y, 5);
  o.require(amb.status == AmbientResult::Status::Infeasible, "ambient not infeasible");
  o.require(verify_infeasible(P, x, y, amb), "infeasibility proof does not check");
  OrbitParams p;
  auto v = decide(P, x, y, p);
  o.require(v.kind == Verdict::Kind::Distinct, "verdict not Distinct");
  o.note << "30 random orbits (max " << max_orbit << "), pair Distinct by " << v.reason;
}

void c_x_s2(Outcome& o) {
  auto P = spaces::preset("c_x_s2");
  Window w{V({-1, -1}), V({6, 1})};
  OrbitParams p;
  p.window = w;
  auto g = explore(P, {0, q(1, 2)}, p);
  std::vector<Point> want = {{q(-1, 2), 0}};
  for (long n = 0; n <= 6; ++n) {
    want.push_back({n, q(1, 2)});
    want.push_back({n, q(-1, 2)});
  }
  o.require(sorted(g.window_points()) == sorted(want), "orbit of (0,1/2)");
  auto h = explore(P, V({1, 0}), p);
  auto H = holonomy_group(h, V({1, 0}), 60);
  o.require(H.truncated, "group at (1,0) not reported infinite");
  for (const auto& m : H.elements)
    o.require(m(0, 0) == 1 && m(0, 1) == 0 && m(1, 0) % 2 == 0 && abs(m(1, 1)) == 1, "element " + m.str());
  o.note << g.window_size() << " orbit points, " << H.order() << " group elements up to cap";
}

void c2ts1_ts1s2(Outcome& o) {
  auto c = PresetId::parse("c2_x_ts1");
  Window w{V({0, 0, -5}), V({10, 10, 5})};
  OrbitParams p;
  p.window = w;
  auto g = explore(spaces::preset(c), V({1, 2, 0}), p);
  std::vector<Point> want;
  for (long k = -5; k <= 5; ++k) {
    want.push_back(V({1, 2, k}));
    want.push_back(V({2, 1, k}));
  }
  o.require(sorted(g.window_points()) == sorted(want), "C2 x T*S1 orbit of (1,2,0)");

  auto t = PresetId::parse("ts1_x_s2");
  OrbitParams q3;
  q3.max_norm = 3;
  q3.window = Window{V({-3, -1}), V({3, 1})};
  auto h = explore(spaces::preset(t), {0, q(1, 2)}, q3);
  o.require(h.window_size() == 14, "T*S1 x S2 orbit size");
  o.require(sorted(h.window_points()) == sorted(spaces::oracle_orbit(t, {0, q(1, 2)}, q3.window)), "T*S1 x S2 orbit");

  Point x = {q(1, 3), 0};
  OrbitParams pm;
  pm.max_norm = 3;
  pm.window = Window{V({-3, -1}), V({3, 1})};
  auto H = holonomy_group(explore(spaces::preset(t), x, pm), x, 60);
  auto O = spaces::oracle_monodromy(t, x);
  o.require(H.truncated, "T*S1 x S2 group not reported infinite");
  for (const auto& m : H.elements) o.require(O.contains(m), "element outside family " + m.str());
  for (const auto& m : O.sample(2)) o.require(H.contains(m), "family element missing " + m.str());
  o.note << "orbits 22 and " << h.window_size() << " points, " << H.order() << " group elements in family";
}

void chekanov_cn(Outcome& o) {
  namespace ch = probekit::chekanov;
  for (long k = 3; k <= 10; ++k) {
    auto a = V({1, 2, 3}), b = V({1, 2, k});
    o.require(ch::equivalent(a, b), "not equivalent for k = " + std::to_string(k));
    auto r = ch::replay(a, ch::probe_word(a, b));
    std::sort(r.begin(), r.end());
    o.require(r == b, "replay for k = " + std::to_string(k));
  }
  OrbitParams p;
  p.max_norm = 1;
  p.max_points = 200;
  p.window = box(3, 0, 10);
  auto g = explore(spaces::preset("cn:3"), V({1, 2, 3}), p);
  std::set<std::vector<Scalar>> seen;
  for (auto x : g.window_points()) {
    std::sort(x.begin(), x.end());
    seen.insert(x);
  }
  for (long k = 3; k <= 10; ++k) {
    auto want = V({1, 2, k});
    std::sort(want.begin(), want.end());
    o.require(seen.count(want) == 1, "(1,2," + std::to_string(k) + ") not reached");
  }
  o.require(g.window_size() >= 50, "fewer than 50 points");
  o.note << g.window_size() << " orbit points";
}

void delzant_reduction(Outcome& o) {
  o.require(delzant_lift(spaces::preset("cp2")).kernel == std::vector<IntVector>{make_vector({1, 1, 1})}, "cp2 kernel");
  std::mt19937_64 rng(1008);
  std::size_t lifted = 0;
  for (const auto& name : preset_names()) {
    auto P = spaces::preset(name);
    if (!P.normals_span()) continue;
    auto L = delzant_lift(P);
    for (int t = 0; t < 50; ++t, ++lifted) {
      Point x = random_interior(P, rng);
      o.require(invariants(P, x).same_class(invariants_of_values(L(x))), name + " lift at " + to_string(x));
    }
  }
  auto R = reduce(spaces::preset("c2_x_ts1"), AffineSlice::from_equations({make_vector({1, 1, 0})}, {Scalar(1)}));
  auto m = integral_affine_match(R.reduced, spaces::preset("ts1_x_s2"), true);
  o.require(m.has_value(), "reduced slice does not match T*S1 x S2");
  // the plane x1 + x2 = 1 cuts out a strip of width 1, the preset has width 2
  auto R2 = reduce(spaces::preset("c2_x_ts1"), AffineSlice::from_equations({make_vector({1, 1, 0})}, {Scalar(2)}));
  o.require(integral_affine_match(R2.reduced, spaces::preset("ts1_x_s2")).has_value(), "x1 + x2 = 2 slice is not exactly the preset");
  std::size_t probes = 0;
  for (const auto& name : preset_names()) {
    auto P = spaces::preset(name);
    for (int t = 0; t < 10; ++t) {
      Point x = random_interior(P, rng, 2, 6);
      for (const auto& s : enumerate(P, x, P.dim() == 3 ? 1 : 2)) {
        ++probes;
        auto I = reduce(P, AffineSlice::make(x, {s.direction})).reduced;
        bool ok = I.size() == 2 && abs(I.normal(0)[0]) == 1 && I.normal(0)[0] == -I.normal(1)[0] &&
                  I.facet(0).offset + I.facet(1).offset == s.length;
        o.require(ok, name + " probe " + to_string(s.direction));
      }
    }
  }
  o.note << lifted << " lifted points, x1+x2=1 matches after scaling by " << (m ? m->scale.str() : "-") << ", x1+x2=2 matches exactly, " << probes << " probe slices";
}

// Vectors reachable from v by words of length <= radius in swap, T, T^-1.
std::set<std::pair<long, long>> ball(std::pair<long, long> v, int radius) {
  std::set<std::pair<long, long>> seen = {v};
  std::vector<std::pair<long, long>> layer = {v};
  for (int r = 0; r < radius; ++r) {
    std::vector<std::pair<long, long>> next;
    for (auto [a, b] : layer)
      for (auto w : {std::pair{b, a}, std::pair{a + b, b}, std::pair{a - b, b}})
        if (seen.insert(w).second) next.push_back(w);
    layer = std::move(next);
  }
  return seen;
}

void oracle_agreement(Outcome& o) {
  namespace ch = probekit::chekanov;
  std::mt19937_64 rng(1009);
  std::uniform_int_distribution<long> e(1, 10);
  int agree = 0, equivalent = 0, missed = 0;
  for (int t = 0; t < 100; ++t) {
    long a1 = e(rng), a2 = e(rng), b1 = e(rng), b2 = e(rng);
    if (a1 > a2) std::swap(a1, a2);
    if (b1 > b2) std::swap(b1, b2);
    bool lattice = ch::equivalent(V({1, 1 + a1, 1 + a2}), V({1, 1 + b1, 1 + b2}));
    bool words = ball({a1, a2}, 8).count({b1, b2}) > 0;
    equivalent += lattice;
    if (lattice == words) ++agree;
    else if (lattice) ++missed;
  }
  o.require(agree == 100, "decisions disagree");
  o.note << agree << "/100 agree (" << equivalent << " equivalent by lattice, " << missed << " of them beyond word length 8)";
}

void density(Outcome& o) {
  Scalar s = Scalar::sqrt(2);
  OrbitParams p;
  p.max_norm = 1;
  p.max_points = 500;
  p.window = box(3, 0, 6);
  auto g = explore(spaces::preset("cn:3").with_field(2), {1, 2, 1 + s}, p);
  auto pts = g.window_points();
  std::vector<std::array<double, 3>> num;
  for (const auto& x : pts) num.push_back({x[0].to_double(), x[1].to_double(), x[2].to_double()});
  double best = INFINITY;
  for (std::size_t i = 0; i < num.size(); ++i)
    for (std::size_t j = i + 1; j < num.size(); ++j) {
      double d = std::hypot(num[i][0] - num[j][0], num[i][1] - num[j][1], num[i][2] - num[j][2]);
      best = std::min(best, d);
    }
  o.require(pts.size() >= 50, "fewer than 50 points");
  o.require(best < 1e-2, "closest pair not within 1e-2");
  o.note << pts.size() << " points, closest pair " << best;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"involution laws", involution_laws},
      {"invariants constant along probe moves", invariants_along_moves},
      {"monotone S2xS2 orbits and monodromy", monotone_s2s2},
      {"CP2 orbits and the distinct pair", cp2},
      {"C x S2 orbit and infinite monodromy", c_x_s2},
      {"C2 x T*S1 and T*S1 x S2 orbits, monodromy family", c2ts1_ts1s2},
      {"Chekanov tori T(1,2,k)", chekanov_cn},
      {"Delzant lift and reduction", delzant_reduction},
      {"lattice decision vs GL(2,Z) word search", oracle_agreement},
      {"Q(sqrt2) density smoke test", density},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !o.pass;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << "  [" << o.note.str() << "] ("
              << std::fixed << std::setprecision(2) << secs << "s)\n"
              << std::defaultfloat;
  }
  return failures;
}
