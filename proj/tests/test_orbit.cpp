#include "doctest.h"

#include <algorithm>
#include <random>

#include "probekit/errors.hpp"
#include "probekit/verdict.hpp"
#include "support.hpp"

using namespace probekit;
using namespace probekit::testing;

namespace {
std::vector<Point> sorted(std::vector<Point> v) {
  std::sort(v.begin(), v.end());
  return v;
}
}  // namespace

TEST_CASE("explore: strip") {
  OrbitParams p;
  p.max_norm = 3;
  p.window = Window{{-3, -1}, {3, 1}};
  auto g = explore(spaces::preset("ts1_x_s2"), {0, q(1, 2)}, p);
  std::vector<Point> want;
  for (long k = -3; k <= 3; ++k) {
    want.push_back({k, q(1, 2)});
    want.push_back({k, q(-1, 2)});
  }
  CHECK(sorted(g.window_points()) == sorted(want));
  CHECK(g.window_size() == 14);
}

TEST_CASE("explore: monotone S2xS2") {
  OrbitParams p;
  p.max_norm = 2;
  auto g = explore(spaces::preset("s2s2_monotone"), {q(1, 5), q(1, 2)}, p);
  std::vector<Point> want;
  for (int a : {1, -1})
    for (int b : {1, -1}) {
      want.push_back({a * q(1, 5), b * q(1, 2)});
      want.push_back({a * q(1, 2), b * q(1, 5)});
    }
  CHECK(sorted(g.window_points()) == sorted(want));
}

TEST_CASE("explore: C^3 accumulation") {
  OrbitParams p;
  p.max_norm = 1;
  p.max_points = 200;
  p.window = Window{V({0, 0, 0}), V({10, 10, 10})};
  auto g = explore(spaces::preset("cn:3"), V({1, 2, 3}), p);
  CHECK(g.window_size() >= 50);
  for (long k = 3; k <= 10; ++k) {
    bool hit = false;
    for (const auto& x : g.window_points()) {
      auto s = x;
      std::sort(s.begin(), s.end());
      auto want = V({1, 2, k});
      std::sort(want.begin(), want.end());
      hit = hit || s == want;
    }
    CHECK_MESSAGE(hit, "k = " << k);
  }
}

TEST_CASE("explore is deterministic and invariant along moves") {
  std::mt19937_64 rng(51);
  for (const auto& name : preset_names()) {
    auto P = spaces::preset(name);
    if (!P.normals_span()) continue;
    for (int t = 0; t < 4; ++t) {
      Point x = random_interior(P, rng, 2, 6);
      OrbitParams p;
      p.max_norm = 1;
      p.max_points = 80;
      Window w;
      for (std::size_t i = 0; i < P.dim(); ++i) {
        w.lo.emplace_back(-4);
        w.hi.emplace_back(6);
      }
      p.window = w;
      auto g = explore(P, x, p);
      auto h = explore(P, x, p);
      REQUIRE(g.nodes.size() == h.nodes.size());
      for (std::size_t i = 0; i < g.nodes.size(); ++i) CHECK(g.nodes[i].point == h.nodes[i].point);
      auto inv = invariants(P, x);
      for (const auto& n : g.nodes) CHECK(invariants(P, n.point).same_class(inv));
      for (std::size_t i = 0; i < g.nodes.size(); ++i) CHECK(replay_path(P, x, g.path_to(i)) == g.nodes[i].point);
    }
  }
}

TEST_CASE("decide") {
  OrbitParams p;
  auto cp2 = spaces::preset("cp2");
  auto v = decide(cp2, {q(-1, 2), q(-1, 5)}, {q(-1, 2), q(1, 10)}, p);
  CHECK(v.kind == Verdict::Kind::Distinct);
  CHECK(v.reason == "ambient");
  CHECK(v.from.same_class(v.to));

  auto c2 = spaces::preset("cn:2");
  auto w = decide(c2, V({1, 3}), V({3, 1}), p);
  CHECK(w.kind == Verdict::Kind::Equivalent);
  CHECK(w.path.size() == 1);
  CHECK(replay_path(c2, V({1, 3}), w.path) == V({3, 1}));

  auto u = decide(spaces::preset("s2s2_monotone"), {q(1, 5), q(1, 2)}, {q(3, 10), q(1, 2)}, p);
  CHECK(u.kind == Verdict::Kind::Distinct);

  auto d = decide(c2, V({1, 3}), V({1, 4}), p);
  CHECK(d.kind == Verdict::Kind::Distinct);
  CHECK(d.reason == "gamma");
}

TEST_CASE("connect finds replayable paths") {
  auto c3 = spaces::preset("cn:3");
  OrbitParams p;
  p.max_norm = 1;
  p.max_points = 400;
  p.window = Window{V({0, 0, 0}), V({12, 12, 12})};
  auto path = connect(c3, V({1, 2, 3}), V({1, 2, 7}), p);
  REQUIRE(path.has_value());
  CHECK(replay_path(c3, V({1, 2, 3}), *path) == V({1, 2, 7}));
}
