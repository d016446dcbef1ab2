#include "doctest.h"

#include <algorithm>

#include "probekit/errors.hpp"
#include "probekit/monodromy.hpp"
#include "support.hpp"

using namespace probekit;
using namespace probekit::testing;
using spaces::PresetId;

namespace {
std::vector<Point> sorted(std::vector<Point> v) {
  std::sort(v.begin(), v.end());
  return v;
}
}  // namespace

TEST_CASE("presets") {
  auto sq = spaces::preset("s2s2_monotone");
  CHECK(sq.size() == 4);
  for (const auto& f : sq.facets()) CHECK(f.offset == 1);
  auto cp2 = spaces::preset("cp2");
  CHECK(cp2.normal(0) == make_vector({1, 0}));
  CHECK(cp2.normal(1) == make_vector({0, 1}));
  CHECK(cp2.normal(2) == make_vector({-1, -1}));
  auto cs = spaces::preset("c_x_s2");
  CHECK(cs.normal(0) == make_vector({1, 0}));
  CHECK(cs.normal(1) == make_vector({0, 1}));
  CHECK(cs.normal(2) == make_vector({0, -1}));
  CHECK_THROWS_AS(spaces::preset("hirzebruch"), Error);
  CHECK_THROWS_AS(spaces::preset("cn:0"), Error);
  for (const auto& name : preset_names()) CHECK(PresetId::parse(name).name() == name);
  CHECK(spaces::preset_list().size() == 6);
}

TEST_CASE("oracle orbits") {
  auto sq = PresetId::parse("s2s2_monotone");
  CHECK(spaces::oracle_orbit(sq, {q(1, 5), q(1, 2)}).size() == 8);
  CHECK(spaces::oracle_orbit(sq, {q(1, 2), q(1, 2)}).size() == 4);
  CHECK(spaces::oracle_orbit(sq, {0, q(1, 2)}).size() == 4);
  CHECK(spaces::oracle_orbit(sq, V({0, 0})).size() == 1);

  Window w{V({-1, -1}), V({6, 1})};
  std::vector<Point> want;
  for (long n = 0; n <= 5; ++n)
    for (int s : {1, -1}) want.push_back({q(2 * n + 1, 2), s * q(1, 2)});
  CHECK(sorted(spaces::oracle_orbit(PresetId::parse("c_x_s2"), {q(1, 2), q(1, 2)}, w)) == sorted(want));
  CHECK(spaces::oracle_orbit(PresetId::parse("ts1_x_s2"), {0, q(1, 2)}, Window{V({-3, -1}), V({3, 1})}).size() == 14);
  CHECK_THROWS_AS(spaces::oracle_orbit(PresetId::parse("ts1_x_s2"), {0, q(1, 2)}), Error);
}

TEST_CASE("oracle monodromy") {
  auto g = spaces::oracle_monodromy(PresetId::parse("s2s2_monotone"), V({0, 0}));
  CHECK(g.form == spaces::OracleGroup::Form::Finite);
  CHECK(g.elements.size() == 4);
  auto t = spaces::oracle_monodromy(PresetId::parse("ts1_x_s2"), {q(1, 3), 0});
  CHECK(t.infinite());
  CHECK(t.contains(IntMatrix{{1, 0}, {4, -1}}));
  CHECK_FALSE(t.contains(IntMatrix{{1, 0}, {3, 1}}));
  auto c = spaces::oracle_monodromy(PresetId::parse("c2_x_ts1"), V({1, 1, 0}));
  CHECK(c.infinite());
  CHECK(c.contains(IntMatrix{{1, 0, 2}, {0, 1, -2}, {0, 0, 1}}));
  CHECK(c.contains(IntMatrix{{0, 1, -1}, {1, 0, 1}, {0, 0, 1}}));
}

TEST_CASE("engine agrees with oracles on compact presets") {
  for (const std::string name : {"s2s2_monotone", "cp2"}) {
    auto id = PresetId::parse(name);
    auto P = spaces::preset(id);
    for (const Point& x : {Point{q(1, 5), q(1, 2)}, Point{q(-1, 3), q(1, 4)}, Point{0, 0}, Point{q(1, 2), q(1, 2)}, Point{q(-1, 2), q(-1, 5)}}) {
      if (!P.is_interior(x)) continue;
      OrbitParams p;
      auto g = explore(P, x, p);
      CHECK(sorted(g.window_points()) == sorted(spaces::oracle_orbit(id, x)));
      auto H = holonomy_group(g, x, 100);
      auto O = spaces::oracle_monodromy(id, x);
      REQUIRE(O.form == spaces::OracleGroup::Form::Finite);
      CHECK(H.elements == O.elements);
    }
  }
}

TEST_CASE("engine agrees with oracles on open presets") {
  auto id = PresetId::parse("c2_x_ts1");
  Window w{V({0, 0, -5}), V({6, 6, 5})};
  OrbitParams p;
  p.window = w;
  auto g = explore(spaces::preset(id), V({1, 2, 0}), p);
  CHECK(sorted(g.window_points()) == sorted(spaces::oracle_orbit(id, V({1, 2, 0}), w)));
}

TEST_CASE("H1 constraints recover the oracle groups") {
  auto c = PresetId::parse("c2_x_ts1");
  auto found = spaces::h1_search(c, V({1, 1, 0}), V({1, 1, 0}), 5);
  auto sample = spaces::oracle_monodromy(c, V({1, 1, 0})).sample(5);
  std::sort(found.begin(), found.end());
  std::sort(sample.begin(), sample.end());
  CHECK(found == sample);
  auto t = PresetId::parse("ts1_x_s2");
  auto f2 = spaces::h1_search(t, {q(1, 3), 0}, {q(1, 3), 0}, 5);
  auto s2 = spaces::oracle_monodromy(t, {q(1, 3), 0}).sample(2);
  std::sort(f2.begin(), f2.end());
  std::sort(s2.begin(), s2.end());
  CHECK(f2 == s2);
}
