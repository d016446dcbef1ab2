#include "doctest.h"

#include <random>

#include "probekit/errors.hpp"
#include "probekit/probe.hpp"
#include "support.hpp"

using namespace probekit;
using namespace probekit::testing;

namespace {
ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::ParseError;
}
}  // namespace

TEST_CASE("shoot") {
  auto c2 = spaces::preset("cn:2");
  auto s = shoot(c2, V({1, 3}), make_vector({1, -1}));
  CHECK(s.direction == make_vector({1, -1}));
  CHECK(s.entry == 0);
  CHECK(s.exit == 1);
  CHECK(s.entry_point == V({0, 4}));
  CHECK(s.exit_point() == V({4, 0}));
  CHECK(s.length == 4);
  // reversing v swaps the roles of the two facets, the segment is the same
  auto r = shoot(c2, V({1, 3}), make_vector({-1, 1}));
  CHECK(r.entry == s.exit);
  CHECK(r.exit == s.entry);
  CHECK(r.entry_point == s.exit_point());
  CHECK(involution(r) == involution(s));

  CHECK(kind_of([] { shoot(spaces::preset("s2s2_monotone"), V({0, 0}), make_vector({1, 1})); }) == ErrorKind::HitsLowerFace);

  auto c3 = spaces::preset("cn:3");
  auto t = shoot(c3, V({1, 2, 3}), make_vector({1, 1, -1}));
  CHECK(t.entry == 0);
  CHECK(t.exit == 2);
  CHECK(t.entry_point == V({0, 1, 4}));
  CHECK(t.exit_point() == V({4, 5, 0}));
  CHECK(t.length == 4);

  CHECK(kind_of([&] { shoot(c2, V({1, 1}), make_vector({1, 0})); }) == ErrorKind::UnboundedRay);
  CHECK(kind_of([&] { shoot(c2, V({1, 1}), make_vector({1, -2})); }) == ErrorKind::NotTransverse);
  CHECK(kind_of([&] { shoot(c2, V({1, 1}), make_vector({2, -2})); }) == ErrorKind::NotPrimitive);
  CHECK(kind_of([&] { shoot(c2, V({-1, 1}), make_vector({1, -1})); }) == ErrorKind::NotInterior);
}

TEST_CASE("partner") {
  auto c2 = spaces::preset("cn:2");
  auto s = shoot(c2, V({1, 3}), make_vector({1, -1}));
  CHECK(partner(s, V({1, 3})) == V({3, 1}));
  CHECK(partner(s, V({2, 2})) == V({2, 2}));
  auto c3 = spaces::preset("cn:3");
  auto t = shoot(c3, V({1, 2, 3}), make_vector({1, 1, -1}));
  CHECK(partner(t, V({1, 2, 3})) == V({3, 4, 1}));
  CHECK(kind_of([&] { position(s, V({1, 1})); }) == ErrorKind::NotOnProbe);
}

TEST_CASE("involution matrices") {
  auto sq = spaces::preset("s2s2_monotone");
  CHECK(involution(shoot(sq, V({0, 0}), make_vector({1, 0}))) == IntMatrix{{-1, 0}, {0, 1}});
  CHECK(involution(shoot(sq, {q(1, 3), q(1, 3)}, make_vector({1, -1}))) == IntMatrix{{0, 1}, {1, 0}});
  auto cs = spaces::preset("c_x_s2");
  CHECK(involution(shoot(cs, V({1, 0}), make_vector({-1, 1}))) == IntMatrix{{1, 0}, {2, -1}});
}

TEST_CASE("enumerate") {
  auto sq = spaces::preset("s2s2_monotone");
  auto e = enumerate(sq, V({0, 0}), 1);
  REQUIRE(e.size() == 2);
  CHECK(e[0].direction == make_vector({0, 1}));
  CHECK(e[1].direction == make_vector({1, 0}));
  auto ts = enumerate(spaces::preset("ts1_x_s2"), {0, q(1, 2)}, 3);
  CHECK(ts.size() == 7);
  for (const auto& s : ts) CHECK(abs(s.direction[1]) == 1);
  auto c2 = enumerate(spaces::preset("cn:2"), V({1, 1}), 1);
  REQUIRE(c2.size() == 1);
  CHECK(c2[0].direction == make_vector({1, -1}));
}

TEST_CASE("probe laws over all presets") {
  std::mt19937_64 rng(41);
  std::size_t checked = 0;
  for (const auto& name : preset_names()) {
    auto P = spaces::preset(name);
    for (int t = 0; t < 40; ++t) {
      Point x = random_interior(P, rng, 3, 10);
      for (const auto& s : enumerate(P, x, P.dim() == 3 ? 1 : 3)) {
        ++checked;
        IntMatrix phi = involution(s);
        CHECK(phi * phi == IntMatrix::identity(P.dim()));
        CHECK(det(phi) == -1);
        CHECK(dot(s.direction, s.entry_normal) == 1);
        CHECK(dot(s.direction, s.exit_normal) == -1);
        CHECK(phi * s.entry_normal == s.exit_normal);
        CHECK(phi * s.exit_normal == s.entry_normal);
        for (const auto& a : kernel_lattice(IntMatrix::from_rows({s.direction}, P.dim()))) CHECK(phi * a == a);
        Point y = partner(s, x);
        CHECK(partner(s, y) == x);
        CHECK(shoot(P, y, s.direction) == s);
        if (P.normals_span()) CHECK(invariants(P, x).same_class(invariants(P, y)));
      }
    }
  }
  CHECK(checked >= 1000);
}

TEST_CASE("canonical directions") {
  auto d = canonical_directions(2, 1);
  CHECK(d.size() == 4);
  for (const auto& v : canonical_directions(3, 2)) {
    CHECK(content(v) == 1);
    std::size_t j = 0;
    while (v[j] == 0) ++j;
    CHECK(v[j] > 0);
  }
}
