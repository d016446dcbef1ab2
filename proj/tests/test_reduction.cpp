#include "doctest.h"

#include <random>

#include "probekit/errors.hpp"
#include "probekit/probe.hpp"
#include "probekit/reduction.hpp"
#include "support.hpp"

using namespace probekit;
using namespace probekit::testing;

TEST_CASE("admissible") {
  auto c2 = spaces::preset("cn:2");
  CHECK(admissible(c2, AffineSlice::make(V({1, 3}), {make_vector({1, -1})})).ok);
  auto diag = admissible(spaces::preset("s2s2_monotone"), AffineSlice::make(V({0, 0}), {make_vector({1, 1})}));
  CHECK_FALSE(diag.ok);
  bool vertex_fails = false;
  for (const auto& f : diag.faces) vertex_fails = vertex_fails || (f.active.size() == 2 && !f.pass);
  CHECK(vertex_fails);
  auto plane = AffineSlice::from_equations({make_vector({1, 1, 0})}, {Scalar(1)});
  CHECK(admissible(spaces::preset("c2_x_ts1"), plane).ok);
  CHECK_THROWS_AS(admissible(c2, AffineSlice::make(V({-1, -1}), {make_vector({1, -1})})), Error);
}

TEST_CASE("slices are saturated") {
  auto s = AffineSlice::make(V({0, 0, 0}), {make_vector({2, 0, 0}), make_vector({0, 1, 1})});
  CHECK(s.repaired);
  CHECK(s.dirs.size() == 2);
  std::vector<IntVector> want = {make_vector({1, 0, 0}), make_vector({0, 1, 1})};
  CHECK(lattice_basis(s.dirs, 3) == lattice_basis(want, 3));
  CHECK_FALSE(AffineSlice::make(V({0, 0}), {make_vector({1, -1})}).repaired);
}

TEST_CASE("reduce") {
  auto c2t = spaces::preset("c2_x_ts1");
  auto R = reduce(c2t, AffineSlice::from_equations({make_vector({1, 1, 0})}, {Scalar(1)}));
  CHECK(R.reduced.dim() == 2);
  CHECK(R.reduced.size() == 2);
  auto m = integral_affine_match(R.reduced, spaces::preset("ts1_x_s2"), true);
  REQUIRE(m.has_value());
  CHECK(m->scale == 2);
  auto R2 = reduce(c2t, AffineSlice::from_equations({make_vector({1, 1, 0})}, {Scalar(2)}));
  CHECK(integral_affine_match(R2.reduced, spaces::preset("ts1_x_s2")).has_value());

  auto c2 = spaces::preset("cn:2");
  auto I = reduce(c2, AffineSlice::make(V({1, 3}), {make_vector({1, -1})}));
  REQUIRE(I.reduced.dim() == 1);
  REQUIRE(I.reduced.size() == 2);
  CHECK(abs(I.reduced.normal(0)[0]) == 1);
  CHECK(I.reduced.normal(0)[0] == -I.reduced.normal(1)[0]);
  CHECK(I.reduced.facet(0).offset + I.reduced.facet(1).offset == 4);

  auto sq = spaces::preset("s2s2_monotone");
  auto J = reduce(sq, AffineSlice::make(V({0, 0}), {make_vector({0, 1})}));
  CHECK(J.reduced.size() == 2);
  CHECK(J.reduced.facet(0).offset == 1);
  CHECK(J.reduced.facet(1).offset == 1);
}

TEST_CASE("reduce errors") {
  auto sq = spaces::preset("s2s2_monotone");
  try {
    reduce(sq, AffineSlice::make(V({0, 0}), {make_vector({1, 1})}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAdmissible);
  }
  try {
    reduce(sq, AffineSlice::make(V({1, 0}), {make_vector({0, 1})}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SliceInsideFacet);
  }
}

TEST_CASE("reduced ell values embed into the original") {
  std::mt19937_64 rng(81);
  auto c2t = spaces::preset("c2_x_ts1");
  auto R = reduce(c2t, AffineSlice::from_equations({make_vector({1, 1, 0})}, {Scalar(1)}));
  for (int t = 0; t < 50; ++t) {
    Point y = random_interior(R.reduced, rng, 3, 8);
    auto up = ell(c2t, R.lift(y));
    auto down = ell(R.reduced, y);
    for (std::size_t i = 0; i < down.size(); ++i) CHECK(down[i] == up[R.facet_origin[i]]);
  }
}

TEST_CASE("every probe reduces to an interval of its length") {
  std::mt19937_64 rng(82);
  for (const auto& name : preset_names()) {
    auto P = spaces::preset(name);
    for (int t = 0; t < 10; ++t) {
      Point x = random_interior(P, rng, 2, 6);
      for (const auto& s : enumerate(P, x, P.dim() == 3 ? 1 : 2)) {
        auto R = reduce(P, AffineSlice::make(x, {s.direction}));
        REQUIRE(R.reduced.size() == 2);
        CHECK(abs(R.reduced.normal(0)[0]) == 1);
        CHECK(R.reduced.normal(0)[0] == -R.reduced.normal(1)[0]);
        CHECK(R.reduced.facet(0).offset + R.reduced.facet(1).offset == s.length);
      }
    }
  }
}

TEST_CASE("delzant_lift") {
  CHECK(delzant_lift(spaces::preset("cp2")).kernel == std::vector<IntVector>{make_vector({1, 1, 1})});
  CHECK(delzant_lift(spaces::preset("c_x_s2")).kernel == std::vector<IntVector>{make_vector({0, 1, 1})});
  try {
    delzant_lift(spaces::preset("ts1_x_s2"));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NormalsDoNotSpan);
  }
}

TEST_CASE("lift preserves invariants and matches boundary data") {
  std::mt19937_64 rng(83);
  for (const auto& name : preset_names()) {
    auto P = spaces::preset(name);
    if (!P.normals_span()) continue;
    auto L = delzant_lift(P);
    CHECK(lattice_basis(L.kernel, P.size()) == lattice_basis(boundary_data(P).h2, P.size()));
    for (int t = 0; t < 50; ++t) {
      Point x = random_interior(P, rng);
      CHECK(invariants(P, x).same_class(invariants_of_values(L(x))));
    }
  }
}
