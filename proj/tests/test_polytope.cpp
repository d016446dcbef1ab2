#include "doctest.h"

#include <algorithm>
#include <random>

#include "probekit/errors.hpp"
#include "probekit/polytope.hpp"
#include "support.hpp"

using namespace probekit;
using namespace probekit::testing;

TEST_CASE("ell") {
  auto cp2 = spaces::preset("cp2");
  CHECK(ell(cp2, {q(-1, 2), q(-1, 5)}) == std::vector<Scalar>{q(1, 2), q(4, 5), q(17, 10)});
  CHECK(ell(spaces::preset("cn:3"), V({1, 2, 3})) == V({1, 2, 3}));
  CHECK(ell(spaces::preset("s2s2_monotone"), V({0, 0})) == V({1, 1, 1, 1}));
}

TEST_CASE("invariants") {
  auto cp2 = spaces::preset("cp2");
  auto a = invariants(cp2, {q(-1, 2), q(-1, 5)});
  CHECK(a.d == q(1, 2));
  CHECK(a.count == 1);
  CHECK(a.gamma == std::vector<Scalar>{q(3, 10)});
  auto b = invariants(cp2, {q(-1, 2), q(1, 10)});
  CHECK(b.d == q(1, 2));
  CHECK(b.count == 1);
  CHECK(b.gamma == std::vector<Scalar>{q(3, 10)});
  CHECK(a.same_class(b));
  auto c = invariants(spaces::preset("cn:3"), V({1, 2, 3}));
  CHECK(c.d == 1);
  CHECK(c.count == 1);
  CHECK(c.gamma == V({1}));
  CHECK(c.reduced == V({1, 2}));
}

TEST_CASE("invariants properties") {
  std::mt19937_64 rng(31);
  for (const auto& name : preset_names()) {
    auto P = spaces::preset(name);
    for (int t = 0; t < 40; ++t) {
      Point x = random_interior(P, rng);
      auto l = ell(P, x);
      auto inv = invariants(P, x);
      CHECK(inv.d == *std::min_element(l.begin(), l.end()));
      CHECK(inv.count == std::size_t(std::count(l.begin(), l.end(), inv.d)));
      // facet order does not matter
      std::vector<Facet> fs = P.facets();
      std::reverse(fs.begin(), fs.end());
      Polytope R(P.dim(), fs, P.field());
      CHECK(invariants(R, x).gamma == inv.gamma);
    }
  }
}

TEST_CASE("gamma lattice in Q(sqrt 2)") {
  Scalar s = Scalar::sqrt(2);
  CHECK(gamma_lattice({s, Scalar(2)}) == gamma_lattice({Scalar(2) + s, Scalar(2)}));
  CHECK(gamma_lattice({s, Scalar(2)}) != gamma_lattice({Scalar(1), s}));
  CHECK(gamma_lattice({Scalar(2), Scalar(4), Scalar(6)}) == V({2}));
}

TEST_CASE("check_delzant") {
  CHECK(check_delzant(spaces::preset("cp2")).size() == 3);
  for (const auto& v : check_delzant(spaces::preset("cp2"))) CHECK(abs(v.det) == 1);
  Polytope bad(2, {{make_vector({1, 0}), 0}, {make_vector({0, 1}), 0}, {make_vector({-1, -2}), 2}});
  try {
    check_delzant(bad);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotDelzant);
  }
  auto rep = delzant_report(bad);
  REQUIRE(rep.violation);
  CHECK(rep.violation->facets == std::vector<std::size_t>{0, 2});
  CHECK(abs(rep.violation->det) == 2);
  CHECK(check_delzant(spaces::preset("ts1_x_s2")).empty());
  for (const auto& name : preset_names()) CHECK_NOTHROW(check_delzant(spaces::preset(name)));
  Polytope mutated(2, {{make_vector({1, 0}), 1}, {make_vector({0, 1}), 1}, {make_vector({-1, -2}), 1}});
  CHECK_THROWS_AS(check_delzant(mutated), Error);
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(Polytope(2, {{make_vector({2, 4}), 1}}), Error);
  CHECK_THROWS_AS(Polytope(2, {{make_vector({1, 0}), 1}, {make_vector({1, 0}), 1}}), Error);
  CHECK_THROWS_AS(Polytope(1, {{make_vector({1}), 0}, {make_vector({-1}), 0}}), Error);
  CHECK_THROWS_AS(Polytope(2, {{make_vector({1, 0, 0}), 1}}), Error);
}

TEST_CASE("apply_affine") {
  auto sq = spaces::preset("s2s2_monotone");
  auto same = apply_affine(sq, IntMatrix::identity(2), V({0, 0}));
  CHECK(same.facets().size() == sq.facets().size());
  for (std::size_t i = 0; i < sq.size(); ++i) {
    CHECK(same.normal(i) == sq.normal(i));
    CHECK(same.facet(i).offset == sq.facet(i).offset);
  }
  auto sw = apply_affine(sq, IntMatrix{{0, 1}, {1, 0}}, V({0, 0}));
  auto key = [](const Polytope& P) {
    std::vector<std::string> k;
    for (const auto& f : P.facets()) k.push_back(to_string(f.normal) + f.offset.str());
    std::sort(k.begin(), k.end());
    return k;
  };
  CHECK(key(sw) == key(sq));
  auto c2 = spaces::preset("cn:2");
  // M is row-major: x -> (x1 + x2, x2)
  IntMatrix M{{1, 1}, {0, 1}};
  auto img = apply_affine(c2, M, V({0, 0}));
  CHECK(img.normal(0) == make_vector({1, -1}));
  CHECK(img.normal(1) == make_vector({0, 1}));
  auto low = apply_affine(c2, M.transpose(), V({0, 0}));
  CHECK(low.normal(0) == make_vector({1, 0}));
  CHECK(low.normal(1) == make_vector({-1, 1}));
  std::mt19937_64 rng(32);
  for (const auto& name : preset_names()) {
    auto P = spaces::preset(name);
    IntMatrix A = IntMatrix::identity(P.dim());
    if (P.dim() >= 2) A(1, 0) = -2;
    Point t(P.dim(), q(1, 3));
    auto Q = apply_affine(P, A, t);
    for (int k = 0; k < 5; ++k) {
      Point x = random_interior(P, rng);
      CHECK(ell(P, x) == ell(Q, apply_affine(A, t, x)));
    }
  }
}

TEST_CASE("boundary_data") {
  auto b = boundary_data(spaces::preset("cp2"));
  CHECK(b.boundary == IntMatrix{{1, 0, -1}, {0, 1, -1}});
  CHECK(b.h2 == std::vector<IntVector>{make_vector({1, 1, 1})});
  CHECK(boundary_data(spaces::preset("cn:3")).h2.empty());
  auto s = boundary_data(spaces::preset("s2s2_monotone"));
  CHECK(lattice_basis(s.h2, 4) == lattice_basis({make_vector({1, 0, 1, 0}), make_vector({0, 1, 0, 1})}, 4));
  for (const auto& name : preset_names()) {
    auto bd = boundary_data(spaces::preset(name));
    for (const auto& r : bd.h2) CHECK(is_zero(bd.boundary * r));
  }
}

TEST_CASE("de_germ") {
  auto g = de_germ(spaces::preset("cp2"), {q(-1, 2), q(-1, 5)}, assume_displacement_energy);
  CHECK(g.d == q(1, 2));
  CHECK(g.active == std::vector<std::size_t>{0});
  auto h = de_germ(spaces::preset("s2s2_monotone"), V({0, 0}), assume_displacement_energy);
  CHECK(h.d == 1);
  CHECK(h.active == std::vector<std::size_t>{0, 1, 2, 3});
  auto k = de_germ(spaces::preset("c2_x_ts1"), V({2, 2, 5}), assume_displacement_energy);
  CHECK(k.d == 2);
  CHECK(k.active == std::vector<std::size_t>{0, 1});
  CHECK_THROWS_AS(de_germ(spaces::preset("cp2"), V({0, 0}), DisplacementEnergyAssumption{false}), Error);
}

TEST_CASE("integral_affine_match") {
  auto sq = spaces::preset("s2s2_monotone");
  auto moved = apply_affine(sq, IntMatrix{{1, 1}, {0, 1}}, V({3, -2}));
  CHECK(integral_affine_match(sq, moved).has_value());
  CHECK_FALSE(integral_affine_match(sq, spaces::preset("cp2")).has_value());
}
