#include "doctest.h"

#include <random>

#include "probekit/errors.hpp"
#include "probekit/scalar.hpp"

using namespace probekit;

TEST_CASE("canonical text") {
  CHECK(Scalar(Rat(6, -4)).str() == "-3/2");
  CHECK(Scalar::sqrt(2).str() == "0+1√2");
  CHECK((Scalar(1) - Scalar(Rat(1, 2)) * Scalar::sqrt(3)).str() == "1-1/2√3");
  CHECK((Scalar::sqrt(2) * Scalar::sqrt(2)) == Scalar(2));
  CHECK((Scalar::sqrt(2) * Scalar::sqrt(2)).disc() == 1);
}

TEST_CASE("mixed fields are rejected") {
  CHECK_THROWS_AS(Scalar::sqrt(2) + Scalar::sqrt(3), Error);
  CHECK_THROWS_AS(Scalar::sqrt(4), Error);
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), Error);
}

TEST_CASE("field laws and order on random samples") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 9);
  const std::int64_t Ds[] = {2, 3, 5, 7};
  auto draw = [&](std::int64_t D) { return Scalar(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)), D); };
  for (int t = 0; t < 1000; ++t) {
    std::int64_t D = Ds[t % 4];
    Scalar a = draw(D), b = draw(D);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
    int cmp = (a < b) + (a == b) + (a > b);
    CHECK(cmp == 1);
    // independent numeric evaluation
    mpf_class r(0, 512), s(0, 512);
    r = mpf_class(a.rat(), 512);
    s = sqrt(mpf_class(D, 512));
    mpf_class ref = r + mpf_class(a.quad(), 512) * s;
    int ns = sgn(ref);
    CHECK(a.sign() == ns);
  }
}
