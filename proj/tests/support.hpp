#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "probekit/spaces.hpp"

namespace probekit::testing {

inline std::vector<Scalar> V(std::initializer_list<long> xs) {
  std::vector<Scalar> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Scalar q(long p, long d) { return Scalar(Rat(p, d)); }

inline const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"cp2", "s2s2_monotone", "c_x_s2", "c2_x_ts1", "ts1_x_s2", "cn:2", "cn:3"};
  return names;
}

inline bool is_reduction_type(const std::string& name) { return spaces::preset(name).normals_span(); }

// Rational point in [-r, r]^n with denominators up to `den`, resampled until
// it lands in the interior. Presets all meet the box [-1, 1]^n or [0, r]^n.
inline Point random_interior(const Polytope& P, std::mt19937_64& rng, long r = 4, long den = 12) {
  std::uniform_int_distribution<long> dd(1, den);
  for (;;) {
    Point x;
    for (std::size_t i = 0; i < P.dim(); ++i) {
      long d = dd(rng);
      std::uniform_int_distribution<long> nn(-r * d, r * d);
      x.emplace_back(Rat(nn(rng), d));
    }
    if (P.is_interior(x)) return x;
  }
}

}  // namespace probekit::testing
