#pragma once

#include <string>
#include <variant>
#include <vector>

#include "probekit/scalar.hpp"

// Product tori T(a) in C^N, a in the open orthant.
namespace probekit::chekanov {

struct ReducedVector {
  Scalar d;
  std::size_t mult = 0;
  std::vector<Scalar> entries;  // sorted excesses a_i - d, zeros dropped
};

ReducedVector reduce(const std::vector<Scalar>& a);
bool equivalent(const std::vector<Scalar>& a, const std::vector<Scalar>& b);

// g > 0 with entries = g * k for a primitive integer vector k.
Scalar integral_affine_length(const std::vector<Scalar>& entries);

// Indices are 0-based.
struct Swap {
  std::size_t i = 0, j = 0;
  friend bool operator==(const Swap&, const Swap&) = default;
};
// (a_i, a_j, a_k) -> (a_k, a_j + a_k - a_i, a_i), defined when a_i < a_j.
// Realized by the probe along e_i + e_j - e_k; applying it twice is the identity.
struct Elswap {
  std::size_t i = 0, j = 0, k = 0;
  friend bool operator==(const Elswap&, const Elswap&) = default;
};
using Move = std::variant<Swap, Elswap>;
using ProbeWord = std::vector<Move>;

std::string to_string(const Move& m);

// Limits for the orbit search used when Gamma has rank >= 2.
struct WordSearch {
  std::size_t max_points = 4000;
  std::size_t max_depth = 24;
};

ProbeWord probe_word(const std::vector<Scalar>& a, const std::vector<Scalar>& b, const WordSearch& search = {});

// Applies the moves and checks each one against the actual probe partner in
// the orthant. Throws PreconditionViolated naming the offending move.
std::vector<Scalar> replay(const std::vector<Scalar>& a, const ProbeWord& word);

}  // namespace probekit::chekanov
