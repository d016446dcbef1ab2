#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace probekit {

using Int = mpz_class;
using Rat = mpq_class;

// Element rat + quad*sqrt(D) of Q(sqrt D). A value with quad == 0 is stored
// with D = 1 so plain rationals mix freely with any field; two irrational
// values from different fields cannot be combined.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : rat_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Int& v) : rat_(v) {}  // NOLINT
  Scalar(const Rat& v) : rat_(v) { rat_.canonicalize(); }  // NOLINT
  Scalar(const Rat& rat, const Rat& quad, std::int64_t D);

  static Scalar sqrt(std::int64_t D) { return Scalar(Rat(0), Rat(1), D); }

  const Rat& rat() const { return rat_; }
  const Rat& quad() const { return quad_; }
  std::int64_t disc() const { return D_; }
  bool is_rational() const { return quad_ == 0; }
  bool is_zero() const { return rat_ == 0 && quad_ == 0; }

  int sign() const;
  Scalar abs() const { return sign() < 0 ? -*this : *this; }
  Scalar inverse() const;
  Int floor() const;
  double to_double() const;
  // Decimal expansion good to roughly `bits` binary digits.
  mpf_class to_mpf(unsigned bits) const;

  // Canonical text: "p", "p/q", or "<rat>+<c>√D" / "<rat>-<c>√D".
  std::string str() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.rat_ == b.rat_ && a.quad_ == b.quad_ && a.D_ == b.D_;
  }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  void normalize();
  static std::int64_t common_field(const Scalar& a, const Scalar& b);

  Rat rat_{0};
  Rat quad_{0};
  std::int64_t D_ = 1;
};

bool is_squarefree(std::int64_t D);
Scalar min(const Scalar& a, const Scalar& b);
Scalar max(const Scalar& a, const Scalar& b);

struct ScalarHash {
  std::size_t operator()(const Scalar& s) const { return std::hash<std::string>{}(s.str()); }
};

}  // namespace probekit
