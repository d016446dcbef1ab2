#include "probekit/scalar.hpp"

#include <cmath>

#include "probekit/errors.hpp"

namespace probekit {

bool is_squarefree(std::int64_t D) {
  if (D < 1) return false;
  for (std::int64_t p = 2; p * p <= D; ++p)
    if (D % (p * p) == 0) return false;
  return true;
}

Scalar::Scalar(const Rat& rat, const Rat& quad, std::int64_t D) : rat_(rat), quad_(quad), D_(D) {
  rat_.canonicalize();
  quad_.canonicalize();
  if (quad_ != 0 && (D < 2 || !is_squarefree(D)))
    fail(ErrorKind::FieldMismatch, "sqrt(" + std::to_string(D) + ") is not a square-free irrational");
  normalize();
}

void Scalar::normalize() {
  if (quad_ == 0) D_ = 1;
}

std::int64_t Scalar::common_field(const Scalar& a, const Scalar& b) {
  if (a.D_ == 1) return b.D_;
  if (b.D_ == 1 || a.D_ == b.D_) return a.D_;
  fail(ErrorKind::FieldMismatch, "cannot mix sqrt(" + std::to_string(a.D_) + ") and sqrt(" + std::to_string(b.D_) + ")");
}

int Scalar::sign() const {
  int a = sgn(rat_), b = sgn(quad_);
  if (b == 0) return a;
  if (a == 0 || a == b) return b;
  // opposite signs: compare rat^2 with quad^2 * D
  Rat lhs = rat_ * rat_;
  Rat rhs = quad_ * quad_ * D_;
  int c = cmp(lhs, rhs);  // never 0 since sqrt(D) is irrational
  return a > 0 ? c : -c;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.rat_ = -r.rat_;
  r.quad_ = -r.quad_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  D_ = common_field(*this, o);
  rat_ += o.rat_;
  quad_ += o.quad_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  D_ = common_field(*this, o);
  rat_ -= o.rat_;
  quad_ -= o.quad_;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  std::int64_t D = common_field(*this, o);
  Rat r = rat_ * o.rat_ + quad_ * o.quad_ * D;
  Rat q = rat_ * o.quad_ + quad_ * o.rat_;
  rat_ = r;
  quad_ = q;
  D_ = D;
  normalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of 0");
  Rat norm = rat_ * rat_ - quad_ * quad_ * D_;
  return Scalar(Rat(rat_ / norm), Rat(-quad_ / norm), D_);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_rational()) {
    if (o.rat_ == 0) fail(ErrorKind::DivisionByZero, "division by 0");
    rat_ /= o.rat_;
    quad_ /= o.rat_;
    normalize();
    return *this;
  }
  return *this *= o.inverse();
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

mpf_class Scalar::to_mpf(unsigned bits) const {
  mpf_class r(rat_, bits);
  if (quad_ != 0) {
    mpf_class root(0, bits);
    mpf_class d(static_cast<double>(D_), bits);
    mpf_sqrt(root.get_mpf_t(), d.get_mpf_t());
    r += mpf_class(quad_, bits) * root;
  }
  return r;
}

double Scalar::to_double() const {
  if (quad_ == 0) return rat_.get_d();
  return to_mpf(128).get_d();
}

Int Scalar::floor() const {
  Int k;
  if (quad_ == 0) {
    mpz_fdiv_q(k.get_mpz_t(), rat_.get_num_mpz_t(), rat_.get_den_mpz_t());
    return k;
  }
  mpf_class approx = to_mpf(256);
  mpf_floor(approx.get_mpf_t(), approx.get_mpf_t());
  k = Int(approx);
  while (Scalar(k) > *this) k -= 1;
  while (Scalar(Int(k + 1)) <= *this) k += 1;
  return k;
}

namespace {
std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}
}  // namespace

std::string Scalar::str() const {
  if (quad_ == 0) return rat_str(rat_);
  std::string s = rat_str(rat_);
  s += quad_ < 0 ? "-" : "+";
  s += rat_str(Rat(::abs(quad_)));
  s += "√" + std::to_string(D_);
  return s;
}

Scalar min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
Scalar max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

}  // namespace probekit
