#include "mks/fraction.hpp"

namespace mks {

Fraction::Fraction(mpz_class n, mpz_class d) {
  if (d == 0) throw std::invalid_argument("fraction: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  mpz_class g = gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = std::move(n);
  den_ = std::move(d);
}

mpz_class Fraction::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  return q;
}

mpz_class Fraction::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  return q;
}

Fraction Fraction::frac() const {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  return Fraction(r, den_);
}

Fraction Fraction::reciprocal() const {
  if (num_ == 0) throw std::invalid_argument("fraction: reciprocal of zero");
  return Fraction(den_, num_);
}

Fraction operator+(const Fraction& a, const Fraction& b) {
  return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Fraction operator-(const Fraction& a, const Fraction& b) {
  return Fraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Fraction operator*(const Fraction& a, const Fraction& b) {
  return Fraction(a.num_ * b.num_, a.den_ * b.den_);
}

Fraction operator/(const Fraction& a, const Fraction& b) {
  if (b.num_ == 0) throw std::invalid_argument("fraction: division by zero");
  return Fraction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string Fraction::str() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

Fraction reduce(const mpz_class& num, const mpz_class& den) { return Fraction(num, den); }

Fraction mediant(const Fraction& a, const Fraction& b) {
  return Fraction(a.num() + b.num(), a.den() + b.den());
}

}  // namespace mks
