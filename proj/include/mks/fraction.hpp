#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mks {

// Raised when a runtime assumption of the engine fails (as opposed to bad
// user input, which throws std::invalid_argument).
struct internal_error : std::runtime_error {
  explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

// Exact rational number in lowest terms, denominator always positive.
// All arithmetic is arbitrary precision; there is no floating-point path.
class Fraction {
 public:
  Fraction() : num_(0), den_(1) {}
  Fraction(long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Fraction(mpz_class n) : num_(std::move(n)), den_(1) {}
  Fraction(mpz_class n, mpz_class d);

  const mpz_class& num() const { return num_; }
  const mpz_class& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return sgn(num_); }

  mpz_class floor() const;
  mpz_class ceil() const;
  Fraction abs() const { return num_ < 0 ? Fraction(-num_, den_) : *this; }
  Fraction frac() const;  // *this - floor(*this), in [0,1)
  Fraction reciprocal() const;

  Fraction operator-() const { return Fraction(-num_, den_); }

  friend Fraction operator+(const Fraction& a, const Fraction& b);
  friend Fraction operator-(const Fraction& a, const Fraction& b);
  friend Fraction operator*(const Fraction& a, const Fraction& b);
  friend Fraction operator/(const Fraction& a, const Fraction& b);

  Fraction& operator+=(const Fraction& b) { return *this = *this + b; }
  Fraction& operator-=(const Fraction& b) { return *this = *this - b; }
  Fraction& operator*=(const Fraction& b) { return *this = *this * b; }
  Fraction& operator/=(const Fraction& b) { return *this = *this / b; }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }
  friend bool operator<(const Fraction& a, const Fraction& b) {
    return mpz_class(a.num_ * b.den_) < mpz_class(b.num_ * a.den_);
  }
  friend bool operator>(const Fraction& a, const Fraction& b) { return b < a; }
  friend bool operator<=(const Fraction& a, const Fraction& b) { return !(b < a); }
  friend bool operator>=(const Fraction& a, const Fraction& b) { return !(a < b); }

  // "p/q", or just "p" when the value is an integer.
  std::string str() const;

  double to_double() const { return mpq_class(num_, den_).get_d(); }

 private:
  mpz_class num_;
  mpz_class den_;
};

// Lowest terms with positive denominator; the sign is carried by the
// numerator. Zero denominator is an input error.
Fraction reduce(const mpz_class& num, const mpz_class& den);

// (a+c)/(b+d); already reduced when the arguments are Farey neighbors.
Fraction mediant(const Fraction& a, const Fraction& b);

}  // namespace mks
