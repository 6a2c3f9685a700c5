#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "polywork/errors.hpp"

namespace polywork {

using Int = mpz_class;

// Exact rational scalar. Always stored in lowest terms with a positive
// denominator; zero is 0/1. (mpq_class does not canonicalize on
// construction, so every constructor here does.)
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(const Int& n) : v_(n) {}
  Rational(const Int& num, const Int& den) : v_(num, den) {
    if (den == 0) throw InputError("rational with zero denominator");
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(Int(num), Int(den)) {}

  // Accepts "p", "-p", or "p/q".
  static Rational parse(const std::string& text);

  const Int& num() const { return v_.get_num(); }
  const Int& den() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(static_cast<mpq_class>(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }
  double to_double() const { return v_.get_d(); }
  std::string str() const;

  std::size_t hash() const;

private:
  explicit Rational(mpq_class q) : v_(std::move(q)) {}
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational abs(const Rational& r) { return r.abs(); }

}  // namespace polywork

template <>
struct std::hash<polywork::Rational> {
  std::size_t operator()(const polywork::Rational& r) const { return r.hash(); }
};
