#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace stemlie {

// Arbitrary-precision rational, stored in lowest terms with positive
// denominator (mpq_class canonical form).
using Rational = mpq_class;

Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& q);

// mpq_class construction from a numerator/denominator pair does not reduce;
// this always returns canonical form.
inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Element of the field K = Q(i, sqrt2), written uniquely as
//   a + b*i + c*sqrt2 + d*i*sqrt2
// with rational coordinates. K contains every scalar produced by the
// quarter-turn rotations used in this library: fourth roots of unity,
// cos(pi/4) = sqrt2/2, and all eighth roots of unity.
struct KScalar {
  Rational a, b, c, d;

  KScalar() : a(0), b(0), c(0), d(0) {}
  KScalar(long v) : a(v), b(0), c(0), d(0) {}
  KScalar(const Rational& ra) : a(ra), b(0), c(0), d(0) {}
  KScalar(Rational ra, Rational rb, Rational rc, Rational rd)
      : a(std::move(ra)), b(std::move(rb)), c(std::move(rc)), d(std::move(rd)) {}

  static KScalar zero() { return KScalar(); }
  static KScalar one() { return KScalar(1); }
  static KScalar i() { return KScalar(Rational(0), Rational(1), Rational(0), Rational(0)); }
  static KScalar sqrt2() { return KScalar(Rational(0), Rational(0), Rational(1), Rational(0)); }
  static KScalar half_sqrt2() { return KScalar(Rational(0), Rational(0), Rational(1, 2), Rational(0)); }
  // exp(i*pi*k/4), k taken mod 8.
  static KScalar eighth_root(long k);

  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  bool operator==(const KScalar& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  bool operator!=(const KScalar& o) const { return !(*this == o); }

  KScalar operator+(const KScalar& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  KScalar operator-(const KScalar& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
  KScalar operator-() const { return {-a, -b, -c, -d}; }
  KScalar operator*(const KScalar& o) const;
  KScalar operator/(const KScalar& o) const { return *this * o.inverse(); }
  KScalar& operator+=(const KScalar& o);
  KScalar& operator-=(const KScalar& o);
  KScalar& operator*=(const KScalar& o) { *this = *this * o; return *this; }

  // Complex conjugation: i -> -i, sqrt2 fixed.
  KScalar conj() const { return {a, -b, c, -d}; }
  // The other generator of the Galois group: sqrt2 -> -sqrt2, i fixed.
  KScalar conj_sqrt2() const { return {a, b, -c, -d}; }

  // Exact inverse, rationalizing over Q(sqrt2) and then over Q.
  // Throws std::domain_error on zero.
  KScalar inverse() const;

  // x * conj(x) * conj_sqrt2(x * conj(x)) as a rational; nonzero iff x != 0.
  Rational galois_norm() const;

  std::string to_string() const;
};

inline KScalar operator*(long n, const KScalar& x) { return KScalar(n) * x; }

} // namespace stemlie
