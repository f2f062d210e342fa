#include "stemlie/kscalar.hpp"

namespace stemlie {

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

KScalar KScalar::eighth_root(long k) {
  k %= 8;
  if (k < 0) k += 8;
  const Rational h(1, 2);
  switch (k) {
    case 0: return one();
    case 1: return {Rational(0), Rational(0), h, h};
    case 2: return i();
    case 3: return {Rational(0), Rational(0), -h, h};
    case 4: return KScalar(-1);
    case 5: return {Rational(0), Rational(0), -h, -h};
    case 6: return -i();
    default: return {Rational(0), Rational(0), h, -h};
  }
}

KScalar KScalar::operator*(const KScalar& o) const {
  // (a + bi + c r + d ir)(a' + b'i + c'r + d'ir), r = sqrt2, r^2 = 2.
  return {a * o.a - b * o.b + 2 * (c * o.c - d * o.d),
          a * o.b + b * o.a + 2 * (c * o.d + d * o.c),
          a * o.c + c * o.a - b * o.d - d * o.b,
          a * o.d + d * o.a + b * o.c + c * o.b};
}

KScalar& KScalar::operator+=(const KScalar& o) {
  a += o.a; b += o.b; c += o.c; d += o.d;
  return *this;
}

KScalar& KScalar::operator-=(const KScalar& o) {
  a -= o.a; b -= o.b; c -= o.c; d -= o.d;
  return *this;
}

KScalar KScalar::inverse() const {
  if (is_zero()) throw std::domain_error("KScalar: division by zero");
  // z = x * conj(x) lies in Q(sqrt2); w = z * conj_sqrt2(z) lies in Q.
  const KScalar z = *this * conj();
  const KScalar zbar = z.conj_sqrt2();
  const KScalar w = z * zbar; // rational, w = w.a
  const Rational inv_w = Rational(1) / w.a;
  KScalar result = conj() * zbar;
  result.a *= inv_w; result.b *= inv_w; result.c *= inv_w; result.d *= inv_w;
  return result;
}

Rational KScalar::galois_norm() const {
  const KScalar z = *this * conj();
  return (z * z.conj_sqrt2()).a;
}

std::string KScalar::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  auto term = [&s](const Rational& q, const char* symbol) {
    if (q == 0) return;
    if (!s.empty() && q > 0) s += "+";
    if (q == -1 && symbol[0] != '\0') s += "-";
    else if (!(q == 1 && symbol[0] != '\0')) s += q.get_str();
    s += symbol;
  };
  term(a, "");
  term(b, "i");
  term(c, "s2");
  term(d, "is2");
  return s;
}

} // namespace stemlie
