#include "arcsect/rational.hpp"

#include <cmath>
#include <cstdlib>

namespace arcsect {

std::string rational_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<Rational> rational_parse(const std::string& s) {
  if (s.empty()) return std::nullopt;
  size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Rational q{Int(s)};
      return q;
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (num.empty() || den.empty()) return std::nullopt;
    Int n(num), d(den);
    if (d == 0) return std::nullopt;
    Rational q(n, d);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

Rational rational_pow(const Rational& q, long e) {
  if (e == 0) return Rational(1);
  bool inv = e < 0;
  unsigned long k = static_cast<unsigned long>(inv ? -e : e);
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), k);
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), k);
  r.canonicalize();
  if (inv) r = 1 / r;
  return r;
}

Rational rational_reconstruct(double x, long max_den) {
  // Standard continued-fraction convergents.
  bool neg = x < 0;
  double v = std::fabs(x);
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = v;
  for (int it = 0; it < 64; ++it) {
    double a_f = std::floor(frac);
    if (a_f > 9e17) break;
    long a = static_cast<long>(a_f);
    long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den || q2 < 0) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double rem = frac - a_f;
    if (rem < 1e-15 * std::max(1.0, v)) break;
    frac = 1.0 / rem;
  }
  if (q1 == 0) return Rational(0);
  Rational r(neg ? -p1 : p1, q1);
  r.canonicalize();
  return r;
}

Rational pow2_below(double x) {
  if (x <= 0) return Rational(0);
  Rational r(1);
  if (x >= 1) {
    while (to_double(2 * r) <= x) r *= 2;
  } else {
    while (to_double(r) > x) r /= 2;
  }
  return r;
}

}  // namespace arcsect
