#ifndef ARCSECT_RATIONAL_HPP
#define ARCSECT_RATIONAL_HPP

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

namespace arcsect {

// Arbitrary-precision integers and rationals.  mpq_class keeps the invariants
// we need (canonical form: denominator > 0, gcd(num, den) = 1).
using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// "p/q" with "/q" omitted when q = 1.
std::string rational_str(const Rational& q);

// Parses "p", "-p", "p/q".  Returns nullopt on malformed input.
std::optional<Rational> rational_parse(const std::string& s);

inline double to_double(const Rational& q) { return q.get_d(); }

Rational rational_pow(const Rational& q, long e);

// Nearest p/q with q <= max_den via continued fractions.  Detection only:
// callers must verify the candidate exactly.
Rational rational_reconstruct(double x, long max_den = 1'000'000'000L);

// Largest power of 1/2 that is <= x (x > 0 required).
Rational pow2_below(double x);

inline int sign(const Rational& q) { return sgn(q); }

// Deterministic, platform-independent pseudo-random source for seeded
// "generic" choices.  (std::uniform_int_distribution is not portable.)
class SeededRng {
 public:
  explicit SeededRng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  uint64_t next_u64() {
    // xorshift* — stable across platforms.
    uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545F4914F6CDD1DULL;
  }

  // Uniform-ish integer in [lo, hi] (inclusive), lo <= hi.
  long next_int(long lo, long hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next_u64() % span);
  }

  // Small nonzero rational with |num| <= nmax, 1 <= den <= dmax.
  Rational next_rational(long nmax, long dmax) {
    long n = 0;
    while (n == 0) n = next_int(-nmax, nmax);
    long d = next_int(1, dmax);
    return make_rational(n, d);
  }

 private:
  uint64_t state_;
};

}  // namespace arcsect

#endif
