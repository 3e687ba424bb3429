#ifndef ARCSECT_ROOTS_HPP
#define ARCSECT_ROOTS_HPP

#include <complex>
#include <optional>
#include <vector>

#include "arcsect/rational.hpp"

namespace arcsect {

// A complex value with a certified inclusion radius.
struct ComplexBox {
  double re = 0, im = 0;
  double radius = 0;

  std::complex<double> center() const { return {re, im}; }
  static ComplexBox make(std::complex<double> c, double r) {
    return {c.real(), c.imag(), r};
  }
  bool overlaps(const ComplexBox& o) const {
    return std::abs(center() - o.center()) <= radius + o.radius;
  }
  double abs_lower() const { return std::max(0.0, std::abs(center()) - radius); }
  double abs_upper() const { return std::abs(center()) + radius; }

  ComplexBox operator+(const ComplexBox& o) const {
    return make(center() + o.center(), radius + o.radius + 1e-16 * abs_upper());
  }
  ComplexBox operator-(const ComplexBox& o) const {
    return make(center() - o.center(), radius + o.radius + 1e-16 * abs_upper());
  }
  ComplexBox operator*(const ComplexBox& o) const {
    double r = std::abs(center()) * o.radius + std::abs(o.center()) * radius +
               radius * o.radius;
    auto c = center() * o.center();
    return make(c, r + 1e-15 * std::abs(c));
  }
};

struct RootCluster {
  ComplexBox box;
  int multiplicity = 1;
};

struct RootOptions {
  int newton_iters = 64;
  bool long_double_pass = true;  // the doubled-precision refinement pass
  double lc_min_rel = 1e-12;     // reject degenerate leading coefficients
};

// Roots of a complex univariate polynomial (coefficients ascending).  Returns
// clusters of overlapping certified boxes; multiplicities sum to the degree.
// Radii come from a Smale-style a-posteriori Newton bound when the alpha test
// passes, else from the product bound (|p(z)|/|lc|)^(1/d).
// Throws DomainError on degree < 1 or degenerate leading coefficient.
std::vector<RootCluster> complex_roots(
    const std::vector<std::complex<double>>& coeffs,
    const RootOptions& opts = {});

// Exact-input variant: squarefree decomposition over Q first, so cluster
// multiplicities are exact and boxes come from simple roots only.
std::vector<RootCluster> rational_roots_certified(
    const std::vector<Rational>& coeffs, const RootOptions& opts = {});

// Exact rational roots of an exact polynomial: numeric detection via
// continued fractions, then exact verification and deflation.
struct RationalRootSplit {
  std::vector<std::pair<Rational, int>> rational_roots;  // with multiplicity
  std::vector<RootCluster> other_roots;                  // certified boxes
};
RationalRootSplit rational_root_split(const std::vector<Rational>& coeffs,
                                      long max_den = 1'000'000'000L);

// Exact positive lower bound on |root| over all roots; requires coeffs[0] != 0.
Rational root_abs_lower_bound(const std::vector<Rational>& coeffs);

// Flat list with multiplicity expanded.
std::vector<std::complex<double>> expand_clusters(
    const std::vector<RootCluster>& cs);

}  // namespace arcsect

#endif
