#include "arcsect/roots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "arcsect/errors.hpp"
#include "arcsect/mpoly.hpp"
#include "arcsect/polyops.hpp"

namespace arcsect {

namespace {

using C = std::complex<double>;

int cdeg(const std::vector<C>& c, double lc_min_rel) {
  double scale = 0;
  for (const auto& a : c) scale = std::max(scale, std::abs(a));
  if (scale == 0) return -1;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
    if (std::abs(c[i]) > lc_min_rel * scale) return i;
  return -1;
}

C horner(const std::vector<C>& c, C z) {
  C acc = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) acc = acc * z + c[i];
  return acc;
}

// Taylor coefficients of p(z + w) in w (synthetic division), ascending.
std::vector<C> taylor_shift(std::vector<C> c, C z) {
  int n = static_cast<int>(c.size());
  for (int k = 0; k < n; ++k)
    for (int i = n - 2; i >= k; --i) c[i] += z * c[i + 1];
  return c;
}

std::vector<C> eigen_roots(const std::vector<C>& monic) {
  int d = static_cast<int>(monic.size()) - 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 0; i < d; ++i) m(i, d - 1) = -monic[i];
  for (int i = 1; i < d; ++i) m(i, i - 1) = 1.0;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
  std::vector<C> out(d);
  for (int i = 0; i < d; ++i) out[i] = es.eigenvalues()(i);
  return out;
}

}  // namespace

std::vector<std::complex<double>> expand_clusters(
    const std::vector<RootCluster>& cs) {
  std::vector<C> out;
  for (const auto& c : cs)
    for (int i = 0; i < c.multiplicity; ++i) out.push_back(c.box.center());
  return out;
}

std::vector<RootCluster> complex_roots(const std::vector<C>& coeffs,
                                       const RootOptions& opts) {
  int d = cdeg(coeffs, opts.lc_min_rel);
  if (d < 0) throw DomainError("complex_roots: zero polynomial");
  int full = static_cast<int>(coeffs.size()) - 1;
  while (full > 0 && coeffs[full] == C(0)) --full;
  if (d < full) throw DomainError("complex_roots: degenerate leading coefficient");
  if (d < 1) throw DomainError("complex_roots: constant polynomial");

  std::vector<C> p(coeffs.begin(), coeffs.begin() + d + 1);
  C lc = p[d];
  std::vector<C> monic(d + 1);
  for (int i = 0; i <= d; ++i) monic[i] = p[i] / lc;

  // Exact zero roots (structurally zero low coefficients).
  int zshift = 0;
  while (zshift < d && monic[zshift] == C(0)) ++zshift;
  std::vector<C> core(monic.begin() + zshift, monic.end());
  int dc = d - zshift;

  std::vector<C> roots;
  if (dc == 1) {
    roots.push_back(-core[0]);
  } else if (dc >= 2) {
    roots = eigen_roots(core);
  }

  // Newton polish (double, then an extended-precision pass).
  auto polish = [&](C z) {
    for (int it = 0; it < opts.newton_iters; ++it) {
      C pv = horner(core, z);
      std::vector<C> dcf(dc);
      for (int i = 1; i <= dc; ++i) dcf[i - 1] = core[i] * static_cast<double>(i);
      C dv = horner(dcf, z);
      if (std::abs(dv) == 0) break;
      C step = pv / dv;
      z -= step;
      if (std::abs(step) < 1e-17 * (1.0 + std::abs(z))) break;
    }
    return z;
  };
  for (auto& z : roots) z = polish(z);

  if (opts.long_double_pass && dc >= 1) {
    std::vector<std::complex<long double>> cl(dc + 1);
    for (int i = 0; i <= dc; ++i)
      cl[i] = std::complex<long double>(core[i].real(), core[i].imag());
    for (auto& z : roots) {
      std::complex<long double> w(z.real(), z.imag());
      for (int it = 0; it < 8; ++it) {
        std::complex<long double> pv = 0, dv = 0;
        for (int i = dc; i >= 0; --i) {
          dv = dv * w + pv;
          pv = pv * w + cl[i];
        }
        if (std::abs(dv) == 0.0L) break;
        w -= pv / dv;
      }
      z = C(static_cast<double>(w.real()), static_cast<double>(w.imag()));
    }
  }

  // Certified radii.
  std::vector<ComplexBox> boxes;
  for (C z : roots) {
    std::vector<C> sh = taylor_shift(core, z);
    double az = std::abs(z);
    // Floating evaluation error estimate for |p(z)|: term-wise magnitude sum.
    double termsum = 0, zp = 1;
    for (int i = 0; i <= dc; ++i) {
      termsum += std::abs(core[i]) * zp;
      zp *= az;
    }
    double evalerr = termsum * (dc + 2) * 4e-16;
    double pv = std::abs(sh[0]) + evalerr;
    double dv = std::abs(sh[1]);
    double rad;
    bool smale_ok = false;
    if (dv > 0) {
      double beta = pv / dv;
      double gamma = 0;
      for (int k = 2; k <= dc; ++k) {
        double g = std::pow(std::abs(sh[k]) / dv, 1.0 / (k - 1));
        gamma = std::max(gamma, g);
      }
      double alpha = beta * gamma;
      if (alpha < 0.02) {
        rad = 2 * beta;
        smale_ok = true;
      }
    }
    if (!smale_ok) rad = std::pow(pv, 1.0 / dc);
    boxes.push_back(ComplexBox::make(z, rad));
  }
  for (int i = 0; i < zshift; ++i) boxes.push_back(ComplexBox::make(0, 0));

  // Merge overlapping boxes into clusters (transitive closure).
  int n = static_cast<int>(boxes.size());
  std::vector<int> comp(n, -1);
  int nc = 0;
  for (int i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    comp[i] = nc;
    std::vector<int> stack{i};
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b = 0; b < n; ++b)
        if (comp[b] < 0 && boxes[a].overlaps(boxes[b])) {
          comp[b] = nc;
          stack.push_back(b);
        }
    }
    ++nc;
  }
  std::vector<RootCluster> out(nc);
  std::vector<int> counts(nc, 0);
  std::vector<C> sums(nc, 0);
  std::vector<double> rads(nc, 0);
  for (int i = 0; i < n; ++i) {
    counts[comp[i]] += 1;
    sums[comp[i]] += boxes[i].center();
  }
  for (int i = 0; i < n; ++i) {
    C c = sums[comp[i]] / static_cast<double>(counts[comp[i]]);
    rads[comp[i]] = std::max(rads[comp[i]],
                             std::abs(boxes[i].center() - c) + boxes[i].radius);
  }
  for (int k = 0; k < nc; ++k) {
    out[k].multiplicity = counts[k];
    out[k].box = ComplexBox::make(sums[k] / static_cast<double>(counts[k]), rads[k]);
  }
  std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
    if (a.box.re != b.box.re) return a.box.re < b.box.re;
    return a.box.im < b.box.im;
  });
  return out;
}

std::vector<RootCluster> rational_roots_certified(
    const std::vector<Rational>& coeffs, const RootOptions& opts) {
  MPoly p = MPoly::from_coeffs("t", [&] {
    std::vector<MPoly> cs;
    for (const auto& c : coeffs) cs.push_back(MPoly::constant(c));
    return cs;
  }());
  if (p.is_zero()) throw DomainError("rational_roots_certified: zero polynomial");
  if (p.degree("t") < 1) throw DomainError("rational_roots_certified: constant");
  auto dec = squarefree_decomposition(p, "t");
  std::vector<RootCluster> out;
  for (const auto& sf : dec) {
    auto cs = sf.factor.coeffs_in("t");
    std::vector<C> dc;
    for (const auto& c : cs) dc.push_back(C(to_double(c.constant_value()), 0));
    auto rs = complex_roots(dc, opts);
    for (auto r : rs) {
      r.multiplicity *= sf.multiplicity;
      out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
    if (a.box.re != b.box.re) return a.box.re < b.box.re;
    return a.box.im < b.box.im;
  });
  return out;
}

RationalRootSplit rational_root_split(const std::vector<Rational>& coeffs,
                                      long max_den) {
  RationalRootSplit out;
  std::vector<MPoly> cs;
  for (const auto& c : coeffs) cs.push_back(MPoly::constant(c));
  MPoly p = MPoly::from_coeffs("t", cs);
  if (p.is_zero() || p.degree("t") < 1) return out;
  auto dec = squarefree_decomposition(p, "t");
  for (const auto& sf : dec) {
    std::vector<Rational> fc;
    for (const auto& c : sf.factor.coeffs_in("t")) fc.push_back(c.constant_value());
    // Numeric candidates, exact verification, exact deflation.
    std::vector<Rational> cur = fc;
    bool progress = true;
    while (progress && cur.size() > 1) {
      progress = false;
      std::vector<C> dcf;
      for (const auto& c : cur) dcf.push_back(C(to_double(c), 0));
      std::vector<RootCluster> rs;
      try {
        rs = complex_roots(dcf);
      } catch (const Error&) {
        break;
      }
      for (const auto& r : rs) {
        if (std::abs(r.box.im) > 1e-8 * (1 + std::abs(r.box.re))) continue;
        Rational cand = rational_reconstruct(r.box.re, max_den);
        // Exact check.
        Rational v(0);
        for (int i = static_cast<int>(cur.size()) - 1; i >= 0; --i)
          v = v * cand + cur[i];
        if (v == 0) {
          out.rational_roots.push_back({cand, sf.multiplicity});
          // Deflate exactly by (t - cand).
          std::vector<Rational> q(cur.size() - 1);
          Rational carry = cur.back();
          for (int i = static_cast<int>(cur.size()) - 2; i >= 0; --i) {
            q[i] = carry;
            carry = cur[i] + carry * cand;
          }
          cur = q;
          progress = true;
          break;
        }
      }
    }
    if (cur.size() > 1) {
      std::vector<C> dcf;
      for (const auto& c : cur) dcf.push_back(C(to_double(c), 0));
      auto rs = complex_roots(dcf);
      for (auto r : rs) {
        r.multiplicity *= sf.multiplicity;
        out.other_roots.push_back(r);
      }
    }
  }
  return out;
}

Rational root_abs_lower_bound(const std::vector<Rational>& coeffs) {
  if (coeffs.empty() || coeffs[0] == 0)
    throw DomainError("root_abs_lower_bound: zero constant term");
  Rational a0 = abs(coeffs[0]), mx(0);
  for (size_t i = 1; i < coeffs.size(); ++i) {
    Rational a = abs(coeffs[i]);
    if (a > mx) mx = a;
  }
  if (mx == 0) return Rational(1);  // no roots at all
  return a0 / (a0 + mx);
}

}  // namespace arcsect
