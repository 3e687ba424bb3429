#include "arcsect/tracking.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "arcsect/errors.hpp"

namespace arcsect {

namespace {

using C = std::complex<double>;
constexpr double TAU = 2 * std::numbers::pi;

std::vector<C> upoly_complex(const MPoly& p, const std::string& tvar) {
  if (p.is_zero()) return {C(0)};
  std::vector<C> out;
  for (const auto& c : p.coeffs_in(tvar)) {
    if (!c.is_constant()) throw DomainError("family coefficient not univariate");
    out.push_back(C(to_double(c.constant_value()), 0));
  }
  return out;
}

C horner(const std::vector<C>& c, C z) {
  C acc = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) acc = acc * z + c[i];
  return acc;
}

double min_pairwise(const std::vector<C>& v) {
  double m = 1e300;
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      m = std::min(m, std::abs(v[i] - v[j]));
  return m;
}

}  // namespace

std::vector<C> CircleFamily::fiber_coeffs(double theta) const {
  C T = C(to_double(center), 0) +
        to_double(radius) * C(std::cos(theta), std::sin(theta));
  std::vector<C> out(zcoeffs.size());
  for (size_t k = 0; k < zcoeffs.size(); ++k) {
    if (zcoeffs[k].is_zero()) {
      out[k] = 0;
    } else if (zcoeffs[k].is_constant()) {
      out[k] = to_double(zcoeffs[k].constant_value());
    } else {
      out[k] = horner(upoly_complex(zcoeffs[k], tvar), T);
    }
  }
  return out;
}

CircleFamily make_family(const MPoly& surface, const std::string& zvar,
                         const MPoly& path_x, const MPoly& path_y,
                         const std::string& tvar, const Rational& center,
                         const Rational& radius) {
  std::vector<std::string> sv = surface.vars();
  std::map<std::string, MPoly> images;
  for (const auto& v : sv) {
    if (v == zvar)
      images[v] = MPoly::var(zvar);
    else if (v == "x")
      images[v] = path_x;
    else if (v == "y")
      images[v] = path_y;
    else
      throw DomainError("make_family: unexpected variable " + v);
  }
  MPoly composed = surface.substitute(images);
  CircleFamily fam;
  fam.zcoeffs = composed.coeffs_in(zvar);
  fam.tvar = tvar;
  fam.center = center;
  fam.radius = radius;
  if (fam.zcoeffs.empty()) throw DomainError("make_family: zero surface");
  return fam;
}

namespace {

// Newton-corrects all roots at the given coefficients; returns false if any
// correction fails to converge.
bool correct_all(const std::vector<C>& coeffs, std::vector<C>& roots,
                 int iters) {
  int d = static_cast<int>(coeffs.size()) - 1;
  std::vector<C> dcf(d);
  for (int i = 1; i <= d; ++i) dcf[i - 1] = coeffs[i] * static_cast<double>(i);
  for (auto& z : roots) {
    bool ok = false;
    for (int it = 0; it < iters; ++it) {
      C pv = horner(coeffs, z);
      C dv = horner(dcf, z);
      if (std::abs(dv) == 0) return false;
      C step = pv / dv;
      z -= step;
      if (std::abs(step) < 1e-13 * (1.0 + std::abs(z))) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

struct SortedOrder {
  std::vector<int> order;  // strand index at each position
};

SortedOrder sorted_order(const std::vector<C>& roots, double rot) {
  SortedOrder so;
  so.order.resize(roots.size());
  for (size_t i = 0; i < roots.size(); ++i) so.order[i] = static_cast<int>(i);
  C phase(std::cos(rot), std::sin(rot));
  std::sort(so.order.begin(), so.order.end(), [&](int a, int b) {
    C za = roots[a] * phase, zb = roots[b] * phase;
    if (za.real() != zb.real()) return za.real() < zb.real();
    return za.imag() < zb.imag();
  });
  return so;
}

}  // namespace

TrackResult track_circle_family(const CircleFamily& fam, const TrackOptions& opts) {
  TrackResult res;
  int D = fam.zdegree();
  if (D < 1) throw DomainError("track: fiber degree < 1");

  auto coeff_scale = [](const std::vector<C>& c) {
    double s = 0;
    for (const auto& a : c) s = std::max(s, std::abs(a));
    return s;
  };
  auto fiber_at = [&](double theta) {
    auto c = fam.fiber_coeffs(theta);
    double scale = coeff_scale(c);
    if (scale == 0 || std::abs(c.back()) < opts.lc_min_rel * scale)
      throw CertificationError(
          "leading coefficient degenerates along the loop (theta=" +
          std::to_string(theta) + ")");
    return c;
  };

  auto c0 = fiber_at(0.0);
  auto clusters = complex_roots(c0);
  if (static_cast<int>(clusters.size()) != D)
    throw CertificationError("basepoint fiber has coincident roots");
  std::vector<C> cur;
  for (const auto& cl : clusters) cur.push_back(cl.box.center());
  std::sort(cur.begin(), cur.end(), [](C a, C b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  res.base_fiber = cur;
  std::vector<C> start = cur;

  TrackingCertificate cert;
  cert.min_separation = min_pairwise(cur);
  if (cert.min_separation <= 0)
    throw CertificationError("basepoint fiber separation is zero");

  double theta = 0;
  double h = TAU / opts.initial_steps;
  const double h_min = TAU / 16;
  (void)h_min;
  std::vector<C> prev_step_delta(D, C(0));
  long accepted = 0;
  SortedOrder order = sorted_order(cur, opts.sort_rotation);

  while (theta < TAU - 1e-15) {
    double step = std::min(h, TAU - theta);
    bool ok = false;
    std::vector<C> nxt;
    double sep_cur = min_pairwise(cur);
    cert.min_separation = std::min(cert.min_separation, sep_cur);
    while (true) {
      if (cert.steps + accepted > opts.max_total_steps)
        throw CertificationError("step budget exhausted (certification failure)");
      ++cert.steps;
      double th2 = theta + step;
      std::vector<C> coeffs;
      try {
        coeffs = fiber_at(th2);
      } catch (const CertificationError&) {
        throw;
      }
      nxt = cur;
      // Linear predictor scaled to the attempted step.
      double ratio = (accepted > 0) ? step / h : 0.0;
      for (int i = 0; i < D; ++i) nxt[i] += prev_step_delta[i] * ratio;
      bool conv = correct_all(coeffs, nxt, opts.newton_iters);
      if (conv) {
        double motion = 0;
        for (int i = 0; i < D; ++i)
          motion = std::max(motion, std::abs(nxt[i] - cur[i]));
        double sep_new = min_pairwise(nxt);
        double sep = std::min(sep_cur, sep_new);
        if (motion < opts.match_factor * sep) {
          cert.max_step_motion = std::max(cert.max_step_motion, motion);
          cert.min_separation = std::min(cert.min_separation, sep_new);
          ok = true;
          break;
        }
      }
      step /= 2;
      ++cert.refinement_passes;
      if (step < TAU / static_cast<double>(opts.max_total_steps))
        throw CertificationError("step size underflow (certification failure)");
    }
    (void)ok;

    // Braid letters: record adjacent transpositions in the (Re, Im) order.
    if (opts.record_braid) {
      SortedOrder norder = sorted_order(nxt, opts.sort_rotation);
      // Positions of each strand before/after.
      std::vector<int> pos_before(D), pos_after(D);
      for (int p = 0; p < D; ++p) pos_before[order.order[p]] = p;
      for (int p = 0; p < D; ++p) pos_after[norder.order[p]] = p;
      // Bubble the old order into the new one, emitting a letter per swap.
      std::vector<int> work = order.order;
      bool changed = true;
      while (changed) {
        changed = false;
        for (int p = 0; p + 1 < D; ++p) {
          if (pos_after[work[p]] > pos_after[work[p + 1]]) {
            int a = work[p], b = work[p + 1];
            // Sign convention: positive when the strand moving up in real
            // order has the smaller imaginary part at mid-step.
            C mid_a = (cur[a] + nxt[a]) * 0.5, mid_b = (cur[b] + nxt[b]) * 0.5;
            int sign = (mid_a.imag() <= mid_b.imag()) ? 1 : -1;
            res.braid.push_back({p, sign});
            std::swap(work[p], work[p + 1]);
            changed = true;
          }
        }
      }
      order = norder;
    }

    // Periodic fresh solve to guard against strand collapse.
    if (opts.resolve_every > 0 && accepted % opts.resolve_every == 0) {
      auto coeffs = fiber_at(theta + step);
      auto fresh = complex_roots(coeffs);
      if (static_cast<int>(fresh.size()) != D)
        throw CertificationError("fiber roots collided mid-loop");
      std::vector<bool> used(D, false);
      for (const auto& f : fresh) {
        double best = 1e300;
        int bi = -1;
        for (int i = 0; i < D; ++i) {
          double d2 = std::abs(f.box.center() - nxt[i]);
          if (!used[i] && d2 < best) {
            best = d2;
            bi = i;
          }
        }
        double sep = min_pairwise(nxt);
        if (bi < 0 || best > sep / 3)
          throw CertificationError("fresh solve does not match tracked fiber");
        used[bi] = true;
      }
    }

    for (int i = 0; i < D; ++i) prev_step_delta[i] = nxt[i] - cur[i];
    h = step;  // keep the accepted step size; grow cautiously
    if (cert.refinement_passes == 0 || h < TAU / opts.initial_steps)
      h = std::min(h * 1.5, TAU / opts.initial_steps);
    cur = nxt;
    theta += step;
    ++accepted;
  }

  // Close the loop: match the final fiber to the basepoint labels.
  double sep0 = min_pairwise(start);
  std::vector<int> img(D, -1);
  std::vector<bool> used(D, false);
  for (int i = 0; i < D; ++i) {
    double best = 1e300;
    int bj = -1;
    for (int j = 0; j < D; ++j) {
      double d2 = std::abs(cur[i] - start[j]);
      if (!used[j] && d2 < best) {
        best = d2;
        bj = j;
      }
    }
    if (bj < 0 || best > opts.match_factor * sep0)
      throw CertificationError("loop closure does not match basepoint fiber");
    used[bj] = true;
    img[i] = bj;
  }
  res.perm = Permutation(img);
  res.cert = cert;
  res.cert.steps = accepted;
  return res;
}

bool certify_nonvanishing_on_circle(const MPoly& p, const std::string& tvar,
                                    const Rational& center, const Rational& radius,
                                    int max_doublings) {
  if (p.is_zero()) return false;
  if (p.is_constant()) return p.constant_value() != 0;
  // q(tau) = p(center + radius * tau), |tau| = 1, exactly composed.
  MPoly q = p.subst_var(
      tvar, MPoly::constant(center) + MPoly::var(tvar).scaled(radius));
  auto qc = upoly_complex(q, tvar);
  // d|q|/dtheta <= sum k |q_k| on the unit circle.
  double lip = 0, scale = 0;
  for (size_t k = 0; k < qc.size(); ++k) {
    lip += k * std::abs(qc[k]);
    scale += std::abs(qc[k]);
  }
  double evalerr = scale * qc.size() * 4e-16;
  int n = 64;
  for (int pass = 0; pass < max_doublings; ++pass, n *= 2) {
    double minv = 1e300;
    for (int i = 0; i < n; ++i) {
      double th = TAU * i / n;
      C tau(std::cos(th), std::sin(th));
      minv = std::min(minv, std::abs(horner(qc, tau)));
    }
    double margin = minv - lip * (TAU / n) / 2 - evalerr;
    if (margin > 10 * evalerr && margin > 0) return true;
    if (minv < 2 * evalerr) return false;  // a zero (or nearly) on the circle
  }
  return false;
}

int winding_number_on_circle(const MPoly& p, const std::string& tvar,
                             const Rational& center, const Rational& radius) {
  MPoly q = p.subst_var(
      tvar, MPoly::constant(center) + MPoly::var(tvar).scaled(radius));
  auto qc = upoly_complex(q, tvar);
  int n = 256;
  for (int pass = 0; pass < 12; ++pass, n *= 2) {
    double total = 0;
    bool ok = true;
    C prev = horner(qc, C(1, 0));
    if (std::abs(prev) == 0) ok = false;
    for (int i = 1; ok && i <= n; ++i) {
      double th = TAU * i / n;
      C val = horner(qc, C(std::cos(th), std::sin(th)));
      if (std::abs(val) == 0) {
        ok = false;
        break;
      }
      double dang = std::arg(val / prev);
      if (std::abs(dang) > 1.4) {  // < pi/2 wanted; refine otherwise
        ok = false;
        break;
      }
      total += dang;
      prev = val;
    }
    if (ok) {
      double w = total / TAU;
      long r = std::lround(w);
      if (std::abs(w - r) < 0.1) return static_cast<int>(r);
    }
  }
  throw CertificationError("winding number did not stabilize");
}

}  // namespace arcsect
