#include "arcsect/germ.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "arcsect/polyops.hpp"

namespace arcsect {

namespace {

using C = std::complex<double>;

Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Exact k-th root of a rational, when one exists (negative inputs only for
// odd k).
std::optional<Rational> exact_kth_root(const Rational& r, int k) {
  if (r == 0) return Rational(0);
  bool neg = r < 0;
  if (neg && k % 2 == 0) return std::nullopt;
  Int num = abs(r.get_num()), den = r.get_den();
  Int rn, rd;
  int en = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k);
  int ed = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k);
  if (!en || !ed) return std::nullopt;
  Rational out(neg ? -rn : rn, rd);
  out.canonicalize();
  return out;
}

// ---------------------------------------------------------------------------
// Puiseux coefficients: exact rational while possible, complex box afterwards.

struct PC {
  bool exact = true;
  Rational q;
  ComplexBox b;

  static PC rational(const Rational& r) {
    PC c;
    c.exact = true;
    c.q = r;
    c.b = ComplexBox::make(C(to_double(r), 0), 0);
    return c;
  }
  static PC box(const ComplexBox& bb) {
    PC c;
    c.exact = false;
    c.b = bb;
    return c;
  }
  C approx() const { return exact ? C(to_double(q), 0) : b.center(); }
  PC operator+(const PC& o) const {
    if (exact && o.exact) return rational(q + o.q);
    ComplexBox rb = ComplexBox::make(approx() + o.approx(),
                                     (exact ? 0 : b.radius) +
                                         (o.exact ? 0 : o.b.radius) + 1e-16);
    return box(rb);
  }
  PC operator*(const PC& o) const {
    if (exact && o.exact) return rational(q * o.q);
    ComplexBox ra = exact ? ComplexBox::make(approx(), 0) : b;
    ComplexBox rb = o.exact ? ComplexBox::make(o.approx(), 0) : o.b;
    return box(ra * rb);
  }
  PC pow(int e) const {
    PC r = rational(Rational(1));
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
  }
};

// Bivariate working polynomial: (fiber exponent, parameter exponent) -> PC.
using BKey = std::pair<int, long>;
struct BP {
  std::map<BKey, PC> terms;
  bool exact = true;
};

constexpr double kBoxZeroTol = 1e-10;  // documented numeric zero tolerance

void bp_prune(BP& p) {
  double scale = 0;
  for (const auto& [k, c] : p.terms) scale = std::max(scale, std::abs(c.approx()));
  for (auto it = p.terms.begin(); it != p.terms.end();) {
    bool zero;
    if (it->second.exact)
      zero = (it->second.q == 0);
    else
      zero = std::abs(it->second.approx()) <= kBoxZeroTol * std::max(1.0, scale);
    if (zero)
      it = p.terms.erase(it);
    else
      ++it;
  }
  p.exact = true;
  for (const auto& [k, c] : p.terms)
    if (!c.exact) p.exact = false;
}

BP bp_from_mpoly(const MPoly& eq, const std::string& param,
                 const std::string& fiber) {
  BP out;
  for (const auto& [e, c] : eq.terms()) {
    int j = 0;
    long k = 0;
    for (size_t i = 0; i < eq.vars().size(); ++i) {
      if (eq.vars()[i] == fiber)
        j = e[i];
      else if (eq.vars()[i] == param)
        k = e[i];
      else if (e[i] != 0)
        throw DomainError("germ equation involves extra variable " + eq.vars()[i]);
    }
    BKey key{j, k};
    auto [it, fresh] = out.terms.emplace(key, PC::rational(c));
    if (!fresh) it->second = it->second + PC::rational(c);
  }
  bp_prune(out);
  return out;
}

// Lower-hull points (fiber exponent j -> minimal parameter order).
std::map<int, long> bp_support(const BP& p) {
  std::map<int, long> v;
  for (const auto& [k, c] : p.terms) {
    auto it = v.find(k.first);
    if (it == v.end() || k.second < it->second) v[k.first] = k.second;
  }
  return v;
}

struct HullSide {
  int j1;  // lower fiber exponent
  long v1;
  int j2;  // higher fiber exponent
  long v2;
  // slope (v1 - v2) / (j2 - j1) > 0 for sides relevant to branches at 0
};

std::vector<HullSide> lower_hull_sides(const std::map<int, long>& pts) {
  std::vector<std::pair<int, long>> v(pts.begin(), pts.end());
  if (v.size() < 2) return {};
  // Monotone chain, lower hull in (j, ord) plane.
  std::vector<std::pair<int, long>> hull;
  for (const auto& p : v) {
    while (hull.size() >= 2) {
      auto& a = hull[hull.size() - 2];
      auto& b = hull[hull.size() - 1];
      // cross ((b-a) x (p-b)) <= 0 -> b not strictly below
      long cross = static_cast<long>(b.first - a.first) * (p.second - b.second) -
                   static_cast<long>(p.first - b.first) * (b.second - a.second);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  std::vector<HullSide> sides;
  for (size_t i = 0; i + 1 < hull.size(); ++i)
    sides.push_back({hull[i].first, hull[i].second, hull[i + 1].first,
                     hull[i + 1].second});
  return sides;
}

// Engine state and outputs -------------------------------------------------

struct EngineCtx {
  bool want_params = false;
  Rational order_target = Rational(6);
  int depth_cap = 128;
  bool numeric = false;  // set when any box arithmetic was needed
};

struct RawBranch {
  long e = 1;
  std::vector<PuiseuxTerm> terms;
  bool exact = true;
  bool complete = false;  // terminating (polynomial) series
};

PuiseuxTerm make_term(const Rational& exponent, const PC& c) {
  PuiseuxTerm t;
  t.exponent = exponent;
  t.exact = c.exact;
  if (c.exact) t.coeff_exact = c.q;
  t.coeff_box = c.exact ? ComplexBox::make(c.approx(), 0) : c.b;
  return t;
}

// P(t, w) -> P(t^q, t^p * (c + w)) / t^(min order)
BP substitute_level(const BP& p, int q, int p_exp, const PC& c) {
  BP out;
  out.exact = p.exact && c.exact;
  // Precompute powers of c.
  int maxj = 0;
  for (const auto& [k, cc] : p.terms) maxj = std::max(maxj, k.first);
  std::vector<PC> cpow(maxj + 1, PC::rational(Rational(1)));
  for (int i = 1; i <= maxj; ++i) cpow[i] = cpow[i - 1] * c;
  // Binomials.
  std::vector<std::vector<Rational>> binom(maxj + 1,
                                           std::vector<Rational>(maxj + 1, 0));
  for (int n = 0; n <= maxj; ++n) {
    binom[n][0] = 1;
    for (int r = 1; r <= n; ++r)
      binom[n][r] = binom[n - 1][r - 1] + (r <= n - 1 ? binom[n - 1][r] : 0);
  }
  for (const auto& [k, cc] : p.terms) {
    int j = k.first;
    long tk = k.second;
    long base_t = static_cast<long>(q) * tk + static_cast<long>(p_exp) * j;
    for (int i = 0; i <= j; ++i) {
      // coefficient * C(j,i) * c^(j-i) * w^i * t^base_t
      PC term = cc * cpow[j - i] * PC::rational(binom[j][i]);
      BKey key{i, base_t};
      auto [it, fresh] = out.terms.emplace(key, term);
      if (!fresh) it->second = it->second + term;
    }
  }
  bp_prune(out);
  if (out.terms.empty()) return out;
  long tmin = out.terms.begin()->second.exact ? 0 : 0;
  tmin = 1L << 60;
  for (const auto& [k, cc] : out.terms) tmin = std::min(tmin, k.second);
  if (tmin > 0) {
    BP shifted;
    shifted.exact = out.exact;
    for (const auto& [k, cc] : out.terms)
      shifted.terms[{k.first, k.second - tmin}] = cc;
    out = std::move(shifted);
  }
  return out;
}

struct PhiRoot {
  PC value;
  int multiplicity;
};

// Roots (with multiplicity) of the characteristic polynomial given as PC
// coefficients.  Exact coefficients get exact squarefree structure and
// verified rational roots; boxes are clustered numerically.
std::vector<PhiRoot> phi_roots(const std::vector<PC>& phi, EngineCtx& ctx) {
  std::vector<PhiRoot> out;
  bool exact = std::all_of(phi.begin(), phi.end(),
                           [](const PC& c) { return c.exact; });
  if (exact) {
    std::vector<Rational> coeffs;
    for (const auto& c : phi) coeffs.push_back(c.q);
    auto split = rational_root_split(coeffs);
    for (const auto& [r, m] : split.rational_roots)
      out.push_back({PC::rational(r), m});
    for (const auto& cl : split.other_roots) {
      ctx.numeric = true;
      out.push_back({PC::box(cl.box), cl.multiplicity});
    }
  } else {
    ctx.numeric = true;
    std::vector<C> coeffs;
    for (const auto& c : phi) coeffs.push_back(c.approx());
    for (const auto& cl : complex_roots(coeffs))
      out.push_back({PC::box(cl.box), cl.multiplicity});
  }
  return out;
}

void expand(const BP& p_in, long E, const Rational& base,
            const std::vector<PuiseuxTerm>& prefix, int depth, EngineCtx& ctx,
            std::vector<RawBranch>& out) {
  if (depth > ctx.depth_cap)
    throw CertificationError("Puiseux recursion depth cap exceeded");
  BP p = p_in;
  bp_prune(p);
  if (p.terms.empty())
    throw DomainError("Puiseux: zero polynomial encountered");

  // Strip w^k: a terminating (polynomial) branch.
  int wmin = p.terms.begin()->first.first;
  for (const auto& [k, c] : p.terms) wmin = std::min(wmin, k.first);
  if (wmin > 0) {
    RawBranch b;
    b.e = E;
    b.terms = prefix;
    b.exact = std::all_of(prefix.begin(), prefix.end(),
                          [](const PuiseuxTerm& t) { return t.exact; });
    b.complete = true;
    out.push_back(std::move(b));
    BP rest;
    rest.exact = p.exact;
    for (const auto& [k, c] : p.terms)
      if (k.first >= wmin) rest.terms[{k.first - wmin, k.second}] = c;
    p = std::move(rest);
    bp_prune(p);
    if (p.terms.empty()) return;
  }

  auto pts = bp_support(p);
  auto sides = lower_hull_sides(pts);
  for (const auto& s : sides) {
    long dv = s.v1 - s.v2;
    int dj = s.j2 - s.j1;
    if (dv <= 0) continue;  // only branches through the origin
    long g = std::gcd(dv, static_cast<long>(dj));
    long pp = dv / g;  // slope numerator
    int qq = static_cast<int>(dj / g);
    // Characteristic polynomial in C = c^qq.
    int ell = dj / qq;
    std::vector<PC> phi(ell + 1, PC::rational(Rational(0)));
    for (int i = 0; i <= ell; ++i) {
      int j = s.j1 + i * qq;
      long tv = s.v1 - i * pp;
      auto it = p.terms.find({j, tv});
      if (it != p.terms.end()) phi[i] = it->second;
    }
    Rational exponent = base + ratio(pp, E * qq);
    for (const auto& root : phi_roots(phi, ctx)) {
      if (root.multiplicity == 1 && !ctx.want_params) {
        RawBranch b;
        b.e = E * qq;
        b.terms = prefix;  // truncated; count-only
        b.exact = root.value.exact;
        out.push_back(std::move(b));
        continue;
      }
      if (ctx.want_params && exponent > ctx.order_target) {
        if (root.multiplicity > 1)
          throw DomainError(
              "truncation order insufficient to separate branches; raise order");
        RawBranch b;
        b.e = E * qq;
        b.terms = prefix;
        b.exact = std::all_of(prefix.begin(), prefix.end(),
                              [](const PuiseuxTerm& t) { return t.exact; });
        out.push_back(std::move(b));
        continue;
      }
      // c with c^qq = root: exact when the rational root has an exact qq-th
      // root, numeric otherwise (conjugates merged by the exponent lattice).
      PC c;
      bool have_c = false;
      if (qq == 1) {
        c = root.value;
        have_c = true;
      } else if (root.value.exact) {
        if (auto er = exact_kth_root(root.value.q, qq)) {
          c = PC::rational(*er);
          have_c = true;
        }
      }
      if (!have_c) {
        ctx.numeric = true;
        C rv = root.value.approx();
        C cv = std::pow(rv, 1.0 / qq);
        double rad = (root.value.exact ? 0.0 : root.value.b.radius) + 1e-13;
        c = PC::box(ComplexBox::make(cv, rad));
      }
      std::vector<PuiseuxTerm> np = prefix;
      np.push_back(make_term(exponent, c));
      BP pn = substitute_level(p, qq, static_cast<int>(pp), c);
      // Restrict to the sheets that collapse onto this root: only the terms
      // relevant to branches through the new origin are used by the next
      // polygon, so the full polynomial can be passed along.
      expand(pn, E * qq, exponent, np, depth + 1, ctx, out);
    }
  }
}

GermBranchData run_engine(const MPoly& clump, const std::string& param,
                          const std::string& fiber, bool want_params,
                          const Rational& order, int clump_mult) {
  EngineCtx ctx;
  ctx.want_params = want_params;
  ctx.order_target = order;
  std::vector<RawBranch> raw;
  BP p = bp_from_mpoly(clump, param, fiber);
  expand(p, 1, Rational(0), {}, 0, ctx, raw);
  GermBranchData out;
  out.numeric_path = ctx.numeric;
  for (auto& rb : raw) {
    PuiseuxBranch b;
    b.ramification = static_cast<int>(rb.e);
    b.terms = rb.terms;
    b.multiplicity = clump_mult;
    b.truncation_order = rb.complete ? Rational(1L << 30) : order;
    b.exact = rb.exact &&
              std::all_of(rb.terms.begin(), rb.terms.end(),
                          [](const PuiseuxTerm& t) { return t.exact; });
    out.branches.push_back(std::move(b));
    out.count += 1;
    out.multiplicities.push_back(clump_mult);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

PlaneCurveGerm PlaneCurveGerm::make(const MPoly& eq, const std::string& param,
                                    const std::string& fiber) {
  if (eq.is_zero()) throw DomainError("germ: zero equation");
  for (const auto& v : eq.vars())
    if (v != param && v != fiber)
      throw DomainError("germ: unexpected variable " + v);
  MPoly at0 = eq.subst_var(param, MPoly::constant(0));
  if (at0.is_zero())
    throw DomainError("germ: " + param + " divides the equation (not fiber-finite)");
  auto cs = at0.coeffs_in(fiber);
  int d = 0;
  while (d < static_cast<int>(cs.size()) && cs[d].is_zero()) ++d;
  PlaneCurveGerm g;
  g.equation = eq;
  g.param = param;
  g.fiber = fiber;
  g.weierstrass_degree = d;
  g.reduced = false;
  return g;
}

NewtonPolygon newton_polygon(const PlaneCurveGerm& g) {
  BP p = bp_from_mpoly(g.equation, g.param, g.fiber);
  auto pts = bp_support(p);
  auto sides = lower_hull_sides(pts);
  NewtonPolygon np;
  // Vertices listed with descending fiber exponent (paper-style "(2,0)-(0,3)").
  std::vector<std::pair<int, long>> verts;
  for (const auto& s : sides) {
    verts.push_back({s.j1, s.v1});
    verts.push_back({s.j2, s.v2});
  }
  if (verts.empty() && !pts.empty())
    verts.push_back({pts.begin()->first, pts.begin()->second});
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::reverse(verts.begin(), verts.end());
  np.vertices = verts;
  for (const auto& s : sides) {
    long dv = s.v1 - s.v2;
    int dj = s.j2 - s.j1;
    if (dv <= 0) continue;
    NewtonSegment seg;
    seg.from = {s.j2, s.v2};
    seg.to = {s.j1, s.v1};
    seg.slope = ratio(dv, dj);
    long g2 = std::gcd(dv, static_cast<long>(dj));
    seg.lattice_length = static_cast<int>(g2);
    seg.interior_points = static_cast<int>(g2 - 1);
    np.segments.push_back(seg);
  }
  return np;
}

GermBranchData puiseux_branch_data(const PlaneCurveGerm& g, const Rational& order,
                                   bool want_parametrizations) {
  auto clumps = squarefree_decomposition(g.equation, g.fiber);
  GermBranchData out;
  for (const auto& cl : clumps) {
    // Branches through the origin only: skip clumps not passing through 0.
    std::map<std::string, Rational> pt;
    for (const auto& v : cl.factor.vars()) pt[v] = Rational(0);
    if (!cl.factor.vars().empty() && cl.factor.eval_rational(pt) != 0) continue;
    if (cl.factor.vars().empty()) continue;
    auto sub = run_engine(cl.factor, g.param, g.fiber, want_parametrizations,
                          order, cl.multiplicity);
    out.count += sub.count;
    out.numeric_path = out.numeric_path || sub.numeric_path;
    for (auto& b : sub.branches) out.branches.push_back(std::move(b));
    for (int m : sub.multiplicities) out.multiplicities.push_back(m);
  }
  std::sort(out.multiplicities.rbegin(), out.multiplicities.rend());
  return out;
}

int puiseux_branch_count(const PlaneCurveGerm& g) {
  return puiseux_branch_data(g, Rational(4), false).count;
}

std::vector<PuiseuxBranch> puiseux_branches(const PlaneCurveGerm& g,
                                            const Rational& order) {
  return puiseux_branch_data(g, order, true).branches;
}

std::string PuiseuxBranch::str() const {
  std::ostringstream os;
  os << "e=" << ramification << " mult=" << multiplicity << " [";
  for (size_t i = 0; i < terms.size(); ++i) {
    if (i) os << ", ";
    const auto& t = terms[i];
    if (t.exact)
      os << rational_str(t.coeff_exact);
    else {
      os << t.coeff_box.re << (t.coeff_box.im >= 0 ? "+" : "-")
         << std::abs(t.coeff_box.im) << "i (+-" << t.coeff_box.radius << ")";
    }
    os << " * t^(" << rational_str(t.exponent) << ")";
  }
  os << "]";
  return os.str();
}

Rational safe_circle_radius(const std::vector<MPoly>& avoid,
                            const std::string& var, const Rational& hard_cap) {
  double bound = to_double(hard_cap) * 2;
  bool constrained = false;
  for (const auto& p0 : avoid) {
    if (p0.is_zero() || p0.is_constant()) continue;
    auto cs0 = p0.coeffs_in(var);
    std::vector<Rational> cs;
    for (const auto& c : cs0) {
      if (!c.is_constant())
        throw DomainError("safe_circle_radius: polynomial not univariate");
      cs.push_back(c.constant_value());
    }
    size_t k = 0;
    while (k < cs.size() && cs[k] == 0) ++k;
    if (k >= cs.size() - 0 || cs.size() - k <= 1) continue;  // t^k only
    std::vector<Rational> core(cs.begin() + k, cs.end());
    constrained = true;
    double lb = 0;
    try {
      auto clusters = rational_roots_certified(core);
      double m = 1e300;
      bool ok = true;
      for (const auto& cl : clusters) {
        double lo = cl.box.abs_lower();
        if (lo <= 0) {
          ok = false;
          break;
        }
        m = std::min(m, lo);
      }
      if (ok && m < 1e300) lb = m;
    } catch (const Error&) {
      lb = 0;
    }
    if (lb <= 0) lb = to_double(root_abs_lower_bound(core));
    bound = std::min(bound, lb);
  }
  if (!constrained) return hard_cap;
  Rational r = pow2_below(bound / 2);
  if (r > hard_cap) r = hard_cap;
  if (r <= 0) throw CertificationError("safe_circle_radius: no positive radius");
  return r;
}

namespace {

// Near-sheet selection: indices of the `near_count` smallest-modulus fiber
// points; requires a factor-2 modulus gap to the remaining sheets.
std::vector<int> near_indices(const std::vector<C>& fiber, int near_count) {
  int D = static_cast<int>(fiber.size());
  if (near_count >= D) {
    std::vector<int> all(D);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  std::vector<int> idx(D);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return std::abs(fiber[a]) < std::abs(fiber[b]);
  });
  double hi = std::abs(fiber[idx[near_count - 1]]);
  double lo = std::abs(fiber[idx[near_count]]);
  if (lo < 2 * hi)
    throw CertificationError("near/far sheet gap not certified");
  idx.resize(near_count);
  return idx;
}

BranchCount clump_count_tracking(const MPoly& clump, const std::string& param,
                                 const std::string& fiber, int mult,
                                 const TrackOptions& topts) {
  BranchCount bc;
  MPoly disc = discriminant(clump, fiber);
  MPoly lc = clump.leading_coeff(fiber);
  Rational r = safe_circle_radius({disc, lc}, param);
  MPoly at0 = clump.subst_var(param, MPoly::constant(0));
  auto cs0 = at0.coeffs_in(fiber);
  int d_near = 0;
  while (d_near < static_cast<int>(cs0.size()) && cs0[d_near].is_zero()) ++d_near;

  for (int attempt = 0; attempt < 12; ++attempt) {
    bool avoid_ok =
        (disc.is_constant() ||
         certify_nonvanishing_on_circle(disc, param, Rational(0), r)) &&
        (lc.is_constant() ||
         certify_nonvanishing_on_circle(lc, param, Rational(0), r));
    if (!avoid_ok) {
      r /= 2;
      continue;
    }
    CircleFamily fam;
    fam.zcoeffs = clump.coeffs_in(fiber);
    fam.tvar = param;
    fam.center = Rational(0);
    fam.radius = r;
    try {
      TrackResult tr = track_circle_family(fam, topts);
      auto near = near_indices(tr.base_fiber, d_near);
      std::vector<bool> is_near(tr.base_fiber.size(), false);
      for (int i : near) is_near[i] = true;
      for (int i : near)
        if (!is_near[tr.perm[i]])
          throw CertificationError("monodromy mixes germ and far sheets");
      // Cycle count restricted to the near sheets.
      std::vector<bool> seen(tr.base_fiber.size(), false);
      int cycles = 0;
      for (int i : near) {
        if (seen[i]) continue;
        ++cycles;
        int j = i;
        while (!seen[j]) {
          seen[j] = true;
          j = tr.perm[j];
        }
      }
      bc.count = cycles;
      bc.multiplicities.assign(cycles, mult);
      bc.used_tracking = true;
      bc.radius = r;
      return bc;
    } catch (const CertificationError&) {
      r /= 2;
    }
  }
  throw CertificationError("branch_count: tracking failed at all radii");
}

}  // namespace

BranchCount branch_count(const PlaneCurveGerm& g, const TrackOptions& topts) {
  auto clumps = squarefree_decomposition(g.equation, g.fiber);
  BranchCount total;
  for (const auto& cl : clumps) {
    if (cl.factor.is_constant()) continue;
    std::map<std::string, Rational> pt;
    for (const auto& v : cl.factor.vars()) pt[v] = Rational(0);
    if (cl.factor.eval_rational(pt) != 0) continue;  // not through the origin
    // Newton-polygon fast path: single positive-slope segment spanning from
    // the constant term, no interior lattice points.
    PlaneCurveGerm cg;
    cg.equation = cl.factor;
    cg.param = g.param;
    cg.fiber = g.fiber;
    auto np = newton_polygon(cg);
    bool fast = false;
    if (np.segments.size() == 1) {
      const auto& s = np.segments[0];
      // Segment must run from the constant-in-fiber vertex (fiber exp 0) to a
      // vertex at parameter order 0, with no interior lattice points.
      if (s.to.first == 0 && s.from.second == 0 && s.interior_points == 0 &&
          s.lattice_length == 1)
        fast = true;
    }
    if (fast) {
      total.count += 1;
      total.multiplicities.push_back(cl.multiplicity);
      continue;
    }
    auto bc = clump_count_tracking(cl.factor, g.param, g.fiber, cl.multiplicity,
                                   topts);
    total.count += bc.count;
    total.used_tracking = total.used_tracking || bc.used_tracking;
    if (bc.used_tracking) total.radius = bc.radius;
    for (int m : bc.multiplicities) total.multiplicities.push_back(m);
  }
  std::sort(total.multiplicities.rbegin(), total.multiplicities.rend());
  return total;
}

bool is_irreducible_germ(const PlaneCurveGerm& g, bool reduced_structure,
                         const TrackOptions& topts) {
  auto bc = branch_count(g, topts);
  if (bc.count != 1) return false;
  if (reduced_structure) return true;
  return bc.multiplicities == std::vector<int>{1};
}

namespace {

// Near-origin fiber roots: full solve, modulus sort, certified gap check.
std::vector<C> near_fiber_roots(const std::vector<C>& coeffs, int near_count) {
  auto full = expand_clusters(complex_roots(coeffs));
  int D = static_cast<int>(full.size());
  if (near_count >= D) return full;
  std::sort(full.begin(), full.end(),
            [](C a, C b) { return std::abs(a) < std::abs(b); });
  double hi = std::abs(full[near_count - 1]);
  double lo = std::abs(full[near_count]);
  if (lo < 4 * hi)
    throw CertificationError("near/far sheet gap not certified (numeric)");
  full.resize(near_count);
  return full;
}

// Cluster threshold from the largest logarithmic gap in the pairwise distance
// spectrum; falls back to tol * scale when there is no pronounced gap.
double cluster_threshold(const std::vector<C>& roots, double tol) {
  double scale = 1e-300;
  for (const auto& z : roots) scale = std::max(scale, std::abs(z));
  std::vector<double> dists;
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j)
      dists.push_back(std::max(std::abs(roots[i] - roots[j]), 1e-300));
  if (dists.empty()) return tol * scale;
  std::sort(dists.begin(), dists.end());
  double best_ratio = 1, thr = tol * scale;
  for (size_t i = 0; i + 1 < dists.size(); ++i) {
    double ratio = dists[i + 1] / dists[i];
    if (ratio > best_ratio) {
      best_ratio = ratio;
      thr = std::sqrt(dists[i] * dists[i + 1]);
    }
  }
  // Only trust a pronounced gap; otherwise everything is a singleton.
  if (best_ratio < 1e3) return tol * scale;
  return thr;
}

}  // namespace

SectionProfile section_profile_numeric(const CircleFamily& fam, int near_count,
                                       double cluster_tol) {
  // Fix the clustering threshold at the basepoint and keep it around the loop.
  double threshold;
  {
    auto roots0 = near_fiber_roots(fam.fiber_coeffs(0.0), near_count);
    threshold = cluster_threshold(roots0, cluster_tol);
  }
  auto cluster_at = [&](double theta) {
    auto coeffs = fam.fiber_coeffs(theta);
    auto roots = near_fiber_roots(coeffs, near_count);
    double scale = 1e-300;
    for (const auto& z : roots) scale = std::max(scale, std::abs(z));
    (void)scale;
    // Tolerance clustering (transitive).
    int n = static_cast<int>(roots.size());
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
          if (comp[b] < 0 &&
              std::abs(roots[a] - roots[b]) < threshold) {
            comp[b] = nc;
            stack.push_back(b);
          }
      }
      ++nc;
    }
    std::vector<std::pair<C, int>> clusters(nc, {C(0), 0});
    for (int i = 0; i < n; ++i) {
      clusters[comp[i]].first += roots[i];
      clusters[comp[i]].second += 1;
    }
    for (auto& [c, m] : clusters) c /= static_cast<double>(m);
    std::sort(clusters.begin(), clusters.end(),
              [](const std::pair<C, int>& a, const std::pair<C, int>& b) {
                if (a.first.real() != b.first.real())
                  return a.first.real() < b.first.real();
                return a.first.imag() < b.first.imag();
              });
    return clusters;
  };

  auto start = cluster_at(0.0);
  int nc = static_cast<int>(start.size());
  // Identify near clusters by modulus until multiplicities sum to near_count.
  std::vector<int> order(nc);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::abs(start[a].first) < std::abs(start[b].first);
  });
  std::vector<bool> near(nc, false);
  int acc = 0;
  for (int i : order) {
    if (acc >= near_count) break;
    near[i] = true;
    acc += start[i].second;
  }
  if (acc != near_count)
    throw CertificationError("section clusters do not split at the near count");

  // Coarse continuation of cluster centroids around the circle.
  std::vector<C> cur;
  for (const auto& [c, m] : start) cur.push_back(c);
  auto minsep = [](const std::vector<C>& v) {
    double m = 1e300;
    for (size_t i = 0; i < v.size(); ++i)
      for (size_t j = i + 1; j < v.size(); ++j)
        m = std::min(m, std::abs(v[i] - v[j]));
    return m;
  };
  double theta = 0;
  const double tau = 2 * std::acos(-1.0);
  double h = tau / 64;
  std::vector<int> strand(nc);
  std::iota(strand.begin(), strand.end(), 0);
  long guard = 0;
  while (theta < tau - 1e-15) {
    double step = std::min(h, tau - theta);
    while (true) {
      if (++guard > (1 << 20))
        throw CertificationError("section cluster tracking: step budget");
      auto nxt = cluster_at(theta + step);
      if (static_cast<int>(nxt.size()) != nc) {
        step /= 2;
        continue;
      }
      // Match clusters by nearest neighbour under the 1/3-separation rule.
      double sep = std::min(minsep(cur), 1e300);
      std::vector<int> match(nc, -1);
      std::vector<bool> used(nc, false);
      bool ok = true;
      for (int i = 0; i < nc && ok; ++i) {
        double best = 1e300;
        int bj = -1;
        for (int j = 0; j < nc; ++j) {
          double d = std::abs(nxt[j].first - cur[i]);
          if (!used[j] && d < best) {
            best = d;
            bj = j;
          }
        }
        if (bj < 0 || best > sep / 3 || nxt[bj].second != start[strand[i]].second)
          ok = false;
        else {
          match[i] = bj;
          used[bj] = true;
        }
      }
      if (!ok) {
        step /= 2;
        continue;
      }
      std::vector<C> ncur(nc);
      std::vector<int> nstrand(nc);
      for (int i = 0; i < nc; ++i) {
        ncur[i] = nxt[match[i]].first;
        nstrand[i] = strand[i];
      }
      cur = ncur;
      strand = nstrand;
      theta += step;
      h = std::min(step * 1.5, tau / 64);
      break;
    }
  }
  // Closure: match final centroids to the initial ones.
  std::vector<int> img(nc, -1);
  std::vector<bool> used(nc, false);
  double sep0 = minsep([&] {
    std::vector<C> v;
    for (const auto& [c, m] : start) v.push_back(c);
    return v;
  }());
  for (int i = 0; i < nc; ++i) {
    double best = 1e300;
    int bj = -1;
    for (int j = 0; j < nc; ++j) {
      double d = std::abs(cur[i] - start[j].first);
      if (!used[j] && d < best) {
        best = d;
        bj = j;
      }
    }
    if (bj < 0 || best > sep0 / 3)
      throw CertificationError("section cluster closure failed");
    img[strand[i]] = bj;
    used[bj] = true;
  }
  Permutation perm(img);
  SectionProfile sp;
  for (int i = 0; i < nc; ++i)
    if (near[i]) sp.multiplicities.push_back(start[i].second);
  std::sort(sp.multiplicities.rbegin(), sp.multiplicities.rend());
  std::vector<bool> seen(nc, false);
  for (int i = 0; i < nc; ++i) {
    if (!near[i] || seen[i]) continue;
    sp.reduced_branch_count += 1;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = perm[j];
    }
  }
  return sp;
}

}  // namespace arcsect
