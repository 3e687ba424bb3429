#include "arcsect/decide.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <sstream>

#include "arcsect/polyops.hpp"

namespace arcsect {

namespace {

using C = std::complex<double>;

MPoly subst_xyz(const MPoly& f, const MPoly& nx, const MPoly& ny,
                const MPoly& nz) {
  std::map<std::string, MPoly> m;
  for (const auto& v : f.vars()) {
    if (v == "x")
      m[v] = nx;
    else if (v == "y")
      m[v] = ny;
    else if (v == "z")
      m[v] = nz;
    else
      throw DomainError("surface must live in (x, y, z); found " + v);
  }
  return f.is_constant() ? f : f.substitute(m);
}

}  // namespace

ProjectionSetup setup_projection(const MPoly& F,
                                 const std::array<Rational, 3>& direction) {
  if (F.is_zero() || F.is_constant()) throw DomainError("setup: trivial surface");
  for (const auto& v : F.vars())
    if (v != "x" && v != "y" && v != "z")
      throw DomainError("surface must live in (x, y, z)");
  const auto& p = direction;
  if (p[0] == 0 && p[1] == 0 && p[2] == 0)
    throw DomainError("setup: zero direction");
  // Properness: F restricted to the direction line must not vanish.
  {
    MPoly T = MPoly::var("t");
    MPoly on_line = subst_xyz(F, T.scaled(p[0]), T.scaled(p[1]), T.scaled(p[2]));
    if (on_line.is_zero())
      throw DomainError(
          "projection is not finite: the direction line lies inside the surface");
  }
  // Basis completion: direction becomes the z-axis.
  std::array<Rational, 3> b1, b2;
  if (p[2] != 0) {
    b1 = {1, 0, 0};
    b2 = {0, 1, 0};
  } else if (p[1] != 0) {
    b1 = {1, 0, 0};
    b2 = {0, 0, 1};
  } else {
    b1 = {0, 1, 0};
    b2 = {0, 0, 1};
  }
  MPoly X = MPoly::var("x"), Y = MPoly::var("y"), Z = MPoly::var("z");
  auto coord = [&](int i) {
    return X.scaled(b1[i]) + Y.scaled(b2[i]) + Z.scaled(p[i]);
  };
  ProjectionSetup s;
  s.F_input = F;
  s.direction = direction;
  s.F = normalize_primitive(subst_xyz(F, coord(0), coord(1), coord(2)));
  s.m = s.F.order();
  // Weierstrass degree: ord_z F(0,0,z).
  MPoly at0 = subst_xyz(s.F, MPoly::constant(0), MPoly::constant(0), Z);
  auto cs = at0.coeffs_in("z");
  int d = 0;
  while (d < static_cast<int>(cs.size()) && cs[d].is_zero()) ++d;
  if (d >= static_cast<int>(cs.size()))
    throw DomainError("setup: projection not finite (internal)");
  s.d = d;
  if (s.d < 1)
    throw DomainError("setup: the surface does not pass through the origin");
  std::map<std::string, Rational> at_dir;
  MPoly init = F.initial_form();
  std::map<std::string, Rational> pd;
  for (const auto& v : init.vars()) {
    if (v == "x") pd[v] = p[0];
    if (v == "y") pd[v] = p[1];
    if (v == "z") pd[v] = p[2];
  }
  s.transverse = !init.is_zero() && init.eval_rational(pd) != 0;
  return s;
}

// ---------------------------------------------------------------------------
// Tangent cone screening

namespace {

MPoly radical3(const MPoly& f) {
  MPoly g = f;
  for (const char* v : {"x", "y", "z"}) g = mpoly_gcd(g, f.derivative(v));
  if (g.is_constant()) return normalize_primitive(f);
  return normalize_primitive(exact_div(f, g));
}

// Coefficient matrix of p0*Sx + p1*Sy + p2*Sz == 0 (rows: monomials).
std::optional<std::array<Rational, 3>> cone_vertex(const MPoly& S) {
  MPoly d[3] = {S.derivative("x"), S.derivative("y"), S.derivative("z")};
  // Collect monomials.
  std::map<std::string, std::array<Rational, 3>> rows;
  for (int i = 0; i < 3; ++i) {
    for (const auto& [e, c] : d[i].terms()) {
      std::ostringstream key;
      for (size_t k = 0; k < d[i].vars().size(); ++k)
        key << d[i].vars()[k] << "^" << e[k] << " ";
      // Keys must be variable-set independent: rebuild in (x,y,z).
      int ex = 0, ey = 0, ez = 0;
      for (size_t k = 0; k < d[i].vars().size(); ++k) {
        if (d[i].vars()[k] == "x") ex = e[k];
        if (d[i].vars()[k] == "y") ey = e[k];
        if (d[i].vars()[k] == "z") ez = e[k];
      }
      std::ostringstream k2;
      k2 << ex << "," << ey << "," << ez;
      rows[k2.str()][i] += c;
    }
  }
  std::vector<std::vector<Rational>> M;
  for (const auto& [k, r] : rows) M.push_back({r[0], r[1], r[2]});
  auto kernel = rational_kernel(M, 3);
  if (kernel.empty()) return std::nullopt;
  return std::array<Rational, 3>{kernel[0][0], kernel[0][1], kernel[0][2]};
}

// Exact "no common projective zero" certificate for (S, Sx, Sy, Sz): says the
// cone is smooth (hence irreducible).  One-sided: false means "not certified".
bool certify_smooth(const MPoly& S) {
  MPoly Sx = S.derivative("x"), Sy = S.derivative("y"), Sz = S.derivative("z");
  // Affine patch z = 1: common zeros of (Sx, Sy, Sz) there.
  auto patch = [&](const MPoly& f) {
    return f.subst_var("z", MPoly::constant(1));
  };
  MPoly ax = patch(Sx), ay = patch(Sy), az = patch(Sz);
  // Eliminate y pairwise; a common affine singular point forces a common
  // root of the resultants.
  auto safe_res = [&](const MPoly& f, const MPoly& g) -> std::optional<MPoly> {
    if (f.is_zero() || g.is_zero()) return std::nullopt;
    if (!f.depends_on("y") || !g.depends_on("y")) {
      // already univariate in x: use directly
      return mpoly_gcd(f, g).is_constant() ? MPoly::constant(1) : MPoly();
    }
    MPoly r = resultant(f, g, "y");
    if (r.is_zero()) return std::nullopt;
    return r;
  };
  auto r1 = safe_res(ax, ay), r2 = safe_res(ax, az), r3 = safe_res(ay, az);
  if (!r1 || !r2 || !r3) return false;
  MPoly g = mpoly_gcd(mpoly_gcd(*r1, *r2), *r3);
  if (!g.is_constant()) return false;
  // Boundary z = 0: the binary forms (Sx, Sy, Sz)(x, y, 0) must have no
  // common projective root: their gcd must be constant.
  MPoly bx = Sx.subst_var("z", MPoly::constant(0));
  MPoly by = Sy.subst_var("z", MPoly::constant(0));
  MPoly bz = Sz.subst_var("z", MPoly::constant(0));
  MPoly bg = mpoly_gcd(mpoly_gcd(bx, by), bz);
  return bg.is_constant();
}

MPoly hessian3(const MPoly& S) {
  const char* vars[3] = {"x", "y", "z"};
  std::vector<std::vector<MPoly>> H(3, std::vector<MPoly>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      H[i][j] = S.derivative(vars[i]).derivative(vars[j]);
  return det_bareiss(H);
}

// Contact order residual of the tangent line at a (numeric) smooth cone point:
// returns |c_k| / scale for k = 2 (flex residual) and k = 3 (hyperflex
// residual) of S restricted to its tangent line.
std::pair<double, double> tangent_contact_residuals(const MPoly& S,
                                                    const std::array<C, 3>& P) {
  std::map<std::string, C> pt{{"x", P[0]}, {"y", P[1]}, {"z", P[2]}};
  C gx = S.derivative("x").eval(pt);
  C gy = S.derivative("y").eval(pt);
  C gz = S.derivative("z").eval(pt);
  // A direction w in the tangent plane, independent of P.
  std::array<C, 3> w;
  std::array<C, 3> g{gx, gy, gz};
  // w = g x P (cross product) is orthogonal... in projective terms pick w
  // solving g.w = 0 and w not proportional to P.
  w = {g[1] * P[2] - g[2] * P[1], g[2] * P[0] - g[0] * P[2],
       g[0] * P[1] - g[1] * P[0]};
  double wn = std::abs(w[0]) + std::abs(w[1]) + std::abs(w[2]);
  if (wn < 1e-12) return {1e300, 1e300};
  int k = S.total_degree();
  // Coefficients of S(P + t w) in t.
  std::vector<C> coeffs(k + 1, C(0));
  // Evaluate by multivariate expansion: S(P + t w) sampled at k+1 points and
  // interpolated would lose accuracy; expand exactly instead.
  // Exact expansion: substitute x -> P0 + t*w0 symbolically is unavailable for
  // complex values, so use finite differences on a circle (DFT), radius 1.
  int N = 2 * (k + 1);
  std::vector<C> vals(N);
  for (int s = 0; s < N; ++s) {
    double th = 2 * M_PI * s / N;
    C t(std::cos(th), std::sin(th));
    std::map<std::string, C> q{{"x", P[0] + t * w[0]},
                               {"y", P[1] + t * w[1]},
                               {"z", P[2] + t * w[2]}};
    vals[s] = S.eval(q);
  }
  for (int c = 0; c <= k; ++c) {
    C acc = 0;
    for (int s = 0; s < N; ++s) {
      double th = -2 * M_PI * s * c / N;
      acc += vals[s] * C(std::cos(th), std::sin(th));
    }
    coeffs[c] = acc / static_cast<double>(N);
  }
  double scale = 0;
  for (const auto& c : coeffs) scale = std::max(scale, std::abs(c));
  if (scale == 0) return {0, 0};
  return {std::abs(coeffs[2]) / scale,
          k >= 3 ? std::abs(coeffs[3]) / scale : 1.0};
}

}  // namespace

std::string cone_class_name(ConeClass c) {
  switch (c) {
    case ConeClass::SingleLine: return "single-line";
    case ConeClass::ConcurrentLines: return "concurrent-lines";
    case ConeClass::Conic: return "conic";
    case ConeClass::MaxContactCurve: return "max-contact-curve";
    case ConeClass::NoAdmissibleLine: return "no-admissible-line";
    case ConeClass::UnknownNumeric: return "unknown-numeric";
  }
  return "?";
}

TangentCone tangent_cone_screen(const MPoly& F, double tolerance) {
  if (F.is_zero()) throw DomainError("tangent_cone_screen: zero surface");
  TangentCone tc;
  tc.form = F.initial_form();
  tc.degree = tc.form.total_degree();
  tc.reduced = radical3(tc.form);
  tc.tolerance = tolerance;
  int k = tc.reduced.total_degree();
  if (k == 1) {
    tc.cls = ConeClass::SingleLine;
    tc.admissible_family = "all-lines";
    return tc;
  }
  if (auto v = cone_vertex(tc.reduced)) {
    tc.cls = ConeClass::ConcurrentLines;
    tc.vertex = v;
    tc.admissible_family = "pencil-through-vertex";
    return tc;
  }
  if (k == 2) {
    tc.cls = ConeClass::Conic;
    tc.admissible_family = "tangents-of-conic";
    return tc;
  }
  // deg >= 3, no vertex: hyperflex search, sound only on a certified smooth
  // (hence irreducible) cone.
  tc.smooth_certified = certify_smooth(tc.reduced);
  if (!tc.smooth_certified) {
    tc.cls = ConeClass::UnknownNumeric;
    tc.admissible_family = "none";
    return tc;
  }
  const MPoly& S = tc.reduced;
  MPoly H = hessian3(S);
  // Flexes in the z = 1 patch via elimination; exact multiplicity structure of
  // Res_y(S,H) decides the hyperflex question when the frame is generic.
  std::array<std::pair<Rational, Rational>, 4> frames = {
      std::make_pair(Rational(0), Rational(0)), {Rational(1, 3), Rational(0)},
      {Rational(1, 7), Rational(2, 7)}, {Rational(-2, 5), Rational(1, 5)}};
  int expected = 3 * k * (k - 2);
  for (const auto& [fa, fb] : frames) {
    // x -> x + fa*z, y -> y + fb*z keeps the form homogeneous.
    MPoly X = MPoly::var("x"), Y = MPoly::var("y"), Z = MPoly::var("z");
    MPoly Sf = subst_xyz(S, X + Z.scaled(fa), Y + Z.scaled(fb), Z);
    MPoly Hf = subst_xyz(H, X + Z.scaled(fa), Y + Z.scaled(fb), Z);
    MPoly S1 = Sf.subst_var("z", MPoly::constant(1));
    MPoly H1 = Hf.subst_var("z", MPoly::constant(1));
    if (!S1.depends_on("y") || !H1.depends_on("y")) continue;
    MPoly R = resultant(S1, H1, "y");
    if (R.is_zero()) continue;
    if (R.degree("x") != expected) continue;  // flexes hide at infinity
    auto dec = squarefree_decomposition(R, "x");
    bool squarefree = dec.size() == 1 && dec[0].multiplicity == 1;
    // Locate the flexes numerically for the report (and the tolerance check).
    std::vector<Rational> rc;
    {
      std::vector<MPoly> cs = R.coeffs_in("x");
      for (auto& cpoly : cs) rc.push_back(cpoly.constant_value());
    }
    std::vector<C> dc;
    for (const auto& c : rc) dc.push_back(C(to_double(c), 0));
    std::vector<RootCluster> xroots;
    try {
      xroots = complex_roots(dc);
    } catch (const Error&) {
      continue;
    }
    bool any_hyper = false;
    double worst = 1e300;
    std::vector<FlexInfo> flexes;
    for (const auto& xr : xroots) {
      // y above x0: common root of S1, H1.
      auto yof = [&](const MPoly& f) {
        MPoly r = f.subst_var("x", MPoly::constant(0));  // placeholder
        return r;
      };
      (void)yof;
      C x0 = xr.box.center();
      // roots of S1(x0, y): pick the one nearly annihilating H1.
      std::vector<C> sc;
      {
        auto cs = S1.coeffs_in("y");
        for (const auto& cp : cs)
          sc.push_back(cp.is_constant()
                           ? C(to_double(cp.constant_value()), 0)
                           : cp.eval({{"x", x0}}));
      }
      std::vector<RootCluster> ys;
      try {
        ys = complex_roots(sc);
      } catch (const Error&) {
        continue;
      }
      double best = 1e300;
      C y0 = 0;
      for (const auto& yr : ys) {
        C val = H1.eval({{"x", x0}, {"y", yr.box.center()}});
        if (std::abs(val) < best) {
          best = std::abs(val);
          y0 = yr.box.center();
        }
      }
      std::array<C, 3> P{x0 + to_double(fa), y0 + to_double(fb), C(1, 0)};
      auto [flex_res, hyper_res] = tangent_contact_residuals(S, P);
      FlexInfo fi;
      fi.point = P;
      fi.contact_residual = hyper_res;
      fi.hyperflex = hyper_res < tolerance;
      any_hyper = any_hyper || fi.hyperflex;
      worst = std::min(worst, hyper_res);
      flexes.push_back(fi);
      (void)flex_res;
    }
    tc.flexes = flexes;
    if (squarefree && !any_hyper) {
      tc.cls = ConeClass::NoAdmissibleLine;
      tc.admissible_family = "none";
      return tc;
    }
    if (any_hyper) {
      tc.cls = ConeClass::MaxContactCurve;
      tc.admissible_family = "flex-tangents";
      return tc;
    }
    // squarefree failed but no numeric hyperflex: try another frame
  }
  tc.cls = ConeClass::UnknownNumeric;
  tc.admissible_family = "none";
  return tc;
}

// ---------------------------------------------------------------------------
// Prop 6.1 check

namespace {

// Resultant of two binary forms given by full coefficient lists (ascending in
// the first variable), as a Sylvester determinant; entries may be MPoly.
MPoly binary_resultant(const std::vector<MPoly>& p, const std::vector<MPoly>& q) {
  int m = static_cast<int>(p.size()) - 1;
  int n = static_cast<int>(q.size()) - 1;
  if (m < 1 || n < 1) {
    if (m == 0 && n >= 1) return p[0].pow(n);
    if (n == 0 && m >= 1) return q[0].pow(m);
    return MPoly::constant(1);
  }
  size_t dim = static_cast<size_t>(m + n);
  std::vector<std::vector<MPoly>> M(dim, std::vector<MPoly>(dim));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) M[r][r + k] = p[m - k];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) M[n + r][r + k] = q[n - k];
  return det_bareiss(std::move(M));
}

// Projective roots of a binary form in (x, y): pairs (lambda : 1) plus
// (1 : 0) with multiplicity.
struct BinaryRoots {
  std::vector<std::pair<C, int>> affine;  // lambda = x/y
  int at_infinity = 0;
};

BinaryRoots binary_roots(const MPoly& form) {
  BinaryRoots out;
  if (form.is_zero() || form.is_constant()) return out;
  int n = form.total_degree();
  std::vector<C> coeffs(n + 1, C(0));
  for (const auto& [e, c] : form.terms()) {
    int ex = 0;
    for (size_t i = 0; i < form.vars().size(); ++i)
      if (form.vars()[i] == "x") ex = e[i];
    coeffs[ex] += to_double(c);
  }
  int deg = n;
  while (deg > 0 && std::abs(coeffs[deg]) == 0) --deg;
  out.at_infinity = n - deg;
  if (deg >= 1) {
    std::vector<C> cs(coeffs.begin(), coeffs.begin() + deg + 1);
    for (const auto& cl : complex_roots(cs))
      out.affine.push_back({cl.box.center(), cl.multiplicity});
  }
  return out;
}

double chordal(const C& a, const C& b) {
  return std::abs(a - b) /
         std::sqrt((1 + std::norm(a)) * (1 + std::norm(b)));
}

double chordal_inf(const C& a) { return 1 / std::sqrt(1 + std::norm(a)); }

}  // namespace

ConeDiscriminantReport cone_discriminant_check(const ProjectionSetup& setup,
                                               double tolerance) {
  ConeDiscriminantReport rep;
  MPoly S = radical3(setup.F.initial_form());
  int k = S.total_degree();
  // Not applicable for a line or a union of lines (Cor 6.2 hypotheses).
  if (k <= 1 || cone_vertex(S)) {
    rep.applicable = false;
    rep.note = "cone is a line or a union of lines; check not applicable";
    return rep;
  }
  rep.applicable = true;
  MPoly disc = discriminant(setup.F, setup.zvar);
  rep.delta_initial = normalize_primitive(disc.initial_form());
  // Pencil through p_pi = (0:0:1): line (s u, s v, t), binary form in (s, t).
  MPoly B = subst_xyz(S, MPoly::var("s") * MPoly::var("u"),
                      MPoly::var("s") * MPoly::var("v"), MPoly::var("t"));
  MPoly Bs = B.derivative("s"), Bt = B.derivative("t");
  auto coeff_list = [&](const MPoly& f, int deg) {
    // coefficients in s with t-powers folded by homogeneity
    std::vector<MPoly> cs(deg + 1);
    for (int i = 0; i <= deg; ++i) {
      MPoly ci = f.coeff_of("s", i).subst_var("t", MPoly::constant(1));
      cs[i] = ci;
    }
    return cs;
  };
  MPoly D = binary_resultant(coeff_list(Bs, k - 1), coeff_list(Bt, k - 1));
  // D lives in (u, v): rename to (x, y).
  D = D.rename_var("u", "x").rename_var("v", "y");
  if (D.is_zero()) {
    rep.applicable = false;
    rep.note = "degenerate pencil discriminant";
    return rep;
  }
  rep.pencil_disc = normalize_primitive(D);
  MPoly r1 = reduced_part(rep.delta_initial);
  MPoly r2 = reduced_part(rep.pencil_disc);
  rep.exact_equal = (r1 == r2);
  // Numeric root-set comparison.
  auto R1 = binary_roots(r1), R2 = binary_roots(r2);
  double worst = 0;
  bool ok = (R1.at_infinity > 0) == (R2.at_infinity > 0);
  std::vector<bool> used(R2.affine.size(), false);
  for (const auto& [a, ma] : R1.affine) {
    double best = 1e300;
    int bj = -1;
    for (size_t j = 0; j < R2.affine.size(); ++j) {
      double d2 = chordal(a, R2.affine[j].first);
      if (!used[j] && d2 < best) {
        best = d2;
        bj = j;
      }
    }
    if (bj < 0) {
      if (R2.at_infinity > 0) best = chordal_inf(a);
      else ok = false;
    } else {
      used[bj] = true;
    }
    worst = std::max(worst, best == 1e300 ? 1.0 : best);
  }
  for (size_t j = 0; j < R2.affine.size(); ++j)
    if (!used[j]) {
      double best = 1e300;
      for (const auto& [a, ma] : R1.affine)
        best = std::min(best, chordal(R2.affine[j].first, a));
      if (R1.at_infinity > 0)
        best = std::min(best, chordal_inf(R2.affine[j].first));
      worst = std::max(worst, best == 1e300 ? 1.0 : best);
    }
  rep.max_mismatch = worst;
  rep.matched = rep.exact_equal || (ok && worst < tolerance);
  return rep;
}

// ---------------------------------------------------------------------------
// Arcs and sections

std::string Arc::str() const {
  return "(" + x.str() + ", " + y.str() + ")";
}

void validate_arc(const Arc& arc) {
  if (arc.x.is_zero() && arc.y.is_zero())
    throw DomainError("arc: both components are zero");
  for (const MPoly* p : {&arc.x, &arc.y}) {
    if (p->is_zero()) continue;
    for (const auto& v : p->vars())
      if (v != "t") throw DomainError("arc components must be polynomials in t");
    MPoly at0 = p->subst_var("t", MPoly::constant(0));
    if (!at0.is_zero() && at0.constant_value() != 0)
      throw DomainError("arc does not pass through the origin");
  }
  long g = 0;
  for (const MPoly* p : {&arc.x, &arc.y})
    for (const auto& [e, c] : p->terms())
      if (!e.empty() && e[0] > 0) g = std::gcd(g, static_cast<long>(e[0]));
  if (g > 1)
    throw DomainError(
        "arc is a reparametrization of a smaller arc (exponent gcd " +
        std::to_string(g) + ")");
}

PlaneCurveGerm section_germ(const ProjectionSetup& setup, const Arc& arc) {
  MPoly g = subst_xyz(setup.F, arc.x, arc.y, MPoly::var("z"));
  return PlaneCurveGerm::make(g, "t", "z");
}

SectionReport arc_section(const ProjectionSetup& setup, const Arc& arc,
                          const SectionOptions& opts) {
  validate_arc(arc);
  SectionReport rep;
  MPoly disc = discriminant(setup.F, setup.zvar);
  MPoly composed = subst_xyz(disc, arc.x, arc.y, MPoly::var("z"));
  bool inside = composed.is_zero() ||
                (composed.is_constant() && composed.constant_value() == 0);
  rep.inside_discriminant = inside || arc.inside_discriminant;

  if (!inside && arc.valid_radius > 0) {
    // The arc must not meet the discriminant at 0 < |t| < valid_radius.
    std::vector<Rational> cs;
    for (const auto& c : composed.coeffs_in("t")) cs.push_back(c.constant_value());
    size_t k = 0;
    while (k < cs.size() && cs[k] == 0) ++k;
    if (k < cs.size() && cs.size() - k > 1) {
      std::vector<Rational> core(cs.begin() + k, cs.end());
      for (const auto& cl : rational_roots_certified(core)) {
        double lo = cl.box.abs_lower();
        if (lo < to_double(arc.valid_radius) &&
            cl.box.abs_upper() < to_double(arc.valid_radius)) {
          std::ostringstream os;
          os << "arc meets the discriminant at t ~ " << cl.box.re;
          if (cl.box.im != 0) os << (cl.box.im > 0 ? "+" : "") << cl.box.im << "i";
          os << " inside the valid radius";
          throw DomainError(os.str());
        }
      }
    }
  }

  PlaneCurveGerm g = section_germ(setup, arc);
  if (arc.numeric) {
    // Truncated parametrization near the discriminant: numeric sheet
    // clustering with the documented tolerance.
    CircleFamily fam;
    fam.zcoeffs = g.equation.coeffs_in("z");
    fam.tvar = "t";
    fam.center = Rational(0);
    fam.radius = Rational(1, 16);
    auto sp = section_profile_numeric(fam, g.weierstrass_degree, opts.cluster_tol);
    rep.branch_count = sp.reduced_branch_count;
    rep.multiplicities = sp.multiplicities;
    rep.numeric = true;
  } else {
    auto bc = branch_count(g, opts.track);
    rep.branch_count = bc.count;
    rep.multiplicities = bc.multiplicities;
  }
  rep.irreducible_reduced = (rep.branch_count == 1);
  rep.irreducible_strict =
      rep.irreducible_reduced && rep.multiplicities == std::vector<int>{1};
  return rep;
}

// ---------------------------------------------------------------------------
// Discriminant branch screening (Lemma 7.2)

std::vector<BranchScreenReport> screen_discriminant_branches(
    const ProjectionSetup& setup, const SectionOptions& opts) {
  std::vector<BranchScreenReport> out;
  MPoly disc = discriminant(setup.F, setup.zvar);
  MPoly red = reduced_part(disc);
  MPoly T = MPoly::var("t");

  auto push_report = [&](Arc arc, PuiseuxBranch br) {
    BranchScreenReport rep;
    rep.branch = br;
    arc.provenance = Arc::Provenance::DiscriminantBranch;
    arc.inside_discriminant = true;
    rep.section = arc_section(setup, arc, opts);
    rep.arc = arc;
    rep.prunable = !rep.section.irreducible_reduced;
    out.push_back(rep);
  };

  // Coordinate-line components first.
  auto cs = red.coeffs_in("x");
  MPoly core = red;
  {
    int kx = 0;
    auto cl = red.coeffs_in("x");
    // x | red?
    MPoly rx = red;
    while (!rx.is_zero()) {
      MPoly q;
      try {
        q = exact_div(rx, MPoly::var("x"));
      } catch (const DomainError&) {
        break;
      }
      rx = q;
      ++kx;
    }
    if (kx > 0) {
      core = rx;
      Arc a;
      a.x = MPoly();
      a.y = T;
      PuiseuxBranch br;
      br.ramification = 1;
      push_report(a, br);
    }
    int ky = 0;
    MPoly ry = core;
    while (!ry.is_zero()) {
      MPoly q;
      try {
        q = exact_div(ry, MPoly::var("y"));
      } catch (const DomainError&) {
        break;
      }
      ry = q;
      ++ky;
    }
    if (ky > 0) {
      core = ry;
      Arc a;
      a.x = T;
      a.y = MPoly();
      PuiseuxBranch br;
      br.ramification = 1;
      push_report(a, br);
    }
  }
  if (core.is_constant()) return out;
  std::map<std::string, Rational> origin{{"x", Rational(0)}, {"y", Rational(0)}};
  std::map<std::string, Rational> pt;
  for (const auto& v : core.vars()) pt[v] = Rational(0);
  if (core.eval_rational(pt) != 0) return out;  // no further branches at 0

  PlaneCurveGerm dg = PlaneCurveGerm::make(core, "x", "y");
  auto branches = puiseux_branches(dg, Rational(12));
  for (const auto& br : branches) {
    long e = br.ramification;
    // A real-set branch may need the reparametrization t -> zeta * t to make
    // all coefficients real (e.g. a cusp opening toward x < 0).
    int phase_num = -1;
    for (int ph = 0; ph < 2 * e && phase_num < 0; ++ph) {
      bool ok = true;
      for (const auto& term : br.terms) {
        Rational ke = term.exponent * e;
        long kk = ke.get_num().get_si();
        double ang = M_PI * ph * kk / e;
        C rot(std::cos(ang), std::sin(ang));
        C val = term.approx() * rot;
        if (std::abs(val.imag()) > 1e-8 * (1 + std::abs(val.real()))) ok = false;
      }
      if (ok) phase_num = ph;
    }
    if (phase_num < 0) {
      // genuinely complex branch (conjugate pair): no rational representative
      continue;
    }
    Arc a;
    a.provenance = Arc::Provenance::DiscriminantBranch;
    double xang = M_PI * phase_num;  // zeta^e = e^(i pi ph)
    int xsign = (phase_num % 2 == 0) ? 1 : -1;
    a.x = T.pow(static_cast<int>(e)).scaled(Rational(xsign));
    (void)xang;
    MPoly ysum;
    bool exact = true;
    for (const auto& term : br.terms) {
      Rational ke = term.exponent * e;
      if (ke.get_den() != 1) throw DomainError("branch exponent not integral");
      long kk = ke.get_num().get_si();
      Rational coeff;
      bool even_rot = ((phase_num * kk) % (2 * e)) == 0;
      bool half_rot = ((phase_num * kk) % (2 * e)) == e;
      if (term.exact && even_rot) {
        coeff = term.coeff_exact;
      } else if (term.exact && half_rot) {
        coeff = -term.coeff_exact;
      } else {
        exact = exact && term.exact && (even_rot || half_rot);
        double ang = M_PI * phase_num * kk / e;
        C val = term.approx() * C(std::cos(ang), std::sin(ang));
        exact = false;
        coeff = rational_reconstruct(val.real(), 1L << 30);
      }
      ysum += T.pow(static_cast<int>(kk)).scaled(coeff);
    }
    a.y = ysum;
    // Complete exact series are exactly inside the discriminant; truncated
    // ones go down the numeric path.
    MPoly composed = subst_xyz(discriminant(setup.F, setup.zvar), a.x, a.y,
                               MPoly::var("z"));
    a.numeric = !(exact && composed.is_zero());
    push_report(a, br);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generic direction and generic/totally-reducible witnesses

std::pair<Rational, Rational> generic_direction(const ProjectionSetup& setup,
                                                SeededRng& rng) {
  MPoly disc = discriminant(setup.F, setup.zvar);
  MPoly init = disc.initial_form();
  MPoly lc = setup.F.leading_coeff(setup.zvar);
  for (int tries = 0; tries < 256; ++tries) {
    Rational a = rng.next_rational(6, 4);
    Rational b(1);
    std::map<std::string, Rational> pt;
    bool ok = true;
    auto eval_dir = [&](const MPoly& p) {
      std::map<std::string, Rational> q;
      for (const auto& v : p.vars()) {
        if (v == "x") q[v] = a;
        else if (v == "y") q[v] = b;
        else q[v] = Rational(0);
      }
      return p.is_constant() ? p.constant_value() : p.eval_rational(q);
    };
    if (!init.is_zero() && eval_dir(init) == 0) ok = false;
    // The direction must not make the fiber degree collapse identically.
    MPoly T = MPoly::var("t");
    MPoly lc_on_arc = subst_xyz(lc, T.scaled(a), T.scaled(b), MPoly::var("z"));
    if (lc_on_arc.is_zero()) ok = false;
    MPoly disc_on_arc =
        subst_xyz(disc, T.scaled(a), T.scaled(b), MPoly::var("z"));
    if (disc_on_arc.is_zero()) ok = false;
    if (ok) return {a, b};
  }
  throw CertificationError("could not find a generic direction");
}

Arc totally_reducible_arc(const ProjectionSetup& setup,
                          const AnalyzeOptions& opts) {
  SeededRng rng(opts.seed ^ 0x5eedULL);
  MonodromyOptions mo;
  mo.track = opts.track;
  std::string last_err = "no attempt";
  for (int attempt = 0; attempt < 8; ++attempt) {
    try {
      auto [a, b] = generic_direction(setup, rng);
      GenericMonodromy gm =
          generic_monodromy(setup.F, setup.zvar, a, b, setup.d, mo);
      long k = gm.mono.perm.order();
      // Arc through the point (a : b) of the first exceptional divisor,
      // winding ord(sigma) times around it: the section splits into d sheets.
      MPoly T = MPoly::var("t");
      Arc arc;
      arc.provenance = Arc::Provenance::ChartPushdown;
      arc.chart = "E1";
      arc.expo_a = k;
      arc.expo_b = 1;
      // (x, y) = ((a/b + t) * s, s) with s = b * t^k
      MPoly s_poly = T.pow(static_cast<int>(k)).scaled(b);
      arc.x = (MPoly::constant(a / b) + T) * s_poly;
      arc.y = s_poly;
      SectionOptions so = opts.section;
      so.track = opts.track;
      SectionReport rep = arc_section(setup, arc, so);
      if (rep.branch_count != setup.d)
        throw CertificationError(
            "totally reducible arc validation breach: expected " +
            std::to_string(setup.d) + " components, got " +
            std::to_string(rep.branch_count));
      return arc;
    } catch (const Error& e) {
      last_err = e.what();
    }
  }
  throw CertificationError(std::string("totally_reducible_arc failed: ") +
                           last_err);
}

// ---------------------------------------------------------------------------
// Witness arcs from crossings

namespace {

// Exact polynomial graph v = G(u) (or u = H(v)) of a divisor equation, when
// the equation is linear in one variable with a constant leading coefficient.
std::optional<MPoly> solve_graph(const MPoly& eq, const std::string& solve_for) {
  auto cs = eq.coeffs_in(solve_for);
  if (cs.size() != 2) return std::nullopt;
  if (!cs[1].is_constant()) return std::nullopt;
  Rational lc = cs[1].constant_value();
  return (-cs[0]).scaled(1 / lc);
}

}  // namespace

Arc witness_irreducible_arc(const ProjectionSetup& setup,
                            const ResolutionTree& tree,
                            const NormalCrossing& crossing, long a, long b,
                            SeededRng& rng, const AnalyzeOptions& opts) {
  const Chart& chart = tree.charts[crossing.chart];
  const Divisor& da = chart.divisors[crossing.div_a];
  const Divisor& db = chart.divisors[crossing.div_b];
  if (crossing.div_a == crossing.div_b)
    throw UnsupportedError("witness construction at a strict-strict node is "
                           "not supported");
  if (a == 0 && db.kind != Divisor::Kind::Exceptional)
    throw UnsupportedError("witness with zero winding must start on an "
                           "exceptional divisor");
  if (b == 0 && da.kind != Divisor::Kind::Exceptional)
    throw UnsupportedError("witness with zero winding must start on an "
                           "exceptional divisor");
  const auto& [px, py] = crossing.point;
  MPoly T = MPoly::var("t");

  // Figure out coordinates: each divisor is a coordinate line or a strict
  // graph; build u(t), v(t) with the prescribed windings.
  struct Side {
    bool is_x;           // equation essentially x - const (vertical)
    bool graph;          // strict branch solved as a graph
    MPoly graph_poly;    // v = G(u) or u = H(v)
  };
  auto classify = [&](const Divisor& d) -> Side {
    Side s{};
    if (d.kind == Divisor::Kind::Exceptional) {
      s.is_x = d.equation.depends_on("x");
      s.graph = false;
      return s;
    }
    if (auto g = solve_graph(d.equation, "y")) {
      s.is_x = false;
      s.graph = true;
      s.graph_poly = *g;  // y = G(x)
      return s;
    }
    if (auto g = solve_graph(d.equation, "x")) {
      s.is_x = true;
      s.graph = true;
      s.graph_poly = *g;  // x = H(y)
      return s;
    }
    throw UnsupportedError(
        "strict branch is not an exact polynomial graph at " + crossing.label);
  };
  Side sa = classify(da), sb = classify(db);
  if (sa.is_x == sb.is_x)
    throw UnsupportedError("parallel branch orientation at " + crossing.label);

  for (int attempt = 0; attempt < 12; ++attempt) {
    Rational c1 = Rational(rng.next_int(1, 4), 8) *
                  (rng.next_int(0, 1) ? 1 : -1) * crossing.r1;
    Rational c2 = Rational(rng.next_int(1, 4), 8) *
                  (rng.next_int(0, 1) ? 1 : -1) * crossing.r2;
    if (c1 == 0 || c2 == 0) continue;
    // Build (u(t), v(t)): winding a around div_a, b around div_b.
    MPoly offa = (a == 0) ? MPoly::constant(c1) : T.pow(static_cast<int>(a)).scaled(c1);
    MPoly offb = (b == 0) ? MPoly::constant(c2) : T.pow(static_cast<int>(b)).scaled(c2);
    MPoly u, v;
    // div_a vertical (x-side): u = px + offa applied to x coordinate
    // div_b then controls the other coordinate.
    const Side& xs = sa.is_x ? sa : sb;
    const Side& ys = sa.is_x ? sb : sa;
    const MPoly& offx = sa.is_x ? offa : offb;
    const MPoly& offy = sa.is_x ? offb : offa;
    const Rational& pxv = px;
    if (xs.graph && ys.graph) {
      // x = H(y) and y = G(x): solvable when one graph is constant.
      if (xs.graph_poly.is_constant() || xs.graph_poly.is_zero()) {
        u = xs.graph_poly + offx;
        v = ys.graph_poly.subst_var("x", u) + offy;
      } else if (ys.graph_poly.is_constant() || ys.graph_poly.is_zero()) {
        v = ys.graph_poly + offy;
        u = xs.graph_poly.subst_var("y", v) + offx;
      } else {
        throw UnsupportedError("mutually dependent graph branches at " +
                               crossing.label);
      }
    } else if (xs.graph) {
      // x = H(y) branch: set v first, then x = H(v) + offx
      v = MPoly::constant(py) + offy;
      u = xs.graph_poly.subst_var("y", v) + offx;
    } else {
      u = MPoly::constant(pxv) + offx;
      if (ys.graph) {
        v = ys.graph_poly.subst_var("x", u) + offy;
      } else {
        v = MPoly::constant(py) + offy;
      }
    }
    auto compose = [&](const MPoly& f) {
      std::map<std::string, MPoly> m;
      for (const auto& vv : f.vars()) {
        if (vv == "x") m[vv] = u;
        else if (vv == "y") m[vv] = v;
        else m[vv] = MPoly::var(vv);
      }
      return f.is_constant() ? f : f.substitute(m);
    };
    Arc arc;
    arc.provenance = Arc::Provenance::ChartPushdown;
    arc.chart = chart.name;
    arc.expo_a = a;
    arc.expo_b = b;
    arc.x = compose(chart.map_x);
    arc.y = compose(chart.map_y);
    try {
      validate_arc(arc);
      SectionOptions so = opts.section;
      so.track = opts.track;
      SectionReport rep = arc_section(setup, arc, so);
      if (!rep.irreducible_strict)
        throw CertificationError("witness section not irreducible");
      return arc;
    } catch (const Error&) {
      continue;  // re-randomize the constants
    }
  }
  throw CertificationError(
      "witness arc validation failed after re-randomization at " +
      crossing.label);
}

// ---------------------------------------------------------------------------
// analyze

Verdict analyze(const ProjectionSetup& setup, const AnalyzeOptions& opts) {
  Verdict V;
  SeededRng rng(opts.seed);
  MonodromyOptions mo;
  mo.track = opts.track;
  mo.braids = opts.braids;
  V.discriminant_poly = discriminant(setup.F, setup.zvar);

  // Tangent-cone screening (necessary condition, Lemma 4.1 / Prop 4.3).
  if (opts.run_cone_checks) {
    try {
      V.cone = tangent_cone_screen(setup.F, opts.cone_tolerance);
    } catch (const Error& e) {
      V.notes.push_back(std::string("tangent-cone screen failed: ") + e.what());
    }
    try {
      auto cdr = cone_discriminant_check(setup);
      V.cone_discriminant = cdr;
      if (cdr.applicable && !cdr.matched)
        V.notes.push_back(
            "cone-discriminant cross-check mismatch (see report)");
    } catch (const Error& e) {
      V.notes.push_back(std::string("cone-discriminant check failed: ") +
                        e.what());
    }
  }

  // Degree-1 covers: every arc-section is a single smooth sheet.
  if (setup.d == 1) {
    V.exists_irreducible = Verdict::Answer::Yes;
    V.reason = "single-sheet cover: every arc-section is irreducible";
    try {
      auto [a, b] = generic_direction(setup, rng);
      Arc arc;
      arc.provenance = Arc::Provenance::Generic;
      MPoly T = MPoly::var("t");
      arc.x = T.scaled(a);
      arc.y = T.scaled(b);
      SectionReport rep = arc_section(setup, arc, opts.section);
      V.witnesses.push_back(arc);
      V.witness_sections.push_back(rep);
    } catch (const Error& e) {
      V.notes.push_back(e.what());
    }
    return V;
  }

  // Generic monodromy first (Cor 5.4: the generic arc decides immediately
  // when it is transitive).
  bool generic_ok = false;
  try {
    auto [a, b] = generic_direction(setup, rng);
    GenericMonodromy gm = generic_monodromy(setup.F, setup.zvar, a, b, setup.d, mo);
    GenericReport gr;
    gr.a = a;
    gr.b = b;
    gr.radius = gm.radius;
    gr.perm = gm.mono.perm;
    gr.cycle_type = cycle_type_string(gm.mono.perm.cycle_type());
    gr.transitive = gm.mono.perm.is_full_cycle();
    V.generic = gr;
    generic_ok = true;
    if (gr.transitive) {
      Arc arc;
      arc.provenance = Arc::Provenance::Generic;
      MPoly T = MPoly::var("t");
      arc.x = T.scaled(a);
      arc.y = T.scaled(b);
      arc.valid_radius = gm.radius;
      SectionOptions so = opts.section;
      so.track = opts.track;
      SectionReport rep = arc_section(setup, arc, so);
      if (!rep.irreducible_strict)
        throw CertificationError(
            "generic witness failed the germ oracle (soundness breach)");
      V.exists_irreducible = Verdict::Answer::Yes;
      V.reason = "generic arc is irreducible (transitive monodromy)";
      V.witnesses.push_back(arc);
      V.witness_sections.push_back(rep);
    }
  } catch (const Error& e) {
    V.errors.push_back(std::string("generic monodromy: ") + e.what());
  }

  // Totally reducible witness (Theorem 5.2) is always constructed.
  try {
    Arc tra = totally_reducible_arc(setup, opts);
    SectionOptions so = opts.section;
    so.track = opts.track;
    V.totally_reducible_section = arc_section(setup, tra, so);
    V.totally_reducible_witness = tra;
  } catch (const Error& e) {
    V.errors.push_back(std::string("totally_reducible_arc: ") + e.what());
  }

  if (V.exists_irreducible == Verdict::Answer::Yes) return V;

  // Screening short-circuit: no admissible line means no irreducible
  // arc-section for any arc (Lemma 4.1 / Prop 4.3).
  if (V.cone && V.cone->cls == ConeClass::NoAdmissibleLine) {
    V.exists_irreducible = Verdict::Answer::No;
    V.reason =
        "tangent-cone screening: no admissible line (no hyperflex within "
        "tolerance)";
    return V;
  }

  // The Section 7 pipeline: resolve, enumerate crossings, monodromy groups.
  ResolutionTree tree;
  try {
    tree = resolve_embedded(V.discriminant_poly, opts.resolve);
  } catch (const Error& e) {
    V.exists_irreducible = Verdict::Answer::Unknown;
    V.reason = std::string("resolution failed: ") + e.what();
    V.errors.push_back(V.reason);
    return V;
  }

  // Lemma 7.2 pruning: skip crossings adjacent to discriminant branches whose
  // own section is reducible.  Conservative: only applied when every branch
  // of the discriminant is prunable.
  bool prune_strict = false;
  if (opts.prune) {
    try {
      auto screens = screen_discriminant_branches(setup, opts.section);
      prune_strict = !screens.empty();
      for (const auto& s : screens) prune_strict = prune_strict && s.prunable;
      if (prune_strict)
        V.notes.push_back(
            "Lemma 7.2 pruning: all discriminant branches have reducible "
            "sections; crossings with strict branches skipped");
    } catch (const Error& e) {
      V.notes.push_back(std::string("branch screening failed: ") + e.what());
      prune_strict = false;
    }
  }

  // Order crossings by total multiplicity (witness search order).
  std::vector<int> order(tree.crossings.size());
  std::iota(order.begin(), order.end(), 0);
  auto cross_weight = [&](int i) {
    const auto& nc = tree.crossings[i];
    const auto& ch = tree.charts[nc.chart];
    return ch.divisors[nc.div_a].multiplicity +
           ch.divisors[nc.div_b].multiplicity;
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return cross_weight(i) < cross_weight(j); });

  V.crossings.resize(tree.crossings.size());
  std::vector<std::optional<CrossingMonodromy>> monos(tree.crossings.size());

  auto process = [&](int idx) -> std::optional<CrossingMonodromy> {
    return crossing_monodromies(setup.F, setup.zvar, tree,
                                tree.crossings[idx], setup.d, mo);
  };

  std::vector<int> to_run;
  for (int idx : order) {
    const auto& nc = tree.crossings[idx];
    const auto& ch = tree.charts[nc.chart];
    bool strict_involved =
        ch.divisors[nc.div_a].kind == Divisor::Kind::Strict ||
        ch.divisors[nc.div_b].kind == Divisor::Kind::Strict;
    CrossingReport& cr = V.crossings[idx];
    cr.label = nc.label;
    if (prune_strict && strict_involved) {
      cr.pruned = true;
      continue;
    }
    to_run.push_back(idx);
  }

  if (opts.concurrent && to_run.size() > 1) {
    std::vector<std::future<std::optional<CrossingMonodromy>>> futs;
    std::vector<std::string> errs(to_run.size());
    for (size_t k = 0; k < to_run.size(); ++k) {
      int idx = to_run[k];
      futs.push_back(std::async(std::launch::async, [&, idx]() {
        return process(idx);
      }));
    }
    for (size_t k = 0; k < to_run.size(); ++k) {
      try {
        monos[to_run[k]] = futs[k].get();
      } catch (const Error& e) {
        V.crossings[to_run[k]].error = e.what();
      }
    }
  } else {
    for (int idx : to_run) {
      try {
        monos[idx] = process(idx);
      } catch (const Error& e) {
        V.crossings[idx].error = e.what();
      }
    }
  }

  bool any_failure = false;
  for (int idx : order) {
    CrossingReport& cr = V.crossings[idx];
    if (cr.pruned) continue;
    if (!monos[idx]) {
      any_failure = true;
      continue;
    }
    const auto& cm = *monos[idx];
    cr.processed = true;
    cr.p1 = cm.p1;
    cr.p2 = cm.p2;
    cr.type1 = cycle_type_string(cm.p1.cycle_type());
    cr.type2 = cycle_type_string(cm.p2.cycle_type());
    cr.commute = true;
    cr.cert1 = cm.m1.cert;
    cr.cert2 = cm.m2.cert;
    cr.braid1 = cm.m1.braid_word;
    cr.braid2 = cm.m2.braid_word;
    auto rep = generated_group(cm.p1, cm.p2);
    cr.has_transitive = rep.has_transitive;
    cr.group_transitive = rep.group_acts_transitively;
    if (rep.capped) {
      any_failure = true;
      cr.error = "group enumeration cap exceeded";
    }
    if (rep.witness && rep.commuting)
      cr.witness_exponents = {rep.witness->a, rep.witness->b};
  }

  // Witness search in multiplicity order.
  for (int idx : order) {
    CrossingReport& cr = V.crossings[idx];
    if (!cr.processed || !cr.has_transitive) continue;
    long a = 0, b = 0;
    if (cr.witness_exponents) {
      a = cr.witness_exponents->first;
      b = cr.witness_exponents->second;
    } else {
      V.notes.push_back("transitive element at " + cr.label +
                        " without commuting exponents");
      continue;
    }
    // Reduce to coprime winding exponents (the reduced element is still a
    // d-cycle) and avoid zero windings toward strict branches.
    long g = std::gcd(a, b);
    if (g > 1) {
      a /= g;
      b /= g;
      Permutation cand = cr.p1.power(a) * cr.p2.power(b);
      if (!cand.is_full_cycle()) {
        V.notes.push_back("exponent reduction lost transitivity at " + cr.label);
        continue;
      }
    }
    const auto& nc = tree.crossings[idx];
    const auto& ch = tree.charts[nc.chart];
    long o1 = cr.p1.order(), o2 = cr.p2.order();
    if (a == 0 && ch.divisors[nc.div_b].kind != Divisor::Kind::Exceptional)
      a += o1;
    if (b == 0 && ch.divisors[nc.div_a].kind != Divisor::Kind::Exceptional)
      b += o2;
    if (std::gcd(a, b) != 1 && !(a == 0 || b == 0)) {
      bool fixed = false;
      for (long j = 0; j <= 4 && !fixed; ++j)
        for (long l = 0; l <= 4 && !fixed; ++l)
          if (std::gcd(a + j * o1, b + l * o2) == 1) {
            a += j * o1;
            b += l * o2;
            fixed = true;
          }
      if (!fixed) {
        V.notes.push_back("no coprime winding exponents at " + cr.label);
        continue;
      }
    }
    try {
      Arc w = witness_irreducible_arc(setup, tree, nc, a, b, rng, opts);
      SectionOptions so = opts.section;
      so.track = opts.track;
      SectionReport rep = arc_section(setup, w, so);
      V.witnesses.push_back(w);
      V.witness_sections.push_back(rep);
      V.exists_irreducible = Verdict::Answer::Yes;
      V.reason = "transitive element at crossing " + cr.label;
      return V;
    } catch (const Error& e) {
      V.notes.push_back(std::string("witness construction at ") + cr.label +
                        ": " + e.what());
      any_failure = true;
    }
  }

  bool any_transitive = false;
  for (const auto& cr : V.crossings)
    if (cr.processed && cr.has_transitive) any_transitive = true;

  if (any_transitive) {
    V.exists_irreducible = Verdict::Answer::Unknown;
    V.reason = "transitive element found but witness construction failed";
  } else if (any_failure || !generic_ok) {
    V.exists_irreducible = Verdict::Answer::Unknown;
    V.reason = "certification failure at one or more crossings";
  } else {
    V.exists_irreducible = Verdict::Answer::No;
    V.reason = "no crossing monodromy group contains a transitive element";
  }
  return V;
}

}  // namespace arcsect
