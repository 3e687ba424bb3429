#include "arcsect/polyops.hpp"

#include <algorithm>

namespace arcsect {

namespace {

// Dense univariate view: coefficients ascending in the main variable.
using UP = std::vector<MPoly>;

int updeg(const UP& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (!p[i].is_zero()) return i;
  return -1;
}

// Canonical pseudo-remainder: lc(B)^(deg A - deg B + 1) * A mod B.
UP prem(UP a, const UP& b) {
  int db = updeg(b);
  if (db < 0) throw DomainError("prem by zero");
  const MPoly& lb = b[db];
  int da = updeg(a);
  int e = da - db + 1;
  while (da >= db) {
    MPoly la = a[da];
    for (auto& c : a) c = lb * c;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= la * b[i];
    a[da] = MPoly();
    --e;
    int nd = updeg(a);
    a.resize(static_cast<size_t>(std::max(nd + 1, 0)));
    da = nd;
  }
  // Compensate skipped steps so the lc(B) power is exactly deg difference + 1.
  if (e > 0) {
    MPoly f = lb.pow(e);
    for (auto& c : a) c = f * c;
  }
  return a;
}

MPoly upoly_to_mpoly(const UP& p, const std::string& var) {
  return MPoly::from_coeffs(var, p);
}

// Splits f (viewed in var) as c * fp with fp primitive with coprime integer
// coefficients and positive leading sign; c is an MPoly free of var.
void split_content(const MPoly& f, const std::string& var, MPoly& c, MPoly& fp) {
  MPoly cont = content_in(f, var);
  MPoly p1 = exact_div(f, cont);
  fp = normalize_primitive(p1);
  // p1 = lambda * fp for a rational lambda.
  Rational lambda = p1.terms().begin()->second / fp.terms().begin()->second;
  c = cont.scaled(lambda);
}

// res(A, B) in var via a primitive PRS with exact content/leading-coefficient
// bookkeeping.  Uses the identities
//   res(A,B) = (-1)^(mn) res(B,A)
//   res(A,B) = (-1)^(mn) c^n lc(B)^(m - r - (d+1)n) res(B, R~)
// where R = prem(A,B) = c * R~, m = deg A, n = deg B, d = m-n, r = deg R.
// The lc exponent is always <= 0, and the division is exact because the
// overall resultant is a polynomial.
MPoly res_prs(UP a, UP b, const std::string& var) {
  int m = updeg(a), n = updeg(b);
  if (m < 0 || n < 0) return MPoly();
  Rational sgn(1);
  if (m < n) {
    std::swap(a, b);
    std::swap(m, n);
    if (m % 2 == 1 && n % 2 == 1) sgn = -1;
  }
  if (n == 0) return b[0].pow(m).scaled(sgn);
  UP r = prem(a, b);
  int rd = updeg(r);
  if (rd < 0) return MPoly();  // common divisor of positive degree
  MPoly c, rt;
  split_content(upoly_to_mpoly(r, var), var, c, rt);
  if ((m % 2 == 1) && (n % 2 == 1)) sgn = -sgn;
  MPoly rec = res_prs(b, rt.coeffs_in(var), var);
  int d = m - n;
  long ee = static_cast<long>(m) - rd - static_cast<long>(d + 1) * n;
  MPoly num = rec * c.pow(n);
  MPoly result = ee == 0 ? num : exact_div(num, b[n].pow(static_cast<int>(-ee)));
  return result.scaled(sgn);
}

}  // namespace

MPoly exact_div(const MPoly& f, const MPoly& g) {
  if (g.is_zero()) throw DomainError("exact_div by zero");
  if (f.is_zero()) return MPoly();
  if (g.is_constant()) return f.scaled(1 / g.constant_value());
  // Single-divisor division algorithm under lex over the unified variables.
  std::vector<std::string> vars = f.vars();
  for (const auto& v : g.vars())
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  std::sort(vars.begin(), vars.end(), canon_var_less);

  auto exp_of = [&vars](const MPoly& p, const MPoly::Exp& e) {
    MPoly::Exp out(vars.size(), 0);
    for (size_t i = 0; i < p.vars().size(); ++i) {
      auto it = std::find(vars.begin(), vars.end(), p.vars()[i]);
      out[it - vars.begin()] = e[i];
    }
    return out;
  };

  MPoly::Exp ge;
  Rational gc;
  bool first = true;
  for (const auto& [e, c] : g.terms()) {
    MPoly::Exp ue = exp_of(g, e);
    if (first || ue > ge) {
      ge = ue;
      gc = c;
      first = false;
    }
  }

  MPoly rem = f, quot;
  int guard = 0;
  const int guard_max = 200000;
  while (!rem.is_zero()) {
    if (++guard > guard_max) throw DomainError("exact_div: no convergence");
    MPoly::Exp re;
    Rational rc;
    bool f2 = true;
    for (const auto& [e, c] : rem.terms()) {
      MPoly::Exp ue = exp_of(rem, e);
      if (f2 || ue > re) {
        re = ue;
        rc = c;
        f2 = false;
      }
    }
    MPoly::Exp qe(vars.size());
    for (size_t i = 0; i < vars.size(); ++i) {
      qe[i] = re[i] - ge[i];
      if (qe[i] < 0) throw DomainError("exact_div: not divisible");
    }
    MPoly qt = MPoly::monomial(vars, qe, rc / gc);
    quot += qt;
    rem -= qt * g;
  }
  return quot;
}

MPoly normalize_primitive(const MPoly& f) {
  if (f.is_zero()) return f;
  Int den_lcm = 1, num_gcd = 0;
  for (const auto& [e, c] : f.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    Int nn = abs(c.get_num());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), nn.get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd == 0 ? Int(1) : num_gcd);
  scale.canonicalize();
  MPoly r = f.scaled(scale);
  // Positive coefficient on the graded-lex leading term.
  const auto& ts = r.terms();
  auto deg = [](const MPoly::Exp& e) {
    int s = 0;
    for (int k : e) s += k;
    return s;
  };
  auto lead = ts.begin();
  for (auto it = ts.begin(); it != ts.end(); ++it) {
    int dl = deg(lead->first), di = deg(it->first);
    if (di > dl || (di == dl && it->first > lead->first)) lead = it;
  }
  if (lead->second < 0) r = -r;
  return r;
}

MPoly content_in(const MPoly& f, const std::string& var) {
  auto cs = f.coeffs_in(var);
  MPoly g;
  for (const auto& c : cs) g = mpoly_gcd(g, c);
  return g;
}

MPoly primitive_part_in(const MPoly& f, const std::string& var) {
  if (f.is_zero()) return f;
  MPoly c = content_in(f, var);
  if (c.is_zero()) return f;
  return exact_div(f, c);
}

MPoly mpoly_gcd(const MPoly& f, const MPoly& g) {
  if (f.is_zero()) return normalize_primitive(g);
  if (g.is_zero()) return normalize_primitive(f);
  if (f.is_constant() || g.is_constant()) return MPoly::constant(1);

  std::vector<std::string> vs = f.vars();
  for (const auto& v : g.vars())
    if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
  std::sort(vs.begin(), vs.end(), canon_var_less);
  const std::string& x = vs.front();

  if (!f.depends_on(x)) return normalize_primitive(mpoly_gcd(f, content_in(g, x)));
  if (!g.depends_on(x)) return normalize_primitive(mpoly_gcd(content_in(f, x), g));

  MPoly cf = content_in(f, x), cg = content_in(g, x);
  MPoly c = mpoly_gcd(cf, cg);
  UP a = normalize_primitive(exact_div(f, cf)).coeffs_in(x);
  UP b = normalize_primitive(exact_div(g, cg)).coeffs_in(x);
  if (updeg(a) < updeg(b)) std::swap(a, b);
  while (true) {
    UP r = prem(a, b);
    if (updeg(r) < 0) break;
    if (updeg(r) == 0) return normalize_primitive(c);
    // Primitive reduction including the rational content: without it the
    // integer coefficients of the PRS grow doubly exponentially.
    MPoly rp = normalize_primitive(primitive_part_in(upoly_to_mpoly(r, x), x));
    a = b;
    b = rp.coeffs_in(x);
  }
  MPoly gp = primitive_part_in(upoly_to_mpoly(b, x), x);
  return normalize_primitive(c * gp);
}

MPoly resultant(const MPoly& f, const MPoly& g, const std::string& var) {
  return res_prs(f.coeffs_in(var), g.coeffs_in(var), var);
}

MPoly sylvester_resultant(const MPoly& f, const MPoly& g, const std::string& var) {
  UP a = f.coeffs_in(var), b = g.coeffs_in(var);
  int m = updeg(a), n = updeg(b);
  if (m < 0 || n < 0) return MPoly();
  if (m == 0 && n == 0) return MPoly::constant(1);
  if (n == 0) return b[0].pow(m);
  if (m == 0) return a[0].pow(n);
  size_t dim = static_cast<size_t>(m + n);
  std::vector<std::vector<MPoly>> M(dim, std::vector<MPoly>(dim));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) M[r][r + k] = a[m - k];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) M[n + r][r + k] = b[n - k];
  return det_bareiss(std::move(M));
}

MPoly det_bareiss(std::vector<std::vector<MPoly>> m) {
  size_t n = m.size();
  if (n == 0) return MPoly::constant(1);
  MPoly prev = MPoly::constant(1);
  Rational sgn(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return MPoly();
      std::swap(m[k], m[p]);
      sgn = -sgn;
    }
    bool trivial_prev = prev.is_constant() && prev.constant_value() == 1;
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        MPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = trivial_prev ? num : exact_div(num, prev);
      }
    prev = m[k][k];
  }
  return m[n - 1][n - 1].scaled(sgn);
}

MPoly discriminant_raw(const MPoly& f, const std::string& var) {
  int d = f.degree(var);
  if (d <= 0) throw DomainError("discriminant: polynomial constant in " + var);
  MPoly res = resultant(f, f.derivative(var), var);
  if (res.is_zero()) return res;
  return exact_div(res, f.leading_coeff(var));
}

MPoly discriminant(const MPoly& f, const std::string& var) {
  MPoly d = discriminant_raw(f, var);
  if (d.is_zero()) return d;
  return normalize_primitive(d);
}

std::vector<SquarefreeFactor> squarefree_decomposition(const MPoly& f,
                                                       const std::string& var) {
  std::vector<SquarefreeFactor> out;
  if (f.is_zero() || f.degree(var) <= 0) return out;
  MPoly p = primitive_part_in(f, var);
  MPoly dp = p.derivative(var);
  MPoly g = mpoly_gcd(p, dp);
  if (g.is_constant()) {
    out.push_back({normalize_primitive(p), 1});
    return out;
  }
  // Yun's algorithm; divisions are exact by Gauss's lemma.
  MPoly c = exact_div(p, g);
  MPoly d = exact_div(dp, g) - c.derivative(var);
  int i = 1;
  while (c.degree(var) > 0) {
    MPoly a = mpoly_gcd(c, d);
    if (a.degree(var) > 0) out.push_back({normalize_primitive(a), i});
    MPoly c2 = exact_div(c, a);
    d = exact_div(d, a) - c2.derivative(var);
    c = c2;
    ++i;
    if (i > 512) throw DomainError("squarefree_decomposition: no convergence");
  }
  return out;
}

MPoly squarefree_part(const MPoly& f, const std::string& var) {
  if (f.is_zero()) return f;
  auto dec = squarefree_decomposition(f, var);
  MPoly r = MPoly::constant(1);
  for (const auto& sf : dec) r = r * sf.factor;
  return normalize_primitive(r);
}

std::vector<std::vector<Rational>> rational_kernel(
    std::vector<std::vector<Rational>> m, size_t cols) {
  size_t rows = m.size();
  std::vector<long> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    Rational inv = 1 / m[r][c];
    for (size_t j = 0; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational factor = m[i][c];
      for (size_t j = 0; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    pivot_col.push_back(static_cast<long>(c));
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (long c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<std::vector<Rational>> basis;
  for (size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[c] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i)
      v[static_cast<size_t>(pivot_col[i])] = -m[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace arcsect
