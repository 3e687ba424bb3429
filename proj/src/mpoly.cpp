#include "arcsect/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace arcsect {

int canon_var_rank(const std::string& name) {
  static const char* fixed[] = {"x", "y", "z", "t", "u", "v", "s"};
  for (int i = 0; i < 7; ++i)
    if (name == fixed[i]) return i;
  return 100;
}

bool canon_var_less(const std::string& a, const std::string& b) {
  int ra = canon_var_rank(a), rb = canon_var_rank(b);
  if (ra != rb) return ra < rb;
  return a < b;
}

MPoly MPoly::constant(const Rational& c) {
  MPoly p;
  if (c != 0) p.terms_[{}] = c;
  return p;
}

MPoly MPoly::var(const std::string& name) {
  MPoly p;
  p.vars_ = {name};
  p.terms_[{1}] = 1;
  return p;
}

MPoly MPoly::monomial(const std::vector<std::string>& vars, const Exp& e,
                      const Rational& c) {
  if (vars.size() != e.size()) throw DomainError("monomial: rank mismatch");
  MPoly p;
  p.vars_ = vars;
  p.terms_[e] = c;
  p.prune();
  return p;
}

Rational MPoly::constant_value() const {
  if (is_zero()) return Rational(0);
  if (!is_constant()) throw DomainError("constant_value on non-constant");
  return terms_.begin()->second;
}

bool MPoly::depends_on(const std::string& var) const {
  return std::find(vars_.begin(), vars_.end(), var) != vars_.end();
}

void MPoly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
  // Drop variables that no term uses.
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) used[i] = true;
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
  std::vector<std::string> nv;
  std::vector<int> keep;
  for (size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) {
      nv.push_back(vars_[i]);
      keep.push_back(static_cast<int>(i));
    }
  TermMap nt;
  for (const auto& [e, c] : terms_) {
    Exp ne(keep.size());
    for (size_t i = 0; i < keep.size(); ++i) ne[i] = e[keep[i]];
    nt[ne] = c;
  }
  vars_ = std::move(nv);
  terms_ = std::move(nt);
}

MPoly MPoly::reindexed(const std::vector<std::string>& new_vars) const {
  std::vector<int> pos(vars_.size(), -1);
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
    pos[i] = static_cast<int>(it - new_vars.begin());
  }
  MPoly r;
  r.vars_ = new_vars;
  for (const auto& [e, c] : terms_) {
    Exp ne(new_vars.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
    r.terms_[ne] = c;
  }
  return r;
}

void MPoly::unify(const MPoly& a, const MPoly& b, std::vector<std::string>& vars,
                  MPoly& ra, MPoly& rb) {
  vars = a.vars_;
  for (const auto& v : b.vars_)
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  std::sort(vars.begin(), vars.end(), canon_var_less);
  ra = a.reindexed(vars);
  rb = b.reindexed(vars);
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (vars_ == o.vars_) {
    for (const auto& [e, c] : o.terms_) {
      auto [it, fresh] = terms_.emplace(e, c);
      if (!fresh) it->second += c;
    }
    prune();
    return *this;
  }
  std::vector<std::string> vars;
  MPoly ra, rb;
  unify(*this, o, vars, ra, rb);
  for (const auto& [e, c] : rb.terms_) {
    auto [it, fresh] = ra.terms_.emplace(e, c);
    if (!fresh) it->second += c;
  }
  ra.prune();
  return *this = std::move(ra);
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly();
  std::vector<std::string> vars;
  MPoly ra, rb;
  MPoly::unify(a, b, vars, ra, rb);
  MPoly r;
  r.vars_ = vars;
  for (const auto& [ea, ca] : ra.terms_)
    for (const auto& [eb, cb] : rb.terms_) {
      MPoly::Exp e(vars.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto [it, fresh] = r.terms_.emplace(std::move(e), ca * cb);
      if (!fresh) it->second += ca * cb;
    }
  r.prune();
  return r;
}

MPoly MPoly::scaled(const Rational& c) const {
  if (c == 0) return MPoly();
  MPoly r = *this;
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

MPoly MPoly::pow(int e) const {
  if (e < 0) throw DomainError("pow: negative exponent");
  MPoly r = constant(1);
  MPoly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

int MPoly::degree(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return is_zero() ? -1 : 0;
  size_t i = it - vars_.begin();
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

int MPoly::order() const {
  if (is_zero()) return -1;
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    if (d < 0 || s < d) d = s;
  }
  return d;
}

MPoly MPoly::homogeneous_part(int deg) const {
  MPoly r;
  r.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    if (s == deg) r.terms_[e] = c;
  }
  r.prune();
  return r;
}

MPoly MPoly::initial_form() const {
  if (is_zero()) throw DomainError("initial_form of zero polynomial");
  return homogeneous_part(order());
}

bool MPoly::is_homogeneous() const {
  return is_zero() || order() == total_degree();
}

MPoly MPoly::derivative(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return MPoly();
  size_t i = it - vars_.begin();
  MPoly r;
  r.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exp ne = e;
    ne[i] -= 1;
    r.terms_[ne] = c * e[i];
  }
  r.prune();
  return r;
}

MPoly MPoly::substitute(const std::map<std::string, MPoly>& images) const {
  for (const auto& v : vars_)
    if (!images.count(v)) throw DomainError("substitute: no image for " + v);
  MPoly acc;
  for (const auto& [e, c] : terms_) {
    MPoly term = constant(c);
    for (size_t i = 0; i < vars_.size(); ++i)
      if (e[i] > 0) term = term * images.at(vars_[i]).pow(e[i]);
    acc += term;
  }
  return acc;
}

MPoly MPoly::subst_var(const std::string& var, const MPoly& value) const {
  if (!depends_on(var)) return *this;
  std::map<std::string, MPoly> m;
  for (const auto& v : vars_) m[v] = (v == var) ? value : MPoly::var(v);
  return substitute(m);
}

MPoly MPoly::rename_var(const std::string& from, const std::string& to) const {
  if (from == to || !depends_on(from)) return *this;
  if (depends_on(to)) throw DomainError("rename_var: target variable present");
  return subst_var(from, MPoly::var(to));
}

Rational MPoly::eval_rational(const std::map<std::string, Rational>& point) const {
  for (const auto& v : vars_)
    if (!point.count(v)) throw DomainError("eval: no value for " + v);
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (size_t i = 0; i < vars_.size(); ++i)
      if (e[i] > 0) term *= rational_pow(point.at(vars_[i]), e[i]);
    acc += term;
  }
  return acc;
}

std::complex<double> MPoly::eval(
    const std::map<std::string, std::complex<double>>& point) const {
  for (const auto& v : vars_)
    if (!point.count(v)) throw DomainError("eval: no value for " + v);
  // Cache powers of each variable up to its degree.
  std::vector<std::vector<std::complex<double>>> pw(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    int d = degree(vars_[i]);
    pw[i].resize(d + 1);
    pw[i][0] = 1.0;
    std::complex<double> x = point.at(vars_[i]);
    for (int k = 1; k <= d; ++k) pw[i][k] = pw[i][k - 1] * x;
  }
  std::complex<double> acc = 0.0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> term = to_double(c);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term *= pw[i][e[i]];
    acc += term;
  }
  return acc;
}

std::vector<MPoly> MPoly::coeffs_in(const std::string& var) const {
  if (is_zero()) return {};
  int d = degree(var);
  std::vector<MPoly> out(d + 1);
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) {
    out[0] = *this;
    return out;
  }
  size_t vi = it - vars_.begin();
  for (auto& p : out) p.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    Exp ne = e;
    int k = ne[vi];
    ne[vi] = 0;
    out[k].terms_[ne] = c;
  }
  for (auto& p : out) p.prune();
  return out;
}

MPoly MPoly::from_coeffs(const std::string& var, const std::vector<MPoly>& c) {
  MPoly acc;
  MPoly x = MPoly::var(var);
  for (size_t k = 0; k < c.size(); ++k)
    if (!c[k].is_zero()) acc += c[k] * x.pow(static_cast<int>(k));
  return acc;
}

MPoly MPoly::coeff_of(const std::string& var, int k) const {
  auto cs = coeffs_in(var);
  if (k < 0 || k >= static_cast<int>(cs.size())) return MPoly();
  return cs[k];
}

MPoly MPoly::leading_coeff(const std::string& var) const {
  auto cs = coeffs_in(var);
  if (cs.empty()) return MPoly();
  return cs.back();
}

Rational MPoly::abs_coeff_sum() const {
  Rational s(0);
  for (const auto& [e, c] : terms_) s += abs(c);
  return s;
}

bool MPoly::operator<(const MPoly& o) const {
  if (vars_ != o.vars_) return vars_ < o.vars_;
  return terms_ < o.terms_;
}

std::string MPoly::str() const {
  if (is_zero()) return "0";
  // Graded-lex descending on the canonical variable order.  vars_ is already
  // canonically sorted.
  struct Term {
    Exp e;
    Rational c;
    int deg;
  };
  std::vector<Term> ts;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    ts.push_back({e, c, s});
  }
  std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) {
    if (a.deg != b.deg) return a.deg > b.deg;
    return a.e > b.e;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& t : ts) {
    Rational c = t.c;
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    Rational a = abs(c);
    bool any_var = std::any_of(t.e.begin(), t.e.end(), [](int k) { return k > 0; });
    if (a != 1 || !any_var) {
      os << rational_str(a);
      if (any_var) os << "*";
    }
    bool first_var = true;
    for (size_t i = 0; i < t.e.size(); ++i) {
      if (t.e[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << vars_[i];
      if (t.e[i] > 1) os << "^" << t.e[i];
    }
  }
  return os.str();
}

}  // namespace arcsect
