#ifndef ARCSECT_MPOLY_HPP
#define ARCSECT_MPOLY_HPP

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "arcsect/errors.hpp"
#include "arcsect/rational.hpp"

namespace arcsect {

// Rank of a variable in the fixed canonical order (x,y,z,t,u,v,s, then
// everything else alphabetically).  Serialization determinism depends on it.
int canon_var_rank(const std::string& name);
bool canon_var_less(const std::string& a, const std::string& b);

// Exact multivariate polynomial over the rationals.
//
// Invariants: no stored coefficient is zero; exponent vectors have length
// equal to the number of variables; the variable list contains exactly the
// variables the polynomial depends on, sorted canonically.  Two polynomials
// are equal iff their canonical forms coincide.
class MPoly {
 public:
  using Exp = std::vector<int>;
  using TermMap = std::map<Exp, Rational>;

  MPoly() = default;  // zero

  static MPoly constant(const Rational& c);
  static MPoly constant(long c) { return constant(Rational(c)); }
  static MPoly var(const std::string& name);
  static MPoly monomial(const std::vector<std::string>& vars, const Exp& e,
                        const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  // Value of a constant polynomial (zero polynomial gives 0).
  Rational constant_value() const;

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  bool depends_on(const std::string& var) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly scaled(const Rational& c) const;
  MPoly pow(int e) const;

  bool operator==(const MPoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  // -1 for the zero polynomial.
  int degree(const std::string& var) const;
  int total_degree() const;
  // Minimal total degree of a term (order of the germ at 0); -1 for zero.
  int order() const;
  // Homogeneous component of lowest total degree.  Throws on zero input.
  MPoly initial_form() const;
  // Homogeneous component of a given total degree.
  MPoly homogeneous_part(int deg) const;
  bool is_homogeneous() const;

  MPoly derivative(const std::string& var) const;

  // Substitutes every variable; throws DomainError when a variable of *this
  // has no image.
  MPoly substitute(const std::map<std::string, MPoly>& images) const;
  // Substitutes one variable, mapping the rest to themselves.
  MPoly subst_var(const std::string& var, const MPoly& value) const;
  // Renames a variable (target must not collide).
  MPoly rename_var(const std::string& from, const std::string& to) const;

  Rational eval_rational(const std::map<std::string, Rational>& point) const;
  std::complex<double> eval(
      const std::map<std::string, std::complex<double>>& point) const;

  // Dense coefficient list in `var`, ascending powers; coefficients are
  // polynomials in the remaining variables.  Zero polynomial gives {}.
  std::vector<MPoly> coeffs_in(const std::string& var) const;
  static MPoly from_coeffs(const std::string& var, const std::vector<MPoly>& c);
  MPoly coeff_of(const std::string& var, int k) const;
  MPoly leading_coeff(const std::string& var) const;

  // Sum of |coefficient| (exact); a cheap ingredient for magnitude bounds.
  Rational abs_coeff_sum() const;

  // Canonical text: terms sorted by graded-lex (descending) on the canonical
  // variable order, coefficients as "p/q" with "/q" omitted when q = 1.
  std::string str() const;

  bool operator<(const MPoly& o) const;  // arbitrary strict order for maps

 private:
  void prune();  // drop zero terms and unused variables, keep canonical form
  static void unify(const MPoly& a, const MPoly& b,
                    std::vector<std::string>& vars, MPoly& ra, MPoly& rb);
  MPoly reindexed(const std::vector<std::string>& new_vars) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

// Expression parser over the given variables; +, -, *, ^, parentheses,
// integer literals, and division by nonzero constant subexpressions.
MPoly parse_poly(const std::string& src, const std::vector<std::string>& vars);

}  // namespace arcsect

#endif
