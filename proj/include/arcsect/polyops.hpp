#ifndef ARCSECT_POLYOPS_HPP
#define ARCSECT_POLYOPS_HPP

#include <vector>

#include "arcsect/mpoly.hpp"

namespace arcsect {

// Exact division; throws DomainError when g does not divide f.
MPoly exact_div(const MPoly& f, const MPoly& g);

// Multiplies by a rational unit so that the coefficients become coprime
// integers and the graded-lex leading coefficient is positive.
MPoly normalize_primitive(const MPoly& f);

// gcd over Q[vars], returned in normalize_primitive form (gcd(0,0) = 0).
MPoly mpoly_gcd(const MPoly& f, const MPoly& g);

// Content of f wrt var: gcd of the coefficient polynomials.
MPoly content_in(const MPoly& f, const std::string& var);
MPoly primitive_part_in(const MPoly& f, const std::string& var);

// Resultant of f and g wrt var, via the fraction-free subresultant PRS.
MPoly resultant(const MPoly& f, const MPoly& g, const std::string& var);

// Oracle-grade resultant: Bareiss determinant of the Sylvester matrix.
MPoly sylvester_resultant(const MPoly& f, const MPoly& g, const std::string& var);

// Res_var(f, df/dvar) / lc_var(f), exact (no unit normalization).
MPoly discriminant_raw(const MPoly& f, const std::string& var);

// discriminant_raw followed by normalize_primitive; this is the canonical
// discriminant used across the pipeline (defined up to a unit anyway).
MPoly discriminant(const MPoly& f, const std::string& var);

struct SquarefreeFactor {
  MPoly factor;      // primitive, non-constant
  int multiplicity;  // >= 1
};

// Yun decomposition wrt var: f = unit * prod factor_i^multiplicity_i with the
// factors pairwise coprime and squarefree (each factor may still be reducible).
std::vector<SquarefreeFactor> squarefree_decomposition(const MPoly& f,
                                                       const std::string& var);

// f / gcd(f, df/dvar) up to content, normalized.
MPoly squarefree_part(const MPoly& f, const std::string& var);

// Determinant of a square matrix of polynomials (fraction-free Bareiss).
MPoly det_bareiss(std::vector<std::vector<MPoly>> m);

// Nullspace basis of an exact rational matrix (rows x cols).
std::vector<std::vector<Rational>> rational_kernel(
    std::vector<std::vector<Rational>> m, size_t cols);

}  // namespace arcsect

#endif
