#ifndef ARCSECT_GERM_HPP
#define ARCSECT_GERM_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arcsect/mpoly.hpp"
#include "arcsect/roots.hpp"
#include "arcsect/tracking.hpp"

namespace arcsect {

// Bivariate curve germ at the origin: parameter variable (horizontal) and
// fiber variable (the finite direction).
struct PlaneCurveGerm {
  MPoly equation;
  std::string param = "t";
  std::string fiber = "z";
  int weierstrass_degree = 0;  // ord_fiber equation(0, fiber)
  bool reduced = false;        // true when known squarefree

  // Validates: equation(0,0) = 0 unless the germ is empty at 0; fiber-finite
  // (equation(0, fiber) not identically zero).
  static PlaneCurveGerm make(const MPoly& eq, const std::string& param = "t",
                             const std::string& fiber = "z");
};

struct NewtonSegment {
  std::pair<int, long> from;  // (fiber exponent, parameter order), higher fiber exp
  std::pair<int, long> to;
  Rational slope;             // parameter order gained per fiber exponent, > 0
  int lattice_length;
  int interior_points;        // lattice points strictly inside the segment
};

struct NewtonPolygon {
  std::vector<std::pair<int, long>> vertices;  // descending fiber exponent
  std::vector<NewtonSegment> segments;         // only positive-slope sides
};

NewtonPolygon newton_polygon(const PlaneCurveGerm& g);

// One term of a Puiseux series; coefficient exact rational when possible,
// complex box otherwise.
struct PuiseuxTerm {
  Rational exponent;
  bool exact = false;
  Rational coeff_exact;  // valid when exact
  ComplexBox coeff_box;  // always set (center = approx value)
  std::complex<double> approx() const { return coeff_box.center(); }
};

struct PuiseuxBranch {
  int ramification = 1;  // e
  std::vector<PuiseuxTerm> terms;
  int multiplicity = 1;  // from the squarefree profile
  Rational truncation_order;
  bool exact = true;  // all coefficients exact rationals

  // Parametrization (param, fiber) = (s^e, sum c_k s^(alpha_k * e)).
  // Exact polynomials only when `exact` holds and exponents clear denominators.
  std::string str() const;
};

struct GermBranchData {
  int count = 0;
  std::vector<int> multiplicities;  // one per branch, descending
  std::vector<PuiseuxBranch> branches;
  bool numeric_path = false;  // some step used box arithmetic
};

// Structural Newton-Puiseux route (independent of monodromy tracking).
GermBranchData puiseux_branch_data(const PlaneCurveGerm& g,
                                   const Rational& order,
                                   bool want_parametrizations);
int puiseux_branch_count(const PlaneCurveGerm& g);
std::vector<PuiseuxBranch> puiseux_branches(const PlaneCurveGerm& g,
                                            const Rational& order);

struct BranchCount {
  int count = 0;
  std::vector<int> multiplicities;  // descending
  bool used_tracking = false;
  Rational radius;  // tracking radius when used
};

// Production branch count: squarefree profile over Q(t), then per squarefree
// clump either the Newton-polygon fast path (single segment, endpoint gcd 1)
// or monodromy cycle counting around |t| = r with
// r = (1/2) * certified lower bound on the nonzero critical radii.
BranchCount branch_count(const PlaneCurveGerm& g,
                         const TrackOptions& topts = {});

// True iff the germ is irreducible; with reduced_structure the multiplicity
// profile is ignored (a multiple line counts as irreducible).
bool is_irreducible_germ(const PlaneCurveGerm& g, bool reduced_structure = false,
                         const TrackOptions& topts = {});

// Tracking radius helper: certified lower bound (power of 1/2) below half the
// smallest nonzero-root modulus of the given exact univariate polynomial(s).
Rational safe_circle_radius(const std::vector<MPoly>& avoid,
                            const std::string& var,
                            const Rational& hard_cap = Rational(1, 2));

// Numeric sheet-cluster profile of a fiber family at its circle radius, for
// sections over arcs (nearly) inside the discriminant.  Sheets closer than
// cluster_tol * scale at every sample are treated as one component.
struct SectionProfile {
  std::vector<int> multiplicities;  // near-cluster sizes, descending
  int reduced_branch_count = 0;
  bool numeric = true;
};
SectionProfile section_profile_numeric(const CircleFamily& fam, int near_count,
                                       double cluster_tol = 1e-7);

}  // namespace arcsect

#endif
