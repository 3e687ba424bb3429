#ifndef ARCSECT_DECIDE_HPP
#define ARCSECT_DECIDE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "arcsect/germ.hpp"
#include "arcsect/group.hpp"
#include "arcsect/monodromy.hpp"
#include "arcsect/mpoly.hpp"
#include "arcsect/resolve.hpp"

namespace arcsect {

// Linear projection data for a surface germ F(x,y,z) = 0.
struct ProjectionSetup {
  MPoly F_input;                      // as given
  std::array<Rational, 3> direction;  // projection direction p_pi
  MPoly F;  // adapted coordinates: projection (x,y,z) -> (x,y)
  int d = 0;           // Weierstrass degree of the germ cover
  int m = 0;           // multiplicity of the germ
  bool transverse = false;
  std::string zvar = "z";
};

// Throws DomainError when the direction line lies inside the surface
// (non-finite projection).
ProjectionSetup setup_projection(const MPoly& F,
                                 const std::array<Rational, 3>& direction);

enum class ConeClass {
  SingleLine,            // (a) one line, possibly multiple
  ConcurrentLines,       // (b) union of lines through a common point
  Conic,                 // (c) smooth conic
  MaxContactCurve,       // (d) deg >= 3 with a maximal-contact tangent line
  NoAdmissibleLine,      // smooth, deg >= 4, no hyperflex within tolerance
  UnknownNumeric,        // could not certify a classification
};

std::string cone_class_name(ConeClass c);

struct FlexInfo {
  std::array<std::complex<double>, 3> point;  // on the cone
  double contact_residual = 0;  // |c_deg| relative; hyperflex when ~0
  bool hyperflex = false;
};

struct TangentCone {
  MPoly form;     // initial form of F (ternary, homogeneous)
  int degree = 0; // m
  MPoly reduced;  // radical of the form
  ConeClass cls = ConeClass::UnknownNumeric;
  std::string admissible_family;  // "all-lines" | "pencil-through-vertex" |
                                  // "tangents-of-conic" | "flex-tangents" |
                                  // "none"
  std::optional<std::array<Rational, 3>> vertex;  // for concurrent lines
  std::vector<FlexInfo> flexes;   // numeric search results (deg >= 3)
  bool smooth_certified = false;  // exact smoothness certificate
  double tolerance = 1e-6;
};

TangentCone tangent_cone_screen(const MPoly& F, double tolerance = 1e-6);

struct ConeDiscriminantReport {
  bool applicable = false;  // false when the cone is a line or union of lines
  MPoly delta_initial;      // tangent directions of Delta (binary form)
  MPoly pencil_disc;        // discriminant of the projected cone (binary form)
  bool exact_equal = false; // squarefree parts proportional over Q
  bool matched = false;     // root sets coincide within tolerance
  double max_mismatch = 0;  // numeric matching distance
  std::string note;
};

ConeDiscriminantReport cone_discriminant_check(const ProjectionSetup& setup,
                                               double tolerance = 1e-8);

struct Arc {
  MPoly x, y;  // polynomials in t with x(0) = y(0) = 0
  enum class Provenance { Generic, ChartPushdown, DiscriminantBranch, UserGiven };
  Provenance provenance = Provenance::UserGiven;
  std::string chart;          // chart pushdowns
  long expo_a = 0, expo_b = 0;  // winding exponents for pushdowns
  Rational valid_radius = Rational(0);  // 0 = determine automatically
  bool inside_discriminant = false;
  bool numeric = false;  // truncated (inexact) parametrization
  std::string str() const;
};

// Validates arc invariants: (x(0),y(0)) = (0,0), not both zero, gcd of the
// exponent support equal 1 (generic injectivity).
void validate_arc(const Arc& arc);

struct SectionReport {
  int branch_count = 0;
  std::vector<int> multiplicities;  // descending
  bool irreducible_reduced = false;
  bool irreducible_strict = false;
  bool inside_discriminant = false;
  bool numeric = false;
  std::string note;
};

struct SectionOptions {
  TrackOptions track;
  double cluster_tol = 1e-7;
};

// The plane-curve germ F(x(t), y(t), z) with branch data.  Arcs inside the
// discriminant are handled with their reduced structure; exact when the arc
// is exact, numeric sheet clustering otherwise.
SectionReport arc_section(const ProjectionSetup& setup, const Arc& arc,
                          const SectionOptions& opts = {});
PlaneCurveGerm section_germ(const ProjectionSetup& setup, const Arc& arc);

struct BranchScreenReport {
  PuiseuxBranch branch;      // of the reduced discriminant
  Arc arc;                   // its parametrization (possibly truncated)
  SectionReport section;
  bool prunable = false;     // reduced section reducible (Lemma 7.2)
};

std::vector<BranchScreenReport> screen_discriminant_branches(
    const ProjectionSetup& setup, const SectionOptions& opts = {});

struct CrossingReport {
  std::string label;
  Permutation p1, p2;
  std::string type1, type2;
  bool commute = false;
  bool has_transitive = false;
  bool group_transitive = false;
  std::optional<std::pair<long, long>> witness_exponents;
  TrackingCertificate cert1, cert2;
  std::string braid1, braid2;
  bool pruned = false;
  bool processed = false;
  std::string error;
};

struct GenericReport {
  Rational a, b;
  Rational radius;
  Permutation perm;
  std::string cycle_type;
  bool transitive = false;
};

struct Verdict {
  enum class Answer { Yes, No, Unknown };
  Answer exists_irreducible = Answer::Unknown;
  std::string reason;
  std::vector<Arc> witnesses;
  std::vector<SectionReport> witness_sections;
  std::optional<Arc> totally_reducible_witness;
  std::optional<SectionReport> totally_reducible_section;
  std::vector<CrossingReport> crossings;
  std::optional<GenericReport> generic;
  std::optional<TangentCone> cone;
  std::optional<ConeDiscriminantReport> cone_discriminant;
  MPoly discriminant_poly;
  std::vector<std::string> notes;
  std::vector<std::string> errors;
};

struct AnalyzeOptions {
  bool prune = true;    // Lemma 7.2 pruning toggle
  bool braids = false;
  uint64_t seed = 1;
  TrackOptions track;
  SectionOptions section;
  ResolveOptions resolve;
  bool run_cone_checks = true;
  bool concurrent = true;
  double cone_tolerance = 1e-6;
};

// The end-to-end decision pipeline (tangent-cone screening, generic-arc
// shortcut, embedded resolution, per-crossing monodromy groups, witnesses).
Verdict analyze(const ProjectionSetup& setup, const AnalyzeOptions& opts = {});

// Monomial-arc witness pushed down from a crossing chart; the section is
// validated irreducible by the germ oracle (hard error on breach).
Arc witness_irreducible_arc(const ProjectionSetup& setup,
                            const ResolutionTree& tree,
                            const NormalCrossing& crossing, long a, long b,
                            SeededRng& rng, const AnalyzeOptions& opts = {});

// An arc whose section has exactly d components (Theorem 5.2 construction);
// validated by the germ oracle.
Arc totally_reducible_arc(const ProjectionSetup& setup,
                          const AnalyzeOptions& opts = {});

// Deterministic seeded rational direction avoiding the tangent directions of
// the discriminant (and the lc locus).
std::pair<Rational, Rational> generic_direction(const ProjectionSetup& setup,
                                                SeededRng& rng);

}  // namespace arcsect

#endif
