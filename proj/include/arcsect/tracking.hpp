#ifndef ARCSECT_TRACKING_HPP
#define ARCSECT_TRACKING_HPP

#include <complex>
#include <string>
#include <vector>

#include "arcsect/mpoly.hpp"
#include "arcsect/permutation.hpp"
#include "arcsect/roots.hpp"

namespace arcsect {

struct TrackOptions {
  long max_total_steps = 1 << 20;
  int initial_steps = 64;        // first subdivision of [0, 2pi]
  double match_factor = 1.0 / 3.0;  // max motion < factor * min separation
  int newton_iters = 40;
  double lc_min_rel = 1e-9;      // leading coefficient floor along the loop
  int resolve_every = 64;        // full fresh solve every N accepted steps
  bool record_braid = false;
  double sort_rotation = 0.0;    // projection convention angle for braids
};

struct TrackingCertificate {
  long steps = 0;
  double min_separation = 0;   // smallest pairwise fiber distance observed
  double max_step_motion = 0;  // largest accepted per-step root motion
  int refinement_passes = 0;   // number of step halvings
  bool matching_ok() const {
    return max_step_motion < min_separation / 3.0 + 1e-300;
  }
};

struct BraidLetter {
  int index = 0;  // generator sigma_index, 0-based
  int sign = 1;
};

struct TrackResult {
  Permutation perm;  // on all tracked sheets, labels = basepoint order
  TrackingCertificate cert;
  std::vector<std::complex<double>> base_fiber;  // sorted by (Re, Im)
  std::vector<BraidLetter> braid;
};

// A fiber polynomial along a circle: sum_k zcoeffs[k](T) z^k with
// T(theta) = center + radius * exp(i*theta).  Each zcoeffs[k] is constant or
// univariate in tvar.
struct CircleFamily {
  std::vector<MPoly> zcoeffs;  // ascending in z
  std::string tvar = "t";
  Rational center = Rational(0);
  Rational radius = Rational(1);

  std::vector<std::complex<double>> fiber_coeffs(double theta) const;
  int zdegree() const { return static_cast<int>(zcoeffs.size()) - 1; }
};

// Builds the family for F(x(T), y(T), z) given path polynomials in tvar.
CircleFamily make_family(const MPoly& surface, const std::string& zvar,
                         const MPoly& path_x, const MPoly& path_y,
                         const std::string& tvar, const Rational& center,
                         const Rational& radius);

// Analytic continuation of the full fiber around the circle.  Deterministic
// given options; throws CertificationError when the matching-radius criterion
// cannot be met within the step budget.
TrackResult track_circle_family(const CircleFamily& fam,
                                const TrackOptions& opts = {});

// Certified nonvanishing of p(T) for T on the circle; exact composition with
// sampled evaluation plus a derivative (Lipschitz) bound, density doubled
// until margin exceeds 10x the evaluation error.  Returns false if the cap is
// reached without certification.
bool certify_nonvanishing_on_circle(const MPoly& p, const std::string& tvar,
                                    const Rational& center, const Rational& radius,
                                    int max_doublings = 16);

// Winding number of p(T(theta)) around 0 (requires certified nonvanishing).
// Throws CertificationError when the argument increments cannot be refined
// below pi/2.
int winding_number_on_circle(const MPoly& p, const std::string& tvar,
                             const Rational& center, const Rational& radius);

}  // namespace arcsect

#endif
