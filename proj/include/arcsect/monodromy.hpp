#ifndef ARCSECT_MONODROMY_HPP
#define ARCSECT_MONODROMY_HPP

#include <optional>
#include <string>
#include <vector>

#include "arcsect/germ.hpp"
#include "arcsect/mpoly.hpp"
#include "arcsect/permutation.hpp"
#include "arcsect/resolve.hpp"
#include "arcsect/tracking.hpp"

namespace arcsect {

// A loop in the base plane: (px(T), py(T)) with T on the circle
// center + radius * e^(i theta); basepoint at theta = 0.
struct LoopSpec {
  MPoly px, py;
  std::string tvar = "t";
  Rational center = Rational(0);
  Rational radius = Rational(1);
};

struct MonodromyOptions {
  TrackOptions track;
  bool braids = false;
};

struct LoopMonodromy {
  Permutation perm;       // restricted to the germ (near-origin) sheets
  Permutation perm_full;  // on all fiber sheets
  std::vector<int> near;  // fiber labels considered germ sheets
  TrackingCertificate cert;
  std::vector<BraidLetter> braid;  // when requested
  std::string braid_word;          // sigma-word, empty unless requested
};

// Monodromy of the degree-d germ cover of {F = 0} along the loop.  Certifies
// discriminant and leading-coefficient avoidance along the loop (exact
// composition + Lipschitz bound) and the near/far sheet split; throws
// CertificationError instead of guessing.
LoopMonodromy track_loop(const MPoly& F, const std::string& zvar,
                         const LoopSpec& loop, int d_near,
                         const MonodromyOptions& opts = {});

// Both disk monodromies at a normal crossing (same basepoint q, consistent
// fiber labels); checks that the two permutations commute.
struct CrossingMonodromy {
  Permutation p1, p2;  // around div_a (youngest divisor) and div_b
  LoopMonodromy m1, m2;
  std::string label;
};
CrossingMonodromy crossing_monodromies(const MPoly& F, const std::string& zvar,
                                       const ResolutionTree& tree,
                                       const NormalCrossing& crossing,
                                       int d_near,
                                       const MonodromyOptions& opts = {});

// Transversal monodromy of a divisor of the resolved discriminant: boundary
// of a small transverse disk at a generic point, pushed down to the base.
LoopMonodromy transversal_monodromy(const MPoly& F, const std::string& zvar,
                                    const ResolutionTree& tree, int chart_id,
                                    int divisor_idx, int d_near,
                                    const MonodromyOptions& opts = {});

// Monodromy of the generic smooth arc (a t, b t), |t| = r with r chosen so
// the segment meets the discriminant only at 0 (certified).
struct GenericMonodromy {
  LoopMonodromy mono;
  Rational a, b;      // direction
  Rational radius;
};
GenericMonodromy generic_monodromy(const MPoly& F, const std::string& zvar,
                                   const Rational& a, const Rational& b,
                                   int d_near, const MonodromyOptions& opts = {});

// Braid word of the fiber motion along the loop (real-part projection,
// ties by imaginary part; convention documented in the README).  The
// underlying permutation always equals track_loop's output.
struct BraidResult {
  std::vector<BraidLetter> letters;  // freely reduced
  std::string word;                  // e.g. "s0 s2 s1 s0 s2 s1"
  Permutation underlying;
};
BraidResult compute_braid(const MPoly& F, const std::string& zvar,
                          const LoopSpec& loop, int d_near,
                          const MonodromyOptions& opts = {});

std::string braid_word_string(const std::vector<BraidLetter>& letters);
Permutation braid_underlying_permutation(const std::vector<BraidLetter>& letters,
                                         int strands);

}  // namespace arcsect

#endif
