#ifndef ARCSECT_RESOLVE_HPP
#define ARCSECT_RESOLVE_HPP

#include <string>
#include <utility>
#include <vector>

#include "arcsect/mpoly.hpp"

namespace arcsect {

struct Divisor {
  MPoly equation;  // in chart coordinates (x, y)
  enum class Kind { Exceptional, Strict } kind = Kind::Strict;
  // Exceptional: E_k index (1-based).  Strict: 0 for the main strict
  // transform, 1/2 for split coordinate-axis components of the discriminant.
  int global_id = 0;
  int multiplicity = 1;  // in the total transform
  std::string label() const {
    if (kind == Divisor::Kind::Exceptional) return "E" + std::to_string(global_id);
    if (global_id == 1) return "Delta[x]";
    if (global_id == 2) return "Delta[y]";
    return "Delta";
  }
};

struct Chart {
  int id = 0;
  std::string name;   // "delta", "delta.v", "delta.v.u", ...
  MPoly map_x, map_y; // map_to_base: chart (x,y) -> base coordinates
  MPoly total;        // pullback of delta (exact, no unit dropped)
  std::vector<Divisor> divisors;
  int parent = -1;
  std::pair<Rational, Rational> center;  // blowup center in parent coords
  char which = ' ';                      // 'u' or 'v'
  bool full_scope = true;  // u-charts cover all of E; v-charts only the origin
};

// Boundary loop of a transverse disk, in chart coordinates: the path is
// (px(T), py(T)) for T on the unit circle, basepoint at T = 1.
struct DiskLoop {
  MPoly px, py;  // polynomials in "t"
};

struct NormalCrossing {
  int chart = 0;
  std::pair<Rational, Rational> point;
  int div_a = 0, div_b = 0;  // indices into chart.divisors; a = youngest divisor
  Rational r1, r2;           // disk radii
  std::pair<Rational, Rational> q;  // shared basepoint (chart coordinates)
  DiskLoop loop_a, loop_b;   // boundary loops of D_a (around div_a) and D_b
  std::string label;         // e.g. "E3^E1"
};

struct ResolutionTree {
  MPoly delta;          // reduced (squarefree) input germ
  MPoly delta_full;     // as given
  std::vector<Chart> charts;
  std::vector<NormalCrossing> crossings;
  int exceptional_count = 0;
};

struct ResolveOptions {
  int depth_cap = 32;
  int radius_halvings = 24;
  long center_max_den = 1'000'000'000L;
};

// Standard blowup of `chart` at a rational center on its total transform;
// returns the two affine charts ((x, xy) and (xy, y)).
std::pair<Chart, Chart> blowup(const Chart& chart, const Rational& cx,
                               const Rational& cy, int next_exceptional_id);

// Embedded resolution of the germ of delta at the origin by point blowups.
// Throws UnsupportedError on irrational centers/crossing points and
// CertificationError when the depth cap is hit.
ResolutionTree resolve_embedded(const MPoly& delta, const ResolveOptions& = {});

// Enumerates all normal crossings of the total transform with certified
// transverse disks (axis-parallel, rational data, basepoint at the corner).
// resolve_embedded calls this; exposed for direct use.
std::vector<NormalCrossing> enumerate_crossings(ResolutionTree& tree,
                                                const ResolveOptions& = {});

// Reduced (radical) part of a bivariate polynomial.
MPoly reduced_part(const MPoly& f);

}  // namespace arcsect

#endif
