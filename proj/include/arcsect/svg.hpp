#ifndef ARCSECT_SVG_HPP
#define ARCSECT_SVG_HPP

#include <string>

#include "arcsect/monodromy.hpp"
#include "arcsect/resolve.hpp"

namespace arcsect {

// Dual graph of the resolution: one node per divisor, one edge per crossing.
std::string svg_dual_graph(const ResolutionTree& tree);

// Fiber root trajectories over theta in [0, 2pi] for a loop (display only).
std::string svg_root_trajectories(const MPoly& F, const std::string& zvar,
                                  const LoopSpec& loop, int samples = 256);

}  // namespace arcsect

#endif
