#ifndef ARCSECT_GROUP_HPP
#define ARCSECT_GROUP_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arcsect/permutation.hpp"

namespace arcsect {

// True iff p acts transitively as a cyclic group, i.e. p is a single d-cycle.
bool is_transitive_element(const Permutation& p);

struct GroupWitness {
  Permutation element;  // a d-cycle in the generated group
  // Exponents with element = P1^a * P2^b; set when the generators commute,
  // both -1 otherwise.
  long a = -1, b = -1;
};

struct PermGroupReport {
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;  // full enumeration unless capped
  bool commuting = false;
  bool capped = false;  // cap exceeded; has_transitive may be unknown
  bool has_transitive = false;
  // Weaker reading: the generated group acts transitively on the d points.
  bool group_acts_transitively = false;
  std::optional<GroupWitness> witness;
  std::map<std::string, int> cycle_type_census;  // type string -> count
};

// Enumerates the subgroup generated by two permutations.  When they commute
// the enumeration is {P1^a P2^b} with exponent witnesses; otherwise a
// breadth-first closure up to `cap` elements (capped => verdict "unknown"
// upstream, never a wrong answer).
PermGroupReport generated_group(const Permutation& p1, const Permutation& p2,
                                size_t cap = 1'000'000);

}  // namespace arcsect

#endif
