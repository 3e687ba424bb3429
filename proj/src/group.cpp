#include "arcsect/group.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "arcsect/errors.hpp"

namespace arcsect {

bool is_transitive_element(const Permutation& p) { return p.is_full_cycle(); }

namespace {

bool orbits_transitive(const std::vector<Permutation>& gens, int d) {
  if (d <= 1) return true;
  std::vector<int> parent(d);
  for (int i = 0; i < d; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& g : gens)
    for (int i = 0; i < d; ++i) {
      int a = find(i), b = find(g[i]);
      if (a != b) parent[a] = b;
    }
  int r = find(0);
  for (int i = 1; i < d; ++i)
    if (find(i) != r) return false;
  return true;
}

}  // namespace

PermGroupReport generated_group(const Permutation& p1, const Permutation& p2,
                                size_t cap) {
  if (p1.size() != p2.size()) throw DomainError("generated_group: size mismatch");
  int d = p1.size();
  PermGroupReport rep;
  rep.generators = {p1, p2};
  rep.commuting = (p1 * p2 == p2 * p1);
  rep.group_acts_transitively = orbits_transitive(rep.generators, d);

  std::set<Permutation> seen;
  if (rep.commuting) {
    long o1 = p1.order(), o2 = p2.order();
    for (long a = 0; a < o1; ++a) {
      Permutation pa = p1.power(a);
      for (long b = 0; b < o2; ++b) {
        Permutation e = pa * p2.power(b);
        if (seen.insert(e).second) {
          rep.elements.push_back(e);
          if (!rep.witness && is_transitive_element(e))
            rep.witness = GroupWitness{e, a, b};
        }
      }
    }
  } else {
    std::deque<Permutation> queue{Permutation::identity(d)};
    seen.insert(queue.front());
    std::vector<Permutation> gens{p1, p2, p1.inverse(), p2.inverse()};
    while (!queue.empty()) {
      Permutation cur = queue.front();
      queue.pop_front();
      rep.elements.push_back(cur);
      if (!rep.witness && is_transitive_element(cur))
        rep.witness = GroupWitness{cur, -1, -1};
      if (seen.size() > cap) {
        rep.capped = true;
        break;
      }
      for (const auto& g : gens) {
        Permutation nxt = g * cur;
        if (seen.insert(nxt).second) queue.push_back(nxt);
      }
    }
  }
  rep.has_transitive = rep.witness.has_value();
  for (const auto& e : rep.elements)
    rep.cycle_type_census[cycle_type_string(e.cycle_type())] += 1;
  return rep;
}

}  // namespace arcsect
