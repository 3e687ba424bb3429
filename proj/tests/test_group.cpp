#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "arcsect/group.hpp"

using namespace arcsect;

namespace {

Permutation C(const std::string& s, int d) {
  return Permutation::parse_cycles(s, d);
}

// Independent closure oracle (plain breadth-first products).
std::set<Permutation> closure(const Permutation& a, const Permutation& b) {
  std::set<Permutation> seen{Permutation::identity(a.size())};
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<Permutation> next = seen;
    for (const auto& e : seen)
      for (const Permutation* g : {&a, &b}) {
        if (next.insert(*g * e).second) grew = true;
      }
    seen = next;
  }
  return seen;
}

}  // namespace

TEST_CASE("cycle notation round trip") {
  Permutation p = C("(1,4)(2,3)", 4);
  CHECK(p.cycle_string() == "(1,4)(2,3)");
  CHECK(Permutation::parse_cycles(p.cycle_string(), 4) == p);
  CHECK(C("()", 4).is_identity());
  CHECK(C("(1,4,2)", 4).cycle_string() == "(1,4,2)");
}

TEST_CASE("transitive element means a single d-cycle") {
  CHECK(is_transitive_element(C("(1,2,3,4)", 4)));
  CHECK_FALSE(is_transitive_element(C("(1,4)(2,3)", 4)));
  CHECK_FALSE(is_transitive_element(C("(1,4,2)", 4)));  // fixes 3
}

TEST_CASE("the group of the featured crossing has two elements, none transitive") {
  auto rep = generated_group(Permutation::identity(4), C("(1,4)(2,3)", 4));
  CHECK(rep.commuting);
  CHECK(rep.elements.size() == 2);
  CHECK_FALSE(rep.has_transitive);
  CHECK_FALSE(rep.witness.has_value());
  CHECK(rep.cycle_type_census.at("(2,2)") == 1);
  CHECK(rep.cycle_type_census.at("(1,1,1,1)") == 1);
}

TEST_CASE("identity plus a 4-cycle gives an exponent witness") {
  auto rep = generated_group(Permutation::identity(4), C("(1,2,3,4)", 4));
  CHECK(rep.has_transitive);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->a == 0);
  CHECK(rep.witness->b == 1);
  CHECK(rep.witness->element == C("(1,2,3,4)", 4));
}

TEST_CASE("Klein four-group: four elements, no 4-cycle") {
  auto rep = generated_group(C("(1,2)(3,4)", 4), C("(1,3)(2,4)", 4));
  CHECK(rep.commuting);
  CHECK(rep.elements.size() == 4);
  CHECK_FALSE(rep.has_transitive);
  CHECK(rep.group_acts_transitively);  // transitive group, no transitive element
}

TEST_CASE("commuting enumeration matches an independent closure") {
  std::vector<std::pair<Permutation, Permutation>> cases = {
      {Permutation::identity(4), C("(1,4)(2,3)", 4)},
      {C("(1,2)(3,4)", 4), C("(1,3)(2,4)", 4)},
      {C("(1,2,3)", 3), C("(1,2,3)", 3)},
      {C("(1,2)", 5), C("(3,4,5)", 5)},
  };
  for (const auto& [a, b] : cases) {
    auto rep = generated_group(a, b);
    auto oracle = closure(a, b);
    CHECK(rep.elements.size() == oracle.size());
  }
}

TEST_CASE("non-commuting generators enumerate by breadth-first closure") {
  auto rep = generated_group(C("(1,2)", 3), C("(1,2,3)", 3));
  CHECK_FALSE(rep.commuting);
  CHECK(rep.elements.size() == 6);  // Sym(3)
  CHECK(rep.has_transitive);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->a == -1);  // no exponent witness without commutation
}

TEST_CASE("enumeration cap reports capped, never a wrong verdict") {
  auto rep = generated_group(C("(1,2)", 6), C("(1,2,3,4,5,6)", 6), 10);
  CHECK(rep.capped);
}

TEST_CASE("has_transitive is conjugation invariant") {
  SeededRng rng(99);
  std::vector<std::pair<Permutation, Permutation>> cases = {
      {Permutation::identity(4), C("(1,4)(2,3)", 4)},
      {C("(1,2)(3,4)", 4), C("(1,3,2,4)", 4)},
      {C("(1,2,3)", 4), Permutation::identity(4)},
  };
  for (const auto& [a, b] : cases) {
    bool base = generated_group(a, b).has_transitive;
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> img(4);
      std::iota(img.begin(), img.end(), 0);
      for (int i = 3; i > 0; --i)
        std::swap(img[i], img[rng.next_int(0, i)]);
      Permutation g(img);
      Permutation ca = g * a * g.inverse();
      Permutation cb = g * b * g.inverse();
      CHECK(generated_group(ca, cb).has_transitive == base);
    }
  }
}

TEST_CASE("orders and powers") {
  CHECK(C("(1,2,3,4)", 4).order() == 4);
  CHECK(C("(1,4)(2,3)", 4).order() == 2);
  CHECK(C("(1,4,2)", 4).power(3).is_identity());
  CHECK(C("(1,2,3,4)", 4).power(2) == C("(1,3)(2,4)", 4));
}
