#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arcsect/monodromy.hpp"
#include "arcsect/polyops.hpp"

using namespace arcsect;

namespace {

MPoly S(const std::string& s) { return parse_poly(s, {"x", "y", "z"}); }

LoopSpec unit_loop(const std::string& px, const std::string& py) {
  LoopSpec ls;
  ls.px = parse_poly(px, {"t"});
  ls.py = parse_poly(py, {"t"});
  return ls;
}

}  // namespace

TEST_CASE("square-root monodromy is a transposition") {
  auto lm = track_loop(S("z^2 - x"), "z", unit_loop("t", "0"), 2);
  CHECK(cycle_type_string(lm.perm.cycle_type()) == "(2)");
}

TEST_CASE("featured disk loops of the quartic example") {
  MPoly F = S("z^4 - 4*x*z + 3*y^2");
  // Disk transverse to the last exceptional divisor: (1/2, t/2) pulled back
  // through (x^2 y^3, x y^2): fiber z^4 - (1/8) t^3 z + (3/64) t^4.
  auto lm1 = track_loop(F, "z", unit_loop("(1/4)*(t/2)^3", "(1/2)*(t/2)^2"), 4);
  CHECK(lm1.perm.is_identity());
  // The other disk: (t/2, 1/2): fiber z^4 - (1/8) t^2 z + (3/64) t^2.
  auto lm2 = track_loop(F, "z", unit_loop("t^2/32", "t/8"), 4);
  CHECK(cycle_type_string(lm2.perm.cycle_type()) == "(2,2)");
  CHECK(lm2.perm.cycle_string() == "(1,4)(2,3)");
}

TEST_CASE("crossing monodromies of the quartic example") {
  MPoly F = S("z^4 - 4*x*z + 3*y^2");
  auto tree = resolve_embedded(discriminant(F, "z"));
  REQUIRE(tree.crossings.size() == 4);
  std::multiset<std::string> second_types;
  for (const auto& nc : tree.crossings) {
    auto cm = crossing_monodromies(F, "z", tree, nc, 4);
    CHECK(cm.p1.is_identity());  // the youngest divisor has trivial monodromy
    CHECK(cm.p1 * cm.p2 == cm.p2 * cm.p1);
    second_types.insert(cycle_type_string(cm.p2.cycle_type()));
    if (nc.label.rfind("E3^E2", 0) == 0)
      CHECK(cycle_type_string(cm.p2.cycle_type()) == "(2,2)");
  }
  CHECK(second_types ==
        std::multiset<std::string>{"(2,1,1)", "(2,1,1)", "(2,2)", "(3,1)"});
}

TEST_CASE("determinism: re-run and halved steps give identical permutations") {
  MPoly F = S("z^4 - 4*x*z + 3*y^2");
  LoopSpec ls = unit_loop("t^2/32", "t/8");
  auto a = track_loop(F, "z", ls, 4);
  auto b = track_loop(F, "z", ls, 4);
  CHECK(a.perm == b.perm);
  MonodromyOptions fine;
  fine.track.initial_steps = 128;
  auto c = track_loop(F, "z", ls, 4, fine);
  CHECK(a.perm == c.perm);
}

TEST_CASE("certified avoidance rejects loops through the discriminant") {
  // x(t) = 1 - t vanishes at t = 1 on the unit circle.
  CHECK_THROWS_AS(track_loop(S("z^2 - x"), "z", unit_loop("1 - t", "0"), 2),
                  CertificationError);
}

TEST_CASE("transversal monodromy: divisor cycle types via crossings") {
  MPoly F = S("z^4 - 4*x*z + 3*y^2");
  auto tree = resolve_embedded(discriminant(F, "z"));
  // All crossings involve E3; its transversal monodromy is trivial at each.
  std::vector<std::string> e3_types;
  for (const auto& nc : tree.crossings) {
    const auto& ch = tree.charts[nc.chart];
    int idx = ch.divisors[nc.div_a].label() == "E3" ? nc.div_a : nc.div_b;
    if (ch.divisors[idx].label() != "E3") continue;
    auto lm = transversal_monodromy(F, "z", tree, nc.chart, idx, 4);
    e3_types.push_back(cycle_type_string(lm.perm.cycle_type()));
  }
  REQUIRE(e3_types.size() >= 2);
  for (const auto& t : e3_types) CHECK(t == "(1,1,1,1)");
  // E1's transversal monodromy has the generic cycle type (3,1).
  bool found_e1 = false;
  for (const auto& nc : tree.crossings) {
    const auto& ch = tree.charts[nc.chart];
    for (int idx : {nc.div_a, nc.div_b}) {
      if (ch.divisors[idx].label() != "E1") continue;
      auto lm = transversal_monodromy(F, "z", tree, nc.chart, idx, 4);
      CHECK(cycle_type_string(lm.perm.cycle_type()) == "(3,1)");
      found_e1 = true;
    }
  }
  CHECK(found_e1);
}

TEST_CASE("generic monodromy examples") {
  // z^2 - x along direction (1 : 0): transposition.
  auto gm = generic_monodromy(S("z^2 - x"), "z", Rational(1), Rational(0), 2);
  CHECK(cycle_type_string(gm.mono.perm.cycle_type()) == "(2)");

  // the line-cone cubic along x = 0: a 3-cycle (section z^3 - 4 y^4).
  auto gm2 = generic_monodromy(S("z^3 - (x-y)*(x+y)*(x-2*y)*(x+2*y)"), "z",
                               Rational(0), Rational(1), 3);
  CHECK(gm2.mono.perm.is_full_cycle());

  // the quartic example in a generic direction: at least 2 cycles.
  auto gm3 = generic_monodromy(S("z^4 - 4*x*z + 3*y^2"), "z", Rational(5, 2),
                               Rational(1), 4);
  CHECK(gm3.mono.perm.cycle_count() >= 2);
  CHECK(cycle_type_string(gm3.mono.perm.cycle_type()) == "(3,1)");
}

TEST_CASE("braids: words, coherence, degenerate family") {
  // z^2 - t: a single positive or negative half-twist generator.
  BraidResult br = compute_braid(S("z^2 - x"), "z", unit_loop("t", "0"), 2);
  REQUIRE(br.letters.size() == 1);
  CHECK(br.letters[0].index == 0);
  CHECK(br.underlying.cycle_string() == "(1,2)");

  // featured disk: permutation of the word matches the tracked permutation.
  MPoly F = S("z^4 - 4*x*z + 3*y^2");
  BraidResult br2 = compute_braid(F, "z", unit_loop("t^2/32", "t/8"), 4);
  CHECK(cycle_type_string(br2.underlying.cycle_type()) == "(2,2)");

  // constant-root family: empty braid word.
  BraidResult br3 = compute_braid(S("z^2 - 1 - x*0"), "z", unit_loop("t", "0"), 2);
  CHECK(br3.letters.empty());
  CHECK(br3.underlying.is_identity());
}

TEST_CASE("winding numbers on circles") {
  CHECK(winding_number_on_circle(parse_poly("t^2", {"t"}), "t", Rational(0),
                                 Rational(1)) == 2);
  CHECK(winding_number_on_circle(parse_poly("t - 4", {"t"}), "t", Rational(0),
                                 Rational(1)) == 0);
  CHECK(winding_number_on_circle(parse_poly("(t-4)*t^3", {"t"}), "t",
                                 Rational(0), Rational(1)) == 3);
}

TEST_CASE("near/far sheet restriction") {
  // z^2 - z^3 - x: one sheet near 0... actually d=2 near-sheets, one far.
  MPoly F = S("z^2 - z^3 - x");
  auto lm = track_loop(F, "z", unit_loop("t/8", "0"), 2);
  CHECK(lm.perm.size() == 2);
  CHECK(lm.perm_full.size() == 3);
  CHECK(cycle_type_string(lm.perm.cycle_type()) == "(2)");
}
