#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arcsect/polyops.hpp"
#include "arcsect/resolve.hpp"

using namespace arcsect;

namespace {

MPoly P(const std::string& s) { return parse_poly(s, {"x", "y"}); }

// f == unit * g for a nonzero rational unit?
bool equal_up_to_unit(const MPoly& f, const MPoly& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  return normalize_primitive(f) == normalize_primitive(g) ||
         normalize_primitive(f) == normalize_primitive(-g);
}

bool tree_contains_total(const ResolutionTree& tree, const MPoly& want) {
  for (const auto& c : tree.charts)
    if (equal_up_to_unit(c.total, want)) return true;
  return false;
}

}  // namespace

TEST_CASE("blowup chart chain reproduces the published total transforms") {
  MPoly delta = P("(y^3-x^2)*(y^3+x^2)");
  auto tree = resolve_embedded(delta);
  CHECK(tree.exceptional_count == 3);
  CHECK(tree_contains_total(tree, P("y^4*(y-x^2)*(y+x^2)")));
  CHECK(tree_contains_total(tree, P("y^4*x^6*(y-x)*(y+x)")));
  CHECK(tree_contains_total(tree, P("y^4*x^12*(y-1)*(y+1)")));
  CHECK(tree_contains_total(tree, P("y^12*x^6*(1-x)*(1+x)")));
  CHECK(tree.crossings.size() == 4);
}

TEST_CASE("blowup: explicit single steps") {
  MPoly delta = P("(y^3-x^2)*(y^3+x^2)");
  Chart root;
  root.id = 0;
  root.name = "delta";
  root.map_x = MPoly::var("x");
  root.map_y = MPoly::var("y");
  root.total = delta;
  Divisor d;
  d.equation = delta;
  root.divisors.push_back(d);
  auto [u, v] = blowup(root, Rational(0), Rational(0), 1);
  CHECK(equal_up_to_unit(v.total, P("y^4*(y-x^2)*(y+x^2)")));
  auto [uu, uv] = blowup(v, Rational(0), Rational(0), 2);
  CHECK(equal_up_to_unit(uu.total, P("y^4*x^6*(y-x)*(y+x)")));
  auto [uuu, uuv] = blowup(uu, Rational(0), Rational(0), 3);
  CHECK(equal_up_to_unit(uuu.total, P("y^4*x^12*(y-1)*(y+1)")));
  CHECK(equal_up_to_unit(uuv.total, P("y^12*x^6*(1-x)*(1+x)")));
  CHECK_THROWS_AS(blowup(root, Rational(1), Rational(1), 1), DomainError);
}

TEST_CASE("pullback consistency: map composed with delta gives the total") {
  auto tree = resolve_embedded(P("(y^3-x^2)*(y^3+x^2)"));
  for (const auto& c : tree.charts) {
    std::map<std::string, MPoly> m{{"x", c.map_x}, {"y", c.map_y}};
    MPoly pullback = tree.delta.substitute(m);
    INFO("chart ", c.name);
    CHECK(equal_up_to_unit(pullback, c.total));
  }
}

TEST_CASE("multiplicity bookkeeping: exceptional orders match Fig-style data") {
  auto tree = resolve_embedded(P("(y^3-x^2)*(y^3+x^2)"));
  std::map<int, int> mult;  // E index -> multiplicity
  for (const auto& c : tree.charts)
    for (const auto& d : c.divisors)
      if (d.kind == Divisor::Kind::Exceptional) mult[d.global_id] = d.multiplicity;
  CHECK(mult[1] == 4);
  CHECK(mult[2] == 6);
  CHECK(mult[3] == 12);
  // The coordinate powers of each total transform match the divisor records.
  for (const auto& c : tree.charts) {
    for (const auto& d : c.divisors) {
      if (d.kind != Divisor::Kind::Exceptional) continue;
      const std::string coord = d.equation.depends_on("x") ? "x" : "y";
      auto cs = c.total.coeffs_in(coord);
      int k = 0;
      while (k < static_cast<int>(cs.size()) && cs[k].is_zero()) ++k;
      CHECK(k >= d.multiplicity);
    }
  }
}

TEST_CASE("divisor products recover the total transform") {
  auto tree = resolve_embedded(P("(y^3-x^2)*(y^3+x^2)"));
  for (const auto& c : tree.charts) {
    MPoly prod = MPoly::constant(1);
    for (const auto& d : c.divisors) prod = prod * d.equation.pow(d.multiplicity);
    INFO("chart ", c.name);
    CHECK(equal_up_to_unit(prod, c.total));
  }
}

TEST_CASE("smooth curve: root-only tree, no crossings") {
  auto tree = resolve_embedded(P("y - x^2"));
  CHECK(tree.charts.size() == 1);
  CHECK(tree.crossings.empty());
}

TEST_CASE("coordinate cross: a single crossing at the origin with 1/2-disks") {
  auto tree = resolve_embedded(P("x*y"));
  CHECK(tree.charts.size() == 1);
  REQUIRE(tree.crossings.size() == 1);
  const auto& nc = tree.crossings[0];
  CHECK(nc.point == std::make_pair(Rational(0), Rational(0)));
  CHECK(nc.r1 == Rational(1, 2));
  CHECK(nc.r2 == Rational(1, 2));
  CHECK(nc.q == std::make_pair(Rational(1, 2), Rational(1, 2)));
}

TEST_CASE("featured crossing carries the published disk parametrization") {
  auto tree = resolve_embedded(P("(y^3-x^2)*(y^3+x^2)"));
  bool found = false;
  for (const auto& nc : tree.crossings) {
    if (nc.label.rfind("E3^E2", 0) != 0) continue;
    found = true;
    CHECK(nc.q == std::make_pair(Rational(1, 2), Rational(1, 2)));
    // Loop a: (1/2, t/2); loop b: (t/2, 1/2) in chart coordinates.
    CHECK(nc.loop_a.px == MPoly::constant(Rational(1, 2)));
    CHECK(nc.loop_a.py == MPoly::var("t").scaled(Rational(1, 2)));
    CHECK(nc.loop_b.px == MPoly::var("t").scaled(Rational(1, 2)));
    CHECK(nc.loop_b.py == MPoly::constant(Rational(1, 2)));
  }
  CHECK(found);
}

TEST_CASE("crossing basepoints avoid the total transform") {
  auto tree = resolve_embedded(P("(y^3-x^2)*(y^3+x^2)"));
  for (const auto& nc : tree.crossings) {
    const auto& c = tree.charts[nc.chart];
    std::map<std::string, Rational> q;
    for (const auto& v : c.total.vars())
      q[v] = v == "x" ? nc.q.first : nc.q.second;
    CHECK(c.total.eval_rational(q) != 0);
  }
}

TEST_CASE("irrational centers are reported as unsupported") {
  // After one blowup the strict transform of y^3 - 2x^3 meets E at y = 2^(1/3).
  CHECK_THROWS_AS(resolve_embedded(P("y^3 - 2*x^3")), UnsupportedError);
}

TEST_CASE("depth cap guards non-termination") {
  ResolveOptions opts;
  opts.depth_cap = 1;
  CHECK_THROWS_AS(resolve_embedded(P("(y^3-x^2)*(y^3+x^2)"), opts),
                  CertificationError);
}

TEST_CASE("reduced part strips multiple factors") {
  CHECK(reduced_part(P("(x*y)^2")) == P("x*y"));
  CHECK(reduced_part(P("(y^2-x^3)^3")) == normalize_primitive(P("y^2-x^3")));
}
