#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "arcsect/germ.hpp"
#include "arcsect/polyops.hpp"

using namespace arcsect;

namespace {

PlaneCurveGerm G(const std::string& s) {
  return PlaneCurveGerm::make(parse_poly(s, {"t", "z"}));
}

// Independent re-substitution check: ord_t g(t^e, z(t)) beyond the truncation.
double residual_order(const PlaneCurveGerm& g, const PuiseuxBranch& b) {
  // Evaluate |g(t^e, z(t))| at a small t and estimate the order by comparing
  // two radii.
  auto z_of = [&](std::complex<double> t) {
    std::complex<double> acc = 0;
    for (const auto& term : b.terms) {
      double e = to_double(term.exponent) * b.ramification;
      acc += term.approx() * std::pow(t, e);
    }
    return acc;
  };
  auto val = [&](double r) {
    std::complex<double> t(r, 0);
    std::complex<double> x = std::pow(t, static_cast<double>(b.ramification));
    return std::abs(g.equation.eval({{"t", x}, {"z", z_of(t)}}));
  };
  double v1 = val(1e-3), v2 = val(1e-4);
  if (v1 == 0 && v2 == 0) return 1e9;  // exact solution
  return std::log10(v1 / v2);  // decades per decade = order estimate
}

}  // namespace

TEST_CASE("newton polygon: classic shapes") {
  auto np = newton_polygon(G("z^2 - t^3"));
  REQUIRE(np.segments.size() == 1);
  CHECK(np.vertices == std::vector<std::pair<int, long>>{{2, 0}, {0, 3}});
  CHECK(np.segments[0].slope == Rational(3, 2));
  CHECK(np.segments[0].interior_points == 0);

  auto np2 = newton_polygon(G("z^3 - t^4"));
  REQUIRE(np2.segments.size() == 1);
  CHECK(np2.vertices == std::vector<std::pair<int, long>>{{3, 0}, {0, 4}});
  CHECK(np2.segments[0].interior_points == 0);

  auto np3 = newton_polygon(G("z^4 - (1/8)*t^3*z + (3/64)*t^4"));
  REQUIRE(np3.segments.size() == 1);
  CHECK(np3.vertices == std::vector<std::pair<int, long>>{{4, 0}, {0, 4}});
  CHECK(np3.segments[0].lattice_length == 4);
  CHECK(np3.segments[0].interior_points == 3);
}

TEST_CASE("germ validation") {
  CHECK_THROWS_AS(PlaneCurveGerm::make(parse_poly("t*z", {"t", "z"}).scaled(0)),
                  DomainError);
  CHECK_THROWS_AS(G("t^2 - t^3"), DomainError);  // not fiber-finite
  CHECK(G("z^2 - t^3").weierstrass_degree == 2);
  // far sheets do not count toward the Weierstrass degree
  CHECK(G("z^2 - z^3 - t").weierstrass_degree == 2);
}

TEST_CASE("branch counts: paper germs") {
  auto bc1 = branch_count(G("z^3 - t^4"));
  CHECK(bc1.count == 1);
  CHECK(bc1.multiplicities == std::vector<int>{1});
  CHECK_FALSE(bc1.used_tracking);  // Newton fast path

  auto bc2 = branch_count(G("z^3 - 12*t^6 - 40*t^8 - 12*t^10"));
  CHECK(bc2.count == 3);
  CHECK(bc2.multiplicities == std::vector<int>{1, 1, 1});

  auto bc3 = branch_count(G("z^4 - (1/8)*t^3*z + (3/64)*t^4"));
  CHECK(bc3.count == 4);
  CHECK(bc3.multiplicities == std::vector<int>{1, 1, 1, 1});

  auto bc4 = branch_count(G("z^4 - (1/8)*t^2*z + (3/64)*t^2"));
  CHECK(bc4.count == 2);

  auto bc5 = branch_count(G("z^3"));
  CHECK(bc5.count == 1);
  CHECK(bc5.multiplicities == std::vector<int>{3});

  auto bc6 = branch_count(G("z^4 - 4*t^3*z + 3*t^4"));
  CHECK(bc6.count == 3);
  CHECK(bc6.multiplicities == std::vector<int>{2, 1, 1});
}

TEST_CASE("is_irreducible_germ with and without reduced structure") {
  CHECK(is_irreducible_germ(G("z^2 - t^3")));
  CHECK_FALSE(is_irreducible_germ(G("z^4 - (1/8)*t^2*z + (3/64)*t^2")));
  CHECK(is_irreducible_germ(G("z^3"), /*reduced=*/true));
  CHECK_FALSE(is_irreducible_germ(G("z^3"), /*reduced=*/false));
}

TEST_CASE("puiseux branches: cusp parametrizations are exact") {
  auto g = PlaneCurveGerm::make(parse_poly("y^3 - x^2", {"x", "y"}), "x", "y");
  auto brs = puiseux_branches(g, Rational(4));
  REQUIRE(brs.size() == 1);
  CHECK(brs[0].ramification == 3);
  REQUIRE(brs[0].terms.size() == 1);
  CHECK(brs[0].terms[0].exact);
  CHECK(brs[0].terms[0].coeff_exact == 1);
  CHECK(brs[0].terms[0].exponent == Rational(2, 3));
  // (t^3, t^2) solves the equation exactly
  MPoly t = MPoly::var("t");
  MPoly sub = parse_poly("y^3 - x^2", {"x", "y"})
                  .substitute({{"x", t.pow(3)}, {"y", t.pow(2)}});
  CHECK(sub.is_zero());

  auto g2 = PlaneCurveGerm::make(
      parse_poly("(y^3-x^2)*(y^3+x^2)", {"x", "y"}), "x", "y");
  auto brs2 = puiseux_branches(g2, Rational(4));
  REQUIRE(brs2.size() == 2);
  std::set<Rational> leads;
  for (const auto& b : brs2) {
    REQUIRE(b.terms.size() == 1);
    CHECK(b.terms[0].exact);
    leads.insert(b.terms[0].coeff_exact);
  }
  CHECK(leads == std::set<Rational>{Rational(-1), Rational(1)});

  auto g3 = G("z - t");
  auto brs3 = puiseux_branches(g3, Rational(4));
  REQUIRE(brs3.size() == 1);
  CHECK(brs3[0].ramification == 1);
}

TEST_CASE("oracle equivalence: monodromy cycle count equals Puiseux count") {
  const char* germs[] = {
      "z^2 - t^3",
      "z^3 - t^4",
      "z^3 - 12*t^6 - 40*t^8 - 12*t^10",
      "z^4 - (1/8)*t^3*z + (3/64)*t^4",
      "z^4 - (1/8)*t^2*z + (3/64)*t^2",
      "z^2 - t^2*(1 + t)",
      "z^2 - 2*t^2",
      "(z - t)^2 - t^3",
      "z^3 - t*z - t^2",
      "z^4 - t^2*z^2 + t^5",
      "z^4 - 4*t^3*z + 3*t^4",
      "z^2 - 9*t^3",
  };
  for (const char* s : germs) {
    auto g = G(s);
    auto tracked = branch_count(g);
    int puiseux = puiseux_branch_count(g);
    INFO("germ ", s);
    CHECK(tracked.count == puiseux);
  }
}

TEST_CASE("branch ramifications weighted by multiplicity sum to the degree") {
  const char* germs[] = {"z^2 - t^3", "z^3 - t^4", "z^4 - (1/8)*t^2*z + (3/64)*t^2",
                         "z^3", "z^4 - 4*t^3*z + 3*t^4"};
  for (const char* s : germs) {
    auto g = G(s);
    auto data = puiseux_branch_data(g, Rational(6), true);
    long total = 0;
    for (const auto& b : data.branches) total += b.ramification * b.multiplicity;
    INFO("germ ", s);
    CHECK(total == g.weierstrass_degree);
  }
}

TEST_CASE("fast path agrees with forced tracking") {
  const char* fast_germs[] = {"z^2 - t^3", "z^3 - t^4", "z^2 - 9*t^3",
                              "z^3 - t^5"};
  for (const char* s : fast_germs) {
    auto g = G(s);
    auto fast = branch_count(g);
    CHECK_FALSE(fast.used_tracking);
    // Forcing the tracking route: multiply by a unit factor that disables the
    // single-segment criterion without changing the germ structure near 0
    // is intrusive; instead compare against the independent structural count.
    CHECK(fast.count == puiseux_branch_count(g));
  }
}

TEST_CASE("re-substitution residual exceeds the truncation order") {
  auto g = PlaneCurveGerm::make(
      parse_poly("(y^3-x^2)*(y^3+x^2)", {"x", "y"}), "x", "y");
  for (const auto& b : puiseux_branches(g, Rational(4))) {
    double order = residual_order(g, b);
    CHECK(order > to_double(Rational(4)) * b.ramification * 0.9);
  }
  // A genuinely truncated (irrational) branch:
  auto g2 = G("z^2 - 2*t^2*(1+t)");
  for (const auto& b : puiseux_branches(g2, Rational(3))) {
    double order = residual_order(g2, b);
    CHECK(order > 3 * b.ramification * 0.9);
  }
}

TEST_CASE("safe radius bounds every nonzero critical modulus") {
  MPoly disc = discriminant(parse_poly("z^3 - 12*t^6 - 40*t^8 - 12*t^10",
                                       {"t", "z"}),
                            "z");
  Rational r = safe_circle_radius({disc}, "t");
  CHECK(r > 0);
  // nonzero roots of the discriminant stay outside 2r
  std::vector<Rational> cs;
  for (const auto& c : disc.coeffs_in("t")) cs.push_back(c.constant_value());
  size_t k = 0;
  while (k < cs.size() && cs[k] == 0) ++k;
  std::vector<Rational> core(cs.begin() + k, cs.end());
  for (const auto& cl : rational_roots_certified(core))
    CHECK(std::abs(cl.box.center()) > 2 * to_double(r) * 0.999);
}
