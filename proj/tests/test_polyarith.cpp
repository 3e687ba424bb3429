#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arcsect/mpoly.hpp"
#include "arcsect/polyops.hpp"
#include "arcsect/roots.hpp"

using namespace arcsect;

namespace {

MPoly P(const std::string& s,
        const std::vector<std::string>& vars = {"x", "y", "z"}) {
  return parse_poly(s, vars);
}

MPoly random_poly(SeededRng& rng, const std::vector<std::string>& vars,
                  int max_deg, int terms) {
  MPoly acc;
  for (int k = 0; k < terms; ++k) {
    MPoly term = MPoly::constant(Rational(rng.next_int(-5, 5)));
    for (const auto& v : vars)
      term = term * MPoly::var(v).pow(static_cast<int>(rng.next_int(0, max_deg)));
    acc += term;
  }
  return acc;
}

}  // namespace

TEST_CASE("parse: canonical examples") {
  MPoly f = P("z^4 - 4*x*z + 3*y^2");
  CHECK(f.term_count() == 3);
  CHECK(f.str() == "z^4 - 4*x*z + 3*y^2");

  CHECK(P("0").is_zero());
  CHECK(P("0").str() == "0");

  CHECK(P("(y^3-x^2)*(y^3+x^2)", {"x", "y"}) == P("y^6 - x^4", {"x", "y"}));
}

TEST_CASE("parse: rational literals and division") {
  CHECK(P("1/8", {}).constant_value() == Rational(1, 8));
  CHECK(P("z^4 - (1/8)*z + 3/64", {"z"}).coeff_of("z", 0).constant_value() ==
        Rational(3, 64));
}

TEST_CASE("parse: errors carry positions") {
  CHECK_THROWS_AS(P("x + w", {"x", "y"}), ParseError);
  CHECK_THROWS_AS(P("x + ", {"x"}), ParseError);
  CHECK_THROWS_AS(P("x ^ y", {"x", "y"}), ParseError);
  CHECK_THROWS_AS(P("x / y", {"x", "y"}), ParseError);
  try {
    P("x + w", {"x"});
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.pos == 4);
  }
}

TEST_CASE("parse-print-parse is the identity on canonical form") {
  SeededRng rng(7);
  for (int i = 0; i < 20; ++i) {
    MPoly f = random_poly(rng, {"x", "y", "z"}, 3, 5);
    MPoly g = parse_poly(f.str(), {"x", "y", "z"});
    CHECK(f == g);
  }
}

TEST_CASE("substitute: blowup composition from the running example") {
  MPoly f = P("z^4 - 4*x*z + 3*y^2");
  std::map<std::string, MPoly> m{{"x", P("x^2*y^3", {"x", "y"})},
                                 {"y", P("x*y^2", {"x", "y"})},
                                 {"z", MPoly::var("z")}};
  CHECK(f.substitute(m) == P("z^4 - 4*x^2*y^3*z + 3*x^2*y^4"));

  // identity substitution
  std::map<std::string, MPoly> id{{"x", MPoly::var("x")},
                                  {"y", MPoly::var("y")},
                                  {"z", MPoly::var("z")}};
  CHECK(f.substitute(id) == f);

  MPoly g = P("y^6 - x^4", {"x", "y"});
  std::map<std::string, MPoly> bl{{"x", P("x*y", {"x", "y"})},
                                  {"y", MPoly::var("x")}};
  CHECK(g.substitute(bl) == P("x^6 - x^4*y^4", {"x", "y"}));
}

TEST_CASE("substitute respects composition") {
  SeededRng rng(11);
  for (int i = 0; i < 10; ++i) {
    MPoly f = random_poly(rng, {"x", "y"}, 2, 4);
    std::map<std::string, MPoly> sigma{{"x", random_poly(rng, {"x", "y"}, 2, 2)},
                                       {"y", random_poly(rng, {"x", "y"}, 2, 2)}};
    std::map<std::string, MPoly> tau{{"x", random_poly(rng, {"x", "y"}, 1, 2)},
                                     {"y", random_poly(rng, {"x", "y"}, 1, 2)}};
    std::map<std::string, MPoly> comp{{"x", sigma.at("x").substitute(tau)},
                                      {"y", sigma.at("y").substitute(tau)}};
    CHECK(f.substitute(sigma).substitute(tau) == f.substitute(comp));
  }
}

TEST_CASE("ring axioms on random triples") {
  SeededRng rng(23);
  for (int i = 0; i < 12; ++i) {
    MPoly a = random_poly(rng, {"x", "y"}, 2, 3);
    MPoly b = random_poly(rng, {"x", "y"}, 2, 3);
    MPoly c = random_poly(rng, {"x", "y"}, 2, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));
  }
}

TEST_CASE("discriminant of the quartic surface: exact unit 6912") {
  MPoly f = P("z^4 - 4*x*z + 3*y^2");
  MPoly target = P("(y^3-x^2)*(y^3+x^2)", {"x", "y"});
  MPoly raw = discriminant_raw(f, "z");
  CHECK(raw == target.scaled(Rational(6912)));
  // Sylvester-determinant oracle confirms the subresultant-PRS value.
  MPoly oracle = sylvester_resultant(f, f.derivative("z"), "z");
  CHECK(raw == oracle);  // lc = 1
  CHECK(discriminant(f, "z") == target);
}

TEST_CASE("discriminant small closed forms vs the Sylvester oracle") {
  MPoly g = P("x^3 + x*y - 2*y^2", {"x", "y"});
  MPoly f = MPoly::var("z").pow(2) - g;
  MPoly raw = discriminant_raw(f, "z");
  CHECK(raw == g.scaled(4));  // 4g up to sign
  CHECK(raw == exact_div(sylvester_resultant(f, f.derivative("z"), "z"),
                         f.leading_coeff("z")));

  MPoly p = P("x^2*y - y^3 + x", {"x", "y"});
  MPoly f3 = MPoly::var("z").pow(3) - p;
  MPoly raw3 = discriminant_raw(f3, "z");
  CHECK(raw3 == (p * p).scaled(-27));  // -27 p^2 up to unit
}

TEST_CASE("resultant: PRS equals the Sylvester determinant on random input") {
  SeededRng rng(41);
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    MPoly f = random_poly(rng, {"x", "y", "z"}, 2, 4);
    MPoly g = random_poly(rng, {"x", "y", "z"}, 2, 3);
    if (f.degree("z") < 1 || g.degree("z") < 1) continue;
    CHECK(resultant(f, g, "z") == sylvester_resultant(f, g, "z"));
    ++checked;
  }
  CHECK(checked >= 30);
}

TEST_CASE("discriminant of a product vanishes on each factor's locus") {
  // disc(fg) = disc(f) disc(g) Res(f,g)^2 for monic factors.
  SeededRng rng(5);
  for (int i = 0; i < 6; ++i) {
    MPoly f = MPoly::var("z").pow(2) + random_poly(rng, {"x", "y"}, 2, 2) * MPoly::var("z") +
              random_poly(rng, {"x", "y"}, 2, 2);
    MPoly g = MPoly::var("z").pow(2) + random_poly(rng, {"x", "y"}, 2, 2);
    MPoly lhs = discriminant_raw(f * g, "z");
    MPoly r = resultant(f, g, "z");
    MPoly rhs = discriminant_raw(f, "z") * discriminant_raw(g, "z") * r * r;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("initial form") {
  CHECK(P("z^4 - 4*x*z + 3*y^2").initial_form() == P("3*y^2 - 4*x*z"));
  MPoly hom = P("x^2*y - z^3");
  CHECK(hom.initial_form() == hom);
  CHECK(P("z^3 - (x-y)*(x+y)*(x-2*y)*(x+2*y)").initial_form() == P("z^3", {"z"}));
  CHECK_THROWS_AS(MPoly().initial_form(), DomainError);
}

TEST_CASE("squarefree decomposition") {
  auto dec = squarefree_decomposition(P("z^3", {"z"}), "z");
  REQUIRE(dec.size() == 1);
  CHECK(dec[0].multiplicity == 3);
  CHECK(dec[0].factor == MPoly::var("z"));

  // gcd with the derivative is constant: already squarefree.
  MPoly d = P("(y^3-x^2)*(y^3+x^2)", {"x", "y"});
  CHECK(mpoly_gcd(d, d.derivative("y")).is_constant());
  auto dec2 = squarefree_decomposition(d, "y");
  REQUIRE(dec2.size() == 1);
  CHECK(dec2[0].multiplicity == 1);
  CHECK(normalize_primitive(dec2[0].factor) == normalize_primitive(d));

  auto dec3 = squarefree_decomposition(P("z^2*(z-t)", {"z", "t"}), "z");
  REQUIRE(dec3.size() == 2);
  CHECK(dec3[0].multiplicity == 1);
  CHECK(dec3[0].factor == P("z - t", {"z", "t"}));
  CHECK(dec3[1].multiplicity == 2);
  CHECK(dec3[1].factor == MPoly::var("z"));
  CHECK(squarefree_part(P("z^2*(z-t)", {"z", "t"}), "z") ==
        P("z^2 - t*z", {"z", "t"}));
}

TEST_CASE("gcd and exact division") {
  MPoly a = P("(x+y)^2*(x-y)", {"x", "y"});
  MPoly b = P("(x+y)*(x^2+1)", {"x", "y"});
  CHECK(mpoly_gcd(a, b) == P("x + y", {"x", "y"}));
  CHECK(exact_div(a, P("x+y", {"x", "y"})) == P("(x+y)*(x-y)", {"x", "y"}));
  CHECK_THROWS_AS(exact_div(P("x^2+1", {"x"}), P("x+1", {"x"})), DomainError);
  // content extraction
  MPoly f = P("2*x*y^2 + 4*x^2*y^2", {"x", "y"});
  CHECK(content_in(f, "y") == P("2*x^2 + x", {"x"}).scaled(2) ||
        content_in(f, "y") == normalize_primitive(P("2*x + 4*x^2", {"x"})));
}

TEST_CASE("univariate roots: simple cases with certified radii") {
  auto rs = complex_roots({{-1, 0}, {0, 0}, {1, 0}});  // z^2 - 1
  REQUIRE(rs.size() == 2);
  CHECK(std::abs(rs[0].box.center() - std::complex<double>(-1, 0)) < 1e-12);
  CHECK(std::abs(rs[1].box.center() - std::complex<double>(1, 0)) < 1e-12);
  CHECK(rs[0].box.radius < 1e-10);

  // fiber of the featured disk at t = 1: 4 simple roots
  std::vector<Rational> fib = {Rational(3, 64), Rational(-1, 8), Rational(0),
                               Rational(0), Rational(1)};
  auto rs2 = rational_roots_certified(fib);
  CHECK(rs2.size() == 4);
  for (const auto& c : rs2) CHECK(c.multiplicity == 1);

  // triple root at 0, exact multiplicity through the squarefree route
  auto rs3 = rational_roots_certified({Rational(0), Rational(0), Rational(0),
                                       Rational(1)});
  REQUIRE(rs3.size() == 1);
  CHECK(rs3[0].multiplicity == 3);
  CHECK(std::abs(rs3[0].box.center()) < 1e-12);
}

TEST_CASE("univariate roots: Vieta sums within certified radii") {
  SeededRng rng(3);
  for (int i = 0; i < 10; ++i) {
    int d = static_cast<int>(rng.next_int(2, 5));
    std::vector<std::complex<double>> cs(d + 1);
    for (auto& c : cs)
      c = {static_cast<double>(rng.next_int(-8, 8)),
           static_cast<double>(rng.next_int(-8, 8))};
    if (std::abs(cs[d]) < 1) cs[d] = 2.0;
    auto rs = complex_roots(cs);
    std::complex<double> sum = 0, prod = 1;
    double radsum = 0;
    for (const auto& r : rs)
      for (int k = 0; k < r.multiplicity; ++k) {
        sum += r.box.center();
        prod *= r.box.center();
        radsum += r.box.radius;
      }
    std::complex<double> expect_sum = -cs[d - 1] / cs[d];
    std::complex<double> expect_prod = cs[0] / cs[d];
    if (d % 2 == 1) expect_prod = -expect_prod;
    CHECK(std::abs(sum - expect_sum) <= 10 * radsum + 1e-9);
    CHECK(std::abs(prod - expect_prod) <= 10 * radsum * 8 + 1e-7);
  }
}

TEST_CASE("rational root split: exact detection and deflation") {
  // (t - 2)(t + 1/3)^2 (t^2 + 1)
  MPoly f = P("(t - 2)*(3*t + 1)^2*(t^2 + 1)", {"t"});
  std::vector<Rational> cs;
  for (const auto& c : f.coeffs_in("t")) cs.push_back(c.constant_value());
  auto split = rational_root_split(cs);
  REQUIRE(split.rational_roots.size() == 2);
  bool found2 = false, found13 = false;
  for (const auto& [r, m] : split.rational_roots) {
    if (r == 2) {
      found2 = true;
      CHECK(m == 1);
    }
    if (r == Rational(-1, 3)) {
      found13 = true;
      CHECK(m == 2);
    }
  }
  CHECK(found2);
  CHECK(found13);
  CHECK(split.other_roots.size() == 2);  // +-i
}

TEST_CASE("root lower bound is valid") {
  std::vector<Rational> cs = {Rational(3, 64), Rational(-1, 8), Rational(0),
                              Rational(0), Rational(1)};
  Rational lb = root_abs_lower_bound(cs);
  CHECK(lb > 0);
  for (const auto& c : rational_roots_certified(cs))
    CHECK(std::abs(c.box.center()) + c.box.radius + 1e-12 > to_double(lb));
}

TEST_CASE("normalize_primitive: coprime integers, positive leading sign") {
  MPoly f = P("y^6 - x^4", {"x", "y"}).scaled(Rational(-6912, 7));
  MPoly n = normalize_primitive(f);
  CHECK(n == P("y^6 - x^4", {"x", "y"}));
}

TEST_CASE("rational kernel") {
  // x + y + z = 0, x - y = 0  ->  kernel (1,1,-2)
  std::vector<std::vector<Rational>> m = {
      {Rational(1), Rational(1), Rational(1)},
      {Rational(1), Rational(-1), Rational(0)}};
  auto k = rational_kernel(m, 3);
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == k[0][1]);
  CHECK(k[0][2] == -2 * k[0][0]);
}
