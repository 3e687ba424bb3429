#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arcsect/decide.hpp"
#include "arcsect/polyops.hpp"

using namespace arcsect;

namespace {

MPoly S(const std::string& s) { return parse_poly(s, {"x", "y", "z"}); }

ProjectionSetup zsetup(const std::string& s) {
  return setup_projection(S(s), {Rational(0), Rational(0), Rational(1)});
}

Arc user_arc(const std::string& x, const std::string& y) {
  Arc a;
  a.x = parse_poly(x, {"t"});
  a.y = parse_poly(y, {"t"});
  a.provenance = Arc::Provenance::UserGiven;
  return a;
}

}  // namespace

TEST_CASE("setup_projection: degrees, multiplicities, transversality") {
  auto s1 = zsetup("z^4 - 4*x*z + 3*y^2");
  CHECK(s1.d == 4);
  CHECK(s1.m == 2);
  CHECK_FALSE(s1.transverse);  // the direction lies on the cone 3y^2-4xz

  auto s2 = zsetup("z^2 - x^3 - y^3");
  CHECK(s2.d == 2);
  CHECK(s2.m == 2);
  CHECK_FALSE(s2.transverse);  // cone z^2 contains the direction; d = m anyway

  auto s3 = zsetup("z^3 - (x-y)*(x+y)*(x-2*y)*(x+2*y)");
  CHECK(s3.d == 3);
  CHECK(s3.m == 3);
  CHECK(s3.transverse);
}

TEST_CASE("setup_projection: non-finite projection is rejected") {
  // The z-axis lies inside x*z - y^2 = 0.
  CHECK_THROWS_AS(zsetup("x*z - y^2"), DomainError);
}

TEST_CASE("adapted coordinates realize a perturbed projection") {
  auto F = S("z^3 - (x-y)*(x+y)*(x-2*y)*(x+2*y)");
  auto s = setup_projection(F, {Rational(0), Rational(1), Rational(10)});
  CHECK(s.d == 3);
  CHECK(s.F.degree("z") == 4);  // one far sheet appears
}

TEST_CASE("tangent cone screening: the five-case classification") {
  CHECK(tangent_cone_screen(S("z^3 - (x-y)*(x+y)*(x-2*y)*(x+2*y)")).cls ==
        ConeClass::SingleLine);
  CHECK(tangent_cone_screen(S("z^2 - x^3 - y^3")).cls == ConeClass::SingleLine);
  auto tc = tangent_cone_screen(S("x*y + z^3"));
  CHECK(tc.cls == ConeClass::ConcurrentLines);
  REQUIRE(tc.vertex.has_value());
  // vertex (0 : 0 : 1)
  CHECK((*tc.vertex)[0] == 0);
  CHECK((*tc.vertex)[1] == 0);
  CHECK((*tc.vertex)[2] != 0);
  CHECK(tangent_cone_screen(S("z^4 - 4*x*z + 3*y^2")).cls == ConeClass::Conic);

  auto quartic = tangent_cone_screen(S("x^4 + y^4 + x^2*z^2 + y*z^3 + z^4"));
  CHECK(quartic.cls == ConeClass::NoAdmissibleLine);
  CHECK(quartic.smooth_certified);
  CHECK(quartic.flexes.size() == 24);
  for (const auto& f : quartic.flexes) {
    CHECK_FALSE(f.hyperflex);
    CHECK(f.contact_residual > 1e-6);
  }
  // A smooth cubic cone always has flexes: max-contact lines exist.
  auto cubic = tangent_cone_screen(S("x^3 + y^3 + z^3 + x*y*z + x^4"));
  CHECK(cubic.cls == ConeClass::MaxContactCurve);
}

TEST_CASE("cone-discriminant check: exact equality for a smooth conic cone") {
  auto rep = cone_discriminant_check(zsetup("z^2 + x^2 + y^2 + y^3"));
  CHECK(rep.applicable);
  CHECK(rep.exact_equal);
  CHECK(rep.matched);
  CHECK(rep.delta_initial == parse_poly("x^2 + y^2", {"x", "y"}));
  CHECK(reduced_part(rep.pencil_disc) == parse_poly("x^2 + y^2", {"x", "y"}));
}

TEST_CASE("cone-discriminant check: not applicable for line cones") {
  auto rep = cone_discriminant_check(zsetup("z^2 - x^3 - y^3"));
  CHECK_FALSE(rep.applicable);
}

TEST_CASE("cone-discriminant check: quartic example's conic cone matches") {
  auto rep = cone_discriminant_check(zsetup("z^4 - 4*x*z + 3*y^2"));
  CHECK(rep.applicable);
  CHECK(rep.matched);
}

TEST_CASE("arc validation") {
  CHECK_THROWS_AS(validate_arc(user_arc("t^2", "t^4")), DomainError);  // gcd 2
  CHECK_THROWS_AS(validate_arc(user_arc("t+1", "t")), DomainError);
  Arc both_zero;
  CHECK_THROWS_AS(validate_arc(both_zero), DomainError);
  CHECK_NOTHROW(validate_arc(user_arc("t^3", "t^2")));
  CHECK_NOTHROW(validate_arc(user_arc("0", "t")));
}

TEST_CASE("arc sections: suspension examples") {
  auto s = zsetup("z^2 - x^3 - y^3");
  auto r1 = arc_section(s, user_arc("t", "2*t"));
  CHECK(r1.branch_count == 1);
  CHECK(r1.irreducible_strict);  // z^2 - 9 t^3

  auto r2 = arc_section(s, user_arc("t^3", "t^2"));
  CHECK(r2.branch_count == 2);
}

TEST_CASE("arc sections: reduced structure over a discriminant line") {
  auto s = zsetup("z^3 - (x-y)*(x+y)*(x-2*y)*(x+2*y)");
  auto r = arc_section(s, user_arc("t", "t"));
  CHECK(r.inside_discriminant);
  CHECK(r.branch_count == 1);
  CHECK(r.multiplicities == std::vector<int>{3});
  CHECK(r.irreducible_reduced);
  CHECK_FALSE(r.irreducible_strict);

  auto r2 = arc_section(s, user_arc("t - t^3", "t + t^3"));
  CHECK(r2.branch_count == 3);
}

TEST_CASE("arc meeting the discriminant inside the valid radius is an error") {
  auto s = zsetup("z^2 - x*y");
  Arc a = user_arc("t", "t - t^2");  // y vanishes again at t = 1
  a.valid_radius = Rational(2);
  CHECK_THROWS_AS(arc_section(s, a), DomainError);
  a.valid_radius = Rational(1, 2);
  CHECK_NOTHROW(arc_section(s, a));
}

TEST_CASE("Lemma 4.1 consistency: two cone points force reducible sections") {
  // The cone of the quartic example is a smooth conic: a generic direction
  // meets it in 2 points, so generic sections split.
  auto s = zsetup("z^4 - 4*x*z + 3*y^2");
  SeededRng rng(17);
  for (int i = 0; i < 4; ++i) {
    auto [a, b] = generic_direction(s, rng);
    MPoly T = MPoly::var("t");
    Arc arc;
    arc.x = T.scaled(a);
    arc.y = T.scaled(b);
    auto rep = arc_section(s, arc);
    CHECK(rep.branch_count >= 2);
  }
}

TEST_CASE("Cor 5.4 stability: sampled generic directions share a cycle type") {
  auto s = zsetup("z^4 - 4*x*z + 3*y^2");
  SeededRng rng(29);
  std::set<std::string> types;
  for (int i = 0; i < 5; ++i) {
    auto [a, b] = generic_direction(s, rng);
    auto gm = generic_monodromy(s.F, s.zvar, a, b, s.d);
    types.insert(cycle_type_string(gm.mono.perm.cycle_type()));
  }
  CHECK(types.size() == 1);
}

TEST_CASE("analyze: verdicts across the example gallery") {
  AnalyzeOptions opts;
  opts.prune = false;
  auto v1 = analyze(zsetup("z^4 - 4*x*z + 3*y^2"), opts);
  CHECK(v1.exists_irreducible == Verdict::Answer::No);
  CHECK(v1.crossings.size() == 4);

  auto v2 = analyze(zsetup("z^3 - (x-y)*(x+y)*(x-2*y)*(x+2*y)"), opts);
  CHECK(v2.exists_irreducible == Verdict::Answer::Yes);
  REQUIRE(!v2.witnesses.empty());
  CHECK(v2.witness_sections[0].irreducible_strict);

  auto v3 = analyze(zsetup("z^2 - x*y"), opts);
  CHECK(v3.exists_irreducible == Verdict::Answer::Yes);
  REQUIRE(!v3.witnesses.empty());
  CHECK(v3.witnesses[0].provenance == Arc::Provenance::ChartPushdown);
  CHECK(v3.witness_sections[0].irreducible_strict);

  auto v4 = analyze(zsetup("x^4 + y^4 + x^2*z^2 + y*z^3 + z^4"), opts);
  CHECK(v4.exists_irreducible == Verdict::Answer::No);
}

TEST_CASE("Cor 4.8: with a non-line cone, witnesses are tangent to Delta") {
  auto s = zsetup("z^2 - x*y");
  AnalyzeOptions opts;
  auto v = analyze(s, opts);
  REQUIRE(v.exists_irreducible == Verdict::Answer::Yes);
  REQUIRE(!v.witnesses.empty());
  CHECK(v.cone);
  CHECK(v.cone->cls == ConeClass::Conic);
  // tangent direction of the witness
  const Arc& w = v.witnesses[0];
  int ox = w.x.is_zero() ? 1 << 20 : w.x.coeffs_in("t").size();
  int oy = w.y.is_zero() ? 1 << 20 : w.y.coeffs_in("t").size();
  // lowest t-order term of each component
  auto low_order = [](const MPoly& p) {
    if (p.is_zero()) return 1 << 20;
    auto cs = p.coeffs_in("t");
    for (size_t k = 0; k < cs.size(); ++k)
      if (!cs[k].is_zero()) return static_cast<int>(k);
    return 1 << 20;
  };
  (void)ox;
  (void)oy;
  int kx = low_order(w.x), ky = low_order(w.y);
  // Tangent direction (a : b) with the smaller order winning.
  Rational a = kx <= ky ? w.x.coeff_of("t", kx).constant_value() : Rational(0);
  Rational b = ky <= kx ? w.y.coeff_of("t", ky).constant_value() : Rational(0);
  // Tangent directions of Delta = xy are (1:0) and (0:1).
  MPoly init = discriminant(s.F, s.zvar).initial_form();
  std::map<std::string, Rational> pt;
  for (const auto& vv : init.vars()) pt[vv] = vv == "x" ? a : b;
  CHECK(init.eval_rational(pt) == 0);
}

TEST_CASE("screen_discriminant_branches: prunable vs multiple-line sections") {
  // Quartic example: both cusp branches of Delta carry reducible sections.
  auto screens1 = screen_discriminant_branches(zsetup("z^4 - 4*x*z + 3*y^2"));
  REQUIRE(screens1.size() == 2);
  for (const auto& s : screens1) {
    CHECK(s.section.branch_count == 3);
    CHECK(s.prunable);
  }
  // Line-cone surface: each discriminant line gives a multiple line, which is
  // irreducible with the reduced structure (not prunable).
  auto screens2 =
      screen_discriminant_branches(zsetup("z^3 - (x-y)*(x+y)*(x-2*y)*(x+2*y)"));
  REQUIRE(screens2.size() == 4);
  for (const auto& s : screens2) {
    CHECK(s.section.branch_count == 1);
    CHECK(s.section.multiplicities == std::vector<int>{3});
    CHECK_FALSE(s.prunable);
  }
}

TEST_CASE("pruning keeps the verdict and skips strict-branch crossings") {
  auto s = zsetup("z^4 - 4*x*z + 3*y^2");
  AnalyzeOptions with_prune;
  with_prune.prune = true;
  auto v = analyze(s, with_prune);
  CHECK(v.exists_irreducible == Verdict::Answer::No);
  int pruned = 0, processed = 0;
  for (const auto& cr : v.crossings) {
    if (cr.pruned) ++pruned;
    if (cr.processed) ++processed;
  }
  CHECK(pruned == 2);
  CHECK(processed == 2);
}

TEST_CASE("totally reducible witness on a small cover") {
  auto s = zsetup("z^2 - x*y");
  Arc arc = totally_reducible_arc(s);
  auto rep = arc_section(s, arc);
  CHECK(rep.branch_count == 2);
}

TEST_CASE("verdict degrades to unknown on unsupported resolutions") {
  // Generic sections split (4 branches), and the discriminant needs a blowup
  // whose strict transform meets E at irrational points.
  auto s = zsetup("z^4 - x^2*(y^2 - 2*x^2)");
  AnalyzeOptions opts;
  auto v = analyze(s, opts);
  CHECK(v.exists_irreducible == Verdict::Answer::Unknown);
  CHECK(!v.errors.empty());
}

TEST_CASE("generic direction avoids the tangent directions of Delta") {
  auto s = zsetup("z^3 - (x-y)*(x+y)*(x-2*y)*(x+2*y)");
  SeededRng rng(1234);
  for (int i = 0; i < 5; ++i) {
    auto [a, b] = generic_direction(s, rng);
    MPoly init = discriminant(s.F, s.zvar).initial_form();
    std::map<std::string, Rational> pt;
    for (const auto& vv : init.vars()) pt[vv] = vv == "x" ? a : b;
    CHECK(init.eval_rational(pt) != 0);
  }
}
