#include "arcsect/decide.hpp"
#include "arcsect/polyops.hpp"
#include <iostream>
using namespace arcsect;
static const char* ans(Verdict::Answer a){ return a==Verdict::Answer::Yes?"YES":a==Verdict::Answer::No?"NO":"UNKNOWN"; }
int main() try {
  // z^2 - x*y: witness must come from the axis crossing (generic arc reducible)
  {
    auto F = parse_poly("z^2 - x*y", {"x","y","z"});
    auto s = setup_projection(F, {Rational(0),Rational(0),Rational(1)});
    AnalyzeOptions o;
    auto V = analyze(s, o);
    std::cout << "z2-xy verdict: " << ans(V.exists_irreducible) << " reason: " << V.reason << std::endl;
    if (V.generic) std::cout << "  generic type: " << V.generic->cycle_type << std::endl;
    for (auto& cr : V.crossings) std::cout << "  " << cr.label << " P1=" << cr.p1.cycle_string() << " P2=" << cr.p2.cycle_string() << " trans=" << cr.has_transitive << std::endl;
    if (!V.witnesses.empty()) std::cout << "  witness: " << V.witnesses[0].str() << " irred=" << V.witness_sections[0].irreducible_strict << std::endl;
    for (auto& n : V.notes) std::cout << "  note: " << n << std::endl;
    for (auto& e : V.errors) std::cout << "  err: " << e << std::endl;
  }
  // Ex 7.1 regression
  {
    auto F = parse_poly("z^4 - 4*x*z + 3*y^2", {"x","y","z"});
    auto s = setup_projection(F, {Rational(0),Rational(0),Rational(1)});
    AnalyzeOptions o; o.prune = false;
    auto V = analyze(s, o);
    std::cout << "Ex7.1 verdict: " << ans(V.exists_irreducible) << " crossings: " << V.crossings.size() << std::endl;
  }
  // 7.1 surface regression
  {
    auto F = parse_poly("z^3 - (x-y)*(x+y)*(x-2*y)*(x+2*y)", {"x","y","z"});
    auto s = setup_projection(F, {Rational(0),Rational(0),Rational(1)});
    auto V = analyze(s, AnalyzeOptions{});
    std::cout << "7.1 verdict: " << ans(V.exists_irreducible) << std::endl;
  }
  // suspension z^2 - x^3 - y^3
  {
    auto F = parse_poly("z^2 - x^3 - y^3", {"x","y","z"});
    auto s = setup_projection(F, {Rational(0),Rational(0),Rational(1)});
    auto V = analyze(s, AnalyzeOptions{});
    std::cout << "susp verdict: " << ans(V.exists_irreducible) << std::endl;
  }
  return 0;
} catch (const std::exception& e) { std::cout << "EXC: " << e.what() << std::endl; return 1; }
