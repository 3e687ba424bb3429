// arcsect: decide whether a surface germ projection admits irreducible
// arc-sections, and construct witness arcs.  JSON in, JSON report out.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "arcsect/polyops.hpp"
#include "arcsect/report.hpp"
#include "arcsect/svg.hpp"

using namespace arcsect;

int main(int argc, char** argv) {
  CLI::App app{"arc-section existence analysis for surface germ projections"};
  std::string in_path, out_path, svg_dir;
  long seed = -1;
  int precision_digits = -1;
  bool no_prune = false, braids = false;
  app.add_option("--in", in_path, "job JSON file (default: stdin)");
  app.add_option("--out", out_path, "report JSON file (default: stdout)");
  app.add_option("--svg", svg_dir, "directory for SVG renderings");
  app.add_option("--seed", seed, "override the job seed");
  app.add_option("--precision-digits", precision_digits,
                 "override working precision digits");
  app.add_flag("--no-prune", no_prune, "disable the branch-section pruning");
  app.add_flag("--braids", braids, "emit braid words for tracked loops");
  CLI11_PARSE(app, argc, argv);

  Json jin;
  try {
    if (in_path.empty()) {
      std::stringstream ss;
      ss << std::cin.rdbuf();
      jin = Json::parse(ss.str());
    } else {
      std::ifstream f(in_path);
      if (!f) {
        std::cerr << "cannot open " << in_path << "\n";
        return 2;
      }
      jin = Json::parse(f);
    }
  } catch (const Json::parse_error& e) {
    std::cerr << "invalid JSON: " << e.what() << "\n";
    return 2;
  }

  JobSpec job;
  try {
    job = JobSpec::from_json(jin);
  } catch (const Error& e) {
    std::cerr << "invalid job: " << e.what() << "\n";
    return 2;
  }
  if (seed >= 0) job.seed = static_cast<uint64_t>(seed);
  if (precision_digits > 0) job.working_digits = precision_digits;
  if (no_prune) job.prune = false;
  if (braids) job.braids = true;

  RunResult res = run_job(job);

  if (!svg_dir.empty() && res.exit_code != 2) {
    try {
      MPoly F = parse_poly(job.surface, {"x", "y", "z"});
      std::array<Rational, 3> dir{Rational(0), Rational(0), Rational(1)};
      std::string p = job.projection;
      if (p == "x") {
        dir = {Rational(1), Rational(0), Rational(0)};
      } else if (p == "y") {
        dir = {Rational(0), Rational(1), Rational(0)};
      } else if (p != "z") {
        size_t pos = 0;
        for (int i = 0; i < 3; ++i) {
          size_t comma = p.find(',', pos);
          std::string part = i < 2 ? p.substr(pos, comma - pos) : p.substr(pos);
          auto q = rational_parse(part);
          if (!q) throw DomainError("bad projection");
          dir[i] = *q;
          pos = comma + 1;
        }
      }
      ProjectionSetup setup = setup_projection(F, dir);
      ResolutionTree tree = resolve_embedded(discriminant(setup.F, setup.zvar));
      std::ofstream g(svg_dir + "/dual_graph.svg");
      g << svg_dual_graph(tree);
      SeededRng rng(job.seed);
      auto [a, b] = generic_direction(setup, rng);
      MonodromyOptions mo;
      GenericMonodromy gm =
          generic_monodromy(setup.F, setup.zvar, a, b, setup.d, mo);
      LoopSpec ls;
      ls.px = MPoly::var("t").scaled(a);
      ls.py = MPoly::var("t").scaled(b);
      ls.radius = gm.radius;
      std::ofstream r(svg_dir + "/generic_roots.svg");
      r << svg_root_trajectories(setup.F, setup.zvar, ls);
    } catch (const Error& e) {
      res.report["notes"].push_back(std::string("svg rendering failed: ") +
                                    e.what());
    }
  }

  std::string text = res.report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    f << text;
  }
  return res.exit_code;
}
