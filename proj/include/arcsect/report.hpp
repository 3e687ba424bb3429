#ifndef ARCSECT_REPORT_HPP
#define ARCSECT_REPORT_HPP

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "arcsect/decide.hpp"

namespace arcsect {

using Json = nlohmann::json;

// A unit of work for the CLI: surface, projection, tasks, knobs.
struct JobSpec {
  std::string surface;              // expression in x, y, z
  std::string projection = "z";     // axis name or "p0,p1,p2" rationals
  std::vector<std::string> tasks;   // see kKnownTasks
  std::optional<std::pair<std::string, std::string>> arc;  // for "section"
  int working_digits = 14;
  long step_cap = 1 << 20;
  int depth_cap = 32;
  uint64_t seed = 1;
  bool prune = true;
  bool braids = false;

  static JobSpec from_json(const Json& j);  // throws DomainError / ParseError
  Json to_json() const;
};

extern const std::vector<std::string> kKnownTasks;

struct RunResult {
  Json report;
  int exit_code = 0;  // 0 done, 2 invalid input, 3 certification failure
};

// Executes the job and assembles the JSON report (schema:
// schemas/report.schema.json).  Never throws: input errors become exit code 2
// with a diagnostic report, certification failures exit code 3.
RunResult run_job(const JobSpec& job);

// Serialization helpers shared with the tests.
Json verdict_to_json(const Verdict& v);
Json tree_to_json(const ResolutionTree& tree);
Json arc_to_json(const Arc& a);
Json section_to_json(const SectionReport& s);

}  // namespace arcsect

#endif
