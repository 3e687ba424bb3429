#include "arcsect/report.hpp"

#include <chrono>

#include "arcsect/polyops.hpp"
#include "arcsect/resolve.hpp"

namespace arcsect {

const std::vector<std::string> kKnownTasks = {
    "analyze",        "tangent-cone",  "generic",       "section",
    "reduce-witness", "cone-discriminant", "screen-branches"};

JobSpec JobSpec::from_json(const Json& j) {
  JobSpec job;
  if (!j.is_object()) throw DomainError("job: expected a JSON object");
  if (!j.contains("surface") || !j.at("surface").is_string())
    throw DomainError("job: missing string field 'surface'");
  job.surface = j.at("surface").get<std::string>();
  if (j.contains("projection")) {
    if (j.at("projection").is_string())
      job.projection = j.at("projection").get<std::string>();
    else if (j.at("projection").is_array()) {
      std::string s;
      for (const auto& e : j.at("projection")) {
        if (!s.empty()) s += ",";
        if (e.is_string())
          s += e.get<std::string>();
        else if (e.is_number_integer())
          s += std::to_string(e.get<long>());
        else
          throw DomainError("job: projection entries must be strings/integers");
      }
      job.projection = s;
    } else {
      throw DomainError("job: projection must be a string or array");
    }
  }
  if (!j.contains("tasks") || !j.at("tasks").is_array() || j.at("tasks").empty())
    throw DomainError("job: 'tasks' must be a non-empty array");
  for (const auto& t : j.at("tasks")) {
    std::string name = t.get<std::string>();
    bool known = false;
    for (const auto& k : kKnownTasks) known = known || k == name;
    if (!known) throw DomainError("job: unknown task '" + name + "'");
    job.tasks.push_back(name);
  }
  bool wants_section = false;
  for (const auto& t : job.tasks) wants_section = wants_section || t == "section";
  if (j.contains("arc")) {
    const auto& a = j.at("arc");
    if (!a.is_array() || a.size() != 2)
      throw DomainError("job: 'arc' must be a pair of expressions");
    job.arc = {a[0].get<std::string>(), a[1].get<std::string>()};
  }
  if (wants_section && !job.arc)
    throw DomainError("job: task 'section' requires 'arc'");
  if (!wants_section && job.arc)
    throw DomainError("job: 'arc' given but task 'section' not requested");
  if (j.contains("precision")) {
    const auto& p = j.at("precision");
    if (p.contains("working_digits")) job.working_digits = p.at("working_digits");
    if (p.contains("step_cap")) job.step_cap = p.at("step_cap");
    if (p.contains("depth_cap")) job.depth_cap = p.at("depth_cap");
  }
  if (j.contains("seed")) job.seed = j.at("seed").get<uint64_t>();
  if (j.contains("prune")) job.prune = j.at("prune").get<bool>();
  if (j.contains("braids")) job.braids = j.at("braids").get<bool>();
  return job;
}

Json JobSpec::to_json() const {
  Json j;
  j["surface"] = surface;
  j["projection"] = projection;
  j["tasks"] = tasks;
  if (arc) j["arc"] = {arc->first, arc->second};
  j["precision"] = {{"working_digits", working_digits},
                    {"step_cap", step_cap},
                    {"depth_cap", depth_cap}};
  j["seed"] = seed;
  j["prune"] = prune;
  j["braids"] = braids;
  return j;
}

namespace {

std::array<Rational, 3> parse_direction(const std::string& s) {
  if (s == "x") return {Rational(1), Rational(0), Rational(0)};
  if (s == "y") return {Rational(0), Rational(1), Rational(0)};
  if (s == "z") return {Rational(0), Rational(0), Rational(1)};
  std::array<Rational, 3> out;
  size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    size_t comma = s.find(',', pos);
    std::string part = (i < 2)
                           ? s.substr(pos, comma == std::string::npos
                                               ? std::string::npos
                                               : comma - pos)
                           : s.substr(pos);
    auto q = rational_parse(part);
    if (!q) throw DomainError("invalid projection component '" + part + "'");
    out[i] = *q;
    if (i < 2) {
      if (comma == std::string::npos)
        throw DomainError("projection needs three components");
      pos = comma + 1;
    }
  }
  return out;
}

Json cert_to_json(const TrackingCertificate& c) {
  return Json{{"steps", c.steps},
              {"min_separation", c.min_separation},
              {"max_step_motion", c.max_step_motion},
              {"refinement_passes", c.refinement_passes}};
}

Json cone_to_json(const TangentCone& tc) {
  Json j;
  j["form"] = tc.form.str();
  j["degree"] = tc.degree;
  j["reduced"] = tc.reduced.str();
  j["classification"] = cone_class_name(tc.cls);
  j["admissible_family"] = tc.admissible_family;
  j["smooth_certified"] = tc.smooth_certified;
  if (tc.vertex) {
    j["vertex"] = Json::array();
    for (const auto& c : *tc.vertex) j["vertex"].push_back(rational_str(c));
  }
  Json fl = Json::array();
  for (const auto& f : tc.flexes) {
    fl.push_back(Json{{"point",
                       Json::array({Json::array({f.point[0].real(), f.point[0].imag()}),
                                    Json::array({f.point[1].real(), f.point[1].imag()}),
                                    Json::array({f.point[2].real(), f.point[2].imag()})})},
                      {"contact_residual", f.contact_residual},
                      {"hyperflex", f.hyperflex}});
  }
  j["flexes"] = fl;
  j["tolerance"] = tc.tolerance;
  return j;
}

Json cone_disc_to_json(const ConeDiscriminantReport& r) {
  Json j;
  j["applicable"] = r.applicable;
  if (r.applicable) {
    j["delta_initial"] = r.delta_initial.str();
    j["pencil_discriminant"] = r.pencil_disc.str();
    j["exact_equal"] = r.exact_equal;
    j["matched"] = r.matched;
    j["max_mismatch"] = r.max_mismatch;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace

Json arc_to_json(const Arc& a) {
  Json j;
  j["x"] = a.x.str();
  j["y"] = a.y.str();
  switch (a.provenance) {
    case Arc::Provenance::Generic: j["provenance"] = "generic"; break;
    case Arc::Provenance::ChartPushdown:
      j["provenance"] = "chart-pushdown";
      j["chart"] = a.chart;
      j["exponents"] = {a.expo_a, a.expo_b};
      break;
    case Arc::Provenance::DiscriminantBranch:
      j["provenance"] = "discriminant-branch";
      break;
    case Arc::Provenance::UserGiven: j["provenance"] = "user"; break;
  }
  if (a.valid_radius > 0) j["valid_radius"] = rational_str(a.valid_radius);
  j["inside_discriminant"] = a.inside_discriminant;
  j["numeric"] = a.numeric;
  return j;
}

Json section_to_json(const SectionReport& s) {
  Json j;
  j["branch_count"] = s.branch_count;
  j["multiplicities"] = s.multiplicities;
  j["irreducible_reduced"] = s.irreducible_reduced;
  j["irreducible"] = s.irreducible_strict;
  j["inside_discriminant"] = s.inside_discriminant;
  j["numeric"] = s.numeric;
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

Json tree_to_json(const ResolutionTree& tree) {
  Json j;
  j["discriminant_reduced"] = tree.delta.str();
  j["exceptional_count"] = tree.exceptional_count;
  Json charts = Json::array();
  for (const auto& c : tree.charts) {
    Json cj;
    cj["name"] = c.name;
    cj["map_to_base"] = {c.map_x.str(), c.map_y.str()};
    cj["total_transform"] = c.total.str();
    if (c.parent >= 0) {
      cj["parent"] = tree.charts[c.parent].name;
      cj["center"] = {rational_str(c.center.first), rational_str(c.center.second)};
      cj["chart_kind"] = std::string(1, c.which);
    }
    Json divs = Json::array();
    for (const auto& d : c.divisors)
      divs.push_back(Json{{"label", d.label()},
                          {"equation", d.equation.str()},
                          {"multiplicity", d.multiplicity}});
    cj["divisors"] = divs;
    charts.push_back(cj);
  }
  j["charts"] = charts;
  Json crossings = Json::array();
  for (const auto& nc : tree.crossings) {
    const auto& ch = tree.charts[nc.chart];
    crossings.push_back(
        Json{{"label", nc.label},
             {"chart", ch.name},
             {"point", {rational_str(nc.point.first), rational_str(nc.point.second)}},
             {"divisors",
              {ch.divisors[nc.div_a].label(), ch.divisors[nc.div_b].label()}},
             {"disk_radii", {rational_str(nc.r1), rational_str(nc.r2)}},
             {"basepoint", {rational_str(nc.q.first), rational_str(nc.q.second)}}});
  }
  j["crossings"] = crossings;
  return j;
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  switch (v.exists_irreducible) {
    case Verdict::Answer::Yes: j["exists_irreducible"] = "yes"; break;
    case Verdict::Answer::No: j["exists_irreducible"] = "no"; break;
    case Verdict::Answer::Unknown: j["exists_irreducible"] = "unknown"; break;
  }
  j["reason"] = v.reason;
  Json ws = Json::array();
  for (size_t i = 0; i < v.witnesses.size(); ++i) {
    Json w = arc_to_json(v.witnesses[i]);
    if (i < v.witness_sections.size())
      w["section"] = section_to_json(v.witness_sections[i]);
    ws.push_back(w);
  }
  j["witnesses"] = ws;
  if (v.totally_reducible_witness) {
    Json t = arc_to_json(*v.totally_reducible_witness);
    if (v.totally_reducible_section)
      t["section"] = section_to_json(*v.totally_reducible_section);
    j["totally_reducible_witness"] = t;
  }
  Json cs = Json::array();
  for (const auto& cr : v.crossings) {
    Json c;
    c["label"] = cr.label;
    c["pruned"] = cr.pruned;
    c["processed"] = cr.processed;
    if (cr.processed) {
      c["p1"] = cr.p1.cycle_string();
      c["p2"] = cr.p2.cycle_string();
      c["cycle_type_1"] = cr.type1;
      c["cycle_type_2"] = cr.type2;
      c["commute"] = cr.commute;
      c["has_transitive"] = cr.has_transitive;
      c["group_transitive"] = cr.group_transitive;
      if (cr.witness_exponents)
        c["witness_exponents"] = {cr.witness_exponents->first,
                                  cr.witness_exponents->second};
      c["certificates"] = {cert_to_json(cr.cert1), cert_to_json(cr.cert2)};
      if (!cr.braid1.empty() || !cr.braid2.empty())
        c["braids"] = {cr.braid1, cr.braid2};
    }
    if (!cr.error.empty()) c["error"] = cr.error;
    cs.push_back(c);
  }
  j["crossings"] = cs;
  if (v.generic) {
    j["generic"] = Json{
        {"direction", {rational_str(v.generic->a), rational_str(v.generic->b)}},
        {"radius", rational_str(v.generic->radius)},
        {"permutation", v.generic->perm.cycle_string()},
        {"cycle_type", v.generic->cycle_type},
        {"transitive", v.generic->transitive}};
  }
  if (v.cone) j["tangent_cone"] = cone_to_json(*v.cone);
  if (v.cone_discriminant)
    j["cone_discriminant"] = cone_disc_to_json(*v.cone_discriminant);
  j["notes"] = v.notes;
  j["errors"] = v.errors;
  return j;
}

RunResult run_job(const JobSpec& job) {
  RunResult out;
  Json& rep = out.report;
  rep["job"] = job.to_json();
  rep["errors"] = Json::array();
  rep["notes"] = Json::array();
  auto t_start = std::chrono::steady_clock::now();
  Json timings;

  auto fail_input = [&](const std::string& msg) {
    rep["errors"].push_back(msg);
    out.exit_code = 2;
    return out;
  };

  ProjectionSetup setup;
  try {
    MPoly F = parse_poly(job.surface, {"x", "y", "z"});
    auto dir = parse_direction(job.projection);
    setup = setup_projection(F, dir);
  } catch (const Error& e) {
    return fail_input(e.what());
  }
  rep["surface"] = Json{{"input", setup.F_input.str()},
                        {"adapted", setup.F.str()},
                        {"direction",
                         {rational_str(setup.direction[0]),
                          rational_str(setup.direction[1]),
                          rational_str(setup.direction[2])}},
                        {"d", setup.d},
                        {"m", setup.m},
                        {"transverse", setup.transverse}};
  rep["discriminant"] = discriminant(setup.F, setup.zvar).str();

  AnalyzeOptions opts;
  opts.prune = job.prune;
  opts.braids = job.braids;
  opts.seed = job.seed;
  opts.track.max_total_steps = job.step_cap;
  opts.resolve.depth_cap = job.depth_cap;
  opts.section.track = opts.track;
  bool certification_failed = false;

  auto timed = [&](const std::string& name, auto&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    timings[name] =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
  };

  for (const auto& task : job.tasks) {
    try {
      if (task == "analyze") {
        timed(task, [&] {
          Verdict v = analyze(setup, opts);
          rep["verdict"] = verdict_to_json(v);
          if (v.exists_irreducible == Verdict::Answer::Unknown)
            certification_failed = true;
          try {
            ResolutionTree tree =
                resolve_embedded(discriminant(setup.F, setup.zvar), opts.resolve);
            rep["resolution"] = tree_to_json(tree);
          } catch (const Error& e) {
            rep["notes"].push_back(std::string("resolution report: ") + e.what());
          }
        });
      } else if (task == "tangent-cone") {
        timed(task, [&] {
          rep["tangent_cone"] = cone_to_json(
              tangent_cone_screen(setup.F, opts.cone_tolerance));
        });
      } else if (task == "generic") {
        timed(task, [&] {
          SeededRng rng(job.seed);
          auto [a, b] = generic_direction(setup, rng);
          MonodromyOptions mo;
          mo.track = opts.track;
          auto gm = generic_monodromy(setup.F, setup.zvar, a, b, setup.d, mo);
          rep["generic"] = Json{
              {"direction", {rational_str(a), rational_str(b)}},
              {"radius", rational_str(gm.radius)},
              {"permutation", gm.mono.perm.cycle_string()},
              {"cycle_type", cycle_type_string(gm.mono.perm.cycle_type())},
              {"transitive", gm.mono.perm.is_full_cycle()},
              {"certificate", cert_to_json(gm.mono.cert)}};
        });
      } else if (task == "section") {
        timed(task, [&] {
          Arc arc;
          arc.provenance = Arc::Provenance::UserGiven;
          try {
            arc.x = parse_poly(job.arc->first, {"t"});
            arc.y = parse_poly(job.arc->second, {"t"});
            validate_arc(arc);
          } catch (const Error& e) {
            throw DomainError(std::string("invalid arc: ") + e.what());
          }
          SectionReport sr = arc_section(setup, arc, opts.section);
          Json sj = arc_to_json(arc);
          sj["section"] = section_to_json(sr);
          rep["section"] = sj;
        });
      } else if (task == "reduce-witness") {
        timed(task, [&] {
          Arc arc = totally_reducible_arc(setup, opts);
          SectionReport sr = arc_section(setup, arc, opts.section);
          Json sj = arc_to_json(arc);
          sj["section"] = section_to_json(sr);
          rep["totally_reducible_witness"] = sj;
        });
      } else if (task == "cone-discriminant") {
        timed(task, [&] {
          rep["cone_discriminant"] = cone_disc_to_json(
              cone_discriminant_check(setup));
        });
      } else if (task == "screen-branches") {
        timed(task, [&] {
          auto screens = screen_discriminant_branches(setup, opts.section);
          Json arr = Json::array();
          for (const auto& s : screens) {
            Json b = arc_to_json(s.arc);
            b["ramification"] = s.branch.ramification;
            b["section"] = section_to_json(s.section);
            b["prunable"] = s.prunable;
            arr.push_back(b);
          }
          rep["branch_screen"] = arr;
        });
      }
    } catch (const CertificationError& e) {
      rep["errors"].push_back("task " + task + ": " + e.what());
      certification_failed = true;
    } catch (const UnsupportedError& e) {
      rep["errors"].push_back("task " + task + ": " + e.what());
      certification_failed = true;
    } catch (const ParseError& e) {
      rep["errors"].push_back("task " + task + ": " + e.what());
      out.exit_code = 2;
      return out;
    } catch (const DomainError& e) {
      rep["errors"].push_back("task " + task + ": " + e.what());
      out.exit_code = 2;
      return out;
    }
  }
  auto t_end = std::chrono::steady_clock::now();
  timings["total"] =
      std::chrono::duration<double, std::milli>(t_end - t_start).count();
  rep["timings_ms"] = timings;
  if (certification_failed) out.exit_code = 3;
  return out;
}

}  // namespace arcsect
