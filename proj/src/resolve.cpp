#include "arcsect/resolve.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "arcsect/polyops.hpp"
#include "arcsect/roots.hpp"

namespace arcsect {

namespace {

MPoly X() { return MPoly::var("x"); }
MPoly Y() { return MPoly::var("y"); }

Rational eval2(const MPoly& f, const Rational& a, const Rational& b) {
  std::map<std::string, Rational> pt;
  for (const auto& v : f.vars()) {
    if (v == "x")
      pt[v] = a;
    else if (v == "y")
      pt[v] = b;
    else
      throw DomainError("resolve: unexpected variable " + v);
  }
  return f.eval_rational(pt);
}

MPoly translate(const MPoly& f, const Rational& cx, const Rational& cy) {
  MPoly fx = f;
  if (f.depends_on("x") || f.depends_on("y")) {
    std::map<std::string, MPoly> m;
    m["x"] = X() + MPoly::constant(cx);
    m["y"] = Y() + MPoly::constant(cy);
    for (const auto& v : f.vars())
      if (v != "x" && v != "y") m[v] = MPoly::var(v);
    fx = f.substitute(m);
  }
  return fx;
}

// Strips coord^k from f; returns k.
int strip_coord(MPoly& f, const std::string& coord) {
  if (f.is_zero()) return 0;
  auto cs = f.coeffs_in(coord);
  int k = 0;
  while (k < static_cast<int>(cs.size()) && cs[k].is_zero()) ++k;
  if (k == 0) return 0;
  std::vector<MPoly> shifted(cs.begin() + k, cs.end());
  f = MPoly::from_coeffs(coord, shifted);
  return k;
}

}  // namespace

MPoly reduced_part(const MPoly& f) {
  if (f.is_zero() || f.is_constant()) return f;
  MPoly g = mpoly_gcd(f, f.derivative("x"));
  g = mpoly_gcd(g, f.derivative("y"));
  if (g.is_constant()) return normalize_primitive(f);
  return normalize_primitive(exact_div(f, g));
}

std::pair<Chart, Chart> blowup(const Chart& chart, const Rational& cx,
                               const Rational& cy, int next_exceptional_id) {
  if (eval2(chart.total, cx, cy) != 0)
    throw DomainError("blowup: center not on the total transform");
  MPoly tr = translate(chart.total, cx, cy);
  int m = tr.order();

  auto make_child = [&](char which) {
    Chart c;
    c.parent = chart.id;
    c.center = {cx, cy};
    c.which = which;
    c.name = chart.name + "." + which;
    c.full_scope = (which == 'u');
    std::map<std::string, MPoly> sub;
    if (which == 'u') {
      sub["x"] = X();
      sub["y"] = X() * Y();
    } else {
      sub["x"] = X() * Y();
      sub["y"] = Y();
    }
    auto chart_sub = [&](const MPoly& f) {
      std::map<std::string, MPoly> m2;
      for (const auto& v : f.vars()) {
        if (v == "x")
          m2["x"] = sub["x"];
        else if (v == "y")
          m2["y"] = sub["y"];
        else
          m2[v] = MPoly::var(v);
      }
      return f.is_constant() ? f : f.substitute(m2);
    };
    c.total = chart_sub(tr);
    // map_to_base = parent map after (translate o blowup substitution)
    std::map<std::string, MPoly> comp;
    comp["x"] = sub["x"] + MPoly::constant(cx);
    comp["y"] = sub["y"] + MPoly::constant(cy);
    auto compose = [&](const MPoly& f) {
      std::map<std::string, MPoly> m2;
      for (const auto& v : f.vars()) {
        if (v == "x")
          m2["x"] = comp["x"];
        else if (v == "y")
          m2["y"] = comp["y"];
        else
          m2[v] = MPoly::var(v);
      }
      return f.is_constant() ? f : f.substitute(m2);
    };
    c.map_x = compose(chart.map_x);
    c.map_y = compose(chart.map_y);

    const std::string exc_coord = (which == 'u') ? "x" : "y";
    Divisor enew;
    enew.equation = MPoly::var(exc_coord);
    enew.kind = Divisor::Kind::Exceptional;
    enew.global_id = next_exceptional_id;
    enew.multiplicity = m;
    c.divisors.push_back(enew);
    for (const auto& d : chart.divisors) {
      MPoly eq = chart_sub(translate(d.equation, cx, cy));
      strip_coord(eq, exc_coord);
      if (eq.is_constant()) continue;  // divisor not visible in this chart
      Divisor nd = d;
      nd.equation = normalize_primitive(eq);
      c.divisors.push_back(nd);
    }
    return c;
  };
  return {make_child('u'), make_child('v')};
}

namespace {

// Local structure of centred germ at a candidate point.
struct PointInfo {
  std::pair<Rational, Rational> point;
  std::vector<int> vanishing;  // divisor indices
  bool needs_blowup = false;
  bool is_crossing = false;
  // For a crossing: the two branch slots.  div >= 0 indexes chart.divisors;
  // for a node of the strict transform both slots carry the strict index and
  // branch_tag distinguishes them.
  int branch_div[2] = {-1, -1};
  int branch_tag[2] = {0, 0};
};

// Gradient of f at p.
std::pair<Rational, Rational> gradient_at(const MPoly& f, const Rational& px,
                                          const Rational& py) {
  return {eval2(f.derivative("x"), px, py), eval2(f.derivative("y"), px, py)};
}

PointInfo analyze_point(const Chart& chart, const Rational& px,
                        const Rational& py) {
  PointInfo info;
  info.point = {px, py};
  struct Branch {
    int div;
    Rational gx, gy;  // tangent line coefficients (gradient)
    bool smooth = true;
  };
  std::vector<Branch> branches;
  int strict_idx = -1;
  for (size_t i = 0; i < chart.divisors.size(); ++i) {
    const auto& d = chart.divisors[i];
    if (eval2(d.equation, px, py) != 0) continue;
    info.vanishing.push_back(static_cast<int>(i));
    MPoly tr = translate(d.equation, px, py);
    if (tr.order() == 1) {
      auto [gx, gy] = gradient_at(d.equation, px, py);
      branches.push_back({static_cast<int>(i), gx, gy, true});
    } else {
      if (strict_idx >= 0) {
        info.needs_blowup = true;  // two singular pieces at one point
        return info;
      }
      strict_idx = static_cast<int>(i);
    }
  }
  if (strict_idx >= 0) {
    const MPoly& s = chart.divisors[strict_idx].equation;
    MPoly st = translate(s, px, py);
    int ord = st.order();
    if (ord == 2 && branches.empty()) {
      // Possible node: two smooth transversal branches of the strict part.
      MPoly q = st.initial_form();
      // q = A x^2 + B xy + C y^2; distinct tangents iff B^2 - 4AC != 0.
      Rational A(0), B(0), C(0);
      for (const auto& [e, c] : q.terms()) {
        int ex = 0, ey = 0;
        for (size_t i = 0; i < q.vars().size(); ++i) {
          if (q.vars()[i] == "x") ex = e[i];
          if (q.vars()[i] == "y") ey = e[i];
        }
        if (ex == 2)
          A = c;
        else if (ey == 2)
          C = c;
        else
          B = c;
      }
      if (B * B - 4 * A * C != 0) {
        info.is_crossing = true;
        info.branch_div[0] = strict_idx;
        info.branch_div[1] = strict_idx;
        info.branch_tag[0] = 0;
        info.branch_tag[1] = 1;
        return info;
      }
      info.needs_blowup = true;
      return info;
    } else {
      info.needs_blowup = true;
      return info;
    }
  }
  if (branches.size() >= 3) {
    info.needs_blowup = true;
    return info;
  }
  if (branches.size() == 2) {
    const auto& a = branches[0];
    const auto& b = branches[1];
    if (a.gx * b.gy - a.gy * b.gx == 0) {
      info.needs_blowup = true;  // tangential contact
      return info;
    }
    info.is_crossing = true;
    info.branch_div[0] = a.div;
    info.branch_div[1] = b.div;
  }
  return info;
}

// Candidate points of a chart within its scope.
std::vector<std::pair<Rational, Rational>> candidate_points(
    const Chart& chart, const ResolveOptions& opts) {
  std::vector<std::pair<Rational, Rational>> pts;
  if (chart.parent < 0) {
    if (eval2(chart.total, Rational(0), Rational(0)) == 0) pts.push_back({0, 0});
    return pts;
  }
  if (!chart.full_scope) {
    pts.push_back({0, 0});
    return pts;
  }
  // u-chart: all points of E = {x=0}.  Strict and coordinate divisors meet E
  // at roots of their equations restricted to x = 0.
  std::vector<Rational> ys;
  ys.push_back(Rational(0));  // the old-divisor corner, harmless if vacuous
  for (const auto& d : chart.divisors) {
    if (d.kind == Divisor::Kind::Exceptional && d.equation == MPoly::var("x"))
      continue;
    MPoly r = d.equation.subst_var("x", MPoly::constant(0));
    if (r.is_zero())
      throw DomainError("resolve: divisor contains the exceptional line");
    if (r.is_constant() || !r.depends_on("y")) continue;
    std::vector<Rational> cs;
    for (const auto& c : r.coeffs_in("y")) cs.push_back(c.constant_value());
    auto split = rational_root_split(cs, opts.center_max_den);
    for (const auto& [root, mult] : split.rational_roots) ys.push_back(root);
    if (!split.other_roots.empty()) {
      std::ostringstream os;
      os << "irrational point on exceptional divisor (chart " << chart.name
         << "): roots of " << r.str() << " restricted to E";
      throw UnsupportedError(os.str());
    }
  }
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  for (const auto& y0 : ys) pts.push_back({Rational(0), y0});
  return pts;
}

}  // namespace

ResolutionTree resolve_embedded(const MPoly& delta, const ResolveOptions& opts) {
  if (delta.is_zero()) throw DomainError("resolve: zero discriminant");
  for (const auto& v : delta.vars())
    if (v != "x" && v != "y")
      throw DomainError("resolve: discriminant must live in (x, y)");
  ResolutionTree tree;
  tree.delta_full = delta;
  tree.delta = reduced_part(delta);

  Chart root;
  root.id = 0;
  root.name = "delta";
  root.map_x = X();
  root.map_y = Y();
  root.total = tree.delta;
  if (!tree.delta.is_constant()) {
    // Split coordinate-axis components into their own divisors; the reduced
    // discriminant carries each at most once.
    MPoly core = tree.delta;
    int kx = strip_coord(core, "x");
    int ky = strip_coord(core, "y");
    if (kx > 0) {
      Divisor d;
      d.equation = X();
      d.kind = Divisor::Kind::Strict;
      d.global_id = 1;
      d.multiplicity = kx;
      root.divisors.push_back(d);
    }
    if (ky > 0) {
      Divisor d;
      d.equation = Y();
      d.kind = Divisor::Kind::Strict;
      d.global_id = 2;
      d.multiplicity = ky;
      root.divisors.push_back(d);
    }
    if (!core.is_constant()) {
      Divisor d;
      d.equation = normalize_primitive(core);
      d.kind = Divisor::Kind::Strict;
      d.global_id = 0;
      d.multiplicity = 1;
      root.divisors.push_back(d);
    }
  }
  tree.charts.push_back(root);

  std::deque<std::pair<int, int>> work;  // (chart id, depth)
  work.push_back({0, 0});
  while (!work.empty()) {
    auto [cid, depth] = work.front();
    work.pop_front();
    auto pts = candidate_points(tree.charts[cid], opts);
    for (const auto& [px, py] : pts) {
      if (eval2(tree.charts[cid].total, px, py) != 0) continue;
      PointInfo info = analyze_point(tree.charts[cid], px, py);
      if (!info.needs_blowup) continue;
      if (depth >= opts.depth_cap)
        throw CertificationError("resolution depth cap exceeded");
      tree.exceptional_count += 1;
      auto [cu, cv] =
          blowup(tree.charts[cid], px, py, tree.exceptional_count);
      cu.id = static_cast<int>(tree.charts.size());
      tree.charts.push_back(cu);
      work.push_back({cu.id, depth + 1});
      cv.id = static_cast<int>(tree.charts.size());
      tree.charts.push_back(cv);
      work.push_back({cv.id, depth + 1});
    }
  }
  enumerate_crossings(tree, opts);
  return tree;
}

namespace {

// Exact univariate restriction of f to a probe line; var_kept is the variable
// that stays free.
std::vector<Rational> restrict_line(const MPoly& f, const std::string& var_kept,
                                    const Rational& other_value) {
  std::string other = var_kept == "x" ? "y" : "x";
  MPoly r = f.subst_var(other, MPoly::constant(other_value));
  std::vector<Rational> cs;
  for (const auto& c : r.coeffs_in(var_kept)) {
    if (!c.is_constant()) throw DomainError("restrict_line: not univariate");
    cs.push_back(c.constant_value());
  }
  if (cs.empty()) cs.push_back(Rational(0));
  return cs;
}

// Number of roots of the exact polynomial strictly inside the disk
// |w - center| < radius; requires every certified root box to be strictly
// inside or strictly outside (returns -1 otherwise).
int roots_in_disk(const std::vector<Rational>& coeffs, const Rational& center,
                  const Rational& radius) {
  bool all_zero = true;
  for (const auto& c : coeffs)
    if (c != 0) all_zero = false;
  if (all_zero) return -1;
  int deg = static_cast<int>(coeffs.size()) - 1;
  while (deg >= 0 && coeffs[deg] == 0) --deg;
  if (deg <= 0) return 0;
  auto clusters = rational_roots_certified(
      std::vector<Rational>(coeffs.begin(), coeffs.begin() + deg + 1));
  double c0 = to_double(center), r0 = to_double(radius);
  int inside = 0;
  for (const auto& cl : clusters) {
    double d = std::abs(cl.box.center() - std::complex<double>(c0, 0));
    if (d + cl.box.radius < r0 * 0.999)
      inside += cl.multiplicity;
    else if (d - cl.box.radius > r0 * 1.001)
      continue;
    else
      return -1;  // box touches the circle: undecided
  }
  return inside;
}

struct BranchGeom {
  int div;
  int tag;
  bool vertical;  // tangent is the vertical direction (or the line x = px)
};

// Builds one transverse-disk boundary loop.
// If `vertical_probe`: the disk lives in the line {x = line_at}, centred at
// (line_at, c) with radius r; else in {y = line_at} centred at (c, line_at).
DiskLoop make_disk_loop(bool vertical_probe, const Rational& line_at,
                        const Rational& c, const Rational& r) {
  DiskLoop dl;
  MPoly T = MPoly::var("t");
  if (vertical_probe) {
    dl.px = MPoly::constant(line_at);
    dl.py = MPoly::constant(c) + T.scaled(r);
  } else {
    dl.px = MPoly::constant(c) + T.scaled(r);
    dl.py = MPoly::constant(line_at);
  }
  return dl;
}

}  // namespace

std::vector<NormalCrossing> enumerate_crossings(ResolutionTree& tree,
                                                const ResolveOptions& opts) {
  tree.crossings.clear();
  for (const auto& chart : tree.charts) {
    auto pts = candidate_points(chart, opts);
    for (const auto& [px, py] : pts) {
      if (eval2(chart.total, px, py) != 0) continue;
      PointInfo info = analyze_point(chart, px, py);
      if (!info.is_crossing) continue;

      // Geometry of the two branches.
      BranchGeom geom[2];
      for (int s = 0; s < 2; ++s) {
        geom[s].div = info.branch_div[s];
        geom[s].tag = info.branch_tag[s];
        const Divisor& d = chart.divisors[geom[s].div];
        if (d.kind == Divisor::Kind::Exceptional) {
          geom[s].vertical = d.equation.depends_on("x");
        } else {
          auto [gx, gy] = gradient_at(d.equation, px, py);
          if (gx == 0 && gy == 0) {
            // node of the strict transform: tangents from the initial form;
            // use a numeric slope only to choose probe orientation.
            geom[s].vertical = false;
          } else {
            geom[s].vertical = (gy == 0);
          }
        }
      }
      // Order: youngest exceptional divisor first (slot a).
      auto younger = [&](const BranchGeom& a, const BranchGeom& b) {
        const Divisor& da = chart.divisors[a.div];
        const Divisor& db = chart.divisors[b.div];
        int ia = da.kind == Divisor::Kind::Exceptional ? da.global_id : -1;
        int ib = db.kind == Divisor::Kind::Exceptional ? db.global_id : -1;
        return ia > ib;
      };
      if (younger(geom[1], geom[0])) std::swap(geom[0], geom[1]);

      // Probe setup: delta in {1/2, 1/4, ...}.
      bool built = false;
      for (int hp = 1; hp <= opts.radius_halvings && !built; ++hp) {
        Rational delta = rational_pow(Rational(1, 2), hp);
        // Disk for each branch.  A vertical branch gets a horizontal disk in
        // the probe line {y = py + delta}; others get vertical disks in
        // {x = px + delta}.
        struct DiskPlan {
          bool vertical_probe;  // disk inside a vertical line
          Rational line_at;
          Rational center;
          Rational radius;
        };
        DiskPlan plan[2];
        Rational u0 = px + delta, v0 = py + delta;
        bool ok = true;
        // Find branch positions on the probe lines.
        auto branch_on_vertical_probe = [&](const BranchGeom& g,
                                            Rational& out_center) {
          const Divisor& d = chart.divisors[g.div];
          if (d.kind == Divisor::Kind::Exceptional) {
            // horizontal line y = py
            out_center = py;
            return true;
          }
          // strict: numeric root near expected tangent position
          auto cs = restrict_line(d.equation, "y", u0);
          std::vector<std::complex<double>> dc;
          for (const auto& c : cs) dc.push_back({to_double(c), 0});
          try {
            auto rs = complex_roots(dc);
            double best = 1e300;
            std::complex<double> bc;
            int count_near = 0;
            for (const auto& cl : rs) {
              double dist = std::abs(cl.box.center() -
                                     std::complex<double>(to_double(py), 0));
              if (dist < 4 * to_double(delta)) {
                count_near += cl.multiplicity;
              }
              if (dist < best) {
                best = dist;
                bc = cl.box.center();
              }
            }
            // Node case: two nearby roots; pick by tag (sorted by imag,real).
            if (g.tag > 0 || count_near > 1) {
              std::vector<std::complex<double>> near;
              for (const auto& cl : rs)
                if (std::abs(cl.box.center() -
                             std::complex<double>(to_double(py), 0)) <
                    4 * to_double(delta))
                  near.push_back(cl.box.center());
              std::sort(near.begin(), near.end(), [](auto a, auto b) {
                if (a.real() != b.real()) return a.real() < b.real();
                return a.imag() < b.imag();
              });
              if (static_cast<size_t>(g.tag) >= near.size()) return false;
              bc = near[g.tag];
            }
            if (std::abs(bc.imag()) > 1e-9) return false;
            out_center = rational_reconstruct(bc.real(), 1L << 24);
            return true;
          } catch (const Error&) {
            return false;
          }
        };
        auto branch_on_horizontal_probe = [&](const BranchGeom& g,
                                              Rational& out_center) {
          const Divisor& d = chart.divisors[g.div];
          if (d.kind == Divisor::Kind::Exceptional) {
            out_center = px;
            return true;
          }
          auto cs = restrict_line(d.equation, "x", v0);
          std::vector<std::complex<double>> dc;
          for (const auto& c : cs) dc.push_back({to_double(c), 0});
          try {
            auto rs = complex_roots(dc);
            double best = 1e300;
            std::complex<double> bc;
            for (const auto& cl : rs) {
              double dist = std::abs(cl.box.center() -
                                     std::complex<double>(to_double(px), 0));
              if (dist < best) {
                best = dist;
                bc = cl.box.center();
              }
            }
            if (std::abs(bc.imag()) > 1e-9) return false;
            out_center = rational_reconstruct(bc.real(), 1L << 24);
            return true;
          } catch (const Error&) {
            return false;
          }
        };

        for (int s = 0; s < 2 && ok; ++s) {
          if (geom[s].vertical) {
            plan[s].vertical_probe = false;
            plan[s].line_at = v0;
            Rational c;
            if (!branch_on_horizontal_probe(geom[s], c)) {
              ok = false;
              break;
            }
            plan[s].center = c;
          } else {
            plan[s].vertical_probe = true;
            plan[s].line_at = u0;
            Rational c;
            if (!branch_on_vertical_probe(geom[s], c)) {
              ok = false;
              break;
            }
            plan[s].center = c;
          }
        }
        if (!ok) continue;

        // Basepoint q and radii.
        Rational qx, qy;
        if (plan[0].vertical_probe != plan[1].vertical_probe) {
          // perpendicular probes: q at the corner
          qx = plan[0].vertical_probe ? plan[0].line_at : plan[1].line_at;
          qy = plan[0].vertical_probe ? plan[1].line_at : plan[0].line_at;
          for (int s = 0; s < 2; ++s) {
            Rational coord = plan[s].vertical_probe ? qy : qx;
            plan[s].radius = abs(coord - plan[s].center);
            if (plan[s].radius == 0) ok = false;
          }
        } else {
          // same probe line: q at the midpoint between the branch positions
          if (plan[0].line_at != plan[1].line_at) {
            ok = false;
          } else {
            Rational mid = (plan[0].center + plan[1].center) / 2;
            if (plan[0].center == plan[1].center) ok = false;
            if (plan[0].vertical_probe) {
              qx = plan[0].line_at;
              qy = mid;
            } else {
              qx = mid;
              qy = plan[0].line_at;
            }
            for (int s = 0; s < 2; ++s)
              plan[s].radius = abs(mid - plan[s].center);
          }
        }
        if (!ok) continue;

        // Certificates: winding pattern of every divisor along both loops.
        auto disk_certificate = [&](const DiskPlan& dp, int own_div,
                                    int own_tag) -> bool {
          for (size_t di = 0; di < chart.divisors.size(); ++di) {
            const Divisor& d = chart.divisors[di];
            int expected;
            if (static_cast<int>(di) == own_div)
              expected = 1;
            else
              expected = 0;
            // Special case: a node (both branches in the same strict divisor)
            // must see exactly one of its two local roots.
            std::vector<Rational> cs;
            Rational center_line = dp.line_at;
            if (dp.vertical_probe)
              cs = restrict_line(d.equation, "y", center_line);
            else
              cs = restrict_line(d.equation, "x", center_line);
            bool nonconst = cs.size() > 1;
            int inside;
            if (!nonconst) {
              // constant on the probe line: no zeros unless identically zero
              inside = (cs[0] == 0) ? -1 : 0;
            } else {
              inside = roots_in_disk(cs, dp.center, dp.radius);
            }
            (void)own_tag;
            if (inside != expected) return false;
          }
          return true;
        };
        if (!disk_certificate(plan[0], geom[0].div, geom[0].tag) ||
            !disk_certificate(plan[1], geom[1].div, geom[1].tag))
          continue;
        // Basepoint off the total transform.
        if (eval2(chart.total, qx, qy) == 0) continue;

        NormalCrossing nc;
        nc.chart = chart.id;
        nc.point = {px, py};
        nc.div_a = geom[0].div;
        nc.div_b = geom[1].div;
        nc.r1 = plan[0].radius;
        nc.r2 = plan[1].radius;
        nc.q = {qx, qy};
        // Loop basepoint: parametrize so that T=1 lands on q.
        auto build_loop = [&](const DiskPlan& dp) {
          // center + (q - center) * T within the probe line
          Rational c = dp.center;
          Rational qcoord = dp.vertical_probe ? qy : qx;
          return make_disk_loop(dp.vertical_probe, dp.line_at, c, qcoord - c);
        };
        nc.loop_a = build_loop(plan[0]);
        nc.loop_b = build_loop(plan[1]);
        std::ostringstream lab;
        lab << chart.divisors[geom[0].div].label() << "^"
            << chart.divisors[geom[1].div].label();
        if (geom[0].div == geom[1].div) lab << "(node)";
        lab << "@" << chart.name << "(" << rational_str(px) << ","
            << rational_str(py) << ")";
        nc.label = lab.str();
        tree.crossings.push_back(nc);
        built = true;
      }
      if (!built)
        throw CertificationError(
            "could not certify transverse disks at a normal crossing (chart " +
            chart.name + ")");
    }
  }
  return tree.crossings;
}

}  // namespace arcsect
