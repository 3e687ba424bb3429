#include "arcsect/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "arcsect/polyops.hpp"

namespace arcsect {

namespace {

MPoly compose_path(const MPoly& f, const MPoly& px, const MPoly& py) {
  if (f.is_constant()) return f;
  std::map<std::string, MPoly> m;
  for (const auto& v : f.vars()) {
    if (v == "x")
      m[v] = px;
    else if (v == "y")
      m[v] = py;
    else
      m[v] = MPoly::var(v);
  }
  return f.substitute(m);
}

std::vector<int> select_near(const std::vector<std::complex<double>>& fiber,
                             int d_near) {
  int D = static_cast<int>(fiber.size());
  if (d_near >= D) {
    std::vector<int> all(D);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  std::vector<int> idx(D);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return std::abs(fiber[a]) < std::abs(fiber[b]);
  });
  double hi = std::abs(fiber[idx[d_near - 1]]);
  double lo = std::abs(fiber[idx[d_near]]);
  if (lo < 2 * hi)
    throw CertificationError("germ/far sheet gap not certified at basepoint");
  idx.resize(d_near);
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace

std::string braid_word_string(const std::vector<BraidLetter>& letters) {
  std::ostringstream os;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) os << " ";
    os << "s" << letters[i].index;
    if (letters[i].sign < 0) os << "^-1";
  }
  return os.str();
}

Permutation braid_underlying_permutation(const std::vector<BraidLetter>& letters,
                                         int strands) {
  Permutation p = Permutation::identity(strands);
  for (const auto& l : letters) {
    std::vector<int> tr(strands);
    std::iota(tr.begin(), tr.end(), 0);
    std::swap(tr[l.index], tr[l.index + 1]);
    p = Permutation(tr) * p;
  }
  return p;
}

LoopMonodromy track_loop(const MPoly& F, const std::string& zvar,
                         const LoopSpec& loop, int d_near,
                         const MonodromyOptions& opts) {
  // Certified avoidance: discriminant and leading coefficient composed with
  // the path must not vanish on the circle.
  MPoly disc = discriminant(F, zvar);
  MPoly lc = F.leading_coeff(zvar);
  for (const MPoly* p : {&disc, &lc}) {
    MPoly composed = compose_path(*p, loop.px, loop.py);
    if (composed.is_zero())
      throw CertificationError("loop lies inside the discriminant");
    if (!composed.is_constant() &&
        !certify_nonvanishing_on_circle(composed, loop.tvar, loop.center,
                                        loop.radius))
      throw CertificationError(
          "could not certify that the loop avoids the discriminant");
    if (composed.is_constant() && composed.constant_value() == 0)
      throw CertificationError("loop lies inside the discriminant");
  }

  CircleFamily fam = make_family(F, zvar, loop.px, loop.py, loop.tvar,
                                 loop.center, loop.radius);
  TrackOptions topt = opts.track;
  topt.record_braid = opts.braids || topt.record_braid;
  TrackResult tr = track_circle_family(fam, topt);

  LoopMonodromy out;
  out.perm_full = tr.perm;
  out.cert = tr.cert;
  out.near = select_near(tr.base_fiber, d_near);
  std::vector<int> pos(tr.base_fiber.size(), -1);
  for (size_t i = 0; i < out.near.size(); ++i) pos[out.near[i]] = static_cast<int>(i);
  std::vector<int> img(out.near.size());
  for (size_t i = 0; i < out.near.size(); ++i) {
    int to = tr.perm[out.near[i]];
    if (pos[to] < 0)
      throw CertificationError("monodromy mixes germ and far sheets");
    img[i] = pos[to];
  }
  out.perm = Permutation(img);
  if (topt.record_braid) {
    // Free reduction of adjacent inverse pairs.
    std::vector<BraidLetter> red;
    for (const auto& l : tr.braid) {
      if (!red.empty() && red.back().index == l.index &&
          red.back().sign == -l.sign)
        red.pop_back();
      else
        red.push_back(l);
    }
    out.braid = red;
    out.braid_word = braid_word_string(red);
  }
  return out;
}

CrossingMonodromy crossing_monodromies(const MPoly& F, const std::string& zvar,
                                       const ResolutionTree& tree,
                                       const NormalCrossing& crossing,
                                       int d_near,
                                       const MonodromyOptions& opts) {
  const Chart& chart = tree.charts[crossing.chart];
  auto push_down = [&](const DiskLoop& dl) {
    LoopSpec ls;
    ls.px = compose_path(chart.map_x, dl.px, dl.py);
    ls.py = compose_path(chart.map_y, dl.px, dl.py);
    ls.tvar = "t";
    ls.center = Rational(0);
    ls.radius = Rational(1);
    return ls;
  };
  CrossingMonodromy cm;
  cm.label = crossing.label;
  cm.m1 = track_loop(F, zvar, push_down(crossing.loop_a), d_near, opts);
  cm.m2 = track_loop(F, zvar, push_down(crossing.loop_b), d_near, opts);
  cm.p1 = cm.m1.perm;
  cm.p2 = cm.m2.perm;
  if (cm.p1 * cm.p2 != cm.p2 * cm.p1)
    throw CertificationError("crossing permutations do not commute: " +
                             crossing.label);
  return cm;
}

LoopMonodromy transversal_monodromy(const MPoly& F, const std::string& zvar,
                                    const ResolutionTree& tree, int chart_id,
                                    int divisor_idx, int d_near,
                                    const MonodromyOptions& opts) {
  // Reuse a crossing disk when the divisor participates in one.
  for (const auto& nc : tree.crossings) {
    if (nc.chart != chart_id) continue;
    const Chart& chart = tree.charts[nc.chart];
    auto push = [&](const DiskLoop& dl) {
      LoopSpec ls;
      ls.px = compose_path(chart.map_x, dl.px, dl.py);
      ls.py = compose_path(chart.map_y, dl.px, dl.py);
      return ls;
    };
    if (nc.div_a == divisor_idx)
      return track_loop(F, zvar, push(nc.loop_a), d_near, opts);
    if (nc.div_b == divisor_idx)
      return track_loop(F, zvar, push(nc.loop_b), d_near, opts);
  }
  // Same divisor seen in another chart via its global id.
  const Divisor& target = tree.charts[chart_id].divisors[divisor_idx];
  for (const auto& nc : tree.crossings) {
    const Chart& chart = tree.charts[nc.chart];
    for (int slot = 0; slot < 2; ++slot) {
      int di = slot == 0 ? nc.div_a : nc.div_b;
      const Divisor& d = chart.divisors[di];
      if (d.kind == target.kind && d.global_id == target.global_id) {
        auto& dl = slot == 0 ? nc.loop_a : nc.loop_b;
        LoopSpec ls;
        ls.px = compose_path(chart.map_x, dl.px, dl.py);
        ls.py = compose_path(chart.map_y, dl.px, dl.py);
        return track_loop(F, zvar, ls, d_near, opts);
      }
    }
  }
  throw DomainError(
      "transversal_monodromy: divisor does not meet any enumerated crossing");
}

GenericMonodromy generic_monodromy(const MPoly& F, const std::string& zvar,
                                   const Rational& a, const Rational& b,
                                   int d_near, const MonodromyOptions& opts) {
  MPoly disc = discriminant(F, zvar);
  MPoly lc = F.leading_coeff(zvar);
  MPoly T = MPoly::var("t");
  MPoly px = T.scaled(a), py = T.scaled(b);
  std::vector<MPoly> avoid;
  for (const MPoly* p : {&disc, &lc}) {
    MPoly c = compose_path(*p, px, py);
    if (c.is_zero())
      throw DomainError("generic_monodromy: direction lies inside the "
                        "discriminant");
    if (!c.is_constant()) avoid.push_back(c);
  }
  Rational r = safe_circle_radius(avoid, "t");
  GenericMonodromy gm;
  gm.a = a;
  gm.b = b;
  gm.radius = r;
  LoopSpec ls;
  ls.px = px;
  ls.py = py;
  ls.radius = r;
  gm.mono = track_loop(F, zvar, ls, d_near, opts);
  return gm;
}

BraidResult compute_braid(const MPoly& F, const std::string& zvar,
                          const LoopSpec& loop, int d_near,
                          const MonodromyOptions& opts) {
  MonodromyOptions o = opts;
  o.braids = true;
  LoopMonodromy lm = track_loop(F, zvar, loop, d_near, o);
  BraidResult br;
  br.letters = lm.braid;
  br.word = lm.braid_word;
  br.underlying =
      braid_underlying_permutation(lm.braid, lm.perm_full.size());
  if (br.underlying != lm.perm_full)
    throw CertificationError("braid word does not match the permutation");
  return br;
}

}  // namespace arcsect
