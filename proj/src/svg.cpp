#include "arcsect/svg.hpp"

#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "arcsect/tracking.hpp"

namespace arcsect {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

}  // namespace

std::string svg_dual_graph(const ResolutionTree& tree) {
  // Collect divisor identities: exceptional by id, strict branches by the
  // crossing points they pass through (one node for the strict transform).
  std::set<std::string> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& nc : tree.crossings) {
    const auto& ch = tree.charts[nc.chart];
    std::string a = ch.divisors[nc.div_a].label();
    std::string b = ch.divisors[nc.div_b].label();
    if (nc.div_a == nc.div_b) b += "'";
    nodes.insert(a);
    nodes.insert(b);
    edges.push_back({a, b});
  }
  std::map<std::string, std::pair<double, double>> pos;
  int n = static_cast<int>(nodes.size());
  int i = 0;
  const double cx = 240, cy = 200, R = n > 1 ? 150 : 0;
  for (const auto& name : nodes) {
    double ang = 2 * M_PI * i / std::max(1, n);
    pos[name] = {cx + R * std::cos(ang), cy + R * std::sin(ang)};
    ++i;
  }
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"400\" "
        "viewBox=\"0 0 480 400\">\n";
  os << "<rect width=\"480\" height=\"400\" fill=\"white\"/>\n";
  for (const auto& [a, b] : edges) {
    auto [x1, y1] = pos[a];
    auto [x2, y2] = pos[b];
    os << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
       << "\" y2=\"" << y2 << "\" stroke=\"#888\" stroke-width=\"1.5\"/>\n";
  }
  i = 0;
  for (const auto& name : nodes) {
    auto [x, y] = pos[name];
    bool exceptional = name.size() > 1 && name[0] == 'E';
    os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"16\" fill=\""
       << (exceptional ? "#dbe9ff" : "#ffe3d6") << "\" stroke=\"#333\"/>\n";
    os << "<text x=\"" << x << "\" y=\"" << y + 4
       << "\" font-size=\"11\" text-anchor=\"middle\" font-family=\"sans-serif\">"
       << name << "</text>\n";
    ++i;
  }
  os << "</svg>\n";
  return os.str();
}

std::string svg_root_trajectories(const MPoly& F, const std::string& zvar,
                                  const LoopSpec& loop, int samples) {
  CircleFamily fam = make_family(F, zvar, loop.px, loop.py, loop.tvar,
                                 loop.center, loop.radius);
  // Sample fibers and match greedily between consecutive angles.
  std::vector<std::vector<std::complex<double>>> paths;
  std::vector<std::complex<double>> prev;
  for (int s = 0; s <= samples; ++s) {
    double th = 2 * M_PI * s / samples;
    auto coeffs = fam.fiber_coeffs(th);
    std::vector<std::complex<double>> roots;
    try {
      roots = expand_clusters(complex_roots(coeffs));
    } catch (const Error&) {
      continue;
    }
    if (paths.empty()) {
      std::sort(roots.begin(), roots.end(), [](auto a, auto b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
      });
      paths.resize(roots.size());
      for (size_t k = 0; k < roots.size(); ++k) paths[k].push_back(roots[k]);
      prev = roots;
      continue;
    }
    std::vector<bool> used(roots.size(), false);
    std::vector<std::complex<double>> matched(prev.size());
    for (size_t k = 0; k < prev.size(); ++k) {
      double best = 1e300;
      int bi = -1;
      for (size_t j = 0; j < roots.size(); ++j) {
        double d = std::abs(roots[j] - prev[k]);
        if (!used[j] && d < best) {
          best = d;
          bi = static_cast<int>(j);
        }
      }
      if (bi >= 0) {
        used[bi] = true;
        matched[k] = roots[bi];
      } else {
        matched[k] = prev[k];
      }
    }
    for (size_t k = 0; k < paths.size() && k < matched.size(); ++k)
      paths[k].push_back(matched[k]);
    prev = matched;
  }
  double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
  for (const auto& p : paths)
    for (const auto& z : p) {
      lo_x = std::min(lo_x, z.real());
      hi_x = std::max(hi_x, z.real());
      lo_y = std::min(lo_y, z.imag());
      hi_y = std::max(hi_y, z.imag());
    }
  if (lo_x > hi_x) {
    lo_x = -1;
    hi_x = 1;
    lo_y = -1;
    hi_y = 1;
  }
  double pad_x = (hi_x - lo_x) * 0.1 + 1e-9, pad_y = (hi_y - lo_y) * 0.1 + 1e-9;
  lo_x -= pad_x;
  hi_x += pad_x;
  lo_y -= pad_y;
  hi_y += pad_y;
  const double W = 480, H = 400;
  auto sx = [&](double x) { return (x - lo_x) / (hi_x - lo_x) * W; };
  auto sy = [&](double y) { return H - (y - lo_y) / (hi_y - lo_y) * H; };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"400\" "
        "viewBox=\"0 0 480 400\">\n";
  os << "<rect width=\"480\" height=\"400\" fill=\"white\"/>\n";
  for (size_t k = 0; k < paths.size(); ++k) {
    os << "<polyline fill=\"none\" stroke=\"" << kPalette[k % 8]
       << "\" stroke-width=\"1.2\" points=\"";
    for (const auto& z : paths[k])
      os << sx(z.real()) << "," << sy(z.imag()) << " ";
    os << "\"/>\n";
    if (!paths[k].empty()) {
      os << "<circle cx=\"" << sx(paths[k][0].real()) << "\" cy=\""
         << sy(paths[k][0].imag()) << "\" r=\"3.5\" fill=\"" << kPalette[k % 8]
         << "\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace arcsect
