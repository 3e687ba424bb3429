#include "arcsect/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "arcsect/errors.hpp"

namespace arcsect {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      throw DomainError("Permutation: not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int d) {
  std::vector<int> v(d);
  std::iota(v.begin(), v.end(), 0);
  return Permutation(v);
}

Permutation Permutation::parse_cycles(const std::string& s, int d) {
  std::vector<int> img(d);
  std::iota(img.begin(), img.end(), 0);
  size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  };
  skip();
  while (i < s.size()) {
    if (s[i] != '(') throw ParseError("expected '('", i);
    ++i;
    std::vector<int> cyc;
    skip();
    while (i < s.size() && s[i] != ')') {
      size_t start = i;
      while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == start) throw ParseError("expected number", i);
      int v = std::stoi(s.substr(start, i - start));
      if (v < 1 || v > d) throw ParseError("cycle entry out of range", start);
      cyc.push_back(v - 1);
      skip();
      if (i < s.size() && (s[i] == ',' || s[i] == ' ')) {
        ++i;
        skip();
      }
    }
    if (i >= s.size()) throw ParseError("unterminated cycle", i);
    ++i;  // ')'
    for (size_t k = 0; k < cyc.size(); ++k)
      img[cyc[k]] = cyc[(k + 1) % cyc.size()];
    skip();
  }
  return Permutation(img);
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw DomainError("Permutation: size mismatch");
  std::vector<int> v(a.size());
  for (int i = 0; i < a.size(); ++i) v[i] = a[b[i]];
  return Permutation(v);
}

Permutation Permutation::inverse() const {
  std::vector<int> v(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) v[img_[i]] = static_cast<int>(i);
  return Permutation(v);
}

Permutation Permutation::power(long e) const {
  int d = size();
  Permutation base = e < 0 ? inverse() : *this;
  if (e < 0) e = -e;
  Permutation acc = identity(d);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

long Permutation::order() const {
  long o = 1;
  for (const auto& c : cycles()) o = std::lcm(o, static_cast<long>(c.size()));
  return o;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(img_.size(), false);
  for (size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    int j = static_cast<int>(i);
    while (!seen[j]) {
      seen[j] = true;
      c.push_back(j);
      j = img_[j];
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> t;
  for (const auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
  std::sort(t.rbegin(), t.rend());
  return t;
}

int Permutation::cycle_count() const { return static_cast<int>(cycles().size()); }

bool Permutation::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i)) return false;
  return true;
}

bool Permutation::is_full_cycle() const {
  return !img_.empty() && cycle_count() == 1;
}

std::string Permutation::cycle_string() const {
  std::ostringstream os;
  bool any = false;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    any = true;
    os << "(";
    for (size_t k = 0; k < c.size(); ++k) {
      if (k) os << ",";
      os << c[k] + 1;
    }
    os << ")";
  }
  if (!any) return "()";
  return os.str();
}

std::string cycle_type_string(const std::vector<int>& type) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < type.size(); ++i) {
    if (i) os << ",";
    os << type[i];
  }
  os << ")";
  return os.str();
}

}  // namespace arcsect
