#ifndef ARCSECT_PERMUTATION_HPP
#define ARCSECT_PERMUTATION_HPP

#include <string>
#include <vector>

namespace arcsect {

// Permutation of {0, ..., d-1}; serialized in 1-based cycle notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // validates bijection
  static Permutation identity(int d);
  // "(1,4)(2,3)" with 1-based entries; "()" is the identity.
  static Permutation parse_cycles(const std::string& s, int d);

  int size() const { return static_cast<int>(img_.size()); }
  int operator[](int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  // (a * b)(i) = a(b(i))  — apply b first.
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation inverse() const;
  Permutation power(long e) const;
  long order() const;

  std::vector<std::vector<int>> cycles() const;  // includes fixed points
  std::vector<int> cycle_type() const;           // lengths, descending
  int cycle_count() const;
  bool is_identity() const;
  bool is_full_cycle() const;  // a single d-cycle

  std::string cycle_string() const;  // fixed points omitted; identity -> "()"

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return img_ != o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

 private:
  std::vector<int> img_;
};

std::string cycle_type_string(const std::vector<int>& type);  // "(2,2)"

}  // namespace arcsect

#endif
