#pragma once
// Weights of a maximal torus in doubled coordinates (so half-integer entries
// stay integral), carrying an auxiliary grading degree in the monoid
// direction.

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "qzeta/errors.hpp"
#include "qzeta/rational.hpp"

namespace qzeta {

struct Weight {
  std::vector<long long> c2;  // doubled coordinates
  long long degree = 0;

  Weight() = default;
  explicit Weight(std::vector<long long> doubled, long long deg = 0)
      : c2(std::move(doubled)), degree(deg) {}

  static Weight zero(size_t dim) { return Weight(std::vector<long long>(dim, 0)); }
  // x_(i+1) for 0-based i
  static Weight basis(size_t dim, size_t i, long long times = 1) {
    Weight w = zero(dim);
    w.c2[i] = 2 * times;
    return w;
  }

  size_t dim() const { return c2.size(); }
  bool is_zero_vec() const {
    for (long long v : c2)
      if (v != 0) return false;
    return true;
  }
  bool is_integral() const {
    for (long long v : c2)
      if (v % 2 != 0) return false;
    return true;
  }
  std::vector<long long> whole_coords() const {
    if (!is_integral()) throw structural_error("weight has non-integral coordinates: " + str());
    std::vector<long long> out(c2.size());
    for (size_t i = 0; i < c2.size(); ++i) out[i] = c2[i] / 2;
    return out;
  }

  friend Weight operator+(const Weight& a, const Weight& b) {
    a.check_dim(b);
    Weight w = a;
    for (size_t i = 0; i < b.c2.size(); ++i) w.c2[i] += b.c2[i];
    w.degree += b.degree;
    return w;
  }
  friend Weight operator-(const Weight& a, const Weight& b) {
    a.check_dim(b);
    Weight w = a;
    for (size_t i = 0; i < b.c2.size(); ++i) w.c2[i] -= b.c2[i];
    w.degree -= b.degree;
    return w;
  }
  friend Weight operator-(const Weight& a) {
    Weight w = a;
    for (auto& v : w.c2) v = -v;
    w.degree = -w.degree;
    return w;
  }
  friend Weight operator*(long long k, const Weight& a) {
    Weight w = a;
    for (auto& v : w.c2) v *= k;
    w.degree *= k;
    return w;
  }
  friend bool operator==(const Weight& a, const Weight& b) {
    return a.c2 == b.c2 && a.degree == b.degree;
  }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b) {
    if (a.c2 != b.c2) return a.c2 < b.c2;
    return a.degree < b.degree;
  }

  // Euclidean form in the coordinate realization.
  Rat inner(const Weight& o) const {
    check_dim(o);
    long long acc = 0;
    for (size_t i = 0; i < c2.size(); ++i) acc += c2[i] * o.c2[i];
    return Rat(acc) / 4;
  }

  std::string str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < c2.size(); ++i) {
      if (i) os << ",";
      if (c2[i] % 2 == 0)
        os << c2[i] / 2;
      else
        os << c2[i] << "/2";
    }
    os << ")";
    if (degree != 0) os << "@" << degree;
    return os.str();
  }

 private:
  void check_dim(const Weight& o) const {
    if (c2.size() != o.c2.size())
      throw structural_error("weight dimension mismatch: " + str() + " vs " + o.str());
  }
};

// Root-style name for an integral weight, e.g. "x1+x2", "2x3", "x1-x2".
inline std::string root_label(const Weight& w) {
  std::vector<long long> c = w.whole_coords();
  std::string out;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!out.empty() && c[i] > 0) out += "+";
    if (c[i] == -1)
      out += "-";
    else if (c[i] != 1)
      out += std::to_string(c[i]);
    out += "x" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

}  // namespace qzeta
