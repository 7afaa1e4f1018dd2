#pragma once
// Half-integers, stored doubled so every exponent computation stays integral.

#include <string>

#include "qzeta/errors.hpp"
#include "qzeta/rational.hpp"

namespace qzeta {

struct Half {
  long long twice = 0;

  Half() = default;
  explicit Half(long long doubled) : twice(doubled) {}
  static Half whole(long long n) { return Half{2 * n}; }

  bool is_whole() const { return twice % 2 == 0; }
  long long whole_value() const {
    if (!is_whole()) throw structural_error("half-integer is not integral: " + str());
    return twice / 2;
  }
  Rat value() const { return Rat(twice) / 2; }

  std::string str() const {
    if (is_whole()) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
  }

  friend Half operator+(Half a, Half b) { return Half{a.twice + b.twice}; }
  friend Half operator-(Half a, Half b) { return Half{a.twice - b.twice}; }
  friend Half operator-(Half a) { return Half{-a.twice}; }
  friend Half operator*(long long k, Half a) { return Half{k * a.twice}; }
  friend bool operator==(Half a, Half b) { return a.twice == b.twice; }
  friend bool operator!=(Half a, Half b) { return a.twice != b.twice; }
  friend bool operator<(Half a, Half b) { return a.twice < b.twice; }
  friend bool operator<=(Half a, Half b) { return a.twice <= b.twice; }
};

inline Half one_minus(Half b) { return Half{2 - b.twice}; }

}  // namespace qzeta
