#pragma once
// Laurent polynomials in commuting Satake-parameter variables x_1..x_m with
// t-Laurent coefficients. Zero-variable elements act as scalars and promote
// on contact with wider elements.

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qzeta/errors.hpp"
#include "qzeta/tlaurent.hpp"

namespace qzeta {

class XLaurent {
 public:
  XLaurent() = default;
  XLaurent(long long n) {
    if (n != 0) c_[{}] = TLaurent(n);
  }
  XLaurent(const TLaurent& t) {
    if (!t.is_zero()) c_[{}] = t;
  }

  static XLaurent constant(size_t nvars, const TLaurent& t) {
    XLaurent p;
    p.nvars_ = nvars;
    if (!t.is_zero()) p.c_[std::vector<long long>(nvars, 0)] = t;
    return p;
  }
  static XLaurent monomial(size_t nvars, std::vector<long long> exps, const TLaurent& t) {
    if (exps.size() != nvars) throw structural_error("monomial exponent count mismatch");
    XLaurent p;
    p.nvars_ = nvars;
    if (!t.is_zero()) p.c_[std::move(exps)] = t;
    return p;
  }

  size_t nvars() const { return nvars_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const {
    return c_.size() == 1 && all_zero(c_.begin()->first) && c_.begin()->second.is_one();
  }
  bool is_scalar() const { return c_.empty() || (c_.size() == 1 && all_zero(c_.begin()->first)); }
  const std::map<std::vector<long long>, TLaurent>& terms() const { return c_; }
  TLaurent coeff(const std::vector<long long>& e) const {
    auto it = c_.find(e);
    return it == c_.end() ? TLaurent() : it->second;
  }

  XLaurent promoted(size_t n) const {
    if (nvars_ == n) return *this;
    if (!is_scalar()) throw structural_error("cannot promote a non-scalar between variable counts");
    XLaurent p;
    p.nvars_ = n;
    if (!c_.empty()) p.c_[std::vector<long long>(n, 0)] = c_.begin()->second;
    return p;
  }

  XLaurent scaled_t(long long k) const {
    XLaurent p;
    p.nvars_ = nvars_;
    for (const auto& [e, t] : c_) p.c_[e] = t.shifted(k);
    return p;
  }
  XLaurent scaled(const TLaurent& f) const {
    XLaurent p;
    p.nvars_ = nvars_;
    if (f.is_zero()) return p;
    for (const auto& [e, t] : c_) p.c_[e] = t * f;
    return p;
  }
  XLaurent inverted_unit() const {
    if (c_.size() != 1) throw structural_error("not a unit in the x-ring");
    std::vector<long long> e = c_.begin()->first;
    for (auto& v : e) v = -v;
    XLaurent p;
    p.nvars_ = nvars_;
    p.c_[std::move(e)] = c_.begin()->second.inverted_unit();
    return p;
  }

  friend XLaurent operator+(const XLaurent& a, const XLaurent& b) {
    auto [x, y] = align(a, b);
    for (const auto& [e, t] : y.c_) x.add_term(e, t);
    return x;
  }
  friend XLaurent operator-(const XLaurent& a, const XLaurent& b) {
    auto [x, y] = align(a, b);
    for (const auto& [e, t] : y.c_) x.add_term(e, -t);
    return x;
  }
  friend XLaurent operator-(const XLaurent& a) { return XLaurent(0).promoted(a.nvars_) - a; }
  friend XLaurent operator*(const XLaurent& a, const XLaurent& b) {
    auto [x, y] = align(a, b);
    XLaurent p;
    p.nvars_ = x.nvars_;
    for (const auto& [ea, ta] : x.c_)
      for (const auto& [eb, tb] : y.c_) {
        std::vector<long long> e = ea;
        for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        p.add_term(e, ta * tb);
      }
    return p;
  }
  XLaurent& operator+=(const XLaurent& o) { return *this = *this + o; }
  XLaurent& operator-=(const XLaurent& o) { return *this = *this - o; }
  XLaurent& operator*=(const XLaurent& o) { return *this = *this * o; }
  friend bool operator==(const XLaurent& a, const XLaurent& b) {
    auto [x, y] = align(a, b);
    return x.c_ == y.c_;
  }
  friend bool operator!=(const XLaurent& a, const XLaurent& b) { return !(a == b); }

  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, t] : c_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << t.str() << ")";
      for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        os << "*x" << i + 1;
        if (e[i] != 1) os << "^" << e[i];
      }
    }
    return os.str();
  }

 private:
  size_t nvars_ = 0;
  std::map<std::vector<long long>, TLaurent> c_;

  static bool all_zero(const std::vector<long long>& e) {
    for (long long v : e)
      if (v != 0) return false;
    return true;
  }
  static std::pair<XLaurent, XLaurent> align(const XLaurent& a, const XLaurent& b) {
    size_t n = std::max(a.nvars_, b.nvars_);
    return {a.promoted(n), b.promoted(n)};
  }
  void add_term(const std::vector<long long>& e, const TLaurent& t) {
    if (t.is_zero()) return;
    auto it = c_.find(e);
    if (it == c_.end()) {
      c_[e] = t;
      return;
    }
    it->second += t;
    if (it->second.is_zero()) c_.erase(it);
  }
};

}  // namespace qzeta
