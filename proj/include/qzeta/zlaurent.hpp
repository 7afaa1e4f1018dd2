#pragma once
// Laurent polynomials in z = q^(-s) over a commutative coefficient ring.

#include <concepts>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "qzeta/errors.hpp"

namespace qzeta {

template <class C>
concept CoefRing = requires(C a, C b) {
  C(0);
  C(1);
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.is_one() } -> std::convertible_to<bool>;
  { a + b } -> std::convertible_to<C>;
  { a - b } -> std::convertible_to<C>;
  { a * b } -> std::convertible_to<C>;
  { a == b } -> std::convertible_to<bool>;
};

template <CoefRing C>
class ZLaurent {
 public:
  ZLaurent() = default;

  static ZLaurent one() { return term(C(1), 0); }
  static ZLaurent term(C coef, long long zexp) {
    ZLaurent p;
    p.put(zexp, std::move(coef));
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const {
    return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second.is_one();
  }
  bool is_single_term() const { return c_.size() == 1; }

  const std::map<long long, C>& terms() const { return c_; }
  C coeff(long long zexp) const {
    auto it = c_.find(zexp);
    return it == c_.end() ? C(0) : it->second;
  }
  long long z_min() const {
    require_nonzero();
    return c_.begin()->first;
  }
  long long z_max() const {
    require_nonzero();
    return c_.rbegin()->first;
  }

  ZLaurent shifted(long long k) const {
    ZLaurent p;
    for (const auto& [e, c] : c_) p.c_[e + k] = c;
    return p;
  }
  // z -> z^(-1)
  ZLaurent negated_z() const {
    ZLaurent p;
    for (const auto& [e, c] : c_) p.c_[-e] = c;
    return p;
  }
  ZLaurent scaled(const C& f) const {
    ZLaurent p;
    for (const auto& [e, c] : c_) p.put(e, c * f);
    return p;
  }
  // f(zexp, coef) -> new coef
  template <class F>
  ZLaurent transformed(F&& f) const {
    ZLaurent p;
    for (const auto& [e, c] : c_) p.put(e, f(e, c));
    return p;
  }
  // Truncate to z-exponents <= d.
  ZLaurent truncated(long long d) const {
    ZLaurent p;
    for (const auto& [e, c] : c_)
      if (e <= d) p.c_[e] = c;
    return p;
  }

  ZLaurent& operator+=(const ZLaurent& o) {
    for (const auto& [e, c] : o.c_) add_term(e, c);
    return *this;
  }
  ZLaurent& operator-=(const ZLaurent& o) {
    for (const auto& [e, c] : o.c_) add_term(e, C(0) - c);
    return *this;
  }
  friend ZLaurent operator+(ZLaurent a, const ZLaurent& b) { return a += b; }
  friend ZLaurent operator-(ZLaurent a, const ZLaurent& b) { return a -= b; }
  friend ZLaurent operator-(const ZLaurent& a) { return ZLaurent() - a; }
  friend ZLaurent operator*(const ZLaurent& a, const ZLaurent& b) {
    ZLaurent p;
    for (const auto& [ea, ca] : a.c_)
      for (const auto& [eb, cb] : b.c_) p.add_term(ea + eb, ca * cb);
    return p;
  }
  ZLaurent& operator*=(const ZLaurent& o) { return *this = *this * o; }
  friend bool operator==(const ZLaurent& a, const ZLaurent& b) { return a.c_ == b.c_; }
  friend bool operator!=(const ZLaurent& a, const ZLaurent& b) { return !(a == b); }

  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : c_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.str() << ")";
      if (e != 0) os << "*z^" << e;
    }
    return os.str();
  }

 private:
  std::map<long long, C> c_;

  void put(long long e, C v) {
    if (!v.is_zero()) c_[e] = std::move(v);
  }
  void add_term(long long e, const C& v) {
    if (v.is_zero()) return;
    auto it = c_.find(e);
    if (it == c_.end()) {
      c_[e] = v;
      return;
    }
    it->second = it->second + v;
    if (it->second.is_zero()) c_.erase(it);
  }
  void require_nonzero() const {
    if (c_.empty()) throw structural_error("zero series has no z-degree");
  }
};

}  // namespace qzeta
