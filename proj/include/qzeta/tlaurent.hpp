#pragma once
// Laurent polynomials over Q in a formal variable t with t^2 = q, the residue
// field cardinality. Exponents are t-exponents throughout, so the power q^h of
// a half-integer h is the monomial t^(2h) and all bookkeeping stays integral.

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qzeta/errors.hpp"
#include "qzeta/half.hpp"
#include "qzeta/rational.hpp"

namespace qzeta {

class TLaurent {
 public:
  TLaurent() = default;
  TLaurent(long long n) {
    if (n != 0) c_[0] = Rat(n);
  }
  TLaurent(const Rat& r) {
    if (r != 0) c_[0] = r;
  }

  static TLaurent term(const Rat& coef, long long texp) {
    TLaurent p;
    if (coef != 0) p.c_[texp] = coef;
    return p;
  }
  static TLaurent q_pow(Half h) { return term(Rat(1), h.twice); }
  static TLaurent q_int(long long k) { return term(Rat(1), 2 * k); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const {
    return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1;
  }
  bool is_monomial() const { return c_.size() == 1; }
  bool is_rational() const {
    return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0);
  }

  const std::map<long long, Rat>& terms() const { return c_; }
  Rat coeff(long long texp) const {
    auto it = c_.find(texp);
    return it == c_.end() ? Rat(0) : it->second;
  }
  long long t_min() const {
    require_nonzero();
    return c_.begin()->first;
  }
  long long t_max() const {
    require_nonzero();
    return c_.rbegin()->first;
  }
  // Coefficient of the lowest t-power.
  Rat lead_low() const {
    require_nonzero();
    return c_.begin()->second;
  }
  Rat lead_high() const {
    require_nonzero();
    return c_.rbegin()->second;
  }

  TLaurent shifted(long long k) const {
    TLaurent p;
    for (const auto& [e, r] : c_) p.c_[e + k] = r;
    return p;
  }
  TLaurent scaled(const Rat& r) const {
    TLaurent p;
    if (r == 0) return p;
    for (const auto& [e, c] : c_) p.c_[e] = c * r;
    return p;
  }
  TLaurent inverted_unit() const {
    if (c_.size() != 1) throw structural_error("not a unit in the t-ring: " + str());
    return term(Rat(1) / c_.begin()->second, -c_.begin()->first);
  }
  // Multiplication by t^k, named for uniformity with richer coefficient rings.
  TLaurent scaled_t(long long k) const { return shifted(k); }

  TLaurent& operator+=(const TLaurent& o) {
    for (const auto& [e, r] : o.c_) add_term(e, r);
    return *this;
  }
  TLaurent& operator-=(const TLaurent& o) {
    for (const auto& [e, r] : o.c_) add_term(e, -r);
    return *this;
  }
  friend TLaurent operator+(TLaurent a, const TLaurent& b) { return a += b; }
  friend TLaurent operator-(TLaurent a, const TLaurent& b) { return a -= b; }
  friend TLaurent operator-(const TLaurent& a) { return a.scaled(Rat(-1)); }
  friend TLaurent operator*(const TLaurent& a, const TLaurent& b) {
    TLaurent p;
    for (const auto& [ea, ra] : a.c_)
      for (const auto& [eb, rb] : b.c_) p.add_term(ea + eb, ra * rb);
    return p;
  }
  TLaurent& operator*=(const TLaurent& o) { return *this = *this * o; }
  friend bool operator==(const TLaurent& a, const TLaurent& b) { return a.c_ == b.c_; }
  friend bool operator!=(const TLaurent& a, const TLaurent& b) { return !(a == b); }
  // Map-order comparison, for use as container key only.
  friend bool operator<(const TLaurent& a, const TLaurent& b) { return a.c_ < b.c_; }

  // Evaluate at a rational value of t; exact, for spot checks.
  Rat eval(const Rat& t) const {
    Rat acc = 0;
    for (const auto& [e, r] : c_) {
      Rat p = 1;
      long long k = e >= 0 ? e : -e;
      for (long long i = 0; i < k; ++i) p *= t;
      acc += e >= 0 ? Rat(r * p) : Rat(r / p);
    }
    return acc;
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, r] : c_) {
      if (!first) os << (r > 0 ? " + " : " - ");
      Rat a = (!first && r < 0) ? Rat(-r) : r;
      first = false;
      if (e == 0) {
        os << rat_str(a);
      } else {
        if (a != 1) os << rat_str(a) << "*";
        os << "t";
        if (e != 1) os << "^" << e;
      }
    }
    return os.str();
  }

 private:
  std::map<long long, Rat> c_;

  void add_term(long long e, const Rat& r) {
    if (r == 0) return;
    auto it = c_.find(e);
    if (it == c_.end()) {
      c_[e] = r;
      return;
    }
    it->second += r;
    if (it->second == 0) c_.erase(it);
  }
  void require_nonzero() const {
    if (c_.empty()) throw structural_error("zero Laurent polynomial has no degree");
  }
};

namespace detail {

// Dense coefficient vector, index = t-exponent; requires t_min >= 0.
inline std::vector<Rat> t_dense(const TLaurent& p) {
  if (p.is_zero()) return {};
  if (p.t_min() < 0) throw structural_error("dense form needs a plain polynomial");
  std::vector<Rat> v(static_cast<size_t>(p.t_max()) + 1);
  for (const auto& [e, r] : p.terms()) v[static_cast<size_t>(e)] = r;
  return v;
}

inline TLaurent t_from_dense(const std::vector<Rat>& v) {
  TLaurent p;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) p += TLaurent::term(v[i], static_cast<long long>(i));
  return p;
}

inline void t_trim(std::vector<Rat>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Remainder of dense polynomial division (coefficients in Q, so plain Euclid).
inline std::vector<Rat> t_rem(std::vector<Rat> a, const std::vector<Rat>& b) {
  t_trim(a);
  while (a.size() >= b.size()) {
    Rat f = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    t_trim(a);
    if (a.empty()) break;
  }
  return a;
}

}  // namespace detail

// Gcd in Q[t] of plain polynomials (t_min >= 0 required); result is monic in
// the leading coefficient, so common t^k factors survive.
inline TLaurent poly_gcd_t(TLaurent a, TLaurent b) {
  if (a.is_zero() && b.is_zero()) return TLaurent();
  std::vector<Rat> va = detail::t_dense(a), vb = detail::t_dense(b);
  while (!vb.empty()) {
    std::vector<Rat> r = detail::t_rem(va, vb);
    // keep remainders monic, or coefficient sizes explode along the chain
    if (!r.empty()) {
      Rat lead = r.back();
      for (auto& c : r) c /= lead;
    }
    va = std::move(vb);
    vb = std::move(r);
  }
  TLaurent g = detail::t_from_dense(va);
  return g.scaled(Rat(1) / g.lead_high());
}

// Exact quotient a/b of t-Laurent polynomials; throws when b does not divide a.
inline TLaurent divexact_t(const TLaurent& a, const TLaurent& b) {
  if (b.is_zero()) throw structural_error("division by zero t-polynomial");
  if (a.is_zero()) return TLaurent();
  long long sa = a.t_min(), sb = b.t_min();
  std::vector<Rat> va = detail::t_dense(a.shifted(-sa));
  std::vector<Rat> vb = detail::t_dense(b.shifted(-sb));
  if (va.size() < vb.size()) throw structural_error("t-division is not exact");
  std::vector<Rat> q(va.size() - vb.size() + 1);
  while (!va.empty() && va.size() >= vb.size()) {
    Rat f = va.back() / vb.back();
    size_t off = va.size() - vb.size();
    q[off] = f;
    for (size_t i = 0; i < vb.size(); ++i) va[off + i] -= f * vb[i];
    detail::t_trim(va);
  }
  if (!va.empty()) throw structural_error("t-division is not exact");
  return detail::t_from_dense(q).shifted(sa - sb);
}

}  // namespace qzeta
