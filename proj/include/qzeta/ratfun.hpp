#pragma once
// Rational functions in z = q^(-s) with exact arithmetic and a canonical
// reduced form, plus the local zeta and gamma building blocks attached to
// affine exponents a*s + b.

#include <algorithm>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "qzeta/errors.hpp"
#include "qzeta/half.hpp"
#include "qzeta/tlaurent.hpp"
#include "qzeta/zlaurent.hpp"

namespace qzeta {

// a*s + b with integer a and half-integer b.
struct AffineExp {
  long long a = 0;
  Half b{};

  AffineExp() = default;
  AffineExp(long long a_, Half b_) : a(a_), b(b_) {}

  AffineExp one_minus() const { return {-a, qzeta::one_minus(b)}; }
  // s -> s + c
  AffineExp shifted(Half c) const { return {a, Half{b.twice + a * c.twice}}; }
  friend AffineExp operator-(AffineExp e) { return {-e.a, -e.b}; }
  friend bool operator==(AffineExp x, AffineExp y) { return x.a == y.a && x.b == y.b; }

  std::string str() const {
    std::string out;
    if (a == 1)
      out = "s";
    else if (a == -1)
      out = "-s";
    else if (a != 0)
      out = std::to_string(a) + "s";
    if (b.twice != 0 || a == 0) {
      if (!out.empty() && b.twice > 0) out += "+";
      out += b.str();
    }
    return out;
  }
};

namespace zdetail {

// Dense z-polynomial over Q[t]: index = z-degree, coefficients plain t-polys.
using ZP = std::vector<TLaurent>;

inline void trim(ZP& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline TLaurent content(const ZP& p) {
  TLaurent g;
  for (const auto& c : p) g = poly_gcd_t(g, c);
  return g;
}

inline ZP scale_div(ZP p, const TLaurent& d) {
  for (auto& c : p) c = divexact_t(c, d);
  return p;
}

inline ZP primitive(const ZP& p) { return scale_div(p, content(p)); }

inline ZP zdivexact(ZP rem, const ZP& b) {
  trim(rem);
  if (b.empty()) throw structural_error("z-division by zero");
  if (rem.empty()) return {};
  if (rem.size() < b.size()) throw structural_error("z-division is not exact");
  ZP q(rem.size() - b.size() + 1);
  while (!rem.empty() && rem.size() >= b.size()) {
    TLaurent f = divexact_t(rem.back(), b.back());
    size_t off = rem.size() - b.size();
    q[off] = f;
    for (size_t i = 0; i < b.size(); ++i) rem[off + i] -= f * b[i];
    trim(rem);
  }
  if (!rem.empty()) throw structural_error("z-division is not exact");
  return q;
}

// Dense z-polynomial over Q, the image of a ZP at a fixed rational value of t.
using QP = std::vector<Rat>;

inline void qtrim(QP& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QP qgcd_monic(QP a, QP b) {
  qtrim(a);
  qtrim(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Rat lb = b.back();
    if (lb != 1)
      for (auto& c : b) c /= lb;
    while (a.size() >= b.size()) {
      Rat f = a.back();
      size_t off = a.size() - b.size();
      for (size_t i = 0; i + 1 < b.size(); ++i) a[off + i] -= f * b[i];
      a.pop_back();
      qtrim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  if (!a.empty() && a.back() != 1) {
    Rat la = a.back();
    for (auto& c : a) c /= la;
  }
  return a;
}

// Values of every z-coefficient at one t-value, from a precomputed power table.
inline QP eval_slices(const ZP& p, const std::vector<Rat>& pw) {
  QP out(p.size());
  for (size_t j = 0; j < p.size(); ++j)
    for (const auto& [e, r] : p[j].terms()) out[j] += r * pw[static_cast<size_t>(e)];
  return out;
}

inline Rat eval_poly(const TLaurent& p, const std::vector<Rat>& pw) {
  Rat acc = 0;
  for (const auto& [e, r] : p.terms()) acc += r * pw[static_cast<size_t>(e)];
  return acc;
}

// Dense coefficients of the degree < xs.size() polynomial through (xs, ys),
// by Newton divided differences.
inline QP interpolate(const QP& xs, QP ys) {
  size_t n = xs.size();
  for (size_t k = 1; k < n; ++k)
    for (size_t i = n; i-- > k;) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - k]);
  QP out{ys.back()};
  for (size_t i = n - 1; i-- > 0;) {
    out.insert(out.begin(), Rat(0));
    for (size_t j = 0; j + 1 < out.size(); ++j) out[j] -= xs[i] * out[j + 1];
    out[0] += ys[i];
  }
  return out;
}

inline bool divides(const ZP& a, const ZP& d) {
  try {
    zdivexact(a, d);
  } catch (const structural_error&) {
    return false;
  }
  return true;
}

// Gcd by evaluation and interpolation: specialize t at small integers, take
// monic gcds of the resulting z-polynomials over Q, and rebuild the t-poly
// coefficients by interpolation, scaled by the gcd of the leading coefficients
// so the target stays polynomial in t. A candidate only counts once it exactly
// divides both inputs, so unlucky evaluation points cost retries, never
// correctness; the coprime case settles at the first point. Coefficients must
// be plain t-polynomials (t_min >= 0), which canonical_reduce arranges.
inline ZP zgcd(ZP a, ZP b) {
  trim(a);
  trim(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  TLaurent ca = content(a), cb = content(b);
  TLaurent cg = poly_gcd_t(ca, cb);
  a = scale_div(a, ca);
  b = scale_div(b, cb);
  if (a.size() < b.size()) std::swap(a, b);
  if (b.size() == 1) return {cg};

  long long tdeg_a = 0, tdeg_b = 0;
  for (const auto& c : a)
    if (!c.is_zero()) tdeg_a = std::max(tdeg_a, c.t_max());
  for (const auto& c : b)
    if (!c.is_zero()) tdeg_b = std::max(tdeg_b, c.t_max());
  TLaurent lead_gcd = poly_gcd_t(a.back(), b.back());
  size_t pmax = static_cast<size_t>(std::max(tdeg_a, tdeg_b));
  size_t need = static_cast<size_t>(std::min(tdeg_a, tdeg_b) + lead_gcd.t_max()) + 1;

  QP xs;
  std::vector<QP> vals;
  size_t zsize = 0;
  int failures = 0;
  std::vector<Rat> pw(pmax + 1);
  for (long long tau = 1;; ++tau) {
    pw[0] = 1;
    Rat x(tau);
    for (size_t k = 1; k <= pmax; ++k) pw[k] = pw[k - 1] * x;
    QP fa = eval_slices(a, pw), fb = eval_slices(b, pw);
    if (fa.back() == 0 || fb.back() == 0) continue;
    QP g = qgcd_monic(std::move(fa), std::move(fb));
    if (g.size() == 1) return {cg};
    if (zsize == 0 || g.size() < zsize) {
      zsize = g.size();
      xs.clear();
      vals.clear();
    }
    if (g.size() != zsize) continue;
    Rat scale = eval_poly(lead_gcd, pw);
    for (auto& c : g) c *= scale;
    xs.push_back(x);
    vals.push_back(std::move(g));
    if (xs.size() < need) continue;

    ZP cand(zsize);
    QP ys(need);
    for (size_t j = 0; j < zsize; ++j) {
      for (size_t i = 0; i < need; ++i) ys[i] = vals[i][j];
      QP cj = interpolate(xs, ys);
      TLaurent tc;
      for (size_t k = 0; k < cj.size(); ++k)
        if (cj[k] != 0) tc += TLaurent::term(cj[k], static_cast<long long>(k));
      cand[j] = tc;
    }
    trim(cand);
    if (!cand.empty()) cand = primitive(cand);
    if (cand.size() == zsize && divides(a, cand) && divides(b, cand)) {
      for (auto& c : cand) c = c * cg;
      return cand;
    }
    xs.clear();
    vals.clear();
    zsize = 0;
    if (++failures >= 2) {
      need += need / 2 + 1;
      failures = 0;
    }
  }
}

inline ZP to_dense(const ZLaurent<TLaurent>& p) {
  ZP v;
  if (p.is_zero()) return v;
  if (p.z_min() < 0) throw structural_error("dense form needs z-order >= 0");
  v.resize(static_cast<size_t>(p.z_max()) + 1);
  for (const auto& [e, c] : p.terms()) v[static_cast<size_t>(e)] = c;
  return v;
}

inline ZLaurent<TLaurent> from_dense(const ZP& v) {
  ZLaurent<TLaurent> p;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) p += ZLaurent<TLaurent>::term(v[i], static_cast<long long>(i));
  return p;
}

inline long long t_order(const ZLaurent<TLaurent>& p) {
  bool seen = false;
  long long m = 0;
  for (const auto& [e, c] : p.terms()) {
    (void)e;
    long long k = c.t_min();
    if (!seen || k < m) m = k;
    seen = true;
  }
  if (!seen) throw structural_error("zero polynomial has no t-order");
  return m;
}

}  // namespace zdetail

template <class C>
struct ratfun_canonical : std::false_type {};
template <>
struct ratfun_canonical<TLaurent> : std::true_type {};

template <CoefRing C>
class RatFun {
 public:
  RatFun() : num_(), den_(ZLaurent<C>::one()) {}
  RatFun(ZLaurent<C> num, ZLaurent<C> den) : num_(std::move(num)), den_(std::move(den)) {
    reduce();
  }
  static RatFun one() { return from_poly(ZLaurent<C>::one()); }
  static RatFun from_poly(ZLaurent<C> p) { return RatFun(std::move(p), ZLaurent<C>::one()); }

  const ZLaurent<C>& num() const { return num_; }
  const ZLaurent<C>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }

  RatFun inverse() const {
    if (num_.is_zero()) throw structural_error("inverse of zero");
    RatFun out;
    out.num_ = den_;
    out.den_ = num_;
    if constexpr (ratfun_canonical<C>::value) out.normalize_units();
    return out;
  }
  friend RatFun operator*(const RatFun& x, const RatFun& y) {
    if constexpr (ratfun_canonical<C>::value) {
      // both factors are reduced, so only cross pairs can share factors;
      // cancelling those keeps the product reduced with no full-size gcd
      if (x.num_.is_zero() || y.num_.is_zero()) return RatFun();
      ZLaurent<C> xn = x.num_, xd = x.den_, yn = y.num_, yd = y.den_;
      cancel_common(xn, yd);
      cancel_common(yn, xd);
      RatFun out;
      out.num_ = xn * yn;
      out.den_ = xd * yd;
      out.normalize_units();
      return out;
    } else {
      return RatFun(x.num_ * y.num_, x.den_ * y.den_);
    }
  }
  friend RatFun operator/(const RatFun& x, const RatFun& y) { return x * y.inverse(); }
  friend RatFun operator+(const RatFun& x, const RatFun& y) {
    return RatFun(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
  }
  friend RatFun operator-(const RatFun& x, const RatFun& y) {
    return RatFun(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
  }
  friend RatFun operator-(const RatFun& x) { return RatFun(ZLaurent<C>() - x.num_, x.den_); }
  RatFun pow(long long k) const {
    RatFun base = k >= 0 ? *this : inverse();
    long long m = k >= 0 ? k : -k;
    RatFun acc = one();
    for (long long i = 0; i < m; ++i) acc = acc * base;
    return acc;
  }

  friend bool operator==(const RatFun& x, const RatFun& y) {
    if constexpr (ratfun_canonical<C>::value) {
      return x.num_ == y.num_ && x.den_ == y.den_;
    } else {
      return x.num_ * y.den_ == y.num_ * x.den_;
    }
  }
  friend bool operator!=(const RatFun& x, const RatFun& y) { return !(x == y); }

  // s -> -s
  RatFun subst_neg_s() const { return RatFun(num_.negated_z(), den_.negated_z()); }
  // s -> s + c; every z^e picks up q^(-c e)
  RatFun subst_shift(Half c) const {
    auto f = [&c](long long e, const C& co) { return co.scaled_t(-c.twice * e); };
    return RatFun(num_.transformed(f), den_.transformed(f));
  }

  // Laurent expansion around z = 0 through z^D; the lowest denominator
  // coefficient must be a unit.
  ZLaurent<C> series(long long D) const {
    if (num_.is_zero()) return {};
    long long d0 = den_.z_min();
    C ic0 = den_.coeff(d0).inverted_unit();
    long long n0 = num_.z_min() - d0;
    ZLaurent<C> out;
    for (long long e = n0; e <= D; ++e) {
      C acc = num_.coeff(e + d0);
      for (long long j = n0; j < e; ++j) {
        C sj = out.coeff(j);
        if (sj.is_zero()) continue;
        C dk = den_.coeff(e - j + d0);
        if (dk.is_zero()) continue;
        acc = acc - sj * dk;
      }
      acc = acc * ic0;
      if (!acc.is_zero()) out += ZLaurent<C>::term(acc, e);
    }
    return out;
  }

  std::string str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

 private:
  ZLaurent<C> num_, den_;

  // Divide gcd(p, q) out of both; p and q need z_min >= 0.
  static void cancel_common(ZLaurent<C>& p, ZLaurent<C>& q) {
    if (p.is_zero() || q.is_zero()) return;
    long long jp = zdetail::t_order(p), jq = zdetail::t_order(q);
    auto ps = p.transformed([jp](long long, const C& c) { return c.shifted(-jp); });
    auto qs = q.transformed([jq](long long, const C& c) { return c.shifted(-jq); });
    zdetail::ZP a = zdetail::to_dense(ps), b = zdetail::to_dense(qs);
    zdetail::ZP g = zdetail::zgcd(a, b);
    if (g.size() == 1 && g[0].is_monomial()) return;
    ps = zdetail::from_dense(zdetail::zdivexact(a, g));
    qs = zdetail::from_dense(zdetail::zdivexact(b, g));
    p = ps.transformed([jp](long long, const C& c) { return c.shifted(jp); });
    q = qs.transformed([jq](long long, const C& c) { return c.shifted(jq); });
  }

  // Unit normalization alone: z-shift, t-shift, lowest denominator
  // coefficient scaled to 1. Assumes num and den are already coprime.
  void normalize_units() {
    if (num_.is_zero()) {
      den_ = ZLaurent<C>::one();
      return;
    }
    long long k = std::min(num_.z_min(), den_.z_min());
    if (k != 0) {
      num_ = num_.shifted(-k);
      den_ = den_.shifted(-k);
    }
    long long j = std::min(zdetail::t_order(num_), zdetail::t_order(den_));
    if (j != 0) {
      num_ = num_.transformed([j](long long, const C& c) { return c.shifted(-j); });
      den_ = den_.transformed([j](long long, const C& c) { return c.shifted(-j); });
    }
    Rat r = den_.coeff(den_.z_min()).lead_low();
    if (r != 1) {
      Rat inv = Rat(1) / r;
      num_ = num_.scaled(C(inv));
      den_ = den_.scaled(C(inv));
    }
  }

  void reduce() {
    if (den_.is_zero()) throw structural_error("zero denominator");
    if (num_.is_zero()) {
      den_ = ZLaurent<C>::one();
      return;
    }
    long long k = std::min(num_.z_min(), den_.z_min());
    if (k != 0) {
      num_ = num_.shifted(-k);
      den_ = den_.shifted(-k);
    }
    if constexpr (ratfun_canonical<C>::value) canonical_reduce();
  }

  void canonical_reduce() {
    long long j = std::min(zdetail::t_order(num_), zdetail::t_order(den_));
    if (j != 0) {
      num_ = num_.transformed([j](long long, const C& c) { return c.shifted(-j); });
      den_ = den_.transformed([j](long long, const C& c) { return c.shifted(-j); });
    }
    zdetail::ZP a = zdetail::to_dense(num_), b = zdetail::to_dense(den_);
    zdetail::ZP g = zdetail::zgcd(a, b);
    bool trivial = g.size() == 1 && g[0].is_monomial() && g[0].t_min() == 0;
    if (!trivial) {
      num_ = zdetail::from_dense(zdetail::zdivexact(a, g));
      den_ = zdetail::from_dense(zdetail::zdivexact(b, g));
    }
    long long j2 = std::min(zdetail::t_order(num_), zdetail::t_order(den_));
    if (j2 != 0) {
      num_ = num_.transformed([j2](long long, const C& c) { return c.shifted(-j2); });
      den_ = den_.transformed([j2](long long, const C& c) { return c.shifted(-j2); });
    }
    Rat r = den_.coeff(den_.z_min()).lead_low();
    if (r != 1) {
      Rat inv = Rat(1) / r;
      num_ = num_.scaled(C(inv));
      den_ = den_.scaled(C(inv));
    }
  }
};

using TRatFun = RatFun<TLaurent>;

// 1 / (1 - q^(-b) z^a), the local factor attached to a*s + b.
inline TRatFun zeta_local(AffineExp e) {
  if (e.a == 0 && e.b.twice == 0)
    throw pole_error("local factor has a pole at exponent 0");
  ZLaurent<TLaurent> den =
      ZLaurent<TLaurent>::one() - ZLaurent<TLaurent>::term(TLaurent::q_pow(-e.b), e.a);
  return TRatFun(ZLaurent<TLaurent>::one(), den);
}

inline TRatFun gamma_local(AffineExp e) {
  return zeta_local(e.one_minus()) / zeta_local(e);
}

}  // namespace qzeta
