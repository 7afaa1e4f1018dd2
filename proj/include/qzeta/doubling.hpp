#pragma once
// Scalar calculus of the doubled-group degenerate principal series: the
// denominator product d_H, the numerator product a_H, the intertwining scalar
// m(s) (computed two ways), the normalizing factor eta(s) (computed two ways),
// the gamma-factor chain for standard L-factors, and the basic-function
// fixed-point identity.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "qzeta/characters.hpp"
#include "qzeta/errors.hpp"
#include "qzeta/half.hpp"
#include "qzeta/ratfun.hpp"
#include "qzeta/root_datum.hpp"
#include "qzeta/tlaurent.hpp"
#include "qzeta/weight.hpp"
#include "qzeta/zlaurent.hpp"

namespace qzeta {

enum class DoublingKind { symplectic, orthogonal_even, orthogonal_odd, hermitian };

inline std::string kind_name(DoublingKind k) {
  switch (k) {
    case DoublingKind::symplectic: return "symplectic";
    case DoublingKind::orthogonal_even: return "orthogonal_even";
    case DoublingKind::orthogonal_odd: return "orthogonal_odd";
    case DoublingKind::hermitian: return "hermitian";
  }
  throw structural_error("unknown case");
}

inline DoublingKind kind_from_name(const std::string& s) {
  if (s == "symplectic") return DoublingKind::symplectic;
  if (s == "orthogonal_even") return DoublingKind::orthogonal_even;
  if (s == "orthogonal_odd") return DoublingKind::orthogonal_odd;
  if (s == "hermitian") return DoublingKind::hermitian;
  throw structural_error("unknown case name: " + s);
}

// Unramified character by its value at the uniformizer: sign * q^(-twist).
struct UnramChar {
  Half twist{};
  int sign = 1;

  bool is_trivial() const { return twist.twice == 0 && sign == 1; }
  UnramChar squared() const { return UnramChar{twist + twist, 1}; }
  friend UnramChar operator*(const UnramChar& a, const UnramChar& b) {
    return UnramChar{a.twist + b.twist, a.sign * b.sign};
  }
};

struct DoublingCase {
  DoublingKind kind = DoublingKind::symplectic;
  long long n = 2;  // size of the block Levi
  UnramChar chi{};
};

inline void validate_case(const DoublingCase& c) {
  if (c.n < 1) throw structural_error("block size must be positive");
  bool even = c.n % 2 == 0;
  switch (c.kind) {
    case DoublingKind::symplectic:
    case DoublingKind::orthogonal_even:
      if (!even) throw structural_error(kind_name(c.kind) + " needs an even block size");
      break;
    case DoublingKind::orthogonal_odd:
      if (even) throw structural_error("orthogonal_odd needs an odd block size");
      break;
    case DoublingKind::hermitian:
      break;
  }
  if (c.chi.sign != 1 && c.chi.sign != -1) throw structural_error("character sign must be +-1");
}

// Abelian L-factor 1/(1 - chi(varpi) q^(-b) z^a) at the affine exponent a*s+b.
inline TRatFun abelian_lfactor(AffineExp e, const UnramChar& chi) {
  Half b = e.b + chi.twist;
  if (chi.sign == 1) return zeta_local({e.a, b});
  ZLaurent<TLaurent> den =
      ZLaurent<TLaurent>::one() + ZLaurent<TLaurent>::term(TLaurent::q_pow(-b), e.a);
  return TRatFun(ZLaurent<TLaurent>::one(), den);
}

// The four-way product of abelian L-factors attached to the doubled group.
inline TRatFun d_H(const DoublingCase& c) {
  validate_case(c);
  TRatFun out = TRatFun::one();
  const UnramChar sq = c.chi.squared();
  switch (c.kind) {
    case DoublingKind::symplectic:
      out = out * abelian_lfactor({1, Half{c.n + 1}}, c.chi);
      for (long long j = 1; j <= c.n / 2; ++j)
        out = out * abelian_lfactor({2, Half::whole(2 * j - 1)}, sq);
      break;
    case DoublingKind::orthogonal_even:
      for (long long j = 1; j <= c.n / 2; ++j)
        out = out * abelian_lfactor({2, Half::whole(2 * j - 1)}, sq);
      break;
    case DoublingKind::orthogonal_odd:
      for (long long j = 1; j <= (c.n - 1) / 2; ++j)
        out = out * abelian_lfactor({2, Half::whole(2 * j)}, sq);
      break;
    case DoublingKind::hermitian: {
      UnramChar restricted{c.chi.twist, c.chi.sign};
      for (long long j = 1; j <= c.n; ++j) {
        UnramChar quad{Half{0}, (c.n - j) % 2 == 0 ? 1 : -1};
        out = out * abelian_lfactor({2, Half::whole(j)}, restricted * quad);
      }
      break;
    }
  }
  return out;
}

namespace dbldetail {

inline AffineExp pair_sum(long long n, long long i, long long j) {
  Weight c = Weight::basis(static_cast<size_t>(n), static_cast<size_t>(i - 1)) +
             Weight::basis(static_cast<size_t>(n), static_cast<size_t>(j - 1));
  return levi_chi_pairing(n, c);
}
inline AffineExp pair_single(long long n, long long i) {
  return levi_chi_pairing(n, Weight::basis(static_cast<size_t>(n), static_cast<size_t>(i - 1)));
}

inline void require_group_side(DoublingKind k) {
  if (k == DoublingKind::hermitian)
    throw structural_error("no group-side product data for the hermitian case");
}

}  // namespace dbldetail

// Product over consecutive-pair cocharacters, with the extra single-coordinate
// factor in the symplectic case.
inline TRatFun a_H(DoublingKind kind, long long n) {
  validate_case({kind, n, {}});
  dbldetail::require_group_side(kind);
  TRatFun out = TRatFun::one();
  for (long long l = 1; l <= n / 2; ++l)
    out = out * zeta_local(dbldetail::pair_sum(n, l, l + 1));
  if (kind == DoublingKind::symplectic) out = out * zeta_local(dbldetail::pair_single(n, 1));
  return out;
}

// Intertwining scalar: the ratio a_H/d_H and the rank-one product over the
// unipotent-radical cocharacters must agree exactly.
inline TRatFun m_scalar(DoublingKind kind, long long n) {
  validate_case({kind, n, {}});
  dbldetail::require_group_side(kind);
  TRatFun ratio = a_H(kind, n) / d_H({kind, n, {}});

  std::vector<AffineExp> above, below;
  auto gk = [&above, &below](AffineExp e) {
    above.push_back(e);
    below.push_back({e.a, e.b + Half::whole(1)});
  };
  for (long long i = 1; i <= n; ++i)
    for (long long j = i + 1; j <= n; ++j) gk(dbldetail::pair_sum(n, i, j));
  if (kind == DoublingKind::symplectic)
    for (long long i = 1; i <= n; ++i) gk(dbldetail::pair_single(n, i));
  // strike matching zeta factors before touching any polynomial arithmetic
  for (auto it = above.begin(); it != above.end();) {
    auto hit = std::find(below.begin(), below.end(), *it);
    if (hit != below.end()) {
      below.erase(hit);
      it = above.erase(it);
    } else {
      ++it;
    }
  }
  TRatFun prod = TRatFun::one();
  for (const AffineExp& e : above) prod = prod * zeta_local(e);
  for (const AffineExp& e : below) prod = prod / zeta_local(e);

  if (!(ratio == prod))
    throw consistency_error("intertwining scalar: ratio and product forms disagree");
  return ratio;
}

// Normalizing factor: the ratio d_H(-s)/a_H(s) and the gamma-product over
// consecutive pairs must agree exactly.
inline TRatFun eta_factor(DoublingKind kind, long long n) {
  validate_case({kind, n, {}});
  dbldetail::require_group_side(kind);
  TRatFun ratio = d_H({kind, n, {}}).subst_neg_s() / a_H(kind, n);

  TRatFun prod = TRatFun::one();
  for (long long l = 1; l <= n / 2; ++l)
    prod = prod * gamma_local(dbldetail::pair_sum(n, l, l + 1));
  if (kind == DoublingKind::symplectic) prod = prod * gamma_local(dbldetail::pair_single(n, 1));

  if (!(ratio == prod))
    throw consistency_error("normalizing factor: ratio and gamma-product forms disagree");
  return ratio;
}

// Standard Satake weight multiset of the dual of the group being doubled.
inline WeightList doubled_group_std_weights(DoublingKind kind, long long n) {
  validate_case({kind, n, {}});
  switch (kind) {
    case DoublingKind::symplectic:
      return dual_standard_rep(CartanType::C, static_cast<int>(n / 2)).weights;
    case DoublingKind::orthogonal_even:
      return dual_standard_rep(CartanType::D, static_cast<int>(n / 2)).weights;
    case DoublingKind::orthogonal_odd:
      return dual_standard_rep(CartanType::B, static_cast<int>((n - 1) / 2)).weights;
    case DoublingKind::hermitian:
      throw structural_error("no self-dual standard multiset for the hermitian case");
  }
  throw structural_error("unknown case");
}

// Expand rank-many Satake values into the full standard multiset.
inline std::vector<TLaurent> std_satake_multiset(DoublingKind kind, long long n,
                                                 const std::vector<TLaurent>& values) {
  validate_case({kind, n, {}});
  dbldetail::require_group_side(kind);
  long long rank = kind == DoublingKind::symplectic ? n / 2
                   : kind == DoublingKind::orthogonal_even ? n / 2
                                                           : (n - 1) / 2;
  if (static_cast<long long>(values.size()) != rank)
    throw structural_error("expected one Satake value per rank");
  std::vector<TLaurent> out;
  for (const TLaurent& b : values) {
    out.push_back(b);
    out.push_back(b.inverted_unit());
  }
  if (kind == DoublingKind::symplectic) out.push_back(TLaurent(1));
  return out;
}

inline TRatFun lfactor_from_values(const std::vector<TLaurent>& sat) {
  ZLaurent<TLaurent> den = ZLaurent<TLaurent>::one();
  for (const TLaurent& b : sat)
    den *= ZLaurent<TLaurent>::one() - ZLaurent<TLaurent>::term(b, 1);
  return TRatFun(ZLaurent<TLaurent>::one(), den);
}

// Embed a scalar rational function into a wider coefficient ring.
template <CoefRing C>
inline RatFun<C> embed_scalar(const TRatFun& f) {
  auto conv = [](const ZLaurent<TLaurent>& p) {
    ZLaurent<C> out;
    for (const auto& [e, c] : p.terms()) out += ZLaurent<C>::term(C(c), e);
    return out;
  };
  return RatFun<C>(conv(f.num()), conv(f.den()));
}

template <CoefRing C>
struct GammaChain {
  RatFun<C> gamma;      // L(1-s, dual) / L(s, pi)
  RatFun<C> big_gamma;  // the doubling coefficient at chi = 1
};

// gamma(s) as the L-factor ratio, plus the doubling coefficient recovered from
// the scalar chain; the two are tied together by the normalizing factor, and
// the tie is asserted before returning.
template <CoefRing C>
inline GammaChain<C> unramified_gamma_std(const DoublingCase& dc, const RatFun<C>& L_pi,
                                          const RatFun<C>& L_dual) {
  validate_case(dc);
  dbldetail::require_group_side(dc.kind);
  GammaChain<C> out;
  out.gamma = L_dual.subst_shift(Half::whole(1)).subst_neg_s() / L_pi;

  TRatFun m = m_scalar(dc.kind, dc.n);
  TRatFun dh = d_H({dc.kind, dc.n, {}});
  RatFun<C> dual_half = L_dual.subst_shift(Half{1}).subst_neg_s();  // L(1/2 - s, dual)
  RatFun<C> pi_half = L_pi.subst_shift(Half{1});                    // L(s + 1/2, pi)
  out.big_gamma = embed_scalar<C>(m * dh) * dual_half /
                  (embed_scalar<C>(dh.subst_neg_s()) * pi_half);

  TRatFun eta = eta_factor(dc.kind, dc.n);
  RatFun<C> recomposed =
      out.big_gamma.subst_shift(Half{-1}) * embed_scalar<C>(eta.subst_shift(Half{-1}));
  if (!(recomposed == out.gamma))
    throw consistency_error("gamma chain: normalized coefficient disagrees with the L-ratio");
  return out;
}

struct BasicFunctionReport {
  TRatFun basic_scalar;  // d_H at the half-shifted point
  TRatFun lhs;           // eta(s-1/2) m(s-1/2) d_H(s-1/2)
  TRatFun rhs;           // d_H(1/2-s)
  bool fixed_point_holds = false;
};

// The spherical vector is tracked as normalized, so the basic function is its
// scalar coefficient; the transform fixed point reduces to a scalar identity.
inline BasicFunctionReport doubling_basic_and_fixedpoint(DoublingKind kind, long long n) {
  validate_case({kind, n, {}});
  dbldetail::require_group_side(kind);
  TRatFun dh = d_H({kind, n, {}});
  BasicFunctionReport r;
  r.basic_scalar = dh.subst_shift(Half{-1});
  r.lhs = eta_factor(kind, n).subst_shift(Half{-1}) * m_scalar(kind, n).subst_shift(Half{-1}) *
          r.basic_scalar;
  r.rhs = dh.subst_shift(Half{1}).subst_neg_s();
  r.fixed_point_holds = r.lhs == r.rhs;
  if (!r.fixed_point_holds)
    throw consistency_error("basic function scalar fixed point failed");
  return r;
}

// Exponent of the block-determinant modulus character of the Siegel-type
// parabolic in the doubled group.
inline long long modulus_exponent(DoublingKind kind, long long n) {
  switch (kind) {
    case DoublingKind::symplectic: return n + 1;
    case DoublingKind::orthogonal_even:
    case DoublingKind::orthogonal_odd: return n - 1;
    case DoublingKind::hermitian: return n;
  }
  throw structural_error("unknown case");
}

}  // namespace qzeta
