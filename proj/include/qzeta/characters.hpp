#pragma once
// Character-level calculus on weight multisets: symmetric power traces,
// standard L-factor series in z, multiset partition counts, the dual standard
// representation data, and graded layer rescaling.

#include <map>
#include <vector>

#include "qzeta/errors.hpp"
#include "qzeta/ratfun.hpp"
#include "qzeta/rep_table.hpp"
#include "qzeta/root_datum.hpp"
#include "qzeta/weight.hpp"
#include "qzeta/xlaurent.hpp"
#include "qzeta/zlaurent.hpp"

namespace qzeta {

// Torus weights of a representation, expanded with multiplicity; every entry
// carries the same number of coordinates.
struct WeightList {
  size_t nvars = 0;
  std::vector<Weight> weights;
};

inline WeightList rep_weight_list(const RepTable& rt, long long degree = 0) {
  WeightList wl;
  wl.nvars = static_cast<size_t>(rt.datum.dim);
  for (const auto& [w, m] : rt.mult) {
    Weight g = w;
    g.degree = degree;
    for (long long i = 0; i < m; ++i) wl.weights.push_back(g);
  }
  return wl;
}

inline XLaurent x_monomial(size_t nvars, const Weight& w, long long texp = 0) {
  return XLaurent::monomial(nvars, w.whole_coords(), TLaurent::term(Rat(1), texp));
}

// Trace of Sym^d through the power-sum recursion d*h_d = sum h_(d-k) p_k;
// the division by d is exact over Q and independent of the series route.
inline XLaurent sym_power_trace(const WeightList& wl, long long d) {
  if (d < 0) throw structural_error("negative symmetric power");
  std::vector<XLaurent> p;  // power sums, 1-based
  for (long long k = 1; k <= d; ++k) {
    XLaurent pk = XLaurent(0).promoted(wl.nvars);
    for (const Weight& w : wl.weights) pk += x_monomial(wl.nvars, k * w);
    p.push_back(pk);
  }
  std::vector<XLaurent> h{XLaurent(1).promoted(wl.nvars)};
  for (long long m = 1; m <= d; ++m) {
    XLaurent acc = XLaurent(0).promoted(wl.nvars);
    for (long long k = 1; k <= m; ++k)
      acc += h[static_cast<size_t>(m - k)] * p[static_cast<size_t>(k - 1)];
    h.push_back(acc.scaled(TLaurent(Rat(1) / m)));
  }
  return h[static_cast<size_t>(d)];
}

// Product over the list of 1/(1 - x^w z).
inline RatFun<XLaurent> standard_lfactor(const WeightList& wl) {
  ZLaurent<XLaurent> den = ZLaurent<XLaurent>::one();
  for (const Weight& w : wl.weights) {
    ZLaurent<XLaurent> f = ZLaurent<XLaurent>::one() -
                           ZLaurent<XLaurent>::term(x_monomial(wl.nvars, w), 1);
    den *= f;
  }
  return RatFun<XLaurent>(ZLaurent<XLaurent>::one(), den);
}

// z-coefficients of the same product computed degree by degree, one geometric
// factor at a time, never forming the rational function.
inline std::vector<XLaurent> lfactor_series_direct(const WeightList& wl, long long D) {
  std::vector<XLaurent> s(static_cast<size_t>(D) + 1, XLaurent(0).promoted(wl.nvars));
  s[0] = XLaurent(1).promoted(wl.nvars);
  for (const Weight& w : wl.weights) {
    XLaurent xw = x_monomial(wl.nvars, w);
    // multiply by 1/(1 - x^w z): prefix recurrence s'_d = s_d + x^w s'_(d-1)
    for (long long dd = 1; dd <= D; ++dd)
      s[static_cast<size_t>(dd)] += xw * s[static_cast<size_t>(dd - 1)];
  }
  return s;
}

// Number of size-d multisets over the list slots whose weights sum to target.
inline long long partition_count(const WeightList& wl, const Weight& target, long long d) {
  struct Rec {
    const std::vector<Weight>& ws;
    std::map<std::pair<size_t, std::pair<Weight, long long>>, long long> memo;
    long long run(size_t idx, const Weight& left, long long need) {
      if (need == 0) return left.is_zero_vec() && left.degree == 0 ? 1 : 0;
      if (idx == ws.size()) return 0;
      auto key = std::make_pair(idx, std::make_pair(left, need));
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
      long long acc = 0;
      Weight rem = left;
      for (long long k = 0; k <= need; ++k) {
        acc += run(idx + 1, rem, need - k);
        rem = rem - ws[idx];
      }
      memo[key] = acc;
      return acc;
    }
  } rec{wl.weights, {}};
  return rec.run(0, target, d);
}

// Coefficient of x^target z^d in the direct series.
inline TLaurent basic_constant_term(const WeightList& wl, const Weight& target, long long d) {
  if (d < 0) return TLaurent();
  std::vector<XLaurent> s = lfactor_series_direct(wl, d);
  return s[static_cast<size_t>(d)].coeff(target.whole_coords());
}

// Multiplies the degree-d layer of a graded object by q^(-c*d); composing two
// rescalings adds the exponents.
struct LayerScale {
  Half c{};
  TLaurent factor(long long d) const { return TLaurent::q_pow(Half{-c.twice * d}); }
  LayerScale then(const LayerScale& o) const { return LayerScale{Half{c.twice + o.c.twice}}; }
};

// The standard representation of the dual group in coordinates: the dual of
// type B_r is C_r (2r weights), of C_r is B_r (2r+1 weights), while A and D
// are self-dual.
struct DualStd {
  CartanType dual_type;
  int dual_rank = 0;
  WeightList weights;  // graded in degree 1
};

inline DualStd dual_standard_rep(CartanType t, int rank) {
  if (rank < 1) throw structural_error("rank must be positive");
  DualStd out;
  out.dual_rank = rank;
  auto add = [&out](Weight w) {
    w.degree = 1;
    out.weights.weights.push_back(w);
  };
  switch (t) {
    case CartanType::A: {
      out.dual_type = CartanType::A;
      out.weights.nvars = static_cast<size_t>(rank + 1);
      for (int i = 0; i <= rank; ++i) add(Weight::basis(out.weights.nvars, static_cast<size_t>(i)));
      break;
    }
    case CartanType::B: {
      out.dual_type = CartanType::C;
      out.weights.nvars = static_cast<size_t>(rank);
      for (int i = 0; i < rank; ++i) {
        add(Weight::basis(out.weights.nvars, static_cast<size_t>(i)));
        add(-Weight::basis(out.weights.nvars, static_cast<size_t>(i)));
      }
      break;
    }
    case CartanType::C: {
      out.dual_type = CartanType::B;
      out.weights.nvars = static_cast<size_t>(rank);
      for (int i = 0; i < rank; ++i) {
        add(Weight::basis(out.weights.nvars, static_cast<size_t>(i)));
        add(-Weight::basis(out.weights.nvars, static_cast<size_t>(i)));
      }
      add(Weight::zero(out.weights.nvars));
      break;
    }
    case CartanType::D: {
      out.dual_type = CartanType::D;
      out.weights.nvars = static_cast<size_t>(rank);
      for (int i = 0; i < rank; ++i) {
        add(Weight::basis(out.weights.nvars, static_cast<size_t>(i)));
        add(-Weight::basis(out.weights.nvars, static_cast<size_t>(i)));
      }
      break;
    }
  }
  return out;
}

// Embed a one-variable rational function into the x-coefficient ring.
inline RatFun<XLaurent> lift_ratfun(const TRatFun& f, size_t nvars) {
  auto conv = [nvars](const ZLaurent<TLaurent>& p) {
    ZLaurent<XLaurent> out;
    for (const auto& [e, c] : p.terms())
      out += ZLaurent<XLaurent>::term(XLaurent::constant(nvars, c), e);
    return out;
  };
  return RatFun<XLaurent>(conv(f.num()), conv(f.den()));
}

}  // namespace qzeta
