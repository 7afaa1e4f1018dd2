#pragma once
// Multiplicative shell integrals against an additive character of conductor
// the integer ring, their generating series in z = q^(-s), and the closed
// rational form the series collapses to.

#include "qzeta/half.hpp"
#include "qzeta/ratfun.hpp"
#include "qzeta/tlaurent.hpp"
#include "qzeta/zlaurent.hpp"

namespace qzeta {

// Integral of the character over the additive ball of valuation >= m.
// Nontrivial on the ball once m < 0, so translation kills it.
inline TLaurent ball_transform(long long m) {
  if (m < 0) return TLaurent();
  return TLaurent::q_int(-m);
}

// Shell of exact valuation n: difference of consecutive balls.
inline TLaurent shell_transform(long long n) {
  return ball_transform(n) - ball_transform(n + 1);
}

// Sum over shells of (q^(-s0) z)^n * shell_transform(n), n = -1..N.
inline ZLaurent<TLaurent> shell_series(Half s0, long long N) {
  ZLaurent<TLaurent> out;
  for (long long n = -1; n <= N; ++n) {
    TLaurent w = shell_transform(n).shifted(-s0.twice * n);
    if (!w.is_zero()) out += ZLaurent<TLaurent>::term(w, n);
  }
  return out;
}

// Closed form of the full shell sum: the n >= 0 tail is geometric with ratio
// q^(-s0-1) z and the n = -1 shell contributes -q^(s0) z^(-1).
inline TRatFun shell_sum_closed(Half s0) {
  ZLaurent<TLaurent> geom_num = ZLaurent<TLaurent>::term(TLaurent(1) - TLaurent::q_int(-1), 0);
  ZLaurent<TLaurent> geom_den =
      ZLaurent<TLaurent>::one() -
      ZLaurent<TLaurent>::term(TLaurent::q_pow(Half{-s0.twice - 2}), 1);
  TRatFun geom(geom_num, geom_den);
  TRatFun boundary = TRatFun::from_poly(
      ZLaurent<TLaurent>::term(TLaurent::term(Rat(-1), s0.twice), -1));
  return geom + boundary;
}

}  // namespace qzeta
