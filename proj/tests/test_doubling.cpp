#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "qzeta/doubling.hpp"
#include "qzeta/xlaurent.hpp"

using namespace qzeta;

namespace {

TRatFun zl(long long a, long long b_twice) { return zeta_local({a, Half{b_twice}}); }
TRatFun gl(long long a, long long b_twice) { return gamma_local({a, Half{b_twice}}); }

TRatFun one_minus_factor(int sign, Half b, long long zexp) {
  ZLaurent<TLaurent> den = ZLaurent<TLaurent>::one() -
                           ZLaurent<TLaurent>::term(TLaurent::q_pow(-b).scaled(Rat(sign)), zexp);
  return TRatFun(ZLaurent<TLaurent>::one(), den);
}

}  // namespace

TEST_CASE("denominator products by case", "[doubling]") {
  REQUIRE(d_H({DoublingKind::symplectic, 2, {}}) == zl(1, 3) * zl(2, 2));
  REQUIRE(d_H({DoublingKind::symplectic, 4, {}}) == zl(1, 5) * zl(2, 2) * zl(2, 6));
  REQUIRE(d_H({DoublingKind::orthogonal_even, 2, {}}) == zl(2, 2));
  REQUIRE(d_H({DoublingKind::orthogonal_even, 4, {}}) == zl(2, 2) * zl(2, 6));
  REQUIRE(d_H({DoublingKind::orthogonal_odd, 1, {}}) == TRatFun::one());
  REQUIRE(d_H({DoublingKind::orthogonal_odd, 3, {}}) == zl(2, 4));
  REQUIRE(d_H({DoublingKind::orthogonal_odd, 5, {}}) == zl(2, 4) * zl(2, 8));
  REQUIRE(d_H({DoublingKind::hermitian, 1, {}}) == zl(2, 2));
  REQUIRE(d_H({DoublingKind::hermitian, 2, {}}) ==
          one_minus_factor(-1, Half::whole(1), 2) * zl(2, 4));

  SECTION("character twists") {
    UnramChar half_shift{Half{1}, 1};
    REQUIRE(d_H({DoublingKind::symplectic, 2, half_shift}) == zl(1, 4) * zl(2, 4));
    UnramChar quad{Half{0}, -1};
    REQUIRE(d_H({DoublingKind::symplectic, 2, quad}) ==
            one_minus_factor(-1, Half{3}, 1) * zl(2, 2));
    REQUIRE(d_H({DoublingKind::orthogonal_even, 2, quad}) == zl(2, 2));
  }
  SECTION("parity is enforced") {
    REQUIRE_THROWS_AS(d_H({DoublingKind::symplectic, 3, {}}), structural_error);
    REQUIRE_THROWS_AS(d_H({DoublingKind::orthogonal_even, 3, {}}), structural_error);
    REQUIRE_THROWS_AS(d_H({DoublingKind::orthogonal_odd, 2, {}}), structural_error);
    REQUIRE_THROWS_AS(d_H({DoublingKind::symplectic, 0, {}}), structural_error);
  }
}

TEST_CASE("numerator products and the denominator shift", "[doubling]") {
  REQUIRE(a_H(DoublingKind::symplectic, 2) == zl(2, 0) * zl(1, -1));
  REQUIRE(a_H(DoublingKind::orthogonal_even, 2) == zl(2, 0));
  REQUIRE(a_H(DoublingKind::orthogonal_even, 4) == zl(2, -4) * zl(2, 0));
  REQUIRE(a_H(DoublingKind::orthogonal_odd, 1) == TRatFun::one());
  REQUIRE(a_H(DoublingKind::orthogonal_odd, 3) == zl(2, -2));

  // even symmetric case: the numerator is the denominator shifted by (n-1)/2
  for (long long n = 2; n <= 8; n += 2) {
    TRatFun dh = d_H({DoublingKind::orthogonal_even, n, {}});
    REQUIRE(a_H(DoublingKind::orthogonal_even, n) == dh.subst_shift(Half{-(n - 1)}));
  }
  // no single shift does the same in the symplectic case
  {
    TRatFun dh = d_H({DoublingKind::symplectic, 2, {}});
    REQUIRE_FALSE(a_H(DoublingKind::symplectic, 2) == dh.subst_shift(Half{-3}));
  }
  REQUIRE_THROWS_AS(a_H(DoublingKind::hermitian, 2), structural_error);
}

TEST_CASE("intertwining scalar has matching ratio and product forms", "[doubling]") {
  REQUIRE(m_scalar(DoublingKind::symplectic, 2) ==
          zl(2, 0) * zl(1, -1) / (zl(2, 2) * zl(1, 3)));
  REQUIRE(m_scalar(DoublingKind::orthogonal_even, 2) == zl(2, 0) / zl(2, 2));
  // the agreement of both computations is asserted inside the call
  for (long long n = 2; n <= 8; n += 2) {
    REQUIRE_NOTHROW(m_scalar(DoublingKind::symplectic, n));
    REQUIRE_NOTHROW(m_scalar(DoublingKind::orthogonal_even, n));
  }
  for (long long n = 1; n <= 7; n += 2) REQUIRE_NOTHROW(m_scalar(DoublingKind::orthogonal_odd, n));
}

TEST_CASE("normalizing factor equals its gamma product", "[doubling]") {
  REQUIRE(eta_factor(DoublingKind::symplectic, 2) == gl(2, 0) * gl(1, -1));
  REQUIRE(eta_factor(DoublingKind::orthogonal_even, 2) == gl(2, 0));
  REQUIRE(eta_factor(DoublingKind::orthogonal_odd, 3) == gl(2, -2));
  REQUIRE(eta_factor(DoublingKind::orthogonal_odd, 1) == TRatFun::one());
  for (long long n = 2; n <= 8; n += 2) {
    REQUIRE_NOTHROW(eta_factor(DoublingKind::symplectic, n));
    REQUIRE_NOTHROW(eta_factor(DoublingKind::orthogonal_even, n));
  }
  for (long long n = 1; n <= 7; n += 2) REQUIRE_NOTHROW(eta_factor(DoublingKind::orthogonal_odd, n));
}

TEST_CASE("scalar relations among m, eta, d_H", "[doubling]") {
  auto run = [](DoublingKind k, long long n) {
    TRatFun m = m_scalar(k, n);
    TRatFun eta = eta_factor(k, n);
    TRatFun dh = d_H({k, n, {}});
    INFO(kind_name(k) << " n=" << n);
    REQUIRE(m * eta * dh / dh.subst_neg_s() == TRatFun::one());
    TRatFun m_neg = m.subst_neg_s();
    TRatFun eta_neg = eta.subst_neg_s();
    REQUIRE(m * eta * m_neg * eta_neg == TRatFun::one());
  };
  for (long long n = 2; n <= 8; n += 2) {
    run(DoublingKind::symplectic, n);
    run(DoublingKind::orthogonal_even, n);
  }
  for (long long n = 1; n <= 7; n += 2) run(DoublingKind::orthogonal_odd, n);
}

TEST_CASE("gamma chain for standard L-factors", "[doubling]") {
  SECTION("degenerate rank-zero case") {
    GammaChain<TLaurent> g =
        unramified_gamma_std<TLaurent>({DoublingKind::orthogonal_odd, 1, {}}, TRatFun::one(),
                                       TRatFun::one());
    REQUIRE(g.gamma == TRatFun::one());
    REQUIRE(g.big_gamma == TRatFun::one());
  }
  SECTION("value mode against abelian gamma factors") {
    std::vector<TLaurent> sat =
        std_satake_multiset(DoublingKind::orthogonal_even, 2, {TLaurent::q_pow(Half::whole(1))});
    TRatFun L = lfactor_from_values(sat);
    REQUIRE(L == zl(1, -2) * zl(1, 2));
    GammaChain<TLaurent> g =
        unramified_gamma_std<TLaurent>({DoublingKind::orthogonal_even, 2, {}}, L, L);
    REQUIRE(g.gamma == gl(1, -2) * gl(1, 2));
  }
  SECTION("self-duality of the expanded multiset") {
    std::vector<TLaurent> sat = std_satake_multiset(
        DoublingKind::symplectic, 4,
        {TLaurent::q_pow(Half{3}), TLaurent::q_pow(Half{-1}).scaled(Rat(-1))});
    std::vector<TLaurent> inv;
    for (const TLaurent& b : sat) inv.push_back(b.inverted_unit());
    REQUIRE(lfactor_from_values(sat) == lfactor_from_values(inv));
  }
  SECTION("functional-equation square is one") {
    std::vector<TLaurent> sat =
        std_satake_multiset(DoublingKind::symplectic, 2, {TLaurent::q_pow(Half{3})});
    TRatFun L = lfactor_from_values(sat);
    GammaChain<TLaurent> g =
        unramified_gamma_std<TLaurent>({DoublingKind::symplectic, 2, {}}, L, L);
    TRatFun reflected = g.gamma.subst_shift(Half::whole(1)).subst_neg_s();
    REQUIRE(g.gamma * reflected == TRatFun::one());
  }
  SECTION("formal mode over Satake variables") {
    for (auto [kind, n] : {std::pair{DoublingKind::symplectic, 2LL},
                           {DoublingKind::symplectic, 4LL},
                           {DoublingKind::orthogonal_even, 2LL},
                           {DoublingKind::orthogonal_even, 4LL},
                           {DoublingKind::orthogonal_odd, 3LL},
                           {DoublingKind::orthogonal_odd, 5LL}}) {
      WeightList wl = doubled_group_std_weights(kind, n);
      RatFun<XLaurent> L = standard_lfactor(wl);
      INFO(kind_name(kind) << " n=" << n);
      GammaChain<XLaurent> g = unramified_gamma_std<XLaurent>({kind, n, {}}, L, L);
      RatFun<XLaurent> reflected = g.gamma.subst_shift(Half::whole(1)).subst_neg_s();
      REQUIRE(g.gamma * reflected == RatFun<XLaurent>::one());
    }
  }
  SECTION("value grid keeps the chain consistent") {
    std::vector<TLaurent> betas = {TLaurent::q_pow(Half::whole(2)),
                                   TLaurent::q_pow(Half{-3}),
                                   TLaurent::term(Rat(1), 1),
                                   TLaurent::q_pow(Half{0})};
    for (auto [kind, n] : {std::pair{DoublingKind::symplectic, 6LL},
                           {DoublingKind::orthogonal_even, 6LL},
                           {DoublingKind::orthogonal_odd, 7LL}}) {
      long long rank = kind == DoublingKind::orthogonal_odd ? (n - 1) / 2 : n / 2;
      std::vector<TLaurent> use(betas.begin(), betas.begin() + rank);
      TRatFun L = lfactor_from_values(std_satake_multiset(kind, n, use));
      INFO(kind_name(kind) << " n=" << n);
      REQUIRE_NOTHROW(unramified_gamma_std<TLaurent>({kind, n, {}}, L, L));
    }
  }
  REQUIRE_THROWS_AS(unramified_gamma_std<TLaurent>({DoublingKind::hermitian, 2, {}},
                                                   TRatFun::one(), TRatFun::one()),
                    structural_error);
}

TEST_CASE("basic function scalar fixed point", "[doubling]") {
  BasicFunctionReport sp2 = doubling_basic_and_fixedpoint(DoublingKind::symplectic, 2);
  REQUIRE(sp2.fixed_point_holds);
  REQUIRE(sp2.lhs == sp2.rhs);
  REQUIRE(sp2.rhs == zl(-1, 4) * zl(-2, 4));
  REQUIRE(sp2.basic_scalar == zl(1, 2) * zl(2, 0));

  BasicFunctionReport oe2 = doubling_basic_and_fixedpoint(DoublingKind::orthogonal_even, 2);
  REQUIRE(oe2.rhs == zl(-2, 4));
  REQUIRE(oe2.fixed_point_holds);

  for (long long n = 2; n <= 8; n += 2) {
    REQUIRE(doubling_basic_and_fixedpoint(DoublingKind::symplectic, n).fixed_point_holds);
    REQUIRE(doubling_basic_and_fixedpoint(DoublingKind::orthogonal_even, n).fixed_point_holds);
  }
  for (long long n = 1; n <= 7; n += 2)
    REQUIRE(doubling_basic_and_fixedpoint(DoublingKind::orthogonal_odd, n).fixed_point_holds);
}

TEST_CASE("abelian factors and modulus exponents", "[doubling]") {
  REQUIRE_THROWS_AS(abelian_lfactor({0, Half{0}}, UnramChar{}), pole_error);
  REQUIRE(abelian_lfactor({0, Half{0}}, UnramChar{Half{0}, -1}) ==
          TRatFun::from_poly(ZLaurent<TLaurent>::term(TLaurent(Rat(1, 2)), 0)));
  REQUIRE(abelian_lfactor({1, Half{0}}, UnramChar{}) == zl(1, 0));

  REQUIRE(modulus_exponent(DoublingKind::symplectic, 2) == 3);
  REQUIRE(modulus_exponent(DoublingKind::symplectic, 4) == 5);
  REQUIRE(modulus_exponent(DoublingKind::orthogonal_even, 4) == 3);
  REQUIRE(modulus_exponent(DoublingKind::orthogonal_odd, 3) == 2);
  REQUIRE(modulus_exponent(DoublingKind::hermitian, 3) == 3);
}
