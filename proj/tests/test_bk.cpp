#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "qzeta/bk.hpp"

using namespace qzeta;

namespace {

std::vector<Rat> apply_cols(const std::vector<std::vector<Rat>>& cols,
                            const std::vector<Rat>& v) {
  std::vector<Rat> out(v.size(), Rat(0));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (v[j] == 0) continue;
    for (size_t i = 0; i < out.size(); ++i) out[i] += v[j] * cols[j][i];
  }
  return out;
}

void check_triple(const NilpotentAction& a) {
  for (size_t j = 0; j < a.dim(); ++j) {
    std::vector<Rat> basis(a.dim(), Rat(0));
    basis[j] = 1;
    auto ef = apply_cols(a.raise, apply_cols(a.lower, basis));
    auto fe = apply_cols(a.lower, apply_cols(a.raise, basis));
    for (size_t i = 0; i < a.dim(); ++i) {
      Rat want = i == j ? Rat(a.weights[j]) : Rat(0);
      REQUIRE(ef[i] - fe[i] == want);
    }
  }
}

std::vector<std::string> label_strings(const std::vector<HwLine>& lines) {
  std::vector<std::string> out;
  for (const auto& ln : lines) out.push_back(root_label(ln.label));
  return out;
}

}  // namespace

TEST_CASE("principal triple satisfies the bracket relation on both models", "[bk]") {
  for (long long n = 2; n <= 6; ++n) check_triple(alternating_action(n));
  for (long long n = 1; n <= 6; ++n) check_triple(standard_action(n));

  SECTION("raising is nilpotent") {
    NilpotentAction a = alternating_action(5);
    std::vector<Rat> v(a.dim(), Rat(1));
    for (int k = 0; k < 2 * 5; ++k) v = apply_cols(a.raise, v);
    for (const Rat& x : v) REQUIRE(x == 0);
  }
  SECTION("rejects empty models") {
    REQUIRE_THROWS_AS(alternating_action(0), structural_error);
    REQUIRE_THROWS_AS(standard_action(0), structural_error);
  }
}

TEST_CASE("boundary kernel lines carry the expected labels", "[bk]") {
  SECTION("orthogonal, n = 4") {
    HwvSet hw = highest_weight_vectors(4, BkCase::orthogonal);
    REQUIRE(label_strings(hw.raising) == std::vector<std::string>{"x1+x2", "x2+x3"});
    REQUIRE(label_strings(hw.lowering) == std::vector<std::string>{"x3+x4", "x1+x4"});
    REQUIRE(hw.raising[0].s == Half::whole(2));
    REQUIRE(hw.raising[1].s == Half::whole(0));
    REQUIRE(hw.lowering[0].s == Half::whole(-2));
    REQUIRE(hw.lowering[1].s == Half::whole(0));
    for (const auto& ln : hw.raising) REQUIRE(ln.zexp == 2);
  }
  SECTION("symplectic, n = 2") {
    HwvSet hw = highest_weight_vectors(2, BkCase::symplectic);
    REQUIRE(label_strings(hw.raising) == std::vector<std::string>{"x1+x2", "x1"});
    REQUIRE(label_strings(hw.lowering) == std::vector<std::string>{"x1+x2", "x2"});
    REQUIRE(hw.raising[1].s == Half{1});
    REQUIRE(hw.raising[1].zexp == 1);
    REQUIRE(hw.lowering[1].s == Half{-1});
  }
  SECTION("line counts across the grid") {
    for (long long n = 1; n <= 10; ++n) {
      REQUIRE(highest_weight_vectors(n, BkCase::orthogonal).raising.size() ==
              static_cast<size_t>(n / 2));
      REQUIRE(highest_weight_vectors(n, BkCase::symplectic).raising.size() ==
              static_cast<size_t>(n / 2 + 1));
    }
  }
  SECTION("a kernel line may mix basis vectors") {
    NilpotentAction a = alternating_action(4);
    auto up = bkdetail::weight_kernels(a, true);
    REQUIRE(up.count(0) == 1);
    REQUIRE(up[0].size() == 1);
    // pairs are ordered (1,2),(1,3),(1,4),(2,3),(2,4),(3,4)
    const auto& v = up[0][0];
    REQUIRE(v[2] != 0);
    REQUIRE(v[3] == -v[2]);
    REQUIRE(v[0] == 0);
    REQUIRE(v[5] == 0);
  }
  SECTION("degenerate orthogonal line set is empty") {
    HwvSet hw = highest_weight_vectors(1, BkCase::orthogonal);
    REQUIRE(hw.raising.empty());
    REQUIRE(hw.lowering.empty());
  }
  REQUIRE_THROWS_AS(highest_weight_vectors(0, BkCase::orthogonal), structural_error);
}

TEST_CASE("determinant polynomials match the denominator products", "[bk]") {
  SECTION("explicit coefficients, symplectic n = 2") {
    BkSide side = bk_side(2, BkCase::symplectic);
    REQUIRE(side.d_p.coeff(0) == TLaurent(1));
    REQUIRE(side.d_p.coeff(1) == TLaurent::term(Rat(-1), -3));
    REQUIRE(side.d_p.coeff(2) == TLaurent::term(Rat(-1), -2));
    REQUIRE(side.d_p.coeff(3) == TLaurent::term(Rat(1), -5));
    REQUIRE(side.d_pbar.coeff(1) == TLaurent::term(Rat(-1), -3));
    REQUIRE(side.d_pbar.coeff(3) == TLaurent::term(Rat(1), -5));
  }
  SECTION("bridges across the grid") {
    for (long long n = 1; n <= 8; ++n) REQUIRE(det_poly_bridges(bk_side(n, BkCase::orthogonal)));
    for (long long n = 2; n <= 8; n += 2)
      REQUIRE(det_poly_bridges(bk_side(n, BkCase::symplectic)));
  }
  SECTION("the two sides substitute into each other") {
    // both bridge identities together pin the same coefficient polynomial
    for (long long n = 1; n <= 8; ++n) {
      BkSide side = bk_side(n, BkCase::orthogonal);
      REQUIRE(side.d_p == side.d_pbar);
    }
  }
  SECTION("degenerate case collapses to one") {
    BkSide side = bk_side(1, BkCase::orthogonal);
    REQUIRE(side.d_p.is_one());
    REQUIRE(side.d_pbar.is_one());
  }
}

TEST_CASE("gamma product equals the normalizing factor", "[bk]") {
  for (long long n = 1; n <= 8; ++n)
    REQUIRE_NOTHROW(gamma_product_normalizer(n, BkCase::orthogonal));
  for (long long n = 2; n <= 8; n += 2)
    REQUIRE_NOTHROW(gamma_product_normalizer(n, BkCase::symplectic));
  REQUIRE(gamma_product_normalizer(2, BkCase::orthogonal) == gamma_local({2, Half{}}));
  REQUIRE(gamma_product_normalizer(4, BkCase::symplectic) ==
          eta_factor(DoublingKind::symplectic, 4));
  REQUIRE_THROWS_AS(gamma_product_normalizer(3, BkCase::symplectic), structural_error);
}

TEST_CASE("lattice action composes additively", "[bk]") {
  DeltaSeries d0 = delta_at(0, 3, 10);
  SECTION("composition and inverses") {
    REQUIRE(lattice_action(2, lattice_action(3, d0)) == lattice_action(5, d0));
    REQUIRE(lattice_action(-2, lattice_action(2, d0)) == d0);
    REQUIRE(lattice_action(0, d0) == d0);
  }
  SECTION("unit shift picks up the modulus power") {
    DeltaSeries shifted = lattice_action(1, d0);
    REQUIRE(shifted.coeff(1) == TLaurent::term(Rat(1), 3));
    REQUIRE(shifted.coeff(0).is_zero());
  }
  SECTION("truncation clips beyond the horizon") {
    REQUIRE(lattice_action(11, d0).c.empty());
  }
}

TEST_CASE("basic function series matches the denominator expansion", "[bk]") {
  SECTION("explicit coefficients, symplectic n = 2") {
    DeltaSeries xi = xi0_series(2, BkCase::symplectic, 6);
    REQUIRE(xi.coeff(0) == TLaurent(1));
    REQUIRE(xi.coeff(1) == TLaurent(1));
    REQUIRE(xi.coeff(2) == TLaurent(1) + TLaurent::term(Rat(1), 4));
  }
  SECTION("explicit coefficients, orthogonal n = 2") {
    DeltaSeries xi = xi0_series(2, BkCase::orthogonal, 6);
    REQUIRE(xi.coeff(1).is_zero());
    REQUIRE(xi.coeff(3).is_zero());
    REQUIRE(xi.coeff(2) == TLaurent(1));
    REQUIRE(mellin_transform(xi).coeff(2) == TLaurent::term(Rat(1), -2));
  }
  SECTION("transform identity across the grid") {
    for (long long n = 1; n <= 6; ++n) {
      MellinReport rep = mellin_check(n, BkCase::orthogonal, 10);
      INFO("orthogonal n=" << n << " first mismatch " << rep.first_mismatch);
      REQUIRE(rep.ok);
    }
    for (long long n = 2; n <= 6; n += 2) {
      MellinReport rep = mellin_check(n, BkCase::symplectic, 10);
      INFO("symplectic n=" << n << " first mismatch " << rep.first_mismatch);
      REQUIRE(rep.ok);
    }
  }
}

TEST_CASE("fourier transform swaps the basic functions", "[bk]") {
  for (long long n = 1; n <= 6; ++n) {
    FourierReport rep = fourier_fixed_point(n, BkCase::orthogonal, 10);
    INFO("orthogonal n=" << n);
    REQUIRE(rep.maps_basic);
    REQUIRE(rep.involutive);
  }
  for (long long n = 2; n <= 6; n += 2) {
    FourierReport rep = fourier_fixed_point(n, BkCase::symplectic, 10);
    INFO("symplectic n=" << n);
    REQUIRE(rep.maps_basic);
    REQUIRE(rep.involutive);
  }
  SECTION("a trivial determinant ratio acts as the identity") {
    REQUIRE(fourier_on_basis(2, BkCase::orthogonal, 3, 10) == delta_at(3, 1, 10));
  }
  SECTION("basis image starts at the source index") {
    DeltaSeries img = fourier_on_basis(2, BkCase::symplectic, 2, 10);
    REQUIRE(img.coeff(0).is_zero());
    REQUIRE(img.coeff(1).is_zero());
    REQUIRE(img.coeff(2) == TLaurent(1));
  }
}

TEST_CASE("graded shift ladder lines up with the doubling modulus", "[bk]") {
  for (long long n = 1; n <= 8; ++n) {
    AppendixReport rep = appendix_shift_check(n);
    INFO("rank " << n);
    REQUIRE(rep.eta_pairing == n);
    REQUIRE(rep.modulus == 2 * n + 1);
    REQUIRE(rep.modulus == rep.doubling_modulus);
    REQUIRE(rep.layers_match);
    REQUIRE(rep.ok());
  }
  REQUIRE_THROWS_AS(appendix_shift_check(0), structural_error);
}

TEST_CASE("case names round-trip", "[bk]") {
  REQUIRE(bk_case_from_name(bk_case_name(BkCase::orthogonal)) == BkCase::orthogonal);
  REQUIRE(bk_case_from_name("sp") == BkCase::symplectic);
  REQUIRE_THROWS_AS(bk_case_from_name("unitary"), structural_error);
  REQUIRE(bk_doubling_kind(BkCase::orthogonal, 3) == DoublingKind::orthogonal_odd);
  REQUIRE(bk_doubling_kind(BkCase::orthogonal, 4) == DoublingKind::orthogonal_even);
}
