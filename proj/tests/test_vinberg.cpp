#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <vector>

#include "qzeta/root_datum.hpp"
#include "qzeta/vinberg.hpp"

using namespace qzeta;

namespace {

// Enumerate the finite group sum Z/d_i directly and intersect with the kernel
// of b -> sum(b_i cls_i / d_i) mod 1; report order and exponent.
struct BruteKernel {
  long long order = 0;
  long long exponent = 1;
};

BruteKernel brute_kernel(const CenterClass& cc) {
  size_t r = cc.factors.size();
  long long big = 1;
  for (long long f : cc.factors) big = std::lcm(big, f);
  std::vector<long long> num(r);
  for (size_t i = 0; i < r; ++i) num[i] = cc.cls[i] * (big / cc.factors[i]);

  std::vector<long long> z(r, 0);
  BruteKernel out;
  while (true) {
    long long pair = 0;
    for (size_t i = 0; i < r; ++i) pair += z[i] * num[i];
    if (pair % big == 0) {
      ++out.order;
      long long ord = 1;
      for (size_t i = 0; i < r; ++i) ord = std::lcm(ord, cc.factors[i] / std::gcd(cc.factors[i], z[i]));
      out.exponent = std::max(out.exponent, ord);
    }
    size_t k = 0;
    while (k < r && ++z[k] == cc.factors[k]) z[k++] = 0;
    if (k == r) break;
  }
  return out;
}

void check_against_brute(const RootDatum& d, const std::vector<long long>& lam) {
  DualGroupDesc dg = unit_group_dual(d, lam);
  BruteKernel bk = brute_kernel(center_class(d, lam));
  long long order = 1, expo = 1;
  for (long long f : dg.kernel_factors) {
    order *= f;
    expo = std::max(expo, f);
  }
  INFO(d.name() << " lambda " << lam[0]);
  REQUIRE(order == bk.order);
  REQUIRE(expo == bk.exponent);
}

}  // namespace

TEST_CASE("centers of the simply connected covers", "[vinberg]") {
  using V = std::vector<long long>;
  REQUIRE(center_of_simply_connected(build_root_datum(CartanType::A, 1)) == V{2});
  REQUIRE(center_of_simply_connected(build_root_datum(CartanType::A, 2)) == V{3});
  REQUIRE(center_of_simply_connected(build_root_datum(CartanType::B, 2)) == V{2});
  REQUIRE(center_of_simply_connected(build_root_datum(CartanType::B, 3)) == V{2});
  REQUIRE(center_of_simply_connected(build_root_datum(CartanType::C, 2)) == V{2});
  REQUIRE(center_of_simply_connected(build_root_datum(CartanType::C, 3)) == V{2});
  REQUIRE(center_of_simply_connected(build_root_datum(CartanType::D, 4)) == V{2, 2});
  REQUIRE(center_of_simply_connected(build_root_datum(CartanType::D, 5)) == V{4});
  REQUIRE(center_of_simply_connected(build_root_datum(CartanType::D, 6)) == V{2, 2});
  for (int n = 2; n <= 7; ++n)
    REQUIRE(center_of_simply_connected(build_root_datum(CartanType::A, n - 1)) == V{n});
}

TEST_CASE("rank-one unit group dichotomy", "[vinberg]") {
  RootDatum d = build_root_datum(CartanType::A, 1);
  for (long long n = 1; n <= 10; ++n) {
    DualGroupDesc dg = unit_group_dual(d, {n});
    INFO("n = " << n);
    REQUIRE(dg.central_torus_rank == 1);
    REQUIRE(dg.center_factors == std::vector<long long>{2});
    if (n % 2 == 0) {
      REQUIRE(dg.kernel_factors == std::vector<long long>{2});
      REQUIRE(dg.glue_order == 1);
      REQUIRE(dg.label == "GL1 x SL2");
    } else {
      REQUIRE(dg.kernel_factors.empty());
      REQUIRE(dg.glue_order == 2);
      REQUIRE(dg.label == "GL2");
    }
    check_against_brute(d, {n});
  }
  REQUIRE_THROWS_AS(unit_group_dual(d, {-1}), structural_error);
}

TEST_CASE("unit groups across the classical types", "[vinberg]") {
  SECTION("symplectic rank two") {
    RootDatum d = build_root_datum(CartanType::C, 2);
    DualGroupDesc a = unit_group_dual(d, {1, 0});
    REQUIRE(a.glue_order == 2);
    REQUIRE(a.kernel_factors.empty());
    REQUIRE(a.label == "(GL1 x Sp4)/(Z/2)");
    DualGroupDesc b = unit_group_dual(d, {0, 1});
    REQUIRE(b.glue_order == 1);
    REQUIRE(b.kernel_factors == std::vector<long long>{2});
    REQUIRE(b.label == "GL1 x Sp4");
  }
  SECTION("odd orthogonal rank two") {
    RootDatum d = build_root_datum(CartanType::B, 2);
    DualGroupDesc a = unit_group_dual(d, {1, 0});
    REQUIRE(a.label == "GL1 x Spin5");
    DualGroupDesc b = unit_group_dual(d, {0, 1});
    REQUIRE(b.glue_order == 2);
    REQUIRE(b.label == "(GL1 x Spin5)/(Z/2)");
  }
  SECTION("special linear rank two") {
    RootDatum d = build_root_datum(CartanType::A, 2);
    DualGroupDesc a = unit_group_dual(d, {1, 0});
    REQUIRE(a.glue_order == 3);
    REQUIRE(a.kernel_factors.empty());
    REQUIRE(a.label == "GL3");
    DualGroupDesc b = unit_group_dual(d, {1, 1});
    REQUIRE(b.glue_order == 1);
    REQUIRE(b.kernel_factors == std::vector<long long>{3});
    REQUIRE(b.label == "GL1 x SL3");
  }
  SECTION("special linear rank three, middle weight") {
    RootDatum d = build_root_datum(CartanType::A, 3);
    DualGroupDesc a = unit_group_dual(d, {0, 1, 0});
    REQUIRE(a.glue_order == 2);
    REQUIRE(a.kernel_factors == std::vector<long long>{2});
    REQUIRE(a.label == "(GL1 x SL4)/(Z/2)");
  }
  SECTION("even orthogonal rank four") {
    RootDatum d = build_root_datum(CartanType::D, 4);
    DualGroupDesc a = unit_group_dual(d, {1, 0, 0, 0});
    REQUIRE(a.glue_order == 2);
    REQUIRE(a.kernel_factors == std::vector<long long>{2});
    REQUIRE(a.label == "(GL1 x Spin8)/(Z/2)");
    DualGroupDesc b = unit_group_dual(d, {2, 0, 0, 0});
    REQUIRE(b.glue_order == 1);
    REQUIRE(b.kernel_factors == std::vector<long long>{2, 2});
    REQUIRE(b.label == "GL1 x Spin8");
  }
  SECTION("even orthogonal rank five") {
    RootDatum d = build_root_datum(CartanType::D, 5);
    DualGroupDesc v = unit_group_dual(d, {1, 0, 0, 0, 0});
    REQUIRE(v.glue_order == 2);
    REQUIRE(v.kernel_factors == std::vector<long long>{2});
    REQUIRE(v.label == "(GL1 x Spin10)/(Z/2)");
    DualGroupDesc s = unit_group_dual(d, {0, 0, 0, 0, 1});
    REQUIRE(s.glue_order == 4);
    REQUIRE(s.kernel_factors.empty());
    REQUIRE(s.label == "(GL1 x Spin10)/(Z/4)");
  }
  SECTION("kernel order and exponent against enumeration") {
    for (CartanType t : {CartanType::A, CartanType::B, CartanType::C, CartanType::D}) {
      for (int rank = (t == CartanType::D ? 4 : 1); rank <= 5; ++rank) {
        if (t == CartanType::B && rank < 2) continue;
        if (t == CartanType::C && rank < 2) continue;
        RootDatum d = build_root_datum(t, rank);
        std::vector<long long> lam(static_cast<size_t>(rank), 0);
        for (int j = 0; j < rank; ++j) {
          lam[static_cast<size_t>(j)] = 1;
          check_against_brute(d, lam);
          lam[static_cast<size_t>(j)] = 2;
          check_against_brute(d, lam);
          lam[static_cast<size_t>(j)] = 0;
        }
      }
    }
  }
}

TEST_CASE("center class only sees the weight modulo roots", "[vinberg]") {
  for (auto [t, rank] : {std::pair{CartanType::A, 2}, {CartanType::B, 2}, {CartanType::C, 3},
                         {CartanType::D, 4}, {CartanType::D, 5}}) {
    RootDatum d = build_root_datum(t, rank);
    auto cm = d.cartan_matrix();
    std::vector<long long> lam(static_cast<size_t>(rank));
    for (int i = 0; i < rank; ++i) lam[static_cast<size_t>(i)] = (i * 7 + 3) % 5;
    CenterClass base = center_class(d, lam);
    for (int j = 0; j < rank; ++j) {
      std::vector<long long> shifted = lam;
      for (int i = 0; i < rank; ++i) shifted[static_cast<size_t>(i)] += cm[i][j];
      CenterClass moved = center_class(d, shifted);
      REQUIRE(moved.cls == base.cls);
      REQUIRE(moved.factors == base.factors);
    }
  }
  // dominant representatives of one class get the same answer end to end
  RootDatum a2 = build_root_datum(CartanType::A, 2);
  DualGroupDesc x = unit_group_dual(a2, {1, 0});
  DualGroupDesc y = unit_group_dual(a2, {2, 1});  // shifted by the highest root
  REQUIRE(x.kernel_factors == y.kernel_factors);
  REQUIRE(x.glue_order == y.glue_order);
  REQUIRE(x.label == y.label);
}

TEST_CASE("symmetric power determinant monoid membership", "[vinberg]") {
  using M = std::vector<std::vector<Rat>>;
  MonoidDesc d2 = sym_power_monoid(2);
  REQUIRE(d2.defining_equation == "a^2 = det(m)");
  REQUIRE(d2.abelianization.row == std::vector<long long>({1, 1}));
  REQUIRE(d2.unit_degree == 2);
  M id = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  for (long long n = 1; n <= 5; ++n) REQUIRE(sym_power_monoid(n).member(Rat(1), id));
  REQUIRE(d2.member(Rat(2), {{Rat(2), Rat(0)}, {Rat(0), Rat(2)}}));
  REQUIRE_FALSE(d2.member(Rat(2), {{Rat(1), Rat(0)}, {Rat(0), Rat(2)}}));
  REQUIRE(d2.member(Rat(1, 2), {{Rat(1, 2), Rat(0)}, {Rat(0), Rat(1, 2)}}));
  REQUIRE(sym_power_monoid(3).member(Rat(2), {{Rat(4), Rat(0)}, {Rat(0), Rat(2)}}));
  REQUIRE(d2.abelianization.apply({3, 4}) == 7);
  REQUIRE_THROWS_AS(d2.member(Rat(1), M{{Rat(1)}}), structural_error);
  REQUIRE_THROWS_AS(sym_power_monoid(0), structural_error);
}

TEST_CASE("doubling unit grading", "[vinberg]") {
  for (long long n = 1; n <= 8; ++n) {
    DoublingUnits u = doubling_monoid_units(n);
    REQUIRE(u.central_degree() == n);
    REQUIRE(u.grading(u.central_cocharacter(), {}) == n);
    if (n >= 2) {
      std::vector<long long> traceless(static_cast<size_t>(n), 0);
      traceless[0] = 1;
      traceless[1] = -1;
      REQUIRE(u.grading(traceless, {0, 0}) == 0);
    }
    DoublingUnits flipped = doubling_monoid_units(n, true);
    REQUIRE(flipped.central_degree() == -n);
    REQUIRE(flipped.grading(flipped.central_cocharacter(), {}) == -n);
  }
  REQUIRE(doubling_monoid_units(3).description.find("det") != std::string::npos);
  REQUIRE(doubling_monoid_units(3, true).description.find("det^-1") != std::string::npos);
  REQUIRE_THROWS_AS(doubling_monoid_units(0), structural_error);
}
