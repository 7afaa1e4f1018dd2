#pragma once
// Unit groups of reductive monoids through lattice algebra: the center of a
// simply connected cover as weight-mod-root invariant factors, the dual-side
// unit group attached to a dominant cocharacter, and the two explicit monoid
// families (symmetric-power determinant and the doubling degeneration).

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "qzeta/errors.hpp"
#include "qzeta/rational.hpp"
#include "qzeta/root_datum.hpp"
#include "qzeta/smith.hpp"

namespace qzeta {

struct LatticeMap {
  std::vector<long long> row;
  long long apply(const std::vector<long long>& v) const {
    if (v.size() != row.size()) throw structural_error("cocharacter length mismatch");
    long long acc = 0;
    for (size_t i = 0; i < row.size(); ++i) acc += row[i] * v[i];
    return acc;
  }
};

namespace vindetail {

inline long long to_ll(const BigInt& b) { return b.convert_to<long long>(); }

inline IMat cartan_imat(const RootDatum& d) {
  auto m = d.cartan_matrix();
  IMat out(m.size());
  for (size_t i = 0; i < m.size(); ++i) out[i] = std::vector<BigInt>(m[i].begin(), m[i].end());
  return out;
}

// Solve a * x = b over the integers, column by column; a must be square and
// nonsingular and every entry of the solution must come out integral.
inline IMat imat_solve(const IMat& a, const IMat& b) {
  size_t n = a.size(), cols = b[0].size();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + cols));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) m[i][j] = Rat(a[i][j]);
    for (size_t j = 0; j < cols; ++j) m[i][n + j] = Rat(b[i][j]);
  }
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw structural_error("singular lattice basis");
    std::swap(m[p], m[c]);
    Rat f = m[c][c];
    for (auto& x : m[c]) x /= f;
    for (size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rat g = m[i][c];
      for (size_t j = c; j < n + cols; ++j) m[i][j] -= g * m[c][j];
    }
  }
  IMat x(n, std::vector<BigInt>(cols));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < cols; ++j) {
      if (rat_den(m[i][n + j]) != 1) throw structural_error("sublattice does not contain the target");
      x[i][j] = rat_num(m[i][n + j]);
    }
  return x;
}

inline std::string cover_name(const RootDatum& d) {
  switch (d.type) {
    case CartanType::A:
      return "SL" + std::to_string(d.rank + 1);
    case CartanType::B:
      return "Spin" + std::to_string(2 * d.rank + 1);
    case CartanType::C:
      return "Sp" + std::to_string(2 * d.rank);
    case CartanType::D:
      return "Spin" + std::to_string(2 * d.rank);
  }
  throw structural_error("unknown type");
}

}  // namespace vindetail

// Invariant factors (> 1) of the weight lattice modulo the root lattice.
inline std::vector<long long> center_of_simply_connected(const RootDatum& d) {
  std::vector<long long> out;
  for (const BigInt& f : invariant_factors(vindetail::cartan_imat(d)))
    if (f > 1) out.push_back(vindetail::to_ll(f));
  return out;
}

// Class of a weight (fundamental-weight coordinates) in the center, reported
// against the full Smith factor list d_1 | ... | d_r of the Cartan matrix.
struct CenterClass {
  std::vector<long long> factors;  // all Smith factors, including 1s
  std::vector<long long> cls;      // class entry mod each factor
};

inline CenterClass center_class(const RootDatum& d, const std::vector<long long>& lambda_fund) {
  if (lambda_fund.size() != static_cast<size_t>(d.rank))
    throw structural_error("weight coordinate count mismatch");
  Snf s = smith_normal_form(vindetail::cartan_imat(d));
  CenterClass out;
  size_t r = static_cast<size_t>(d.rank);
  out.factors.resize(r);
  out.cls.resize(r);
  for (size_t i = 0; i < r; ++i) {
    out.factors[i] = vindetail::to_ll(s.d[i][i]);
    BigInt acc = 0;
    for (size_t j = 0; j < r; ++j) acc += s.u[i][j] * lambda_fund[j];
    BigInt m = ((acc % out.factors[i]) + out.factors[i]) % out.factors[i];
    out.cls[i] = vindetail::to_ll(m);
  }
  return out;
}

struct DualGroupDesc {
  int central_torus_rank = 1;
  RootDatum cover;
  std::vector<long long> center_factors;  // invariant factors > 1 of the cover's center
  std::vector<long long> kernel_factors;  // invariant factors > 1 of the glued subgroup's kernel
  long long glue_order = 1;               // order of the image of the gluing character (cyclic)
  std::string label;
};

// Unit group attached to a dominant weight on the dual side: a one-dimensional
// central torus glued to the simply connected cover along the kernel of the
// character the weight induces on the center.
inline DualGroupDesc unit_group_dual(const RootDatum& cover, const std::vector<long long>& lambda_fund) {
  for (long long c : lambda_fund)
    if (c < 0) throw structural_error("weight must be dominant");

  CenterClass cc = center_class(cover, lambda_fund);
  size_t r = cc.factors.size();

  DualGroupDesc out;
  out.cover = cover;
  out.center_factors = center_of_simply_connected(cover);

  long long big = 1;
  for (long long f : cc.factors) big = std::lcm(big, f);
  std::vector<long long> num(r);  // character b -> sum(b_i num_i) / big  mod 1
  long long g = big;
  for (size_t i = 0; i < r; ++i) {
    num[i] = cc.cls[i] * (big / cc.factors[i]);
    g = std::gcd(g, num[i]);
  }
  out.glue_order = big / g;

  if (out.glue_order == 1) {
    out.kernel_factors = out.center_factors;
  } else {
    // column basis of {b : sum(b_i num_i) = 0 mod big} from the one-row Smith
    // form of [num_1 ... num_r big]
    IMat row(1, std::vector<BigInt>(r + 1));
    for (size_t i = 0; i < r; ++i) row[0][i] = num[i];
    row[0][r] = big;
    Snf s = smith_normal_form(row);
    IMat basis(r, std::vector<BigInt>(r));
    for (size_t i = 0; i < r; ++i)
      for (size_t k = 0; k < r; ++k) basis[i][k] = s.v[i][k + 1];
    IMat diag(r, std::vector<BigInt>(r, 0));
    for (size_t i = 0; i < r; ++i) diag[i][i] = cc.factors[i];
    IMat x = vindetail::imat_solve(basis, diag);
    for (const BigInt& f : invariant_factors(x))
      if (f > 1) out.kernel_factors.push_back(vindetail::to_ll(f));
  }

  long long center_order = 1, kernel_order = 1;
  for (long long f : out.center_factors) center_order *= f;
  for (long long f : out.kernel_factors) kernel_order *= f;
  if (kernel_order * out.glue_order != center_order)
    throw consistency_error("kernel and image orders do not multiply to the center order");

  std::string base = vindetail::cover_name(cover);
  if (out.glue_order == 1)
    out.label = "GL1 x " + base;
  else if (cover.type == CartanType::A && out.glue_order == cover.rank + 1)
    out.label = "GL" + std::to_string(cover.rank + 1);
  else
    out.label = "(GL1 x " + base + ")/(Z/" + std::to_string(out.glue_order) + ")";
  return out;
}

// {(a, m) : a^n = det m} inside the affine line times 2x2 matrices, with
// abelianization the determinant.
struct MonoidDesc {
  long long power = 1;
  std::string defining_equation;
  LatticeMap abelianization;  // determinant on the diagonal torus
  long long unit_degree = 1;  // degree of a -> a^n on the unit axis

  bool member(const Rat& a, const std::vector<std::vector<Rat>>& m) const {
    if (m.size() != 2 || m[0].size() != 2 || m[1].size() != 2)
      throw structural_error("expected a 2x2 matrix");
    Rat p = 1;
    for (long long k = 0; k < power; ++k) p *= a;
    return p == m[0][0] * m[1][1] - m[0][1] * m[1][0];
  }
};

inline MonoidDesc sym_power_monoid(long long n) {
  if (n < 1) throw structural_error("power must be positive");
  MonoidDesc d;
  d.power = n;
  d.defining_equation = "a^" + std::to_string(n) + " = det(m)";
  d.abelianization = LatticeMap{{1, 1}};
  d.unit_degree = n;
  return d;
}

// Units of the doubling degeneration: a one-dimensional abelianization times
// the group, graded by det (or its inverse under the flipped convention) on
// the block-torus cocharacters and by zero on the group side.
struct DoublingUnits {
  long long n = 1;
  bool inverse_det = false;
  std::string description;

  long long grading(const std::vector<long long>& block_cochar,
                    const std::vector<long long>& group_cochar) const {
    if (block_cochar.size() != static_cast<size_t>(n))
      throw structural_error("block cocharacter length mismatch");
    (void)group_cochar;  // killed by the grading
    long long acc = 0;
    for (long long c : block_cochar) acc += c;
    return inverse_det ? -acc : acc;
  }
  std::vector<long long> central_cocharacter() const {
    return std::vector<long long>(static_cast<size_t>(n), 1);
  }
  long long central_degree() const { return inverse_det ? -n : n; }
};

inline DoublingUnits doubling_monoid_units(long long n, bool inverse_det = false) {
  if (n < 1) throw structural_error("block size must be positive");
  DoublingUnits u;
  u.n = n;
  u.inverse_det = inverse_det;
  u.description = std::string("GL1 x G graded by ") + (inverse_det ? "det^-1" : "det") +
                  " on a size-" + std::to_string(n) + " block";
  return u;
}

}  // namespace qzeta
