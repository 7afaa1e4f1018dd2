#pragma once
// Dual-side Fourier calculus on the abelianized unipotent stratum: the
// principal sl2 triple acting on the radical model, highest/lowest-weight
// lines and their determinant polynomials, the gamma-product normalizer, the
// graded delta basis with its lattice action, the basic-function series, the
// Fourier transform on the basis, and the graded shift ladder.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qzeta/characters.hpp"
#include "qzeta/doubling.hpp"
#include "qzeta/errors.hpp"
#include "qzeta/half.hpp"
#include "qzeta/ratfun.hpp"
#include "qzeta/root_datum.hpp"
#include "qzeta/tlaurent.hpp"
#include "qzeta/weight.hpp"
#include "qzeta/zlaurent.hpp"

namespace qzeta {

enum class BkCase { orthogonal, symplectic };

inline std::string bk_case_name(BkCase c) {
  return c == BkCase::orthogonal ? "orthogonal" : "symplectic";
}

inline BkCase bk_case_from_name(const std::string& s) {
  if (s == "orthogonal" || s == "o") return BkCase::orthogonal;
  if (s == "symplectic" || s == "sp") return BkCase::symplectic;
  throw structural_error("unknown case name: " + s);
}

inline DoublingKind bk_doubling_kind(BkCase c, long long n) {
  if (c == BkCase::symplectic) return DoublingKind::symplectic;
  return n % 2 == 0 ? DoublingKind::orthogonal_even : DoublingKind::orthogonal_odd;
}

// A module with a fixed weight basis for the principal sl2 triple of gl_n,
//   e = sum_i E_{i,i+1},  h = diag(n+1-2j),  f = sum_i i(n-i) E_{i+1,i}.
// Column j of raise/lower is the e-/f-image of basis vector j.
struct NilpotentAction {
  long long n = 0;
  std::vector<Weight> labels;
  std::vector<long long> weights;
  std::vector<std::vector<Rat>> raise;
  std::vector<std::vector<Rat>> lower;

  size_t dim() const { return labels.size(); }
};

namespace bkdetail {

inline void check_homogeneous(const NilpotentAction& a) {
  for (size_t j = 0; j < a.dim(); ++j) {
    for (size_t i = 0; i < a.dim(); ++i) {
      if (a.raise[j][i] != 0 && a.weights[i] != a.weights[j] + 2)
        throw structural_error("raising action is not weight-homogeneous");
      if (a.lower[j][i] != 0 && a.weights[i] != a.weights[j] - 2)
        throw structural_error("lowering action is not weight-homogeneous");
    }
  }
}

}  // namespace bkdetail

// Alternating matrices X = E_ij - E_ji (i < j) with X -> eX + Xe^T.
inline NilpotentAction alternating_action(long long n) {
  if (n < 1) throw structural_error("positive size required");
  NilpotentAction a;
  a.n = n;
  std::map<std::pair<long long, long long>, size_t> index;
  for (long long i = 1; i <= n; ++i)
    for (long long j = i + 1; j <= n; ++j) {
      index[{i, j}] = a.labels.size();
      a.labels.push_back(Weight::basis(static_cast<size_t>(n), static_cast<size_t>(i - 1)) +
                         Weight::basis(static_cast<size_t>(n), static_cast<size_t>(j - 1)));
      a.weights.push_back((n + 1 - 2 * i) + (n + 1 - 2 * j));
    }
  size_t d = a.dim();
  a.raise.assign(d, std::vector<Rat>(d, Rat(0)));
  a.lower.assign(d, std::vector<Rat>(d, Rat(0)));
  // entry (c,d) of the basis matrix for pair (i,j), antisymmetry included
  auto entry = [](long long i, long long j, long long c, long long dd) -> long long {
    if (c == i && dd == j) return 1;
    if (c == j && dd == i) return -1;
    return 0;
  };
  auto wmul = [&](long long k) { return k * (n - k); };
  for (const auto& [pr, col] : index) {
    auto [i, j] = pr;
    for (const auto& [target, row] : index) {
      auto [aa, bb] = target;
      // (eX + Xe^T)_{ab} = X_{a+1,b} + X_{a,b+1}
      long long up = (aa + 1 <= n ? entry(i, j, aa + 1, bb) : 0) +
                     (bb + 1 <= n ? entry(i, j, aa, bb + 1) : 0);
      if (up != 0) a.raise[col][row] = Rat(up);
      // (fX + Xf^T)_{ab} = w_{a-1} X_{a-1,b} + w_{b-1} X_{a,b-1}
      long long down = (aa >= 2 ? wmul(aa - 1) * entry(i, j, aa - 1, bb) : 0) +
                       (bb >= 2 ? wmul(bb - 1) * entry(i, j, aa, bb - 1) : 0);
      if (down != 0) a.lower[col][row] = Rat(down);
    }
  }
  bkdetail::check_homogeneous(a);
  return a;
}

// Column vectors e_i with v -> ev.
inline NilpotentAction standard_action(long long n) {
  if (n < 1) throw structural_error("positive size required");
  NilpotentAction a;
  a.n = n;
  for (long long i = 1; i <= n; ++i) {
    a.labels.push_back(Weight::basis(static_cast<size_t>(n), static_cast<size_t>(i - 1)));
    a.weights.push_back(n + 1 - 2 * i);
  }
  size_t d = a.dim();
  a.raise.assign(d, std::vector<Rat>(d, Rat(0)));
  a.lower.assign(d, std::vector<Rat>(d, Rat(0)));
  for (long long i = 1; i <= n; ++i) {
    if (i >= 2) a.raise[static_cast<size_t>(i - 1)][static_cast<size_t>(i - 2)] = Rat(1);
    if (i < n) a.lower[static_cast<size_t>(i - 1)][static_cast<size_t>(i)] = Rat(i * (n - i));
  }
  bkdetail::check_homogeneous(a);
  return a;
}

namespace bkdetail {

// Kernel basis of the linear map with the given columns, as coefficient
// vectors over the column index set.
inline std::vector<std::vector<Rat>> nullspace(const std::vector<std::vector<Rat>>& cols) {
  size_t k = cols.size();
  if (k == 0) return {};
  size_t m = cols[0].size();
  std::vector<std::vector<Rat>> rows(m, std::vector<Rat>(k, Rat(0)));
  for (size_t j = 0; j < k; ++j)
    for (size_t i = 0; i < m; ++i) rows[i][j] = cols[j][i];
  std::vector<size_t> pivot_cols;
  std::vector<bool> is_pivot(k, false);
  size_t r = 0;
  for (size_t c = 0; c < k && r < m; ++c) {
    size_t p = r;
    while (p < m && rows[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[r]);
    Rat lead = rows[r][c];
    for (size_t j = c; j < k; ++j) rows[r][j] /= lead;
    for (size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c];
      for (size_t j = c; j < k; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_cols.push_back(c);
    is_pivot[c] = true;
    ++r;
  }
  std::vector<std::vector<Rat>> out;
  for (size_t c = 0; c < k; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rat> v(k, Rat(0));
    v[c] = 1;
    for (size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -rows[i][c];
    out.push_back(std::move(v));
  }
  return out;
}

// Kernel lines of the raising (or lowering) action, grouped by h-eigenvalue.
inline std::map<long long, std::vector<std::vector<Rat>>> weight_kernels(
    const NilpotentAction& a, bool raising) {
  std::map<long long, std::vector<size_t>> blocks;
  for (size_t j = 0; j < a.dim(); ++j) blocks[a.weights[j]].push_back(j);
  std::map<long long, std::vector<std::vector<Rat>>> out;
  for (const auto& [w, idx] : blocks) {
    std::vector<std::vector<Rat>> cols;
    for (size_t j : idx) cols.push_back(raising ? a.raise[j] : a.lower[j]);
    auto null = nullspace(cols);
    if (null.empty()) continue;
    // re-express kernel vectors over the full basis index set
    std::vector<std::vector<Rat>> lifted;
    for (const auto& v : null) {
      std::vector<Rat> full(a.dim(), Rat(0));
      for (size_t p = 0; p < idx.size(); ++p) full[idx[p]] = v[p];
      lifted.push_back(std::move(full));
    }
    out[w] = std::move(lifted);
  }
  return out;
}

}  // namespace bkdetail

// One irreducible-summand boundary line: its root label, the exponent of the
// central action on it, and its h-half-eigenvalue.
struct HwLine {
  Weight label;
  long long zexp = 0;
  Half s{};
};

struct HwvSet {
  long long n = 0;
  BkCase kind{};
  std::vector<HwLine> raising;
  std::vector<HwLine> lowering;
};

namespace bkdetail {

// Extract the kernel line expected at the given weight, checking it is unique
// and supported on the stated leading basis label.
inline void take_line(const NilpotentAction& act,
                      std::map<long long, std::vector<std::vector<Rat>>>& kernels,
                      long long weight, const Weight& leading, long long zexp,
                      std::vector<HwLine>& out) {
  auto it = kernels.find(weight);
  if (it == kernels.end() || it->second.size() != 1)
    throw structural_error("kernel line at eigenvalue " + std::to_string(weight) +
                           " is missing or not unique");
  size_t lead_idx = act.dim();
  for (size_t j = 0; j < act.dim(); ++j)
    if (act.labels[j] == leading) lead_idx = j;
  if (lead_idx == act.dim() || it->second[0][lead_idx] == 0)
    throw structural_error("kernel line is not supported on " + root_label(leading));
  out.push_back({leading, zexp, Half{weight}});
  kernels.erase(it);
}

}  // namespace bkdetail

// Boundary lines of the radical model: alternating matrices for the
// orthogonal case, alternating plus standard for the symplectic case. Raising
// lines sit at labels x_l + x_{l+1} (plus x_1 on the standard part), lowering
// lines at x_{n-2l+1} + x_n (plus x_n).
inline HwvSet highest_weight_vectors(long long n, BkCase kase) {
  if (n < 1) throw structural_error("positive size required");
  HwvSet hw;
  hw.n = n;
  hw.kind = kase;
  auto pair_label = [n](long long i, long long j) {
    return Weight::basis(static_cast<size_t>(n), static_cast<size_t>(i - 1)) +
           Weight::basis(static_cast<size_t>(n), static_cast<size_t>(j - 1));
  };
  if (n >= 2) {
    NilpotentAction alt = alternating_action(n);
    auto up = bkdetail::weight_kernels(alt, true);
    auto down = bkdetail::weight_kernels(alt, false);
    for (long long l = 1; 2 * l <= n; ++l) {
      bkdetail::take_line(alt, up, 2 * (n - 2 * l), pair_label(l, l + 1), 2, hw.raising);
      bkdetail::take_line(alt, down, -2 * (n - 2 * l), pair_label(n - 2 * l + 1, n), 2,
                          hw.lowering);
    }
    if (!up.empty() || !down.empty())
      throw structural_error("unexpected kernel lines beyond the boundary set");
  }
  if (kase == BkCase::symplectic) {
    NilpotentAction std_act = standard_action(n);
    auto up = bkdetail::weight_kernels(std_act, true);
    auto down = bkdetail::weight_kernels(std_act, false);
    bkdetail::take_line(std_act, up, n - 1,
                        Weight::basis(static_cast<size_t>(n), 0), 1, hw.raising);
    bkdetail::take_line(std_act, down, 1 - n,
                        Weight::basis(static_cast<size_t>(n), static_cast<size_t>(n - 1)), 1,
                        hw.lowering);
    if (!up.empty() || !down.empty())
      throw structural_error("unexpected kernel lines beyond the boundary set");
  }
  return hw;
}

// det(1 - q^{-1} H_q^{-1} Z) over the given lines: a line with half-eigenvalue
// s and central exponent a contributes 1 - q^{-1-s} Z^a.
inline ZLaurent<TLaurent> det_poly(const std::vector<HwLine>& lines) {
  auto p = ZLaurent<TLaurent>::one();
  for (const auto& ln : lines)
    p = p * (ZLaurent<TLaurent>::one() -
             ZLaurent<TLaurent>::term(TLaurent::term(Rat(1), -2 - ln.s.twice), ln.zexp));
  return p;
}

struct BkSide {
  long long n = 0;
  BkCase kind{};
  HwvSet hwv;
  ZLaurent<TLaurent> d_p, d_pbar;
  long long mod_exp = 0;
};

// The opposite side grades by the reversed cocharacter, so its lines enter
// the determinant with reflected eigenvalues.
inline std::vector<HwLine> opposite_grading(std::vector<HwLine> lines) {
  for (auto& ln : lines) ln.s = Half{-ln.s.twice};
  return lines;
}

inline BkSide bk_side(long long n, BkCase kase) {
  BkSide s;
  s.n = n;
  s.kind = kase;
  s.hwv = highest_weight_vectors(n, kase);
  s.d_p = det_poly(s.hwv.raising);
  s.d_pbar = det_poly(opposite_grading(s.hwv.lowering));
  s.mod_exp = modulus_exponent(bk_doubling_kind(kase, n), n);
  return s;
}

// The two determinant bridges: 1/d_P at Z = q^s equals the denominator
// product at -s, and 1/d_Pbar at Z = q^{-s} equals it at s.
inline bool det_poly_bridges(const BkSide& side) {
  DoublingCase dc{bk_doubling_kind(side.kind, side.n), side.n, {}};
  TRatFun dh = d_H(dc);
  TRatFun at_p = TRatFun(ZLaurent<TLaurent>::one(), side.d_p.negated_z());
  TRatFun at_pbar = TRatFun(ZLaurent<TLaurent>::one(), side.d_pbar);
  return at_p == dh.subst_neg_s() && at_pbar == dh;
}

// Product of gamma factors over the raising lines, pinned against the
// normalizing factor of the intertwining calculus.
inline TRatFun gamma_product_normalizer(long long n, BkCase kase) {
  HwvSet hw = highest_weight_vectors(n, kase);
  TRatFun prod = TRatFun::one();
  for (const auto& ln : hw.raising) prod = prod * gamma_local({ln.zexp, Half{-ln.s.twice}});
  TRatFun eta = eta_factor(bk_doubling_kind(kase, n), n);
  if (!(prod == eta))
    throw consistency_error("gamma product disagrees with the normalizing factor");
  return prod;
}

// Coefficients on the graded delta basis, truncated at index D; mod_exp
// drives the q-power picked up by the lattice action.
struct DeltaSeries {
  long long mod_exp = 0;
  long long D = 0;
  std::map<long long, TLaurent> c;

  TLaurent coeff(long long g) const {
    auto it = c.find(g);
    return it == c.end() ? TLaurent() : it->second;
  }
  void add(long long g, const TLaurent& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = c.emplace(g, v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) c.erase(it);
    }
  }
  friend bool operator==(const DeltaSeries& a, const DeltaSeries& b) {
    return a.mod_exp == b.mod_exp && a.c == b.c;
  }
  friend bool operator!=(const DeltaSeries& a, const DeltaSeries& b) { return !(a == b); }
};

inline DeltaSeries delta_at(long long gamma, long long mod_exp, long long D) {
  DeltaSeries s;
  s.mod_exp = mod_exp;
  s.D = D;
  if (gamma <= D) s.c[gamma] = TLaurent(1);
  return s;
}

// mu . delta_gamma = q^{mu e/2} delta_{gamma + mu}
inline DeltaSeries lattice_action(long long mu, const DeltaSeries& s) {
  DeltaSeries out;
  out.mod_exp = s.mod_exp;
  out.D = s.D;
  for (const auto& [g, v] : s.c) {
    if (g + mu > s.D) continue;
    out.add(g + mu, v.shifted(mu * s.mod_exp));
  }
  return out;
}

namespace bkdetail {

using Op = ZLaurent<TLaurent>;

inline Op op_truncate(const Op& a, long long D) {
  Op out;
  for (const auto& [e, v] : a.terms())
    if (e <= D) out += Op::term(v, e);
  return out;
}

// Inverse of an operator series with constant term 1, through degree D.
inline Op op_inverse(const Op& a, long long D) {
  if (a.is_zero() || a.z_min() != 0 || !a.coeff(0).is_one())
    throw structural_error("operator series must start at 1");
  std::vector<TLaurent> inv(static_cast<size_t>(D) + 1);
  inv[0] = TLaurent(1);
  for (long long k = 1; k <= D; ++k) {
    TLaurent acc;
    for (long long j = 1; j <= k && j <= a.z_max(); ++j) {
      TLaurent aj = a.coeff(j);
      if (aj.is_zero()) continue;
      acc += aj * inv[static_cast<size_t>(k - j)];
    }
    inv[static_cast<size_t>(k)] = TLaurent() - acc;
  }
  Op out;
  for (long long k = 0; k <= D; ++k)
    if (!inv[static_cast<size_t>(k)].is_zero())
      out += Op::term(inv[static_cast<size_t>(k)], k);
  return out;
}

// Apply a monoid-directed operator series through the lattice action.
inline DeltaSeries op_apply(const Op& a, const DeltaSeries& s) {
  DeltaSeries out;
  out.mod_exp = s.mod_exp;
  out.D = s.D;
  if (a.is_zero()) return out;
  if (a.z_min() < 0) throw structural_error("operator series must be monoid-directed");
  for (const auto& [mu, v] : a.terms())
    for (const auto& [g, w] : s.c) {
      if (g + mu > s.D) continue;
      out.add(g + mu, (v * w).shifted(mu * s.mod_exp));
    }
  return out;
}

}  // namespace bkdetail

// xi0 = d_Pbar^{-1} applied to delta_0, through index D.
inline DeltaSeries xi0_series(long long n, BkCase kase, long long D) {
  BkSide side = bk_side(n, kase);
  return bkdetail::op_apply(bkdetail::op_inverse(side.d_pbar, D),
                            delta_at(0, side.mod_exp, D));
}

// Sum over gamma of coeff(gamma) q^{-gamma e/2} z^gamma.
inline ZLaurent<TLaurent> mellin_transform(const DeltaSeries& s) {
  ZLaurent<TLaurent> out;
  for (const auto& [g, v] : s.c)
    out += ZLaurent<TLaurent>::term(v.shifted(-g * s.mod_exp), g);
  return out;
}

struct MellinReport {
  bool ok = true;
  long long first_mismatch = -1;
};

// The Mellin transform of xi0 must reproduce the denominator product series.
inline MellinReport mellin_check(long long n, BkCase kase, long long D) {
  ZLaurent<TLaurent> lhs = mellin_transform(xi0_series(n, kase, D));
  DoublingCase dc{bk_doubling_kind(kase, n), n, {}};
  ZLaurent<TLaurent> rhs = d_H(dc).series(D);
  MellinReport rep;
  for (long long d = 0; d <= D; ++d) {
    if (lhs.coeff(d) == rhs.coeff(d)) continue;
    rep.ok = false;
    rep.first_mismatch = d;
    break;
  }
  return rep;
}

// F(delta_gamma) = (d_Pbar / d_P) delta_gamma on the opposite side.
inline DeltaSeries fourier_on_basis(long long n, BkCase kase, long long gamma, long long D) {
  BkSide side = bk_side(n, kase);
  bkdetail::Op ratio =
      bkdetail::op_truncate(side.d_pbar * bkdetail::op_inverse(side.d_p, D), D);
  return bkdetail::op_apply(ratio, delta_at(gamma, side.mod_exp, D));
}

struct FourierReport {
  bool maps_basic = false;
  bool involutive = false;
  bool ok() const { return maps_basic && involutive; }
};

// The Fourier transform carries xi0 to the opposite-side xi0, and composing
// the two directions is the identity through degree D.
inline FourierReport fourier_fixed_point(long long n, BkCase kase, long long D) {
  BkSide side = bk_side(n, kase);
  bkdetail::Op inv_p = bkdetail::op_inverse(side.d_p, D);
  bkdetail::Op inv_pbar = bkdetail::op_inverse(side.d_pbar, D);
  bkdetail::Op fwd = bkdetail::op_truncate(side.d_pbar * inv_p, D);
  bkdetail::Op bwd = bkdetail::op_truncate(side.d_p * inv_pbar, D);
  DeltaSeries delta0 = delta_at(0, side.mod_exp, D);
  DeltaSeries xi_p = bkdetail::op_apply(inv_pbar, delta0);
  DeltaSeries xi_pbar = bkdetail::op_apply(inv_p, delta0);
  DeltaSeries fwd_xi = bkdetail::op_apply(fwd, xi_p);
  FourierReport rep;
  rep.maps_basic = fwd_xi == xi_pbar;
  rep.involutive = bkdetail::op_apply(bwd, fwd_xi) == xi_p;
  return rep;
}

struct AppendixReport {
  long long n = 0;
  long long eta_pairing = 0;
  long long modulus = 0;
  long long doubling_modulus = 0;
  bool layers_match = false;
  bool ok() const {
    return eta_pairing == n && layers_match && modulus == doubling_modulus;
  }
};

// Graded shift ladder for the rank-n symplectic family: the half-sum pairing
// with the first coordinate, the layer-wise shift law L(s+t) = |c|^t L(s) on
// the exponent grading, and the modulus exponent translation.
inline AppendixReport appendix_shift_check(long long n, long long layers = 10) {
  if (n < 1) throw structural_error("positive rank required");
  AppendixReport rep;
  rep.n = n;
  RootDatum rd = build_root_datum(CartanType::C, static_cast<int>(n));
  rep.eta_pairing = rd.half_sum().whole_coords()[0];
  rep.modulus = 2 * n + 1;
  rep.doubling_modulus = modulus_exponent(DoublingKind::symplectic, 2 * n);
  LayerScale at_half{Half{1}};
  LayerScale at_neg_n{Half::whole(-n)};
  LayerScale shift_up{Half{2 * n + 1}};
  bool ok = true;
  for (long long d = 0; d <= layers && ok; ++d) {
    ok = at_half.factor(d) == at_neg_n.factor(d) * shift_up.factor(d) &&
         at_half.factor(d) == at_neg_n.then(shift_up).factor(d);
    for (long long s2 = -3; s2 <= 3 && ok; ++s2)
      for (long long t2 = -3; t2 <= 3 && ok; ++t2)
        ok = LayerScale{Half{s2 + t2}}.factor(d) ==
             LayerScale{Half{s2}}.factor(d) * LayerScale{Half{t2}}.factor(d);
  }
  rep.layers_match = ok;
  return rep;
}

}  // namespace qzeta
