#pragma once
// Aggregated identity suites: every cross-module identity the library rests
// on, each as an independently recomputed check with a stable id, a scope
// description, and a fault hook that swaps in a deliberately wrong identity
// so the failure path can be exercised end to end.

#include <chrono>
#include <functional>
#include <future>
#include <string>
#include <utility>
#include <vector>

#include "qzeta/bk.hpp"
#include "qzeta/characters.hpp"
#include "qzeta/doubling.hpp"
#include "qzeta/errors.hpp"
#include "qzeta/tate.hpp"
#include "qzeta/vinberg.hpp"

namespace qzeta {

struct CheckOptions {
  long long n_max = 8;
  long long degree = 10;
  std::string fault_id;  // check with this id runs its deliberately-wrong variant
};

struct CheckResult {
  std::string id;
  std::string suite;
  std::string scope;
  bool pass = false;
  double elapsed_ms = 0.0;
};

namespace verifydetail {

inline std::vector<std::pair<CartanType, int>> small_rank_grid() {
  return {{CartanType::A, 1}, {CartanType::A, 2}, {CartanType::A, 3},
          {CartanType::B, 1}, {CartanType::B, 2}, {CartanType::B, 3},
          {CartanType::C, 1}, {CartanType::C, 2}, {CartanType::C, 3},
          {CartanType::D, 2}, {CartanType::D, 3}};
}

inline std::vector<DoublingCase> doubling_grid(long long n_max) {
  std::vector<DoublingCase> out;
  for (long long n = 2; n <= n_max; n += 2) out.push_back({DoublingKind::symplectic, n, {}});
  for (long long n = 2; n <= n_max; n += 2)
    out.push_back({DoublingKind::orthogonal_even, n, {}});
  for (long long n = 1; n <= n_max; n += 2) out.push_back({DoublingKind::orthogonal_odd, n, {}});
  return out;
}

inline std::vector<std::pair<BkCase, long long>> bk_grid(long long n_max) {
  std::vector<std::pair<BkCase, long long>> out;
  for (long long n = 1; n <= n_max; ++n) out.push_back({BkCase::orthogonal, n});
  for (long long n = 2; n <= n_max; n += 2) out.push_back({BkCase::symplectic, n});
  return out;
}

inline bool run_lfactor_sym_series(const CheckOptions&, bool fault) {
  for (auto [t, r] : small_rank_grid()) {
    DualStd ds = dual_standard_rep(t, r);
    auto series = standard_lfactor(ds.weights).series(8);
    for (long long d = 0; d <= 8; ++d) {
      long long dd = fault && d == 1 ? 2 : d;
      if (!(series.coeff(d) == sym_power_trace(ds.weights, dd))) return false;
    }
  }
  return true;
}

inline bool run_constant_term_partition(const CheckOptions&, bool fault) {
  for (auto [t, r] : small_rank_grid()) {
    DualStd ds = dual_standard_rep(t, r);
    auto series = lfactor_series_direct(ds.weights, 6);
    for (long long d = 0; d <= 6; ++d)
      for (const auto& [coords, val] : series[static_cast<size_t>(d)].terms()) {
        Weight target = Weight::zero(ds.weights.nvars);
        for (size_t i = 0; i < coords.size(); ++i) target.c2[i] = 2 * coords[i];
        target.degree = d;
        long long count = partition_count(ds.weights, target, d) + (fault ? 1 : 0);
        if (!(val == TLaurent(Rat(count)))) return false;
      }
  }
  return true;
}

inline bool run_normalizer_chain(const CheckOptions& o, bool fault) {
  for (const DoublingCase& c : doubling_grid(o.n_max)) {
    TRatFun dh = d_H(c);
    TRatFun lhs = m_scalar(c.kind, c.n) * eta_factor(c.kind, c.n) * dh;
    TRatFun rhs = dh.subst_neg_s();
    if (fault) rhs = rhs.subst_shift(Half::whole(1));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

inline bool run_eta_gamma_ratio(const CheckOptions& o, bool fault) {
  for (const DoublingCase& c : doubling_grid(o.n_max)) {
    TRatFun ratio = d_H(c).subst_neg_s() / a_H(c.kind, c.n);
    TRatFun prod = TRatFun::one();
    auto coord = [&](long long i) {
      return Weight::basis(static_cast<size_t>(c.n), static_cast<size_t>(i - 1));
    };
    for (long long l = 1; l <= c.n / 2; ++l)
      prod = prod * gamma_local(levi_chi_pairing(c.n, coord(l) + coord(l + 1)));
    if (c.kind == DoublingKind::symplectic)
      prod = prod * gamma_local(levi_chi_pairing(c.n, coord(1)));
    if (fault) prod = prod * gamma_local({1, Half{}});
    if (!(ratio == prod)) return false;
  }
  return true;
}

inline bool run_hwv_kernel_labels(const CheckOptions&, bool fault) {
  for (long long n = 2; n <= 10; ++n)
    for (BkCase k : {BkCase::orthogonal, BkCase::symplectic}) {
      if (k == BkCase::symplectic && n % 2 != 0) continue;
      HwvSet hw = highest_weight_vectors(n, k);
      std::vector<std::string> got;
      for (const HwLine& ln : hw.raising) got.push_back(root_label(ln.label));
      std::vector<std::string> want;
      auto coord = [&](long long i) {
        return Weight::basis(static_cast<size_t>(n), static_cast<size_t>(i - 1));
      };
      for (long long l = 1; 2 * l <= n; ++l) want.push_back(root_label(coord(l) + coord(l + 1)));
      if (k == BkCase::symplectic) want.push_back(root_label(coord(1)));
      if (fault) want.push_back(root_label(coord(n)));
      if (got != want) return false;
    }
  return true;
}

inline bool run_dual_det_polys(const CheckOptions& o, bool fault) {
  for (auto [k, n] : bk_grid(o.n_max)) {
    BkSide side = bk_side(n, k);
    TRatFun dh = d_H({bk_doubling_kind(k, n), n, {}});
    TRatFun want_p = fault ? dh : dh.subst_neg_s();
    if (!(TRatFun(ZLaurent<TLaurent>::one(), side.d_p.negated_z()) == want_p)) return false;
    if (!(TRatFun(ZLaurent<TLaurent>::one(), side.d_pbar) == dh)) return false;
  }
  return true;
}

inline bool run_gamma_normalizer(const CheckOptions& o, bool fault) {
  for (auto [k, n] : bk_grid(o.n_max)) {
    TRatFun prod = gamma_product_normalizer(n, k);
    TRatFun eta = eta_factor(bk_doubling_kind(k, n), n);
    if (fault) eta = eta.subst_shift(Half::whole(1));
    if (!(prod == eta)) return false;
  }
  return true;
}

inline bool run_mellin_series(const CheckOptions& o, bool fault) {
  long long cap = o.n_max < 6 ? o.n_max : 6;
  for (auto [k, n] : bk_grid(cap)) {
    ZLaurent<TLaurent> lhs = mellin_transform(xi0_series(n, k, o.degree));
    TRatFun dh = d_H({bk_doubling_kind(k, n), n, {}});
    if (fault) dh = dh.subst_shift(Half::whole(1));
    ZLaurent<TLaurent> rhs = dh.series(o.degree);
    for (long long d = 0; d <= o.degree; ++d)
      if (!(lhs.coeff(d) == rhs.coeff(d))) return false;
  }
  return true;
}

inline bool run_fourier_fixed_point(const CheckOptions& o, bool fault) {
  long long cap = o.n_max < 6 ? o.n_max : 6;
  for (auto [k, n] : bk_grid(cap)) {
    if (fault) {
      DeltaSeries xi = xi0_series(n, k, o.degree);
      if (!(xi == lattice_action(1, xi))) return false;
      continue;
    }
    FourierReport rep = fourier_fixed_point(n, k, o.degree);
    if (!rep.maps_basic || !rep.involutive) return false;
  }
  return true;
}

inline bool run_scalar_fixed_point(const CheckOptions& o, bool fault) {
  for (const DoublingCase& c : doubling_grid(o.n_max)) {
    BasicFunctionReport r = doubling_basic_and_fixedpoint(c.kind, c.n);
    TRatFun rhs = r.rhs;
    if (fault) rhs = rhs.subst_shift(Half::whole(1));
    if (!(r.lhs == rhs)) return false;
  }
  return true;
}

inline bool run_shift_ladder(const CheckOptions&, bool fault) {
  for (long long n = 1; n <= 8; ++n) {
    AppendixReport rep = appendix_shift_check(n);
    long long want = fault ? n + 1 : n;
    if (rep.eta_pairing != want || !rep.layers_match || rep.modulus != rep.doubling_modulus)
      return false;
  }
  return true;
}

inline bool run_monoid_unit_dichotomy(const CheckOptions&, bool fault) {
  RootDatum a1 = build_root_datum(CartanType::A, 1);
  for (long long n = 1; n <= 10; ++n) {
    bool even = n % 2 == 0;
    if (fault) even = !even;
    std::string want = even ? "GL1 x SL2" : "GL2";
    if (unit_group_dual(a1, {n}).label != want) return false;
  }
  return true;
}

inline bool run_shell_sum_gamma(const CheckOptions&, bool fault) {
  for (long long s2 = -2; s2 <= 2; ++s2) {
    Half s0{s2};
    AffineExp e{-1, fault ? s0 : Half{-s2}};
    if (!(shell_sum_closed(s0) == gamma_local(e))) return false;
  }
  return true;
}

struct Check {
  std::string id;
  std::string suite;
  std::string scope;
  bool (*run)(const CheckOptions&, bool);
};

inline const std::vector<Check>& check_table() {
  static const std::vector<Check> table = {
      {"lfactor_sym_series", "reps",
       "denominator inverse equals the symmetric-power trace series, types A-D rank <= 3, "
       "degree 8",
       run_lfactor_sym_series},
      {"constant_term_partition", "reps",
       "series coefficients equal multiset partition counts, types A-D rank <= 3, degree 6",
       run_constant_term_partition},
      {"normalizer_chain", "doubling",
       "m(s) eta(s) d_H(s) = d_H(-s) across all cases", run_normalizer_chain},
      {"eta_gamma_ratio", "doubling",
       "d_H(-s)/a_H(s) equals the gamma product over consecutive pairs",
       run_eta_gamma_ratio},
      {"hwv_kernel_labels", "bk",
       "boundary kernel labels are x_l + x_(l+1), plus x_1 on the symplectic side, n <= 10",
       run_hwv_kernel_labels},
      {"dual_det_polys", "bk",
       "determinant polynomials substitute to the denominator product on both sides",
       run_dual_det_polys},
      {"gamma_normalizer", "bk",
       "gamma product over raising lines equals the normalizing factor",
       run_gamma_normalizer},
      {"mellin_series", "bk",
       "transform of the basic series equals the denominator expansion, n <= 6",
       run_mellin_series},
      {"fourier_fixed_point", "bk",
       "basis transform swaps the basic vectors and composes to the identity, n <= 6",
       run_fourier_fixed_point},
      {"scalar_fixed_point", "doubling",
       "eta(s-1/2) m(s-1/2) d_H(s-1/2) = d_H(1/2-s) across all cases",
       run_scalar_fixed_point},
      {"shift_ladder", "bk",
       "half-sum pairing, layer-wise shift law, and modulus translation, rank <= 8",
       run_shift_ladder},
      {"monoid_unit_dichotomy", "reps",
       "dual unit group alternates GL1 x SL2 / GL2 with the power parity, n <= 10",
       run_monoid_unit_dichotomy},
      {"shell_sum_gamma", "reps",
       "collapsed shell sum equals the reflected gamma factor, 2s0 in -2..2",
       run_shell_sum_gamma},
  };
  return table;
}

}  // namespace verifydetail

inline std::vector<std::string> suite_names() { return {"reps", "doubling", "bk", "all"}; }

inline std::vector<std::string> suite_check_ids(const std::string& suite) {
  std::vector<std::string> out;
  bool known = suite == "all";
  for (const auto& c : verifydetail::check_table()) {
    if (suite == "all" || c.suite == suite) out.push_back(c.id);
    if (c.suite == suite) known = true;
  }
  if (!known) throw structural_error("unknown suite: " + suite);
  return out;
}

// Run every check in the suite, fanning the independent ones out across
// threads; results come back in table order regardless of completion order.
inline std::vector<CheckResult> run_checks(const std::string& suite, const CheckOptions& opts) {
  std::vector<std::string> ids = suite_check_ids(suite);
  std::vector<const verifydetail::Check*> selected;
  for (const auto& c : verifydetail::check_table())
    for (const std::string& id : ids)
      if (c.id == id) selected.push_back(&c);

  std::vector<std::future<CheckResult>> futures;
  for (const verifydetail::Check* c : selected) {
    futures.push_back(std::async(std::launch::async, [c, &opts]() {
      CheckResult r;
      r.id = c->id;
      r.suite = c->suite;
      r.scope = c->scope;
      auto t0 = std::chrono::steady_clock::now();
      r.pass = c->run(opts, opts.fault_id == c->id);
      auto t1 = std::chrono::steady_clock::now();
      r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      return r;
    }));
  }
  std::vector<CheckResult> out;
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

}  // namespace qzeta
