#pragma once
// Weight multiplicity tables of irreducible highest-weight representations:
// the recursive multiplicity formula on dominant weights, Weyl-orbit fill,
// and the product formula for the dimension as an independent cross-check.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "qzeta/errors.hpp"
#include "qzeta/rational.hpp"
#include "qzeta/root_datum.hpp"
#include "qzeta/weight.hpp"

namespace qzeta {

struct RepTable {
  RootDatum datum;
  Weight highest;
  std::map<Weight, long long> mult;

  long long dim() const {
    long long acc = 0;
    for (const auto& [w, m] : mult) acc += m;
    return acc;
  }
  long long multiplicity(const Weight& w) const {
    auto it = mult.find(w);
    return it == mult.end() ? 0 : it->second;
  }
};

namespace repdetail {

// Solve v = sum c_i * alpha_i over Q by Gaussian elimination on the simple
// root coordinates; throws when v is outside their span.
inline std::vector<Rat> simple_coords(const RootDatum& d, const Weight& v) {
  size_t rows = static_cast<size_t>(d.dim), cols = static_cast<size_t>(d.rank);
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols + 1));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j)
      a[i][j] = Rat(d.simple_root(static_cast<int>(j)).c2[i]) / 2;
    a[i][cols] = Rat(v.c2[i]) / 2;
  }
  size_t rank = 0;
  std::vector<size_t> pivot_col;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    Rat f = a[rank][c];
    for (auto& x : a[rank]) x /= f;
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][c] == 0) continue;
      Rat g = a[i][c];
      for (size_t j = 0; j <= cols; ++j) a[i][j] -= g * a[rank][j];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (size_t i = rank; i < rows; ++i)
    if (a[i][cols] != 0) throw structural_error("weight difference is outside the root lattice span");
  std::vector<Rat> out(cols, Rat(0));
  for (size_t r = 0; r < rank; ++r) out[pivot_col[r]] = a[r][cols];
  return out;
}

inline std::vector<long long> integral_coords(const RootDatum& d, const Weight& v) {
  std::vector<Rat> c = simple_coords(d, v);
  std::vector<long long> out(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    if (rat_den(c[i]) != 1) throw structural_error("coordinates are not integral");
    out[i] = static_cast<long long>(rat_num(c[i]));
  }
  return out;
}

}  // namespace repdetail

inline Rat weyl_dim(const RootDatum& d, const Weight& lambda) {
  Weight rho = d.half_sum();
  Rat acc = 1;
  for (const Weight& a : d.positive_roots)
    acc *= (lambda + rho).inner(a) / rho.inner(a);
  return acc;
}

inline RepTable weight_table(const RootDatum& d, const Weight& lambda) {
  if (static_cast<int>(lambda.dim()) != d.dim)
    throw structural_error("highest weight dimension mismatch");
  if (!d.is_dominant(lambda)) throw structural_error("highest weight must be dominant");

  Weight rho = d.half_sum();
  Weight lowest = -d.dominate(-lambda);
  std::vector<long long> box = repdetail::integral_coords(d, lambda - lowest);
  for (long long m : box)
    if (m < 0) throw structural_error("weight cone bookkeeping failed");

  std::vector<std::vector<long long>> root_coords;
  for (const Weight& a : d.positive_roots)
    root_coords.push_back(repdetail::integral_coords(d, a));

  // breadth-first sweep of the box lambda - sum(m_i alpha_i), 0 <= m <= box
  struct Node {
    Weight w;
    std::vector<long long> m;
    long long height;
  };
  std::map<Weight, std::vector<long long>> cone;
  std::vector<Node> order;
  {
    std::vector<Node> frontier{{lambda, std::vector<long long>(box.size(), 0), 0}};
    cone[lambda] = frontier[0].m;
    order.push_back(frontier[0]);
    while (!frontier.empty()) {
      std::vector<Node> next;
      for (const Node& nd : frontier) {
        for (int i = 0; i < d.rank; ++i) {
          if (nd.m[static_cast<size_t>(i)] + 1 > box[static_cast<size_t>(i)]) continue;
          Weight w = nd.w - d.simple_root(i);
          if (cone.count(w)) continue;
          Node child{w, nd.m, nd.height + 1};
          child.m[static_cast<size_t>(i)] += 1;
          cone[w] = child.m;
          order.push_back(child);
          next.push_back(std::move(child));
        }
      }
      frontier = std::move(next);
    }
  }

  std::stable_sort(order.begin(), order.end(),
                   [](const Node& a, const Node& b) { return a.height < b.height; });

  std::map<Weight, long long> dominant_mult;
  Rat norm_top = (lambda + rho).inner(lambda + rho);
  for (const Node& nd : order) {
    if (!d.is_dominant(nd.w)) continue;
    if (nd.w == lambda) {
      dominant_mult[lambda] = 1;
      continue;
    }
    Rat num = 0;
    for (size_t r = 0; r < d.positive_roots.size(); ++r) {
      const Weight& a = d.positive_roots[r];
      for (long long k = 1;; ++k) {
        bool inside = true;
        for (size_t i = 0; i < box.size(); ++i) {
          if (cone[nd.w][i] - k * root_coords[r][i] < 0) {
            inside = false;
            break;
          }
        }
        if (!inside) break;
        Weight up = nd.w + k * a;
        auto it = dominant_mult.find(d.dominate(up));
        if (it != dominant_mult.end() && it->second > 0)
          num += Rat(it->second) * up.inner(a);
      }
    }
    Rat den = norm_top - (nd.w + rho).inner(nd.w + rho);
    if (den <= 0) throw structural_error("multiplicity denominator must be positive");
    Rat m = 2 * num / den;
    if (rat_den(m) != 1 || m < 0) throw consistency_error("multiplicity must be a nonnegative integer");
    long long mi = static_cast<long long>(rat_num(m));
    if (mi > 0) dominant_mult[nd.w] = mi;
  }

  RepTable rt{d, lambda, {}};
  for (const auto& [w, m] : dominant_mult)
    for (const Weight& v : d.weyl_orbit(w)) rt.mult[v] = m;

  Rat expect = weyl_dim(d, lambda);
  if (Rat(rt.dim()) != expect)
    throw consistency_error("table size disagrees with the dimension product formula");
  return rt;
}

}  // namespace qzeta
