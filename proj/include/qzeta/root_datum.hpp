#pragma once
// Classical root systems in their standard coordinate realizations, with
// pairings, reflections, Weyl orbits, and the torus characters of Siegel-type
// Levi factors.

#include <set>
#include <string>
#include <vector>

#include "qzeta/errors.hpp"
#include "qzeta/half.hpp"
#include "qzeta/ratfun.hpp"
#include "qzeta/weight.hpp"

namespace qzeta {

enum class CartanType { A, B, C, D };

inline char cartan_letter(CartanType t) {
  switch (t) {
    case CartanType::A: return 'A';
    case CartanType::B: return 'B';
    case CartanType::C: return 'C';
    case CartanType::D: return 'D';
  }
  throw structural_error("unknown type");
}

inline CartanType cartan_from_letter(char c) {
  switch (c) {
    case 'A': case 'a': return CartanType::A;
    case 'B': case 'b': return CartanType::B;
    case 'C': case 'c': return CartanType::C;
    case 'D': case 'd': return CartanType::D;
  }
  throw structural_error(std::string("unknown type letter: ") + c);
}

struct RootDatum {
  CartanType type;
  int rank = 0;
  int dim = 0;  // coordinate count: rank+1 for type A, rank otherwise
  std::vector<Weight> positive_roots;
  std::vector<Weight> positive_coroots;  // aligned with positive_roots
  std::vector<int> simple;               // indices of the simple roots

  std::string name() const { return std::string(1, cartan_letter(type)) + std::to_string(rank); }

  const Weight& simple_root(int i) const { return positive_roots[simple[i]]; }
  const Weight& simple_coroot(int i) const { return positive_coroots[simple[i]]; }

  // <w, alpha^vee> with both sides in the coordinate realization.
  long long pairing(const Weight& w, const Weight& coroot) const {
    long long acc = 0;
    for (size_t i = 0; i < w.c2.size(); ++i) acc += w.c2[i] * coroot.c2[i];
    if (acc % 4 != 0)
      throw structural_error("pairing is not integral: " + w.str() + " with " + coroot.str());
    return acc / 4;
  }

  bool is_dominant(const Weight& w) const {
    for (int i = 0; i < rank; ++i)
      if (pairing(w, simple_coroot(i)) < 0) return false;
    return true;
  }

  Weight reflect(const Weight& w, int pos_idx) const {
    long long c = pairing(w, positive_coroots[pos_idx]);
    return w - c * positive_roots[pos_idx];
  }

  Weight dominate(const Weight& w) const {
    Weight v = w;
    while (true) {
      bool moved = false;
      for (int i = 0; i < rank; ++i) {
        if (pairing(v, simple_coroot(i)) < 0) {
          v = reflect(v, simple[i]);
          moved = true;
        }
      }
      if (!moved) return v;
    }
  }

  std::set<Weight> weyl_orbit(const Weight& w) const {
    std::set<Weight> seen{w};
    std::vector<Weight> frontier{w};
    while (!frontier.empty()) {
      std::vector<Weight> next;
      for (const Weight& v : frontier) {
        for (int i = 0; i < rank; ++i) {
          Weight r = reflect(v, simple[i]);
          if (seen.insert(r).second) next.push_back(r);
        }
      }
      frontier = std::move(next);
    }
    return seen;
  }

  Weight half_sum() const {
    Weight acc = Weight::zero(dim);
    for (const Weight& r : positive_roots) acc = acc + r;
    for (auto& v : acc.c2) {
      if (v % 2 != 0) throw structural_error("half-sum is not in the doubled lattice");
      v /= 2;
    }
    return acc;
  }

  // M[i][j] = <alpha_j, alpha_i^vee>; columns express simple roots in the
  // basis of fundamental weights.
  std::vector<std::vector<long long>> cartan_matrix() const {
    std::vector<std::vector<long long>> m(rank, std::vector<long long>(rank));
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) m[i][j] = pairing(simple_root(j), simple_coroot(i));
    return m;
  }
};

inline RootDatum build_root_datum(CartanType type, int rank) {
  if (rank < 1) throw structural_error("rank must be positive");
  if (type == CartanType::D && rank < 2) throw structural_error("type D needs rank >= 2");
  RootDatum d;
  d.type = type;
  d.rank = rank;
  d.dim = type == CartanType::A ? rank + 1 : rank;
  auto x = [&](int i) { return Weight::basis(d.dim, static_cast<size_t>(i)); };
  auto push = [&](const Weight& root, const Weight& coroot) {
    d.positive_roots.push_back(root);
    d.positive_coroots.push_back(coroot);
    return static_cast<int>(d.positive_roots.size()) - 1;
  };

  std::vector<int> simple_idx(rank, -1);
  switch (type) {
    case CartanType::A:
      for (int i = 0; i < rank + 1; ++i)
        for (int j = i + 1; j < rank + 1; ++j) {
          int k = push(x(i) - x(j), x(i) - x(j));
          if (j == i + 1) simple_idx[i] = k;
        }
      break;
    case CartanType::B:
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
          int k = push(x(i) - x(j), x(i) - x(j));
          if (j == i + 1) simple_idx[i] = k;
          push(x(i) + x(j), x(i) + x(j));
        }
      for (int i = 0; i < rank; ++i) {
        int k = push(x(i), 2 * x(i));
        if (i == rank - 1) simple_idx[rank - 1] = k;
      }
      break;
    case CartanType::C:
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
          int k = push(x(i) - x(j), x(i) - x(j));
          if (j == i + 1) simple_idx[i] = k;
          push(x(i) + x(j), x(i) + x(j));
        }
      for (int i = 0; i < rank; ++i) {
        int k = push(2 * x(i), x(i));
        if (i == rank - 1) simple_idx[rank - 1] = k;
      }
      break;
    case CartanType::D:
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
          int k = push(x(i) - x(j), x(i) - x(j));
          if (j == i + 1) simple_idx[i] = k;
          k = push(x(i) + x(j), x(i) + x(j));
          if (i == rank - 2 && j == rank - 1) simple_idx[rank - 1] = k;
        }
      break;
  }
  d.simple = simple_idx;
  for (int i = 0; i < rank; ++i)
    if (d.simple[i] < 0) throw structural_error("simple root bookkeeping failed");
  return d;
}

// Character pairing of the Siegel-type GL(L) torus: the restriction of the
// degenerate principal series parameter to the cocharacter with the given
// integral coordinates is  a*s + b  with a the coordinate sum and b built
// from the staircase (j - (L+1)/2).
inline AffineExp levi_chi_pairing(long long levi_size, const Weight& cochar) {
  std::vector<long long> c = cochar.whole_coords();
  if (static_cast<long long>(c.size()) != levi_size)
    throw structural_error("cocharacter dimension must match the Levi size");
  long long a = 0;
  long long b2 = 0;
  for (long long j = 1; j <= levi_size; ++j) {
    a += c[static_cast<size_t>(j - 1)];
    b2 += c[static_cast<size_t>(j - 1)] * (2 * j - levi_size - 1);
  }
  return AffineExp{a, Half{b2}};
}

// Half-integers (L+1)/2 - j, j = 1..L: the principal grading of the GL(L)
// staircase.
inline std::vector<Half> levi_half_weights(long long L) {
  std::vector<Half> out;
  for (long long j = 1; j <= L; ++j) out.push_back(Half{L + 1 - 2 * j});
  return out;
}

}  // namespace qzeta
