#pragma once

// Test-only reference computations. Nothing here shares code paths with the
// library routines it is used to check.

#include "ktorus/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using ktorus::BigInt;
using ktorus::Index;
using ktorus::IntMatrix;

/// Determinant by Laplace expansion along the first row.
inline BigInt laplace_det(const IntMatrix& m) {
  const Index n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  BigInt total = 0;
  for (Index j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix sub(n - 1, n - 1);
    for (Index i = 1; i < n; ++i)
      for (Index k = 0, c = 0; k < n; ++k)
        if (k != j) sub(i - 1, c++) = m(i, k);
    const BigInt term = m(0, j) * laplace_det(sub);
    total += (j % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

inline void combinations(Index n, Index k, std::vector<std::vector<Index>>& out) {
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<Index> c;
    for (Index i = 0; i < n; ++i)
      if (pick[static_cast<std::size_t>(i)]) c.push_back(i);
    out.push_back(c);
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

/// Minor by Laplace expansion on explicit index lists.
inline BigInt laplace_minor(const IntMatrix& m, const std::vector<Index>& rows,
                            const std::vector<Index>& cols) {
  const auto k = static_cast<Index>(rows.size());
  IntMatrix sub(k, k);
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j) sub(i, j) = m(rows[std::size_t(i)], cols[std::size_t(j)]);
  return laplace_det(sub);
}

/// Invariant factors via determinantal divisors: d_k = D_k / D_{k−1}, where
/// D_k is the gcd of all k×k minors. Zeros fill the tail past the rank.
inline std::vector<BigInt> determinantal_invariant_factors(const IntMatrix& m) {
  const Index steps = std::min(m.rows(), m.cols());
  std::vector<BigInt> d;
  BigInt prev = 1;
  for (Index k = 1; k <= steps; ++k) {
    std::vector<std::vector<Index>> rs, cs;
    combinations(m.rows(), k, rs);
    combinations(m.cols(), k, cs);
    BigInt g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) g = ktorus::gcd(g, laplace_minor(m, r, c));
    if (g == 0) {
      d.resize(static_cast<std::size_t>(steps), BigInt(0));
      return d;
    }
    d.push_back(g / prev);
    prev = g;
  }
  return d;
}

/// Counts elements of each order in ⊕ ℤ_{orders[i]}. Two finite abelian groups
/// are isomorphic iff these histograms agree.
inline std::map<long, long> element_order_histogram(const std::vector<long>& orders) {
  std::map<long, long> hist;
  std::vector<long> x(orders.size(), 0);
  for (;;) {
    long ord = 1;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      const long o = orders[i] / std::gcd(orders[i], x[i]);
      ord = std::lcm(ord, o);
    }
    ++hist[ord];
    std::size_t i = 0;
    while (i < orders.size() && ++x[i] == orders[i]) x[i++] = 0;
    if (i == orders.size()) break;
  }
  return hist;
}

/// Number of r-element subsets of {1..n} summing to k, by bitmask enumeration.
inline long brute_partition_count(int n, int r, int k) {
  long count = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != r) continue;
    int s = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s += i + 1;
    if (s == k) ++count;
  }
  return count;
}

/// Number of subsets of `values` with the given sum, by bitmask enumeration.
inline long brute_subset_sum(const std::vector<int>& values, int target) {
  long count = 0;
  for (std::uint32_t mask = 0; mask < (1u << values.size()); ++mask) {
    int s = 0;
    for (std::size_t i = 0; i < values.size(); ++i)
      if (mask & (1u << i)) s += values[i];
    if (s == target) ++count;
  }
  return count;
}

/// Product of up to `steps` random elementary matrices I + c·E_ij,
/// |c| ≤ bound. With `allow_det_minus_one`, row swaps and sign flips are
/// mixed in, giving elements of GL(n, ℤ); otherwise the result is in SL(n, ℤ).
inline IntMatrix random_unimodular(Index n, std::mt19937_64& rng, int steps = 30, int bound = 2,
                                   bool allow_det_minus_one = true) {
  IntMatrix m = IntMatrix::Identity(n, n);
  if (n == 1) {
    if (allow_det_minus_one && rng() % 2) m(0, 0) = -1;
    return m;
  }
  std::uniform_int_distribution<Index> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-bound, bound);
  std::uniform_int_distribution<int> count(1, steps);
  const int s = count(rng);
  for (int t = 0; t < s; ++t) {
    const Index i = idx(rng);
    Index j = idx(rng);
    while (j == i) j = idx(rng);
    const int kind = allow_det_minus_one ? int(rng() % 6) : 0;
    if (kind == 4) {
      m.row(i).swap(m.row(j));
    } else if (kind == 5) {
      m.row(i) *= BigInt(-1);
    } else {
      const BigInt c = coef(rng);
      m.row(i) += c * m.row(j);
    }
  }
  return m;
}

inline IntMatrix random_matrix(Index rows, Index cols, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

/// Unit upper-triangular matrix with nonzero superdiagonal and random fill.
inline IntMatrix random_form_heart(Index n, std::mt19937_64& rng, int bound = 3) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix m = IntMatrix::Identity(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      int v = d(rng);
      if (j == i + 1)
        while (v == 0) v = d(rng);
      m(i, j) = v;
    }
  return m;
}

}  // namespace oracle
