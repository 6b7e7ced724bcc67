#pragma once

#include "ktorus/scalar.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace ktorus {

/// Dense row-major matrix over an exact scalar.
template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// The carrier for A, its exterior powers and the maps Λʳ A − I.
using IntMatrix = Matrix<BigInt>;

using Index = Eigen::Index;

IntMatrix make_matrix(std::initializer_list<std::initializer_list<long long>> rows);
IntMatrix make_matrix(const std::vector<std::vector<BigInt>>& rows);

template <class To, class From>
Matrix<To> convert(const Matrix<From>& m) {
  Matrix<To> out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = from_big<To>(to_big(m(i, j)));
  return out;
}

template <class Scalar>
bool is_zero_matrix(const Matrix<Scalar>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <class Scalar>
bool is_upper_triangular(const Matrix<Scalar>& m) {
  for (Index i = 1; i < m.rows(); ++i)
    for (Index j = 0; j < std::min(i, m.cols()); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

/// Runs `fn.template operator()<Checked64>()` and, if any intermediate leaves
/// the int64 range, reruns it with BigInt. `fn` must be pure.
template <class Fn>
auto with_fast_path(Fn&& fn) {
  try {
    return fn.template operator()<Checked64>();
  } catch (const Overflow&) {
    return fn.template operator()<BigInt>();
  }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
template <class Scalar>
Scalar determinant(Matrix<Scalar> a) {
  const Index n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("determinant: matrix not square");
  if (n == 0) return Scalar(1);
  bool negate = false;
  Scalar prev(1);
  for (Index k = 0; k + 1 < n; ++k) {
    if (is_zero(a(k, k))) {
      Index p = k + 1;
      while (p < n && is_zero(a(p, k))) ++p;
      if (p == n) return Scalar(0);
      a.row(k).swap(a.row(p));
      negate = !negate;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = Scalar(0);
    }
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

BigInt determinant(const IntMatrix& a);

namespace detail {

/// Pivot for step t: the first column j >= t that is nonzero below row t, and
/// in it the entry of least |value| (first unit wins). {-1, -1} when the
/// block [t.., t..] is zero.
template <class Scalar>
std::pair<Index, Index> least_pivot(const Matrix<Scalar>& a, Index t) {
  for (Index j = t; j < a.cols(); ++j) {
    Index pi = -1;
    for (Index i = t; i < a.rows(); ++i) {
      const Scalar& x = a(i, j);
      if (is_zero(x)) continue;
      if (pi < 0 || abs_value(x) < abs_value(a(pi, j))) {
        pi = i;
        if (abs_value(x) == Scalar(1)) break;
      }
    }
    if (pi >= 0) return {pi, j};
  }
  return {-1, -1};
}

}  // namespace detail

/// Rank over ℚ by integer elimination. Every step is a unimodular row
/// operation (swap, or subtracting an integer multiple of the pivot row) or a
/// column swap, so nothing leaves ℤ. Columns are consumed left to right; on
/// exterior powers this keeps entries far smaller than searching the whole
/// block for a unit.
template <class Scalar>
Index rank(Matrix<Scalar> a) {
  const Index rows = a.rows(), cols = a.cols();
  std::vector<Index> support;
  Index t = 0;
  for (; t < std::min(rows, cols); ++t) {
    const auto [pi, pj] = detail::least_pivot(a, t);
    if (pi < 0) break;
    if (pi != t) a.row(pi).swap(a.row(t));
    if (pj != t) a.col(pj).swap(a.col(t));
    for (;;) {
      support.clear();
      for (Index j = t; j < cols; ++j)
        if (!is_zero(a(t, j))) support.push_back(j);
      Index smallest = -1;
      for (Index i = t + 1; i < rows; ++i) {
        if (is_zero(a(i, t))) continue;
        const Scalar q = nearest_quotient(a(i, t), a(t, t));
        for (Index j : support) a(i, j) -= q * a(t, j);
        if (!is_zero(a(i, t)) &&
            (smallest < 0 || abs_value(a(i, t)) < abs_value(a(smallest, t))))
          smallest = i;
      }
      if (smallest < 0) break;
      a.row(smallest).swap(a.row(t));
    }
  }
  return t;
}

Index rank(const IntMatrix& m);

std::string to_text(const IntMatrix& m);

}  // namespace ktorus
