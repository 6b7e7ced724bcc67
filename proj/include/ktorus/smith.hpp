#pragma once

#include "ktorus/abelian_group.hpp"
#include "ktorus/matrix.hpp"

#include <optional>
#include <vector>

namespace ktorus {

/// Invariant factors of an integer matrix, d₁ | d₂ | … | d_rank followed by
/// zeros, with optional unimodular transforms such that
/// left · original · right = diag.
struct SmithForm {
  std::vector<BigInt> diag;  // length min(rows, cols)
  Index rank = 0;
  std::optional<IntMatrix> left_transform;
  std::optional<IntMatrix> right_transform;

  /// The diagonal as a rows × cols matrix.
  IntMatrix diagonal_matrix(Index rows, Index cols) const;
};

namespace detail {

template <class Scalar>
struct SmithWork {
  Matrix<Scalar> a;
  Matrix<Scalar> left, right;
  bool transforms;

  void swap_rows(Index i, Index j) {
    if (i == j) return;
    a.row(i).swap(a.row(j));
    if (transforms) left.row(i).swap(left.row(j));
  }
  void swap_cols(Index i, Index j) {
    if (i == j) return;
    a.col(i).swap(a.col(j));
    if (transforms) right.col(i).swap(right.col(j));
  }
};

// Replaces diagonal entries (d_i, d_j) by (gcd, lcm) via unimodular row and
// column operations applied to the transforms.
template <class Scalar>
void gcd_lcm_fixup(SmithWork<Scalar>& w, std::vector<Scalar>& d, Index i, Index j) {
  const Scalar a = d[i], b = d[j];
  auto [g, s, t] = extended_gcd(a, b);
  const Scalar ag = a / g, bg = b / g;
  if (w.transforms) {
    // col_i += col_j
    w.right.col(i) += w.right.col(j);
    // rows (i, j) <- (s·row_i + t·row_j, −(b/g)·row_i + (a/g)·row_j)
    for (Index k = 0; k < w.left.cols(); ++k) {
      const Scalar ri = w.left(i, k), rj = w.left(j, k);
      w.left(i, k) = s * ri + t * rj;
      w.left(j, k) = ag * rj - bg * ri;
    }
    // col_j -= (t·b/g)·col_i
    const Scalar f = t * bg;
    for (Index k = 0; k < w.right.rows(); ++k) w.right(k, j) -= f * w.right(k, i);
  }
  d[i] = g;
  d[j] = ag * b;
}

}  // namespace detail

/// Smith normal form by elimination with least-|entry| pivoting. Entries of
/// the working matrix are reduced with nearest-integer quotients; the
/// divisibility chain is enforced afterwards by gcd/lcm fix-ups.
template <class Scalar>
SmithForm smith_normal_form(const Matrix<Scalar>& m, bool want_transforms) {
  const Index rows = m.rows(), cols = m.cols();
  detail::SmithWork<Scalar> w{m, {}, {}, want_transforms};
  if (want_transforms) {
    w.left = Matrix<Scalar>::Identity(rows, rows);
    w.right = Matrix<Scalar>::Identity(cols, cols);
  }
  auto& a = w.a;
  const Index steps = std::min(rows, cols);
  std::vector<Index> support;
  Index t = 0;
  for (; t < steps; ++t) {
    const auto [pi, pj] = detail::least_pivot(a, t);
    if (pi < 0) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    for (;;) {
      // Clear column t below the pivot with row operations.
      support.clear();
      for (Index j = t; j < cols; ++j)
        if (!is_zero(a(t, j))) support.push_back(j);
      Index smallest = -1;
      for (Index i = t + 1; i < rows; ++i) {
        if (is_zero(a(i, t))) continue;
        const Scalar q = nearest_quotient(a(i, t), a(t, t));
        if (!is_zero(q)) {
          for (Index j : support) a(i, j) -= q * a(t, j);
          if (want_transforms)
            for (Index k = 0; k < rows; ++k) w.left(i, k) -= q * w.left(t, k);
        }
        if (!is_zero(a(i, t)) &&
            (smallest < 0 || abs_value(a(i, t)) < abs_value(a(smallest, t))))
          smallest = i;
      }
      if (smallest >= 0) {
        w.swap_rows(t, smallest);
        continue;
      }
      // Column t is now zero below the pivot, so column operations against
      // column t only touch row t.
      for (Index j = t + 1; j < cols; ++j) {
        if (is_zero(a(t, j))) continue;
        const Scalar q = nearest_quotient(a(t, j), a(t, t));
        a(t, j) -= q * a(t, t);
        if (want_transforms)
          for (Index k = 0; k < cols; ++k) w.right(k, j) -= q * w.right(k, t);
        if (!is_zero(a(t, j)) &&
            (smallest < 0 || abs_value(a(t, j)) < abs_value(a(t, smallest))))
          smallest = j;
      }
      if (smallest >= 0) {
        w.swap_cols(t, smallest);
        continue;
      }
      break;
    }
    if (sign(a(t, t)) < 0) {
      a(t, t) = -a(t, t);
      if (want_transforms) w.left.row(t) *= Scalar(-1);
    }
  }

  const Index r = t;
  std::vector<Scalar> d(r);
  for (Index i = 0; i < r; ++i) d[i] = a(i, i);
  for (Index i = 0; i < r; ++i)
    for (Index j = i + 1; j < r; ++j)
      if (!is_zero(d[j] % d[i])) detail::gcd_lcm_fixup(w, d, i, j);

  SmithForm out;
  out.rank = r;
  out.diag.assign(steps, BigInt(0));
  for (Index i = 0; i < r; ++i) out.diag[i] = to_big(d[i]);
  if (want_transforms) {
    out.left_transform = convert<BigInt>(w.left);
    out.right_transform = convert<BigInt>(w.right);
  }
  return out;
}

/// Arbitrary-precision entry point; tries machine words first.
SmithForm smith_normal_form(const IntMatrix& m, bool want_transforms = false);

/// Cokernel ℤᵏ / im(m) of a square matrix as an invariant-factor presentation.
AbelianGroup cokernel_from_smith(const SmithForm& s, Index size);
AbelianGroup cokernel(const IntMatrix& m);

/// k − rank(m), computed without the full Smith form.
Index kernel_rank(const IntMatrix& m);

}  // namespace ktorus
