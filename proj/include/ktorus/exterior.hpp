#pragma once

#include "ktorus/matrix.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace ktorus {

/// Basis e_{i₁}∧…∧e_{i_r} of Λʳℤⁿ, indexed by strictly increasing 0-based
/// tuples in lexicographic order.
struct SubsetBasis {
  std::size_t n = 0;
  std::size_t r = 0;
  std::vector<std::vector<std::size_t>> subsets;
};

SubsetBasis subsets_lex(std::size_t n, std::size_t r);
SubsetBasis subsets_lex(long long n, long long r);

BigInt binomial(std::size_t n, std::size_t k);

namespace detail {
void check_index_set(std::span<const std::size_t> set, Index bound);

template <class Scalar>
Scalar minor_unchecked(const Matrix<Scalar>& a, std::span<const std::size_t> rows,
                       std::span<const std::size_t> cols) {
  const auto k = static_cast<Index>(rows.size());
  switch (k) {
    case 0:
      return Scalar(1);
    case 1:
      return a(Index(rows[0]), Index(cols[0]));
    case 2:
      return a(Index(rows[0]), Index(cols[0])) * a(Index(rows[1]), Index(cols[1])) -
             a(Index(rows[0]), Index(cols[1])) * a(Index(rows[1]), Index(cols[0]));
    default:
      break;
  }
  Matrix<Scalar> sub(k, k);
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j) sub(i, j) = a(Index(rows[i]), Index(cols[j]));
  return determinant<Scalar>(std::move(sub));
}
}  // namespace detail

/// Determinant of `a` restricted to the given 0-based row and column sets.
template <class Scalar>
Scalar minor(const Matrix<Scalar>& a, std::span<const std::size_t> rows,
             std::span<const std::size_t> cols) {
  if (rows.size() != cols.size())
    throw std::invalid_argument("minor: row and column sets differ in size");
  detail::check_index_set(rows, a.rows());
  detail::check_index_set(cols, a.cols());
  return detail::minor_unchecked(a, rows, cols);
}

BigInt minor(const IntMatrix& a, std::span<const std::size_t> rows,
             std::span<const std::size_t> cols);

/// Matrix of Λʳa in the lexicographic basis: entry (i, j) is the minor on
/// row set Qᵢ and column set Qⱼ.
template <class Scalar>
Matrix<Scalar> exterior_power(const Matrix<Scalar>& a, std::size_t r) {
  if (a.rows() != a.cols()) throw std::invalid_argument("exterior_power: matrix not square");
  const auto n = static_cast<std::size_t>(a.rows());
  const SubsetBasis basis = subsets_lex(n, r);
  const auto size = static_cast<Index>(basis.subsets.size());
  // For upper-triangular a, a minor vanishes unless Qᵢ ≤ Qⱼ entrywise: otherwise
  // some k has i_k > j_k and the submatrix has an (r−k+1)×k zero block.
  const bool upper = is_upper_triangular(a);
  Matrix<Scalar> out(size, size);
  for (Index i = 0; i < size; ++i) {
    const auto& rows = basis.subsets[std::size_t(i)];
    for (Index j = 0; j < size; ++j) {
      const auto& cols = basis.subsets[std::size_t(j)];
      bool zero = false;
      if (upper)
        for (std::size_t k = 0; k < r && !zero; ++k) zero = rows[k] > cols[k];
      out(i, j) = zero ? Scalar(0) : detail::minor_unchecked(a, rows, cols);
    }
  }
  return out;
}

IntMatrix exterior_power(const IntMatrix& a, std::size_t r);

}  // namespace ktorus
