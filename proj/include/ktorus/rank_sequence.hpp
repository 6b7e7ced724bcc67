#pragma once

#include "ktorus/scalar.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace ktorus {

enum class RankMethod { matrix, partition, constant_term, subset_sum };

std::string to_string(RankMethod m);
/// Accepts "matrix", "partition", "constant-term"/"constant_term",
/// "subset-sum"/"subset_sum".
RankMethod parse_rank_method(const std::string& name);

/// aₙ, the common rank of K₀ and K₁ of the Anzai algebra on 𝕋ⁿ, tagged with
/// the method that produced it.
struct RankResult {
  std::size_t n = 0;
  BigInt value;
  RankMethod method = RankMethod::partition;
};

/// Laurent polynomial Σ coeffs[i] z^(min_degree + i) with trimmed ends.
class LaurentPoly {
 public:
  LaurentPoly() = default;  // zero polynomial
  LaurentPoly(long long min_degree, std::vector<BigInt> coeffs);

  static LaurentPoly constant(const BigInt& c);
  /// 1 + z^e (which is 2 when e = 0).
  static LaurentPoly one_plus_power(long long e);

  long long min_degree() const { return min_degree_; }
  long long max_degree() const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  BigInt coefficient(long long degree) const;
  BigInt constant_term() const { return coefficient(0); }

  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void trim();

  long long min_degree_ = 0;
  std::vector<BigInt> coeffs_;
};

/// P(n, r, k): ways to write k as a sum of r distinct integers in 1..n.
/// P(n, 0, 0) = 1; out-of-range arguments give 0.
BigInt partition_count(long long n, long long r, long long k);

/// All P(n, r, k) for one n, as table[r][k] with k ≤ n(n+1)/2.
std::vector<std::vector<BigInt>> partition_table(std::size_t n);

/// Σ_r P(n, r, ⌊r(n+1)/2⌋).
RankResult a_n_partitions(std::size_t n);
/// Constant term of ∏_{j=−m}^{m}(1+zʲ) for n = 2m+1, or of
/// (1+z)∏_{j=−m+1}^{m}(1+z^{2j−1}) for n = 2m.
RankResult a_n_constant_term(std::size_t n);
/// Number of subsets of {−m..m} with sum 0 (n = 2m+1), or of the odd numbers
/// {−2m+1, …, 2m−1} with sum 0 or 1 (n = 2m).
RankResult a_n_subset_sum(std::size_t n);
/// Rank of the K-groups of the Anzai matrix, by exact matrix ranks.
RankResult a_n_matrix(std::size_t n);

RankResult a_n(std::size_t n, RankMethod method);

/// Number of subsets of `values` whose sum equals `target`.
BigInt count_subsets_with_sum(const std::vector<long long>& values, long long target);

/// √(24/π) · 2ⁿ · n^(−3/2).
double asymptotic_estimate(std::size_t n);

struct QuadratureEstimate {
  double value = 0;
  /// Richardson estimate |S(h) − S(2h)| / 15 of the Simpson error.
  double error_estimate = 0;
};

/// A(n, 0) = (2^(2n+2)/π) ∫₀^{π/2} ∏_{k=1}^{n} cos²(kx) dx by composite
/// Simpson with `samples` subintervals (rounded up to a multiple of 4).
/// A(n, 0) equals a_{2n+1}.
QuadratureEstimate van_lint_integral(std::size_t n, std::size_t samples);

}  // namespace ktorus
