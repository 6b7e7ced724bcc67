#include "ktorus/rank_sequence.hpp"

#include "ktorus/ktheory.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ktorus {

std::string to_string(RankMethod m) {
  switch (m) {
    case RankMethod::matrix:
      return "matrix";
    case RankMethod::partition:
      return "partition";
    case RankMethod::constant_term:
      return "constant-term";
    case RankMethod::subset_sum:
      return "subset-sum";
  }
  return "?";
}

RankMethod parse_rank_method(const std::string& name) {
  if (name == "matrix") return RankMethod::matrix;
  if (name == "partition") return RankMethod::partition;
  if (name == "constant-term" || name == "constant_term") return RankMethod::constant_term;
  if (name == "subset-sum" || name == "subset_sum") return RankMethod::subset_sum;
  throw std::invalid_argument("unknown rank method: " + name);
}

// LaurentPoly ----------------------------------------------------------------

LaurentPoly::LaurentPoly(long long min_degree, std::vector<BigInt> coeffs)
    : min_degree_(min_degree), coeffs_(std::move(coeffs)) {
  trim();
}

LaurentPoly LaurentPoly::constant(const BigInt& c) { return LaurentPoly(0, {c}); }

LaurentPoly LaurentPoly::one_plus_power(long long e) {
  if (e == 0) return constant(2);
  std::vector<BigInt> c(static_cast<std::size_t>(std::llabs(e)) + 1, BigInt(0));
  c.front() = 1;
  c.back() = 1;
  return LaurentPoly(std::min(0LL, e), std::move(c));
}

long long LaurentPoly::max_degree() const {
  return min_degree_ + static_cast<long long>(coeffs_.size()) - 1;
}

BigInt LaurentPoly::coefficient(long long degree) const {
  if (is_zero() || degree < min_degree_ || degree > max_degree()) return 0;
  return coeffs_[static_cast<std::size_t>(degree - min_degree_)];
}

void LaurentPoly::trim() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    min_degree_ = 0;
    return;
  }
  while (coeffs_.back() == 0) coeffs_.pop_back();
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  min_degree_ += static_cast<long long>(lead);
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::vector<BigInt> c(x.coeffs_.size() + y.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) c[i + j] += x.coeffs_[i] * y.coeffs_[j];
  }
  return LaurentPoly(x.min_degree_ + y.min_degree_, std::move(c));
}

// Partition counts -----------------------------------------------------------

namespace {

// dp[c][s] = number of c-element subsets of {1..n} with sum s, for c ≤ max_r
// and s ≤ max_k.
std::vector<std::vector<BigInt>> subset_table(std::size_t n, std::size_t max_r,
                                              std::size_t max_k) {
  std::vector<std::vector<BigInt>> dp(max_r + 1, std::vector<BigInt>(max_k + 1, BigInt(0)));
  dp[0][0] = 1;
  for (std::size_t item = 1; item <= n; ++item)
    for (std::size_t c = std::min(item, max_r); c >= 1; --c)
      for (std::size_t s = max_k; s >= item; --s)
        if (dp[c - 1][s - item] != 0) dp[c][s] += dp[c - 1][s - item];
  return dp;
}

}  // namespace

BigInt partition_count(long long n, long long r, long long k) {
  if (n < 0 || r < 0 || k < 0 || r > n) return 0;
  const long long max_sum = n * (n + 1) / 2;
  if (k > max_sum) return 0;
  return subset_table(std::size_t(n), std::size_t(r), std::size_t(k))[std::size_t(r)]
                     [std::size_t(k)];
}

std::vector<std::vector<BigInt>> partition_table(std::size_t n) {
  return subset_table(n, n, n * (n + 1) / 2);
}

RankResult a_n_partitions(std::size_t n) {
  if (n == 0) throw std::invalid_argument("a_n: n must be >= 1");
  const auto table = partition_table(n);
  BigInt total = 0;
  for (std::size_t r = 0; r <= n; ++r) total += table[r][r * (n + 1) / 2];
  return {n, total, RankMethod::partition};
}

RankResult a_n_constant_term(std::size_t n) {
  if (n == 0) throw std::invalid_argument("a_n: n must be >= 1");
  const auto m = static_cast<long long>(n / 2);
  LaurentPoly product = LaurentPoly::constant(1);
  if (n % 2 == 1) {
    for (long long j = -m; j <= m; ++j) product = product * LaurentPoly::one_plus_power(j);
  } else {
    product = LaurentPoly::one_plus_power(1);
    for (long long j = -m + 1; j <= m; ++j)
      product = product * LaurentPoly::one_plus_power(2 * j - 1);
  }
  return {n, product.constant_term(), RankMethod::constant_term};
}

BigInt count_subsets_with_sum(const std::vector<long long>& values, long long target) {
  long long reach = 0;
  for (long long v : values) reach += std::llabs(v);
  if (std::llabs(target) > reach) return 0;
  // ways[s + reach] = number of subsets of the values seen so far with sum s.
  std::vector<BigInt> ways(static_cast<std::size_t>(2 * reach + 1), BigInt(0));
  ways[static_cast<std::size_t>(reach)] = 1;
  for (long long v : values) {
    std::vector<BigInt> next = ways;
    for (long long s = -reach; s <= reach; ++s) {
      const long long from = s - v;
      if (from < -reach || from > reach) continue;
      const BigInt& w = ways[static_cast<std::size_t>(from + reach)];
      if (w != 0) next[static_cast<std::size_t>(s + reach)] += w;
    }
    ways = std::move(next);
  }
  return ways[static_cast<std::size_t>(target + reach)];
}

RankResult a_n_subset_sum(std::size_t n) {
  if (n == 0) throw std::invalid_argument("a_n: n must be >= 1");
  const auto m = static_cast<long long>(n / 2);
  std::vector<long long> ground;
  if (n % 2 == 1) {
    for (long long k = -m; k <= m; ++k) ground.push_back(k);
    return {n, count_subsets_with_sum(ground, 0), RankMethod::subset_sum};
  }
  for (long long k = -m + 1; k <= m; ++k) ground.push_back(2 * k - 1);
  return {n, count_subsets_with_sum(ground, 0) + count_subsets_with_sum(ground, 1),
          RankMethod::subset_sum};
}

RankResult a_n_matrix(std::size_t n) {
  if (n == 0) throw std::invalid_argument("a_n: n must be >= 1");
  return {n, BigInt(k_rank(anzai_matrix(n))), RankMethod::matrix};
}

RankResult a_n(std::size_t n, RankMethod method) {
  switch (method) {
    case RankMethod::matrix:
      return a_n_matrix(n);
    case RankMethod::partition:
      return a_n_partitions(n);
    case RankMethod::constant_term:
      return a_n_constant_term(n);
    case RankMethod::subset_sum:
      return a_n_subset_sum(n);
  }
  throw std::invalid_argument("unknown rank method");
}

// Asymptotics ----------------------------------------------------------------

double asymptotic_estimate(std::size_t n) {
  if (n == 0) throw std::invalid_argument("asymptotic_estimate: n must be >= 1");
  const double x = static_cast<double>(n);
  return std::sqrt(24.0 / std::numbers::pi) * std::ldexp(1.0, static_cast<int>(n)) *
         std::pow(x, -1.5);
}

namespace {
double simpson(std::size_t n, std::size_t intervals) {
  const double a = 0.0, b = std::numbers::pi / 2;
  const double h = (b - a) / static_cast<double>(intervals);
  auto f = [n](double x) {
    double p = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
      const double c = std::cos(static_cast<double>(k) * x);
      p *= c * c;
    }
    return p;
  };
  double sum = f(a) + f(b);
  for (std::size_t i = 1; i < intervals; ++i)
    sum += (i % 2 == 1 ? 4.0 : 2.0) * f(a + static_cast<double>(i) * h);
  return sum * h / 3.0;
}
}  // namespace

QuadratureEstimate van_lint_integral(std::size_t n, std::size_t samples) {
  if (n == 0) throw std::invalid_argument("van_lint_integral: n must be >= 1");
  if (samples < 1000) throw std::invalid_argument("van_lint_integral: need >= 1000 samples");
  const std::size_t intervals = (samples + 3) / 4 * 4;
  const double scale = std::ldexp(1.0, static_cast<int>(2 * n + 2)) / std::numbers::pi;
  const double fine = scale * simpson(n, intervals);
  const double coarse = scale * simpson(n, intervals / 2);
  return {fine, std::abs(fine - coarse) / 15.0};
}

}  // namespace ktorus
