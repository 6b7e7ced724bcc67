#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ktorus/rank_sequence.hpp"
#include "oracles.hpp"

#include <cmath>
#include <map>
#include <random>

using namespace ktorus;

namespace {
const std::vector<long> table_ranks{2, 3, 4, 6, 8, 13, 20, 32, 52, 90, 152, 268};

// Coefficients of prod_{i=1..n} (1 + u t^i), expanded term by term.
std::map<std::pair<long, long>, BigInt> expand_generating_function(long n) {
  std::map<std::pair<long, long>, BigInt> poly{{{0, 0}, BigInt(1)}};
  for (long i = 1; i <= n; ++i) {
    auto next = poly;
    for (const auto& [key, c] : poly) next[{key.first + 1, key.second + i}] += c;
    poly = std::move(next);
  }
  return poly;
}
}  // namespace

TEST_CASE("method names") {
  for (auto m : {RankMethod::matrix, RankMethod::partition, RankMethod::constant_term,
                 RankMethod::subset_sum})
    CHECK(parse_rank_method(to_string(m)) == m);
  CHECK(to_string(RankMethod::constant_term) == "constant-term");
  CHECK_THROWS_AS(parse_rank_method("fourier"), std::invalid_argument);
}

TEST_CASE("partition counts") {
  CHECK(partition_count(0, 0, 0) == 1);
  CHECK(partition_count(7, 0, 0) == 1);
  CHECK(partition_count(3, 2, 3) == 1);
  CHECK(partition_count(6, 3, 10) == 3);
  CHECK(partition_count(5, 2, 0) == 0);
  CHECK(partition_count(5, 0, 4) == 0);
  CHECK(partition_count(3, 4, 6) == 0);
  CHECK(partition_count(3, 1, 99) == 0);
  CHECK(partition_count(3, -1, 2) == 0);

  for (int n = 0; n <= 10; ++n)
    for (int r = 0; r <= n; ++r)
      for (int k = 0; k <= n * (n + 1) / 2; ++k)
        REQUIRE(partition_count(n, r, k) == oracle::brute_partition_count(n, r, k));
}

TEST_CASE("partition count identities") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 300; ++trial) {
    const long n = 1 + long(rng() % 25);
    const long r = long(rng() % (n + 1));
    const long k = long(rng() % (n * (n + 1) / 2 + 1));
    const long s = long(rng() % (r + 1));
    CHECK(partition_count(n + 1, r, k + s) >= partition_count(n, r, k));
    CHECK(partition_count(n, r, k) == partition_count(n, n - r, n * (n + 1) / 2 - k));
  }
  for (std::size_t n = 1; n <= 20; ++n) {
    const auto table = partition_table(n);
    CHECK(table[0][0] == 1);
    CHECK(table[n][n * (n + 1) / 2] == 1);
  }
}

TEST_CASE("generating function") {
  for (long n = 0; n <= 8; ++n) {
    const auto poly = expand_generating_function(n);
    const auto table = partition_table(std::size_t(n));
    for (long r = 0; r <= n; ++r)
      for (long k = 0; k <= n * (n + 1) / 2; ++k) {
        const auto it = poly.find({r, k});
        const BigInt expected = it == poly.end() ? BigInt(0) : it->second;
        REQUIRE(table[std::size_t(r)][std::size_t(k)] == expected);
      }
  }
}

TEST_CASE("Laurent polynomials") {
  CHECK(LaurentPoly::one_plus_power(0) == LaurentPoly::constant(2));
  const LaurentPoly p = LaurentPoly::one_plus_power(-1) * LaurentPoly::one_plus_power(0) *
                        LaurentPoly::one_plus_power(1);
  CHECK(p.min_degree() == -1);
  CHECK(p.max_degree() == 1);
  CHECK(p.coeffs() == std::vector<BigInt>{2, 4, 2});
  CHECK(p.constant_term() == 4);
  CHECK(p.coefficient(5) == 0);

  const LaurentPoly zero;
  CHECK(zero.is_zero());
  CHECK((zero * p).is_zero());
  CHECK(LaurentPoly(-2, {0, 0, 3, 0}) == LaurentPoly(0, {3}));
  CHECK((LaurentPoly(0, {1, 1}) * LaurentPoly(0, {1, -1})) == LaurentPoly(0, {1, 0, -1}));
}

TEST_CASE("subset sums") {
  CHECK(count_subsets_with_sum({-1, 0, 1}, 0) == 4);
  CHECK(count_subsets_with_sum({}, 0) == 1);
  CHECK(count_subsets_with_sum({}, 3) == 0);
  std::mt19937_64 rng(79);
  std::uniform_int_distribution<int> v(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> values(rng() % 14);
    for (int& x : values) x = v(rng);
    const int target = v(rng);
    const std::vector<long long> wide(values.begin(), values.end());
    REQUIRE(count_subsets_with_sum(wide, target) == oracle::brute_subset_sum(values, target));
  }
}

TEST_CASE("rank sequence, small n") {
  CHECK(a_n_partitions(1).value == 2);
  CHECK(a_n_partitions(6).value == 13);
  CHECK(a_n_partitions(11).value == 152);
  CHECK(a_n_constant_term(1).value == 2);
  CHECK(a_n_constant_term(3).value == 4);
  CHECK(a_n_constant_term(12).value == 268);
  CHECK(a_n_subset_sum(3).value == 4);
  CHECK(a_n_subset_sum(5).value == 8);
  CHECK(a_n_subset_sum(9).value == 52);
  CHECK(a_n_matrix(7).value == 20);
  CHECK(a_n(4, RankMethod::subset_sum).method == RankMethod::subset_sum);
  CHECK_THROWS_AS(a_n_partitions(0), std::invalid_argument);
  CHECK_THROWS_AS(a_n_constant_term(0), std::invalid_argument);
  CHECK_THROWS_AS(a_n_subset_sum(0), std::invalid_argument);

  for (std::size_t n = 1; n <= table_ranks.size(); ++n)
    for (auto m : {RankMethod::partition, RankMethod::constant_term, RankMethod::subset_sum})
      CHECK(a_n(n, m).value == table_ranks[n - 1]);
  for (std::size_t n = 1; n <= 9; ++n)
    CHECK(a_n_matrix(n).value == table_ranks[n - 1]);
}

TEST_CASE("combinatorial methods agree") {
  BigInt previous = 0;
  for (std::size_t n = 1; n <= 30; ++n) {
    const BigInt p = a_n_partitions(n).value;
    CHECK(a_n_constant_term(n).value == p);
    CHECK(a_n_subset_sum(n).value == p);
    CHECK(p > previous);
    previous = p;
  }
}

TEST_CASE("asymptotics") {
  CHECK(asymptotic_estimate(1) == doctest::Approx(2 * std::sqrt(24 / M_PI)).epsilon(1e-12));
  CHECK(asymptotic_estimate(12) == doctest::Approx(272.3).epsilon(1e-3));
  CHECK_THROWS_AS(asymptotic_estimate(0), std::invalid_argument);
  auto deviation = [](std::size_t n) {
    return std::abs(a_n_partitions(n).value.convert_to<double>() / asymptotic_estimate(n) - 1);
  };
  CHECK(deviation(60) < deviation(40));
  CHECK(deviation(59) < deviation(39));
  CHECK(deviation(40) < 0.2);
}

TEST_CASE("van Lint integral") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto est = van_lint_integral(n, 4000);
    const double exact = a_n_partitions(2 * n + 1).value.convert_to<double>();
    CHECK(est.value == doctest::Approx(exact).epsilon(1e-6));
    CHECK(est.error_estimate >= 0);
    CHECK(est.error_estimate < 1e-3);
  }
  CHECK_THROWS_AS(van_lint_integral(1, 999), std::invalid_argument);
  CHECK_THROWS_AS(van_lint_integral(0, 1000), std::invalid_argument);
}
