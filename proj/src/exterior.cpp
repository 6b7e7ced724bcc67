#include "ktorus/exterior.hpp"

namespace ktorus {

SubsetBasis subsets_lex(std::size_t n, std::size_t r) {
  if (r > n) throw std::invalid_argument("subsets_lex: r exceeds n");
  SubsetBasis basis{n, r, {}};
  std::vector<std::size_t> current(r);
  for (std::size_t k = 0; k < r; ++k) current[k] = k;
  for (;;) {
    basis.subsets.push_back(current);
    // Advance the rightmost position that still has room.
    std::size_t k = r;
    while (k > 0 && current[k - 1] == n - r + (k - 1)) --k;
    if (k == 0) break;
    ++current[k - 1];
    for (std::size_t m = k; m < r; ++m) current[m] = current[m - 1] + 1;
  }
  return basis;
}

SubsetBasis subsets_lex(long long n, long long r) {
  if (n < 0 || r < 0) throw std::invalid_argument("subsets_lex: negative argument");
  return subsets_lex(static_cast<std::size_t>(n), static_cast<std::size_t>(r));
}

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  BigInt c = 1;
  for (std::size_t i = 1; i <= k; ++i) c = c * BigInt(n - k + i) / BigInt(i);
  return c;
}

namespace detail {
void check_index_set(std::span<const std::size_t> set, Index bound) {
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (set[k] >= static_cast<std::size_t>(bound))
      throw std::invalid_argument("minor: index out of range");
    if (k > 0 && set[k] <= set[k - 1])
      throw std::invalid_argument("minor: index set not strictly increasing");
  }
}
}  // namespace detail

BigInt minor(const IntMatrix& a, std::span<const std::size_t> rows,
             std::span<const std::size_t> cols) {
  return with_fast_path([&]<class S>() { return to_big(minor<S>(convert<S>(a), rows, cols)); });
}

IntMatrix exterior_power(const IntMatrix& a, std::size_t r) {
  return with_fast_path(
      [&]<class S>() { return convert<BigInt>(exterior_power<S>(convert<S>(a), r)); });
}

}  // namespace ktorus
