#include "ktorus/ktheory.hpp"

#include "ktorus/cache.hpp"

#include <algorithm>

namespace ktorus {

TorusAutomorphism::TorusAutomorphism(IntMatrix m) : matrix_(std::move(m)) {
  if (matrix_.rows() != matrix_.cols())
    throw std::invalid_argument("matrix is not square");
  if (matrix_.rows() == 0) throw std::invalid_argument("matrix is empty");
  const BigInt d = determinant(matrix_);
  if (d != 1 && d != -1) throw PreconditionError("matrix not in GL(n,Z)");
  det_ = d == 1 ? 1 : -1;
}

TorusAutomorphism anzai_matrix(std::size_t n) {
  if (n == 0) throw std::invalid_argument("anzai_matrix: n must be >= 1");
  const auto size = static_cast<Index>(n);
  IntMatrix m = IntMatrix::Identity(size, size);
  for (Index i = 0; i + 1 < size; ++i) m(i, i + 1) = 1;
  return TorusAutomorphism(std::move(m));
}

TorusAutomorphism furstenberg_matrix(std::size_t n, const IntMatrix& exponents) {
  const auto size = static_cast<Index>(n);
  if (n == 0) throw std::invalid_argument("furstenberg_matrix: n must be >= 1");
  if (exponents.rows() != size || exponents.cols() != size)
    throw std::invalid_argument("furstenberg_matrix: exponent table must be n x n");
  IntMatrix m = IntMatrix::Identity(size, size);
  for (Index i = 0; i < size; ++i)
    for (Index j = i + 1; j < size; ++j) m(i, j) = exponents(i, j);
  for (Index i = 0; i + 1 < size; ++i)
    if (m(i, i + 1) == 0)
      throw std::invalid_argument("furstenberg_matrix: superdiagonal exponent is zero");
  return TorusAutomorphism(std::move(m));
}

AscendingMatrix ascending_matrix(const std::vector<BigInt>& k) {
  const auto size = static_cast<Index>(k.size() + 1);
  IntMatrix m = IntMatrix::Identity(size, size);
  bool warn = false;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] == 0) throw std::invalid_argument("ascending_matrix: zero parameter");
    m(Index(i), Index(i) + 1) = k[i];
    if (i > 0 && k[i] % k[i - 1] != 0) warn = true;
  }
  return {TorusAutomorphism(std::move(m)), warn};
}

namespace {

SmithForm shifted_smith(const IntMatrix& a, std::size_t r, SmithCache* cache) {
  if (cache == nullptr)
    return with_fast_path([&]<class S>() {
      return smith_normal_form<S>(shifted_exterior_power<S>(convert<S>(a), r), false);
    });
  const IntMatrix m = shifted_exterior_power(a, r);
  if (auto hit = cache->load(m)) return *hit;
  SmithForm s = smith_normal_form(m);
  cache->store(m, s);
  return s;
}

}  // namespace

KTheoryReport k_groups(const TorusAutomorphism& a, SmithCache* cache) {
  KTheoryReport report;
  report.n = a.n();
  report.det = a.det();
  report.unipotent_max_degree = is_unipotent_max_degree(a);
  std::vector<AbelianGroup> k0_parts, k1_parts;
  for (std::size_t r = 0; r <= a.n(); ++r) {
    const SmithForm s = shifted_smith(a.matrix(), r, cache);
    const auto size = static_cast<Index>(s.diag.size());
    DegreeData d{r, static_cast<std::size_t>(size - s.rank), cokernel_from_smith(s, size)};
    AbelianGroup kernel{d.kernel_rank, {}};
    if (r % 2 == 0) {
      k0_parts.push_back(d.cokernel);
      k1_parts.push_back(kernel);
    } else {
      k1_parts.push_back(d.cokernel);
      k0_parts.push_back(kernel);
    }
    report.per_r.push_back(std::move(d));
  }
  report.k0 = normalize_direct_sum(k0_parts);
  report.k1 = normalize_direct_sum(k1_parts);
  return report;
}

std::size_t k_rank(const TorusAutomorphism& a) {
  std::size_t total = 0;
  for (std::size_t r = 0; r <= a.n(); ++r) {
    const Index rk = with_fast_path(
        [&]<class S>() { return rank<S>(shifted_exterior_power<S>(convert<S>(a.matrix()), r)); });
    total += static_cast<std::size_t>(binomial(a.n(), r).convert_to<long long>() - rk);
  }
  return total;
}

bool is_unipotent_max_degree(const TorusAutomorphism& a) {
  return with_fast_path([&]<class S>() {
    const Index n = a.matrix().rows();
    const Matrix<S> nil = convert<S>(a.matrix()) - Matrix<S>::Identity(n, n);
    Matrix<S> power = Matrix<S>::Identity(n, n);
    for (Index k = 0; k + 1 < n; ++k) power = (power * nil).eval();
    if (is_zero_matrix(power)) return false;  // (A − I)ⁿ⁻¹ = 0
    return is_zero_matrix(Matrix<S>(power * nil));
  });
}

std::vector<DualityRow> poincare_check(const TorusAutomorphism& a) {
  if (a.det() != 1) throw PreconditionError("duality requires det = 1, got det = -1");
  std::vector<AbelianGroup> cokernels;
  for (std::size_t r = 0; r <= a.n(); ++r)
    cokernels.push_back(cokernel_from_smith(
        shifted_smith(a.matrix(), r, nullptr),
        binomial(a.n(), r).convert_to<Index>()));
  std::vector<DualityRow> rows;
  for (std::size_t r = 0; r <= a.n(); ++r) {
    const AbelianGroup& lhs = cokernels[r];
    const AbelianGroup& rhs = cokernels[a.n() - r];
    rows.push_back({r, lhs, rhs, lhs == rhs});
  }
  return rows;
}

KTheoryReport dn_k_groups(std::size_t n) {
  if (n == 0) throw std::invalid_argument("dn_k_groups: n must be >= 1");
  return k_groups(anzai_matrix(n + 1));
}

namespace {
void divisor_chains(std::size_t length, long long k_max, std::vector<long long>& prefix,
                    std::vector<std::vector<long long>>& out) {
  if (prefix.size() == length) {
    out.push_back(prefix);
    return;
  }
  const long long step = prefix.empty() ? 1 : prefix.back();
  for (long long k = step; k <= k_max; k += step) {
    prefix.push_back(k);
    divisor_chains(length, k_max, prefix, out);
    prefix.pop_back();
  }
}
}  // namespace

AscendingSearch search_ascending(std::size_t n, long long k_max) {
  if (n < 2) throw std::invalid_argument("search_ascending: n must be >= 2");
  if (k_max < 1) throw std::invalid_argument("search_ascending: k_max must be >= 1");
  std::vector<std::vector<long long>> chains;
  std::vector<long long> prefix;
  divisor_chains(n - 1, k_max, prefix, chains);

  AscendingSearch search;
  for (const auto& chain : chains) {
    std::vector<BigInt> k(chain.begin(), chain.end());
    const KTheoryReport report = k_groups(ascending_matrix(k).automorphism);
    search.entries.push_back({std::move(k), report.k0, report.k1});
  }
  std::vector<bool> used(search.entries.size(), false);
  for (std::size_t i = 0; i < search.entries.size(); ++i) {
    if (used[i]) continue;
    std::vector<std::vector<BigInt>> group{search.entries[i].k};
    for (std::size_t j = i + 1; j < search.entries.size(); ++j) {
      if (used[j]) continue;
      if (search.entries[j].k0 == search.entries[i].k0 &&
          search.entries[j].k1 == search.entries[i].k1) {
        used[j] = true;
        group.push_back(search.entries[j].k);
      }
    }
    if (group.size() >= 2) search.collisions.push_back(std::move(group));
  }
  return search;
}

}  // namespace ktorus
