#include "ktorus/abelian_group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ktorus {

std::vector<BigInt> coprime_base(std::span<const BigInt> values) {
  std::vector<BigInt> base;
  for (const BigInt& v : values)
    if (abs_value(v) > 1) base.push_back(abs_value(v));
  // Refine until pairwise coprime: a pair (a, b) with g = gcd(a, b) > 1 is
  // replaced by g, a/g, b/g. The product of all elements drops by g.
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    for (std::size_t i = 0; i < base.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
        const BigInt g = gcd(base[i], base[j]);
        if (g == 1) continue;
        const BigInt a = base[i] / g, b = base[j] / g;
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(j));
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(i));
        for (const BigInt& x : {g, a, b})
          if (x > 1) base.push_back(x);
        changed = true;
      }
  }
  return base;
}

AbelianGroup normalize_direct_sum(std::span<const AbelianGroup> parts) {
  AbelianGroup out;
  std::vector<BigInt> orders;
  for (const AbelianGroup& p : parts) {
    out.free_rank += p.free_rank;
    for (const BigInt& t : p.torsion)
      if (t > 1) orders.push_back(t);
  }
  if (orders.empty()) return out;

  // For every base element b, collect the exponent of b in each order.
  const std::vector<BigInt> base = coprime_base(orders);
  std::vector<std::vector<unsigned>> exponents(base.size());
  for (BigInt t : orders) {
    for (std::size_t k = 0; k < base.size(); ++k) {
      unsigned e = 0;
      while (t % base[k] == 0) {
        t /= base[k];
        ++e;
      }
      if (e > 0) exponents[k].push_back(e);
    }
    if (t != 1) throw std::logic_error("coprime base does not cover torsion order");
  }

  // The i-th largest invariant factor is the product over b of the i-th
  // largest b-power.
  std::size_t length = 0;
  for (auto& e : exponents) {
    std::sort(e.begin(), e.end(), std::greater<>());
    length = std::max(length, e.size());
  }
  std::vector<BigInt> chain(length, BigInt(1));
  for (std::size_t k = 0; k < base.size(); ++k)
    for (std::size_t i = 0; i < exponents[k].size(); ++i) {
      BigInt power = 1;
      for (unsigned e = 0; e < exponents[k][i]; ++e) power *= base[k];
      chain[i] *= power;
    }
  std::reverse(chain.begin(), chain.end());
  out.torsion = std::move(chain);
  return out;
}

AbelianGroup AbelianGroup::from_cyclic_orders(std::size_t free_rank,
                                              std::span<const BigInt> orders) {
  AbelianGroup g;
  g.free_rank = free_rank;
  for (const BigInt& o : orders) {
    if (o == 0)
      ++g.free_rank;
    else if (abs_value(o) > 1)
      g.torsion.push_back(abs_value(o));
  }
  return normalize_direct_sum(std::span<const AbelianGroup>(&g, 1));
}

void AbelianGroup::validate() const {
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (torsion[i] < 2)
      throw std::invalid_argument("torsion factor must be >= 2");
    if (i + 1 < torsion.size() && torsion[i + 1] % torsion[i] != 0)
      throw std::invalid_argument("torsion factors do not form a divisibility chain");
  }
}

BigInt AbelianGroup::torsion_order() const {
  BigInt p = 1;
  for (const BigInt& t : torsion) p *= t;
  return p;
}

std::string to_string(const AbelianGroup& g) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " + ";
    first = false;
  };
  if (g.free_rank > 0) {
    sep();
    os << "Z";
    if (g.free_rank > 1) os << "^" << g.free_rank;
  }
  for (std::size_t i = 0; i < g.torsion.size();) {
    std::size_t j = i;
    while (j < g.torsion.size() && g.torsion[j] == g.torsion[i]) ++j;
    sep();
    os << "Z_" << g.torsion[i];
    if (j - i > 1) os << "^(" << (j - i) << ")";
    i = j;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace ktorus
