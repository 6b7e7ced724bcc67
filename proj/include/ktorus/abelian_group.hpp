#pragma once

#include "ktorus/scalar.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace ktorus {

/// Finitely generated abelian group ℤ^free_rank ⊕ ℤ_{t₁} ⊕ … ⊕ ℤ_{t_k} with
/// t₁ | t₂ | … | t_k and every tᵢ ≥ 2.
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;

  /// Builds a group from a (possibly unsorted, possibly containing 1s) list
  /// of cyclic orders; the list is normalized to invariant-factor form.
  static AbelianGroup from_cyclic_orders(std::size_t free_rank,
                                         std::span<const BigInt> orders);

  /// Throws std::invalid_argument unless the torsion list is a valid
  /// invariant-factor chain.
  void validate() const;

  BigInt torsion_order() const;
  bool is_free() const { return torsion.empty(); }

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Direct sum of the parts, re-presented as a single invariant-factor chain.
/// Torsion is split into pairwise coprime primary pieces and reassembled.
AbelianGroup normalize_direct_sum(std::span<const AbelianGroup> parts);

/// Pairwise coprime base (all elements ≥ 2) such that every input > 1 is a
/// product of powers of base elements.
std::vector<BigInt> coprime_base(std::span<const BigInt> values);

/// Human-readable form, e.g. "Z^32 + Z_8^(2)"; the trivial group is "0".
std::string to_string(const AbelianGroup& g);

}  // namespace ktorus
