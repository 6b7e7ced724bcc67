#pragma once

#include "ktorus/abelian_group.hpp"
#include "ktorus/ktheory.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ktorus {

/// Certified rational enclosure lo ≤ θ ≤ hi of the rotation parameter,
/// 0 < lo ≤ hi < 1. Irrationality of θ is the caller's business.
struct ThetaInterval {
  BigRational lo;
  BigRational hi;

  ThetaInterval(BigRational lo, BigRational hi);
  /// Parses "p/q" or a plain integer or decimal such as "0.414213".
  static BigRational parse_rational(const std::string& text);
};

/// Coordinates (a[1] + b[p_θ], c, t) in ℤ² ⊕ ℤ^(rank−2) ⊕ torsion.
struct K0Element {
  BigInt a;
  BigInt b;
  std::vector<BigInt> c;
  std::vector<BigInt> t;  // one coordinate per invariant factor, read mod the factor
};

enum class Sign { positive, zero, negative, indeterminate };

std::string to_string(Sign s);

/// Classifies e against the cone {a + bθ > 0} ∪ {0} of a K₀-group with the
/// given presentation. `indeterminate` covers both an enclosure of a + bθ that
/// straddles 0 and a nonzero element with a = b = 0; neither is in the cone.
/// Throws std::invalid_argument when e does not fit `group` or the group's
/// free rank is below 2.
Sign k0_sign(const K0Element& e, const ThetaInterval& theta, const AbelianGroup& group);

/// true/false when membership in K₀₊ is decided, nullopt when the enclosure
/// is too wide to tell.
std::optional<bool> in_positive_cone(const K0Element& e, const ThetaInterval& theta,
                                     const AbelianGroup& group);

/// One-line explanation of a verdict, e.g. "zero-trace nonzero element, not in K0+".
std::string describe(const K0Element& e, Sign s);

struct TraceRangeReport {
  KTheoryReport k;
  ThetaInterval theta;
  bool furstenberg_class = false;
  std::vector<std::string> warnings;
  std::string trace_range;            // "Z + Z*theta"
  std::optional<std::string> cone;    // omitted when the class check fails
};

TraceRangeReport trace_range_report(const TorusAutomorphism& a, const ThetaInterval& theta);

}  // namespace ktorus
