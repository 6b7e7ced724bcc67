#pragma once

#include "ktorus/abelian_group.hpp"
#include "ktorus/exterior.hpp"
#include "ktorus/matrix.hpp"
#include "ktorus/smith.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ktorus {

class SmithCache;

/// A mathematical precondition of an operation failed (as opposed to a
/// malformed argument).
struct PreconditionError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Element of GL(n, ℤ): the action of a torus homeomorphism on H¹(𝕋ⁿ) = ℤⁿ.
class TorusAutomorphism {
 public:
  /// Throws PreconditionError("matrix not in GL(n,Z)") unless |det| = 1,
  /// std::invalid_argument if the matrix is not square or empty.
  explicit TorusAutomorphism(IntMatrix m);

  std::size_t n() const { return static_cast<std::size_t>(matrix_.rows()); }
  const IntMatrix& matrix() const { return matrix_; }
  int det() const { return det_; }

 private:
  IntMatrix matrix_;
  int det_ = 1;
};

/// Kernel and cokernel of Λʳ A − I.
struct DegreeData {
  std::size_t r = 0;
  std::size_t kernel_rank = 0;
  AbelianGroup cokernel;
};

struct KTheoryReport {
  std::size_t n = 0;
  AbelianGroup k0;
  AbelianGroup k1;
  std::vector<DegreeData> per_r;
  int det = 1;
  bool unipotent_max_degree = false;
};

/// Λʳ a − I.
template <class Scalar>
Matrix<Scalar> shifted_exterior_power(const Matrix<Scalar>& a, std::size_t r) {
  Matrix<Scalar> m = exterior_power<Scalar>(a, r);
  for (Index i = 0; i < m.rows(); ++i) m(i, i) -= Scalar(1);
  return m;
}

/// The full Jordan block 𝖲ₙ: ones on the diagonal and superdiagonal.
TorusAutomorphism anzai_matrix(std::size_t n);

/// Unit upper-triangular matrix whose strict upper part is read from
/// `exponents` (entries on and below the diagonal are ignored). Every
/// superdiagonal entry must be nonzero.
TorusAutomorphism furstenberg_matrix(std::size_t n, const IntMatrix& exponents);

struct AscendingMatrix {
  TorusAutomorphism automorphism;
  /// Set when k₁ | k₂ | … | k_{n−1} fails; the matrix is still valid.
  bool divisibility_warning = false;
};

/// Unit upper-triangular matrix with superdiagonal k and zeros elsewhere.
AscendingMatrix ascending_matrix(const std::vector<BigInt>& k);

/// K₀ and K₁ of C(𝕋ⁿ) ⋊ ℤ from the Pimsner–Voiculescu sequence:
///   K₀ ≅ ⊕_r coker(Λ²ʳA − I) ⊕ ker(Λ²ʳ⁺¹A − I),
///   K₁ ≅ ⊕_r coker(Λ²ʳ⁺¹A − I) ⊕ ker(Λ²ʳA − I).
/// `cache` (optional) stores the Smith diagonals of every Λʳ A − I.
KTheoryReport k_groups(const TorusAutomorphism& a, SmithCache* cache = nullptr);

/// Σ_r rank ker(Λʳ A − I), by rank computations only.
std::size_t k_rank(const TorusAutomorphism& a);

/// (A − I)ⁿ = 0 and (A − I)ⁿ⁻¹ ≠ 0.
bool is_unipotent_max_degree(const TorusAutomorphism& a);

struct DualityRow {
  std::size_t r = 0;
  AbelianGroup coker_r;
  AbelianGroup coker_dual;  // coker(Λⁿ⁻ʳ A − I)
  bool equal = false;
};

/// Compares coker(Λʳ A − I) with coker(Λⁿ⁻ʳ A − I) for r = 0..n; each
/// cokernel is computed on its own. Requires det A = 1.
std::vector<DualityRow> poincare_check(const TorusAutomorphism& a);

/// K-theory of C*(𝔇ₙ), which coincides with that of the Anzai algebra on 𝕋ⁿ⁺¹.
KTheoryReport dn_k_groups(std::size_t n);

struct AscendingSearch {
  struct Entry {
    std::vector<BigInt> k;
    AbelianGroup k0, k1;
  };
  std::vector<Entry> entries;  // enumeration order
  /// Groups of ≥ 2 parameter tuples sharing (K₀, K₁), ordered by first member.
  std::vector<std::vector<std::vector<BigInt>>> collisions;
};

/// All chains 1 ≤ k₁ | k₂ | … | k_{n−1} ≤ k_max, grouped by (K₀, K₁).
AscendingSearch search_ascending(std::size_t n, long long k_max);

}  // namespace ktorus
