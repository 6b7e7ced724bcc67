#include "ktorus/smith.hpp"

namespace ktorus {

IntMatrix SmithForm::diagonal_matrix(Index rows, Index cols) const {
  IntMatrix d = IntMatrix::Zero(rows, cols);
  for (std::size_t i = 0; i < diag.size(); ++i) {
    const auto k = static_cast<Index>(i);
    d(k, k) = diag[i];
  }
  return d;
}

SmithForm smith_normal_form(const IntMatrix& m, bool want_transforms) {
  return with_fast_path(
      [&]<class S>() { return smith_normal_form<S>(convert<S>(m), want_transforms); });
}

AbelianGroup cokernel_from_smith(const SmithForm& s, Index size) {
  AbelianGroup g;
  g.free_rank = static_cast<std::size_t>(size - s.rank);
  for (Index i = 0; i < s.rank; ++i)
    if (s.diag[static_cast<std::size_t>(i)] > 1)
      g.torsion.push_back(s.diag[static_cast<std::size_t>(i)]);
  return g;
}

AbelianGroup cokernel(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("cokernel: matrix not square");
  return cokernel_from_smith(smith_normal_form(m), m.rows());
}

Index kernel_rank(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("kernel_rank: matrix not square");
  return m.cols() - rank(m);
}

}  // namespace ktorus
