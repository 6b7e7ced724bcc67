#include "ktorus/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace ktorus {

IntMatrix make_matrix(std::initializer_list<std::initializer_list<long long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  IntMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != c)
      throw std::invalid_argument("make_matrix: ragged rows");
    Index j = 0;
    for (long long v : row) m(i, j++) = BigInt(v);
    ++i;
  }
  return m;
}

IntMatrix make_matrix(const std::vector<std::vector<BigInt>>& rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.front().size());
  IntMatrix m(r, c);
  for (Index i = 0; i < r; ++i) {
    if (static_cast<Index>(rows[i].size()) != c)
      throw std::invalid_argument("make_matrix: ragged rows");
    for (Index j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

BigInt determinant(const IntMatrix& a) {
  return with_fast_path([&]<class S>() { return to_big(determinant<S>(convert<S>(a))); });
}

Index rank(const IntMatrix& m) {
  return with_fast_path([&]<class S>() { return rank<S>(convert<S>(m)); });
}

std::string to_text(const IntMatrix& m) {
  std::ostringstream os;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
  return os.str();
}

}  // namespace ktorus
