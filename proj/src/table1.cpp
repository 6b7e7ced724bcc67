#include "ktorus/table1.hpp"

#include <utility>

namespace ktorus {

namespace {

// ℤ^rank ⊕ ⊕ ℤ_k^(m) for each (k, m).
AbelianGroup group(std::size_t rank, std::initializer_list<std::pair<long, std::size_t>> parts) {
  AbelianGroup g{rank, {}};
  for (auto [k, m] : parts)
    for (std::size_t i = 0; i < m; ++i) g.torsion.emplace_back(k);
  return g;
}

}  // namespace

const std::vector<Table1Row>& table1() {
  static const std::vector<Table1Row> rows = {
      {1, group(2, {}), group(2, {}), 2},
      {2, group(3, {}), group(3, {}), 3},
      {3, group(4, {}), group(4, {}), 4},
      {4, group(6, {}), group(6, {}), 6},
      {5, group(8, {}), group(8, {}), 8},
      {6, group(13, {}), group(13, {{2, 1}}), 13},
      {7, group(20, {}), group(20, {}), 20},
      {8, group(32, {{8, 2}}), group(32, {{18, 2}}), 32},
      {9, group(52, {{3, 2}, {9, 2}}), group(52, {{3, 2}, {9, 2}}), 52},
      {10, group(90, {{55, 4}}), group(90, {{11, 2}, {99, 1}, {198, 1}, {2574, 1}}), 90},
      {11, group(152, {{11, 12}, {143, 4}, {286, 2}}),
       group(152, {{11, 12}, {143, 4}, {286, 2}}), 152},
      {12, group(268, {{13, 14}, {26, 4}, {1716, 4}, {3432, 2}, {58344, 2}}),
       group(268, {{13, 4}, {26, 4}, {286, 6}, {4862, 2}, {68068, 2}}), 268},
  };
  return rows;
}

}  // namespace ktorus
