#pragma once

#include "ktorus/abelian_group.hpp"

#include <cstddef>
#include <vector>

namespace ktorus {

/// Published K-groups of the Anzai algebras for n = 1..12.
struct Table1Row {
  std::size_t n;
  AbelianGroup k0;
  AbelianGroup k1;
  std::size_t a_n;
};

const std::vector<Table1Row>& table1();

}  // namespace ktorus
