#pragma once

#include <string>
#include <vector>

#include "tropid/matrix.hpp"

namespace testutil {

// Build a matrix from entry strings, e.g. mat({{"0", "1"}, {"-inf", "2"}}).
inline tropid::TropMatrix mat(const std::vector<std::vector<std::string>>& rows) {
  tropid::TropMatrix m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      m.at(i, j) = tropid::TropValue::parse(rows[i][j]);
  return m;
}

}  // namespace testutil
