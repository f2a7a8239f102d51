#pragma once

#include <map>

#include "core/shape.hpp"

// Brute-force count of column-strict fillings with entries in 1..t: rows
// weakly increase left to right, columns strictly increase top to bottom.
// Independent of the library's determinant route on purpose.

namespace testsup {

inline long count_column_strict_fillings(const skewrank::SkewShape& s, int t) {
  auto cells = s.cells();
  std::map<skewrank::Cell, int> pos;
  for (size_t i = 0; i < cells.size(); ++i) pos[cells[i]] = static_cast<int>(i);

  std::vector<int> val(cells.size(), 0);
  long count = 0;
  auto rec = [&](auto&& self, size_t k) -> void {
    if (k == cells.size()) {
      ++count;
      return;
    }
    int lo = 1;
    auto left = pos.find({cells[k].row, cells[k].col - 1});
    if (left != pos.end()) lo = std::max(lo, val[left->second]);
    auto up = pos.find({cells[k].row - 1, cells[k].col});
    if (up != pos.end()) lo = std::max(lo, val[up->second] + 1);
    for (int v = lo; v <= t; ++v) {
      val[k] = v;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace testsup
