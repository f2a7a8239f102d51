#include "core/schur.hpp"

namespace skewrank {

Poly h_spec(int k) {
  if (k < 0) return {};
  Poly p(1);
  if (k == 0) return p;
  Poly t = Poly::variable();
  for (int i = 0; i < k; ++i) p = p * (t + Poly(i));
  Rat scale{Int(1), factorial(static_cast<unsigned long>(k))};
  return p.scaled(scale);
}

MatP jt_spec_matrix(const SkewShape& s) {
  JTMatrix jt = jt_matrix(s);
  MatP m(jt.order, jt.order);
  for (int i = 0; i < jt.order; ++i)
    for (int j = 0; j < jt.order; ++j) m.at(i, j) = h_spec(jt.subscript[i][j]);
  return m;
}

Poly skew_schur_spec(const SkewShape& s) { return det_poly(jt_spec_matrix(s)); }

int zrank(const SkewShape& s) {
  Poly p = skew_schur_spec(s);
  require(!p.is_zero(), errc::theorem_violation,
          "specialization of " + s.str() + " is identically zero");
  return p.low_index();
}

SkewShape ribbon_to_skew(const BorderStrip& strip) {
  const auto& cells = strip.cells;
  int top = strip.q().row, left = strip.p().col;
  int rows = strip.p().row - top + 1;
  std::vector<int> lam(rows, 0), mu(rows, 0);
  for (size_t i = 0; i < cells.size(); ++i) {
    int r = cells[i].row - top;
    int c = cells[i].col - left + 1;
    if (lam[r] == 0) mu[r] = c - 1;  // leftmost cell of the row (cells are p-to-q ordered)
    lam[r] = std::max(lam[r], c);
  }
  SkewShape s = make_skew(Partition(std::move(lam)), Partition(std::move(mu)));
  require(!s.normalization().changed(), errc::reconstruction_invalid,
          "strip cells do not form a basic shape");
  require(s.cell_count() == strip.size(), errc::reconstruction_invalid,
          "strip cells do not tile their shape");
  return s;
}

const Poly& RibbonPolyCache::spec_poly(const BorderStrip& strip) {
  std::string key = strip_word(strip);
  auto it = by_word_.find(key);
  if (it == by_word_.end())
    it = by_word_.emplace(std::move(key), skew_schur_spec(ribbon_to_skew(strip))).first;
  return it->second;
}

}  // namespace skewrank
