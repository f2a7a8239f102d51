#pragma once

#include <unordered_map>

#include "core/matrix.hpp"
#include "core/rank.hpp"
#include "core/shape.hpp"

namespace skewrank {

// Number of degree-k monomials in t variables as a polynomial in t:
// binomial(t + k - 1, k).  h_spec(0) = 1, h_spec(k) = 0 for k < 0.
Poly h_spec(int k);

// Entrywise h_spec over the subscript matrix of jt_matrix(s).
MatP jt_spec_matrix(const SkewShape& s);

// Count of column-strict fillings of s with entries bounded by t, as a
// polynomial in t (determinant of jt_spec_matrix).
Poly skew_schur_spec(const SkewShape& s);

// Multiplicity of the root t = 0 in skew_schur_spec(s).
int zrank(const SkewShape& s);

// The strip's cells, re-read as a skew shape in its own bounding box.
SkewShape ribbon_to_skew(const BorderStrip& strip);

// Memo for specialization polynomials of ribbons, keyed by step word.
// Not thread safe; use one instance per worker.
class RibbonPolyCache {
 public:
  const Poly& spec_poly(const BorderStrip& strip);

 private:
  std::unordered_map<std::string, Poly> by_word_;
};

}  // namespace skewrank
