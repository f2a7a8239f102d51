#pragma once

#include "core/matrix.hpp"

namespace skewrank {

enum class PairMode { restricted, factorial };

// Validated input sequences.  In both modes a is strictly decreasing and b
// strictly increasing.  Restricted mode: a_i != b_j everywhere and
// a_i > b_{n+1-i} on the antidiagonal.  Factorial mode: b consists of
// positive integers, a_i != b_j - 1 everywhere and a_i > b_{n+1-i} - 1.
struct SequencePair {
  std::vector<Rat> a;
  std::vector<Rat> b;
  PairMode mode = PairMode::restricted;
  int n() const { return static_cast<int>(a.size()); }
};

SequencePair restricted_pair(std::vector<Rat> a, std::vector<Rat> b);
SequencePair factorial_pair(std::vector<Rat> a, std::vector<Rat> b);

// Entry 1/(a_i - b_j) where a_i > b_j, else 0.
MatQ restricted_cauchy(const SequencePair& p);

// Zero entries of a matrix.
int omega(const MatQ& m);

// No zero row can be spared: a_i > b_{n+2-i} for i = 2..n.
bool is_irreducible(const SequencePair& p);

struct DetReport {
  Rat det;
  int omega = 0;
  int sign = 0;
};

// Determinant with its guaranteed sign; a vanishing determinant or a sign
// other than (-1)^omega raises TheoremViolation.
DetReport rc_det(const SequencePair& p);

// Closed product form, valid only when the matrix has no zero entry.
Rat cauchy_product_formula(const SequencePair& p);

// Sequences of the minor that deletes row i and column j (1-indexed); the
// pair must be irreducible, and the result is again a valid pair.
SequencePair minor_sequences(const SequencePair& p, int i, int j);

// Entry 1/(a_i)_{b_j} (falling factorial) where a_i > b_j - 1, else 0.
MatQ factorial_cauchy(const SequencePair& p);
DetReport fc_det(const SequencePair& p);

// Entry binomial(a_i, b_j)^{-1} where a_i >= b_j, else 0, for positive
// integer sequences; det R = det F * prod_j b_j! is asserted.
MatQ inverse_binomial(const std::vector<long>& a, const std::vector<long>& b);
DetReport ib_det(const std::vector<long>& a, const std::vector<long>& b);

}  // namespace skewrank
