#pragma once

#include "core/cauchy.hpp"
#include "core/matrix.hpp"
#include "core/shape.hpp"

namespace skewrank {

using Tableau = std::vector<std::vector<int>>;  // row fillings of a partition

// Column-strict fillings of lambda with entries in 1..n: rows weakly
// increase, columns strictly increase.
std::vector<Tableau> column_strict_tableaux(const Partition& lambda, int n);

// Alternant form: det[(x_i | y)_{lambda_j + n - j}] divided by the
// Vandermonde determinant of x.  Zero when lambda has more than n rows.
// Needs lambda_1 + n - 1 shift values.
Rat double_schur_det(const Partition& lambda, const std::vector<Rat>& x,
                     const std::vector<Rat>& y);

// Tableau form: sum over column-strict T of
// prod over cells c of (x_{T(c)} - y_{T(c) + content(c)}).
Rat double_schur_comb(const Partition& lambda, const std::vector<Rat>& x,
                      const std::vector<Rat>& y);

struct FactorialSchurReport {
  Rat value;  // determinant of the factorial matrix, recovered combinatorially
  Partition lambda;
  std::vector<Rat> x, y;
  long tableau_count = 0;
  bool factors_positive = false;  // every tableau factor strictly positive
};

// Determinant of a zero-free factorial pair computed through the auxiliary
// double Schur instance lambda_j = b_n - b_j + j - n, x_i = a_i - b_n + 1,
// y_j = 1 - j, scaled by vandermonde(x) / prod_k (a_k)_{b_n}.
Rat fc_det_via_double_schur(const SequencePair& p);

// Same substitution through the tableau sum, reporting factor positivity.
FactorialSchurReport factorial_schur_report(const SequencePair& p);

}  // namespace skewrank
