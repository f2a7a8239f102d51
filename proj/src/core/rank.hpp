#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/shape.hpp"

namespace skewrank {

// Sign of a diagonal: +1 when its top-left cell is an outer corner (neither
// the cell above nor to the left lies in the shape), -1 when it is an inner
// corner (both lie in the shape), 0 otherwise.
struct DiagonalRankReport {
  int d_plus = 0;                  // cells on +1 diagonals
  int d_minus = 0;                 // cells on -1 diagonals
  std::vector<int> diagonal_sign;  // aligned with SkewShape::diagonals()
  int rank() const { return d_plus - d_minus; }
};

DiagonalRankReport diagonal_rank_report(const SkewShape& s);
int rank_diagonal(const SkewShape& s);

// Positions where the inner boundary word has a 1 over a 0 in the outer word.
int rank_code(const SkewShape& s);

enum class EntryKind { zero, one, positive };

// Complete homogeneous expansion matrix: entry (i,j) stands for h_k with
// k = outer_i - inner_j - i + j (h_0 = 1, h_k = 0 for k < 0).
struct JTMatrix {
  int order = 0;
  std::vector<std::vector<int>> subscript;
  EntryKind kind(int i, int j) const {
    int k = subscript[i][j];
    return k < 0 ? EntryKind::zero : (k == 0 ? EntryKind::one : EntryKind::positive);
  }
};

JTMatrix jt_matrix(const SkewShape& s);
// Rows of the matrix with no subscript equal to zero.
int jrank(const SkewShape& s);

// Connected skew shape with at most one cell per diagonal, stored from its
// lower-left end p to its upper-right end q (steps go right or up).
struct BorderStrip {
  std::vector<Cell> cells;
  Cell p() const { return cells.front(); }
  Cell q() const { return cells.back(); }
  int size() const { return static_cast<int>(cells.size()); }
  int height() const { return p().row - q().row; }
  bool operator==(const BorderStrip&) const = default;
};

BorderStrip make_border_strip(std::vector<Cell> cells);
// Step letters from p to q: 'R' for right, 'U' for up; empty for one cell.
std::string strip_word(const BorderStrip& s);

struct StripDecomposition {
  std::vector<BorderStrip> strips;
  int size() const { return static_cast<int>(strips.size()); }
};

// Fewest strips over all decompositions of s into border strips.
// Exhaustive branch and bound; shapes above cell_bound cells are rejected.
int min_strip_rank(const SkewShape& s, int cell_bound = 16);

// All decompositions of s into border strips, deterministic order.
std::vector<StripDecomposition> enumerate_strip_decompositions(const SkewShape& s,
                                                               int cell_bound = 10);

}  // namespace skewrank
