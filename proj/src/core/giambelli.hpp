#pragma once

#include "core/cauchy.hpp"
#include "core/schur.hpp"

namespace skewrank {

// Staircase of one square per diagonal of the shape, glued by a direction
// word: letter i ('R' or 'U') places the square of the (i+1)-th diagonal
// right of, or above, the square of the i-th.  Squares are normalized to a
// 1-based bounding box; only row differences inside a content run matter.
struct CuttingStrip {
  std::vector<int> contents;  // strictly increasing shape contents
  std::string word;           // size k-1 for k diagonals
  std::vector<Cell> squares;  // squares[i] belongs to contents[i]

  int index_of(int content) const;  // 0-based, -1 when absent
  // Ribbon segment spanning contents alpha..beta along the strip.
  BorderStrip segment(int alpha, int beta) const;
  bool consecutive(int alpha, int beta) const;  // no content gap in between
};

CuttingStrip make_cutting_strip(const SkewShape& s, const std::string& word);

// All direction words for k diagonals in a fixed deterministic order.
std::vector<std::string> direction_words(int k);

// Partition of the shape into border strips that all follow the cutting
// strip of the word; strips are listed by decreasing end-square content.
struct OutsideDecomposition {
  CuttingStrip phi;
  std::vector<BorderStrip> strips;
  int size() const { return static_cast<int>(strips.size()); }
};

OutsideDecomposition outside_decomposition(const SkewShape& s, const std::string& word);
std::vector<OutsideDecomposition> enumerate_outside_decompositions(const SkewShape& s,
                                                                   int diag_bound = 12);

// Determinant pattern over the decomposition: entry (i,j) covers contents
// [alpha, beta] with alpha the start content of strip j and beta the end
// content of strip i.  It is a ribbon segment when alpha <= beta and the
// span has no gap, the constant 1 when alpha = beta + 1, otherwise 0.
struct HGEntry {
  EntryKind kind = EntryKind::zero;
  int alpha = 0, beta = 0;
  BorderStrip segment;  // only for EntryKind::positive
};

struct HGMatrix {
  int order = 0;
  std::vector<HGEntry> entries;  // row-major
  const HGEntry& at(int i, int j) const { return entries[i * order + j]; }
  HGEntry& at(int i, int j) { return entries[i * order + j]; }
};

HGMatrix hg_matrix(const SkewShape& s, const OutsideDecomposition& d);

// Rows of the pattern without a constant-one entry.
int grank(const SkewShape& s, const OutsideDecomposition& d);

// Determinant of the pattern with every ribbon segment replaced by its
// counting polynomial; equals skew_schur_spec(s) for every decomposition.
Poly hg_det_spec(const SkewShape& s, const OutsideDecomposition& d,
                 RibbonPolyCache* cache = nullptr);

// Matrix of lowest-order coefficients: after pairing off the rows and
// columns that meet a one-entry, the ribbon entry on [alpha, beta] becomes
// (-1)^height / (beta + 1 - alpha).  Extracting the per-square signs turns
// each content-run block into a restricted Cauchy matrix, which is asserted
// together with its sign law and the block product |det|.
struct LowestOrderReport {
  MatQ matrix;         // surviving rows by decreasing a, columns by increasing b
  std::vector<Rat> a;  // row tags: end content + 1
  std::vector<Rat> b;  // column tags: start content
  Rat det;
  int omega = 0;
  int sign = 0;
  int one_rows = 0;  // rows paired off against one-entries
  std::vector<DetReport> run_blocks;
};

LowestOrderReport lowest_order_matrix(const SkewShape& s, const OutsideDecomposition& d);

// Start and end contents of a strip family as sorted multisets (ends are
// shifted by one); their multiset differences are decomposition invariants.
struct PQReport {
  std::vector<int> p_contents;
  std::vector<int> q_shifted;
  std::vector<int> p_minus_q;
  std::vector<int> q_minus_p;
  int intersection_size = 0;
  bool endpoint_collision = false;  // a repeated value inside either multiset
};

PQReport pq_report(const std::vector<BorderStrip>& strips);

}  // namespace skewrank
