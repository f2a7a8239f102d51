#pragma once

#include <compare>
#include <string>
#include <vector>

#include "core/errors.hpp"

namespace skewrank {

// Integer partition, canonical form: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  // Accepts trailing zeros, rejects negative or increasing part lists.
  explicit Partition(std::vector<int> parts);

  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const;  // 1-indexed, 0 beyond the length
  int sum() const;
  const std::vector<int>& parts() const { return parts_; }
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

struct Cell {
  int row = 0, col = 0;  // 1-indexed, row 1 at the top
  auto operator<=>(const Cell&) const = default;
};

inline int content(Cell c) { return c.col - c.row; }

struct Diagonal {
  int content = 0;
  std::vector<Cell> cells;  // increasing row
};

struct NormalizationRecord {
  int rows_removed = 0;
  int cols_removed = 0;
  bool changed() const { return rows_removed > 0 || cols_removed > 0; }
};

// Skew diagram outer/inner in basic form: every row and every column of the
// bounding box contains at least one cell.  Constructed via make_skew, which
// deletes empty rows and columns and records how many it removed.
class SkewShape {
 public:
  SkewShape() = default;

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int inner_part(int i) const { return inner_.part(i); }  // padded with zeros
  const NormalizationRecord& normalization() const { return norm_; }

  int row_count() const { return outer_.length(); }
  int col_count() const { return outer_.part(1); }
  int cell_count() const;
  bool empty() const { return outer_.length() == 0; }

  bool contains(Cell c) const;
  std::vector<Cell> cells() const;  // row-major order
  int min_content() const { return 1 - row_count(); }
  int max_content() const { return col_count() - 1; }
  // Nonempty diagonals in increasing content order.
  std::vector<Diagonal> diagonals() const;
  std::vector<int> diagonal_contents() const;
  bool connected() const;

  std::string str() const;
  bool operator==(const SkewShape& o) const {
    return outer_ == o.outer_ && inner_ == o.inner_;
  }

  friend SkewShape make_skew(const Partition& outer, const Partition& inner);

 private:
  Partition outer_, inner_;
  NormalizationRecord norm_;
};

// Validates containment, then normalizes to basic form.
SkewShape make_skew(const Partition& outer, const Partition& inner = {});

// Text form "6,5,5,3/2,1,1"; no slash for a straight shape; "0" when empty.
SkewShape parse_shape(const std::string& text);
Partition parse_partition(const std::string& text);
std::string format_partition(const Partition& p);

// 0/1 boundary words of the inner and outer partitions read off the common
// bounding frame, both of length row_count + col_count.  A vertical boundary
// step is written 1, a horizontal one 0; positions run along increasing
// content.  The words share their number of 1s (= row_count) and of 0s.
struct ReducedCode {
  std::vector<int> top;     // inner boundary
  std::vector<int> bottom;  // outer boundary
};

ReducedCode reduced_code(const SkewShape& s);

}  // namespace skewrank
