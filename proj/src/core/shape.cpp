#include "core/shape.hpp"

#include <algorithm>

#include "core/rational.hpp"

namespace skewrank {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    require(parts_[i] > 0, errc::not_decreasing, "partition parts must be nonnegative");
    require(i == 0 || parts_[i - 1] >= parts_[i], errc::not_decreasing,
            "partition parts must be weakly decreasing");
  }
}

int Partition::part(int i) const {
  return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
}

int Partition::sum() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

SkewShape make_skew(const Partition& outer, const Partition& inner) {
  int len = std::max(outer.length(), inner.length());
  for (int i = 1; i <= len; ++i)
    require(inner.part(i) <= outer.part(i), errc::not_contained,
            "inner shape not contained in outer at row " + std::to_string(i));

  std::vector<int> lam, mu;
  int rows_removed = 0;
  for (int i = 1; i <= outer.length(); ++i) {
    if (outer.part(i) > inner.part(i)) {
      lam.push_back(outer.part(i));
      mu.push_back(inner.part(i));
    } else {
      ++rows_removed;
    }
  }

  // Column j survives when some row covers it; renumber by survivor count.
  int width = lam.empty() ? 0 : lam[0];
  std::vector<int> survivors_upto(width + 1, 0);
  for (int j = 1; j <= width; ++j) {
    bool occupied = false;
    for (size_t r = 0; r < lam.size() && !occupied; ++r)
      occupied = mu[r] < j && j <= lam[r];
    survivors_upto[j] = survivors_upto[j - 1] + (occupied ? 1 : 0);
  }
  int cols_removed = width - (width ? survivors_upto[width] : 0);
  for (size_t r = 0; r < lam.size(); ++r) {
    lam[r] = survivors_upto[lam[r]];
    mu[r] = survivors_upto[mu[r]];
  }

  SkewShape s;
  s.outer_ = Partition(std::move(lam));
  s.inner_ = Partition(std::move(mu));
  s.norm_ = {rows_removed, cols_removed};
  return s;
}

int SkewShape::cell_count() const { return outer_.sum() - inner_.sum(); }

bool SkewShape::contains(Cell c) const {
  return c.row >= 1 && c.row <= row_count() && c.col > inner_.part(c.row) &&
         c.col <= outer_.part(c.row);
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  out.reserve(cell_count());
  for (int i = 1; i <= row_count(); ++i)
    for (int j = inner_.part(i) + 1; j <= outer_.part(i); ++j) out.push_back({i, j});
  return out;
}

std::vector<Diagonal> SkewShape::diagonals() const {
  if (empty()) return {};
  int lo = min_content(), hi = max_content();
  std::vector<Diagonal> buckets(hi - lo + 1);
  for (int c = lo; c <= hi; ++c) buckets[c - lo].content = c;
  for (Cell c : cells()) buckets[content(c) - lo].cells.push_back(c);
  std::vector<Diagonal> out;
  for (auto& d : buckets)
    if (!d.cells.empty()) out.push_back(std::move(d));
  return out;
}

std::vector<int> SkewShape::diagonal_contents() const {
  std::vector<int> out;
  for (const auto& d : diagonals()) out.push_back(d.content);
  return out;
}

bool SkewShape::connected() const {
  auto c = diagonal_contents();
  for (size_t i = 1; i < c.size(); ++i)
    if (c[i] != c[i - 1] + 1) return false;
  return true;
}

std::string SkewShape::str() const {
  std::string out = format_partition(outer_);
  if (inner_.length()) out += "/" + format_partition(inner_);
  return out;
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  for (long v : parse_long_list(text)) {
    require(v >= 0, errc::parse_error, "negative partition part");
    require(v <= 1'000'000, errc::parse_error, "partition part too large");
    parts.push_back(static_cast<int>(v));
  }
  return Partition(std::move(parts));
}

std::string format_partition(const Partition& p) {
  if (p.length() == 0) return "0";
  std::string out;
  for (int i = 0; i < p.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  return out;
}

SkewShape parse_shape(const std::string& text) {
  size_t k = text.find('/');
  if (k == std::string::npos) return make_skew(parse_partition(text));
  return make_skew(parse_partition(text.substr(0, k)), parse_partition(text.substr(k + 1)));
}

namespace {

// Boundary path of nu inside the rows x cols frame, bottom-left to top-right:
// 1 per vertical step (one per row), 0 per horizontal step (one per column).
std::vector<int> boundary_word(const Partition& nu, int rows, int cols) {
  std::vector<int> w;
  w.reserve(rows + cols);
  for (int i = rows; i >= 1; --i) {
    for (int z = nu.part(i) - nu.part(i + 1); z > 0; --z) w.push_back(0);
    w.push_back(1);
  }
  for (int z = cols - nu.part(1); z > 0; --z) w.push_back(0);
  return w;
}

}  // namespace

ReducedCode reduced_code(const SkewShape& s) {
  return {boundary_word(s.inner(), s.row_count(), s.col_count()),
          boundary_word(s.outer(), s.row_count(), s.col_count())};
}

}  // namespace skewrank
