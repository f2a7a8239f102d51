#include "core/rank.hpp"

#include <algorithm>
#include <bit>

namespace skewrank {

DiagonalRankReport diagonal_rank_report(const SkewShape& s) {
  DiagonalRankReport rep;
  for (const Diagonal& d : s.diagonals()) {
    Cell head = d.cells.front();
    bool up = s.contains({head.row - 1, head.col});
    bool left = s.contains({head.row, head.col - 1});
    int sign = 0;
    if (!up && !left) sign = 1;
    if (up && left) sign = -1;
    rep.diagonal_sign.push_back(sign);
    if (sign > 0) rep.d_plus += static_cast<int>(d.cells.size());
    if (sign < 0) rep.d_minus += static_cast<int>(d.cells.size());
  }
  return rep;
}

int rank_diagonal(const SkewShape& s) { return diagonal_rank_report(s).rank(); }

int rank_code(const SkewShape& s) {
  ReducedCode code = reduced_code(s);
  int r = 0;
  for (size_t i = 0; i < code.top.size(); ++i)
    if (code.top[i] == 1 && code.bottom[i] == 0) ++r;
  return r;
}

JTMatrix jt_matrix(const SkewShape& s) {
  JTMatrix m;
  m.order = s.row_count();
  m.subscript.assign(m.order, std::vector<int>(m.order));
  for (int i = 1; i <= m.order; ++i)
    for (int j = 1; j <= m.order; ++j)
      m.subscript[i - 1][j - 1] = s.outer().part(i) - s.inner_part(j) - i + j;
  return m;
}

int jrank(const SkewShape& s) {
  JTMatrix m = jt_matrix(s);
  int r = 0;
  for (int i = 0; i < m.order; ++i) {
    bool has_one = false;
    for (int j = 0; j < m.order && !has_one; ++j) has_one = m.subscript[i][j] == 0;
    if (!has_one) ++r;
  }
  return r;
}

BorderStrip make_border_strip(std::vector<Cell> cells) {
  require(!cells.empty(), errc::reconstruction_invalid, "border strip needs cells");
  for (size_t i = 1; i < cells.size(); ++i) {
    Cell a = cells[i - 1], b = cells[i];
    bool right = b.row == a.row && b.col == a.col + 1;
    bool up = b.col == a.col && b.row == a.row - 1;
    require(right || up, errc::reconstruction_invalid, "border strip steps must go right or up");
  }
  return {std::move(cells)};
}

std::string strip_word(const BorderStrip& s) {
  std::string w;
  for (size_t i = 1; i < s.cells.size(); ++i)
    w += s.cells[i].row == s.cells[i - 1].row ? 'R' : 'U';
  return w;
}

namespace {

// Strip search over bitmasks; cells indexed row-major, so the lowest set bit
// of a mask is the lexicographically least uncovered cell.
struct StripSearch {
  std::vector<Cell> cells;
  std::vector<uint64_t> content_mask;  // per diagonal, aligned with contents
  int lo = 0;

  explicit StripSearch(const SkewShape& s) : cells(s.cells()) {
    lo = s.empty() ? 0 : s.min_content();
    int hi = s.empty() ? -1 : s.max_content();
    content_mask.assign(hi - lo + 1, 0);
    for (size_t i = 0; i < cells.size(); ++i)
      content_mask[content(cells[i]) - lo] |= uint64_t(1) << i;
  }

  int index_of(Cell c, uint64_t avail) const {
    auto it = std::lower_bound(cells.begin(), cells.end(), c);
    if (it == cells.end() || *it != c) return -1;
    int i = static_cast<int>(it - cells.begin());
    return (avail >> i) & 1 ? i : -1;
  }

  void back_chains(Cell x, uint64_t avail, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) const {
    out.push_back(cur);
    for (Cell prev : {Cell{x.row, x.col - 1}, Cell{x.row + 1, x.col}}) {
      int i = index_of(prev, avail);
      if (i < 0) continue;
      cur.push_back(i);
      back_chains(prev, avail, cur, out);
      cur.pop_back();
    }
  }

  void fwd_chains(Cell x, uint64_t avail, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) const {
    out.push_back(cur);
    for (Cell next : {Cell{x.row, x.col + 1}, Cell{x.row - 1, x.col}}) {
      int i = index_of(next, avail);
      if (i < 0) continue;
      cur.push_back(i);
      fwd_chains(next, avail, cur, out);
      cur.pop_back();
    }
  }

  // All strips inside avail that contain cells[anchor].
  std::vector<std::pair<uint64_t, std::vector<int>>> strips_through(int anchor,
                                                                    uint64_t avail) const {
    std::vector<std::vector<int>> back, fwd;
    std::vector<int> scratch;
    back_chains(cells[anchor], avail, scratch, back);
    fwd_chains(cells[anchor], avail, scratch, fwd);
    std::vector<std::pair<uint64_t, std::vector<int>>> out;
    out.reserve(back.size() * fwd.size());
    for (const auto& b : back)
      for (const auto& f : fwd) {
        std::vector<int> idx(b.rbegin(), b.rend());
        idx.push_back(anchor);
        idx.insert(idx.end(), f.begin(), f.end());
        uint64_t mask = 0;
        for (int i : idx) mask |= uint64_t(1) << i;
        out.emplace_back(mask, std::move(idx));
      }
    return out;
  }

  BorderStrip to_strip(const std::vector<int>& idx) const {
    std::vector<Cell> cs;
    cs.reserve(idx.size());
    for (int i : idx) cs.push_back(cells[i]);
    return make_border_strip(std::move(cs));
  }

  // Any strip covers each diagonal at most once, so the largest remaining
  // diagonal multiplicity bounds the strips still needed from below.
  int lower_bound(uint64_t remaining) const {
    int lb = 0;
    for (uint64_t m : content_mask)
      lb = std::max(lb, std::popcount(m & remaining));
    return lb;
  }
};

void check_cell_bound(const SkewShape& s, int cell_bound, const char* op) {
  require(cell_bound <= 64, errc::search_bound_exceeded, "cell bound above 64 unsupported");
  require(s.cell_count() <= cell_bound, errc::search_bound_exceeded,
          std::string(op) + ": shape has " + std::to_string(s.cell_count()) +
              " cells, bound is " + std::to_string(cell_bound));
}

}  // namespace

int min_strip_rank(const SkewShape& s, int cell_bound) {
  check_cell_bound(s, cell_bound, "min_strip_rank");
  if (s.empty()) return 0;
  StripSearch search(s);
  uint64_t full = s.cell_count() == 64 ? ~uint64_t(0)
                                       : (uint64_t(1) << s.cell_count()) - 1;
  int best = s.row_count();  // rows of a skew shape always decompose it

  auto rec = [&](auto&& self, uint64_t remaining, int used) -> void {
    if (!remaining) {
      best = std::min(best, used);
      return;
    }
    if (used + search.lower_bound(remaining) >= best) return;
    int anchor = std::countr_zero(remaining);
    auto options = search.strips_through(anchor, remaining);
    std::stable_sort(options.begin(), options.end(), [](const auto& a, const auto& b) {
      return std::popcount(a.first) > std::popcount(b.first);
    });
    for (const auto& [mask, idx] : options) self(self, remaining & ~mask, used + 1);
  };
  rec(rec, full, 0);
  return best;
}

std::vector<StripDecomposition> enumerate_strip_decompositions(const SkewShape& s,
                                                               int cell_bound) {
  check_cell_bound(s, cell_bound, "enumerate_strip_decompositions");
  std::vector<StripDecomposition> out;
  if (s.empty()) {
    out.push_back({});
    return out;
  }
  StripSearch search(s);
  uint64_t full = (uint64_t(1) << s.cell_count()) - 1;
  std::vector<BorderStrip> cur;

  auto rec = [&](auto&& self, uint64_t remaining) -> void {
    if (!remaining) {
      out.push_back({cur});
      return;
    }
    int anchor = std::countr_zero(remaining);
    for (const auto& [mask, idx] : search.strips_through(anchor, remaining)) {
      cur.push_back(search.to_strip(idx));
      self(self, remaining & ~mask);
      cur.pop_back();
    }
  };
  rec(rec, full);
  return out;
}

}  // namespace skewrank
