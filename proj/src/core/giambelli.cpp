#include "core/giambelli.hpp"

#include <algorithm>
#include <optional>

#include "core/errors.hpp"

namespace skewrank {
namespace {

int sign_of(const Rat& v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

std::string normalize_word(const std::string& word) {
  std::string w;
  w.reserve(word.size());
  for (char ch : word) {
    if (ch == 'r' || ch == 'R') {
      w.push_back('R');
    } else if (ch == 'u' || ch == 'U') {
      w.push_back('U');
    } else {
      fail(errc::parse_error, "direction word may only contain letters R and U");
    }
  }
  return w;
}

}  // namespace

int CuttingStrip::index_of(int content) const {
  auto it = std::lower_bound(contents.begin(), contents.end(), content);
  if (it == contents.end() || *it != content) return -1;
  return static_cast<int>(it - contents.begin());
}

bool CuttingStrip::consecutive(int alpha, int beta) const {
  int ia = index_of(alpha);
  int ib = index_of(beta);
  require(ia >= 0 && ib >= 0 && ia <= ib, errc::parse_error,
          "content span not inside the cutting strip");
  return contents[ib] - contents[ia] == ib - ia;
}

BorderStrip CuttingStrip::segment(int alpha, int beta) const {
  require(consecutive(alpha, beta), errc::reconstruction_invalid,
          "segment spans a content gap");
  int ia = index_of(alpha);
  int ib = index_of(beta);
  std::vector<Cell> cells(squares.begin() + ia, squares.begin() + ib + 1);
  return make_border_strip(std::move(cells));
}

CuttingStrip make_cutting_strip(const SkewShape& s, const std::string& word) {
  CuttingStrip phi;
  phi.contents = s.diagonal_contents();
  phi.word = normalize_word(word);
  const int k = static_cast<int>(phi.contents.size());
  require(static_cast<int>(phi.word.size()) == std::max(k - 1, 0), errc::parse_error,
          "direction word needs one letter per diagonal junction");
  if (k == 0) return phi;
  int row = 0, col = 0;
  int min_row = 0, min_col = 0;
  phi.squares.push_back({0, 0});
  for (int i = 0; i + 1 < k; ++i) {
    if (phi.word[i] == 'R') {
      ++col;
    } else {
      --row;
    }
    min_row = std::min(min_row, row);
    min_col = std::min(min_col, col);
    phi.squares.push_back({row, col});
  }
  for (Cell& c : phi.squares) {
    c.row += 1 - min_row;
    c.col += 1 - min_col;
  }
  return phi;
}

std::vector<std::string> direction_words(int k) {
  if (k <= 1) return {""};
  require(k <= 26, errc::search_bound_exceeded, "too many diagonals to enumerate words");
  std::vector<std::string> words;
  const long total = 1L << (k - 1);
  words.reserve(total);
  for (long w = 0; w < total; ++w) {
    std::string word(k - 1, 'R');
    for (int i = 0; i + 1 < k; ++i) {
      if ((w >> i) & 1) word[i] = 'U';
    }
    words.push_back(std::move(word));
  }
  return words;
}

OutsideDecomposition outside_decomposition(const SkewShape& s, const std::string& word) {
  OutsideDecomposition d;
  d.phi = make_cutting_strip(s, word);
  const CuttingStrip& phi = d.phi;
  const int k = static_cast<int>(phi.contents.size());

  auto successor = [&](const Cell& c) -> std::optional<Cell> {
    int ci = phi.index_of(content(c));
    if (ci + 1 >= k) return std::nullopt;
    Cell nxt = phi.word[ci] == 'R' ? Cell{c.row, c.col + 1} : Cell{c.row - 1, c.col};
    if (!s.contains(nxt)) return std::nullopt;
    return nxt;
  };
  auto predecessor = [&](const Cell& c) -> std::optional<Cell> {
    int ci = phi.index_of(content(c));
    if (ci == 0) return std::nullopt;
    Cell prv = phi.word[ci - 1] == 'R' ? Cell{c.row, c.col - 1} : Cell{c.row + 1, c.col};
    if (!s.contains(prv)) return std::nullopt;
    return prv;
  };

  int covered = 0;
  for (const Cell& c : s.cells()) {
    if (predecessor(c)) continue;
    std::vector<Cell> chain{c};
    while (auto nxt = successor(chain.back())) chain.push_back(*nxt);
    covered += static_cast<int>(chain.size());
    d.strips.push_back(make_border_strip(std::move(chain)));
  }
  require(covered == s.cell_count(), errc::reconstruction_invalid,
          "strips do not cover the shape");

  std::stable_sort(d.strips.begin(), d.strips.end(),
                   [](const BorderStrip& x, const BorderStrip& y) {
                     return content(x.q()) > content(y.q());
                   });

  std::vector<int> ps, qs;
  for (const BorderStrip& t : d.strips) {
    ps.push_back(content(t.p()));
    qs.push_back(content(t.q()));
    const Cell p = t.p(), q = t.q();
    require(!s.contains({p.row, p.col - 1}) || !s.contains({p.row + 1, p.col}),
            errc::reconstruction_invalid, "strip start off the lower-left boundary");
    require(!s.contains({q.row, q.col + 1}) || !s.contains({q.row - 1, q.col}),
            errc::reconstruction_invalid, "strip end off the upper-right boundary");
  }
  std::sort(ps.begin(), ps.end());
  std::sort(qs.begin(), qs.end());
  require(std::adjacent_find(ps.begin(), ps.end()) == ps.end(),
          errc::reconstruction_invalid, "strip start contents repeat");
  require(std::adjacent_find(qs.begin(), qs.end()) == qs.end(),
          errc::reconstruction_invalid, "strip end contents repeat");
  return d;
}

std::vector<OutsideDecomposition> enumerate_outside_decompositions(const SkewShape& s,
                                                                   int diag_bound) {
  const int k = static_cast<int>(s.diagonal_contents().size());
  require(k <= diag_bound, errc::search_bound_exceeded,
          "shape has more diagonals than the enumeration bound");
  std::vector<OutsideDecomposition> out;
  for (const std::string& word : direction_words(k)) {
    out.push_back(outside_decomposition(s, word));
  }
  return out;
}

HGMatrix hg_matrix(const SkewShape& s, const OutsideDecomposition& d) {
  int total = 0;
  for (const BorderStrip& t : d.strips) total += t.size();
  require(total == s.cell_count(), errc::reconstruction_invalid,
          "decomposition does not match the shape");
  HGMatrix m;
  m.order = d.size();
  m.entries.resize(static_cast<size_t>(m.order) * m.order);
  for (int i = 0; i < m.order; ++i) {
    const int beta = content(d.strips[i].q());
    for (int j = 0; j < m.order; ++j) {
      const int alpha = content(d.strips[j].p());
      HGEntry& e = m.at(i, j);
      e.alpha = alpha;
      e.beta = beta;
      if (alpha == beta + 1) {
        e.kind = EntryKind::one;
      } else if (alpha > beta + 1 || !d.phi.consecutive(alpha, beta)) {
        e.kind = EntryKind::zero;
      } else {
        e.kind = EntryKind::positive;
        e.segment = d.phi.segment(alpha, beta);
      }
    }
  }
  return m;
}

int grank(const SkewShape& s, const OutsideDecomposition& d) {
  HGMatrix m = hg_matrix(s, d);
  int rows = 0;
  for (int i = 0; i < m.order; ++i) {
    bool has_one = false;
    for (int j = 0; j < m.order; ++j) has_one = has_one || m.at(i, j).kind == EntryKind::one;
    if (!has_one) ++rows;
  }
  return rows;
}

Poly hg_det_spec(const SkewShape& s, const OutsideDecomposition& d, RibbonPolyCache* cache) {
  RibbonPolyCache local;
  RibbonPolyCache* rc = cache ? cache : &local;
  HGMatrix hm = hg_matrix(s, d);
  MatP m(hm.order, hm.order);
  for (int i = 0; i < hm.order; ++i) {
    for (int j = 0; j < hm.order; ++j) {
      const HGEntry& e = hm.at(i, j);
      if (e.kind == EntryKind::one) {
        m.at(i, j) = Poly::from_coeffs({Rat(1)});
      } else if (e.kind == EntryKind::positive) {
        m.at(i, j) = rc->spec_poly(e.segment);
      }
    }
  }
  return det_poly(m);
}

LowestOrderReport lowest_order_matrix(const SkewShape& s, const OutsideDecomposition& d) {
  HGMatrix hm = hg_matrix(s, d);
  const int n = hm.order;
  std::vector<char> row_one(n, 0), col_one(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (hm.at(i, j).kind == EntryKind::one) {
        row_one[i] = 1;
        col_one[j] = 1;
      }
    }
  }
  std::vector<int> rows, cols;
  for (int i = 0; i < n; ++i) {
    if (!row_one[i]) rows.push_back(i);
  }
  for (int j = 0; j < n; ++j) {
    if (!col_one[j]) cols.push_back(j);
  }
  require(rows.size() == cols.size(), errc::theorem_violation,
          "one-entries fail to pair rows with columns");
  const int m = static_cast<int>(rows.size());

  // Column tags sort increasing; row tags arrive decreasing from the strip order.
  std::stable_sort(cols.begin(), cols.end(), [&](int x, int y) {
    return content(d.strips[x].p()) < content(d.strips[y].p());
  });

  LowestOrderReport rep;
  rep.one_rows = n - m;
  rep.matrix = MatQ(m, m);
  for (int i = 0; i < m; ++i) {
    rep.a.push_back(Rat(content(d.strips[rows[i]].q()) + 1));
    rep.b.push_back(Rat(content(d.strips[cols[i]].p())));
  }
  for (int i = 0; i + 1 < m; ++i) {
    require(rep.a[i] > rep.a[i + 1] && rep.b[i] < rep.b[i + 1], errc::theorem_violation,
            "surviving tags are not strictly sorted");
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const HGEntry& e = hm.at(rows[i], cols[j]);
      require(e.kind != EntryKind::one, errc::theorem_violation,
              "one-entry among surviving rows");
      if (e.kind == EntryKind::positive) {
        Rat v(e.segment.height() % 2 == 0 ? 1 : -1);
        v /= rep.a[i] - rep.b[j];
        rep.matrix.at(i, j) = v;
      }
    }
  }
  rep.det = det(rep.matrix);
  require(rep.det != 0, errc::theorem_violation, "lowest-order matrix is singular");
  rep.omega = omega(rep.matrix);
  rep.sign = sign_of(rep.det);

  // Content runs split the surviving matrix into blocks; entries across runs
  // span a gap and vanish.  Inside a run the square signs of the cutting
  // strip factor out and leave a restricted Cauchy matrix.
  const std::vector<int>& cs = d.phi.contents;
  std::vector<int> run_of(cs.size(), 0);
  for (size_t i = 1; i < cs.size(); ++i) {
    run_of[i] = run_of[i - 1] + (cs[i] != cs[i - 1] + 1 ? 1 : 0);
  }
  auto run_of_content = [&](int c) { return run_of[d.phi.index_of(c)]; };
  auto phi_row_sign = [&](int c) {
    return d.phi.squares[d.phi.index_of(c)].row % 2 == 0 ? 1 : -1;
  };

  const int run_count = cs.empty() ? 0 : run_of.back() + 1;
  Rat block_product(1);
  for (int run = 0; run < run_count; ++run) {
    std::vector<int> ri, cj;
    for (int i = 0; i < m; ++i) {
      if (run_of_content(content(d.strips[rows[i]].q())) == run) ri.push_back(i);
    }
    for (int j = 0; j < m; ++j) {
      if (run_of_content(content(d.strips[cols[j]].p())) == run) cj.push_back(j);
    }
    require(ri.size() == cj.size(), errc::theorem_violation,
            "content run has unbalanced rows and columns");
    if (ri.empty()) continue;
    std::vector<Rat> a, b;
    for (int i : ri) a.push_back(rep.a[i]);
    for (int j : cj) b.push_back(rep.b[j]);
    SequencePair pair = restricted_pair(a, b);
    MatQ cm = restricted_cauchy(pair);
    for (size_t x = 0; x < ri.size(); ++x) {
      const int sr = phi_row_sign(content(d.strips[rows[ri[x]]].q()));
      for (size_t y = 0; y < cj.size(); ++y) {
        const int sc = phi_row_sign(content(d.strips[cols[cj[y]]].p()));
        require(rep.matrix.at(ri[x], cj[y]) == Rat(sr * sc) * cm.at(x, y),
                errc::theorem_violation, "block entry differs from Cauchy form");
      }
    }
    for (int i = 0; i < m; ++i) {
      const bool row_in = run_of_content(content(d.strips[rows[i]].q())) == run;
      for (int j = 0; j < m; ++j) {
        const bool col_in = run_of_content(content(d.strips[cols[j]].p())) == run;
        if (row_in != col_in) {
          require(rep.matrix.at(i, j) == 0, errc::theorem_violation,
                  "nonzero entry across content runs");
        }
      }
    }
    rep.run_blocks.push_back(rc_det(pair));
    block_product *= rep.run_blocks.back().det;
  }
  Rat abs_det = rep.det < 0 ? Rat(-rep.det) : rep.det;
  Rat abs_prod = block_product < 0 ? Rat(-block_product) : block_product;
  require(abs_det == abs_prod, errc::theorem_violation,
          "block determinants do not multiply to the full determinant");
  return rep;
}

PQReport pq_report(const std::vector<BorderStrip>& strips) {
  PQReport r;
  for (const BorderStrip& t : strips) {
    r.p_contents.push_back(content(t.p()));
    r.q_shifted.push_back(content(t.q()) + 1);
  }
  std::sort(r.p_contents.begin(), r.p_contents.end());
  std::sort(r.q_shifted.begin(), r.q_shifted.end());
  r.endpoint_collision =
      std::adjacent_find(r.p_contents.begin(), r.p_contents.end()) != r.p_contents.end() ||
      std::adjacent_find(r.q_shifted.begin(), r.q_shifted.end()) != r.q_shifted.end();
  std::set_difference(r.p_contents.begin(), r.p_contents.end(), r.q_shifted.begin(),
                      r.q_shifted.end(), std::back_inserter(r.p_minus_q));
  std::set_difference(r.q_shifted.begin(), r.q_shifted.end(), r.p_contents.begin(),
                      r.p_contents.end(), std::back_inserter(r.q_minus_p));
  r.intersection_size = static_cast<int>(strips.size() - r.p_minus_q.size());
  return r;
}

}  // namespace skewrank
