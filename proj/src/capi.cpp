#include "skewrank/skewrank.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "core/cauchy.hpp"
#include "core/double_schur.hpp"
#include "core/errors.hpp"
#include "core/giambelli.hpp"
#include "core/rank.hpp"
#include "core/rational.hpp"
#include "core/schur.hpp"
#include "core/shape.hpp"
#include "core/verify.hpp"

using json = nlohmann::ordered_json;
namespace sk = skewrank;

struct sr_shape {
  sk::SkewShape impl;
};

struct sr_poly {
  sk::Poly impl;
};

namespace {

thread_local std::string t_last_error;

sr_status map_code(sk::errc c) {
  switch (c) {
    case sk::errc::parse_error: return SR_PARSE_ERROR;
    case sk::errc::not_decreasing: return SR_NOT_DECREASING;
    case sk::errc::not_contained: return SR_NOT_CONTAINED;
    case sk::errc::not_monotone: return SR_NOT_MONOTONE;
    case sk::errc::collision_ab: return SR_COLLISION_AB;
    case sk::errc::collision_shifted: return SR_COLLISION_SHIFTED;
    case sk::errc::anti_diagonal_violation: return SR_ANTI_DIAGONAL_VIOLATION;
    case sk::errc::insufficient_y_sequence: return SR_INSUFFICIENT_Y_SEQUENCE;
    case sk::errc::repeated_x: return SR_REPEATED_X;
    case sk::errc::not_square: return SR_NOT_SQUARE;
    case sk::errc::not_irreducible: return SR_NOT_IRREDUCIBLE;
    case sk::errc::has_zero_entries: return SR_HAS_ZERO_ENTRIES;
    case sk::errc::search_bound_exceeded: return SR_SEARCH_BOUND_EXCEEDED;
    case sk::errc::reconstruction_invalid: return SR_RECONSTRUCTION_INVALID;
    case sk::errc::unknown_suite: return SR_UNKNOWN_SUITE;
    case sk::errc::theorem_violation: return SR_THEOREM_VIOLATION;
  }
  return SR_INTERNAL_ERROR;
}

template <typename F>
sr_status guarded(F&& body) {
  try {
    body();
    t_last_error.clear();
    return SR_OK;
  } catch (const sk::error& e) {
    t_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return SR_INTERNAL_ERROR;
  }
}

sr_status null_argument(const char* which) {
  t_last_error = std::string("null argument: ") + which;
  return SR_NULL_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string default_cut(const sk::SkewShape& s) {
  int k = static_cast<int>(s.diagonal_contents().size());
  return std::string(static_cast<size_t>(std::max(k - 1, 0)), 'R');
}

sk::OutsideDecomposition decompose(const sk::SkewShape& s, const char* cut) {
  std::string word = (cut == nullptr || *cut == '\0') ? default_cut(s) : std::string(cut);
  return sk::outside_decomposition(s, word);
}

json rat_list_json(const std::vector<sk::Rat>& v) {
  json arr = json::array();
  for (const sk::Rat& x : v) arr.push_back(sk::format_rat(x));
  return arr;
}

}  // namespace

extern "C" {

const char* sr_version(void) { return "1.0.0"; }

const char* sr_status_name(sr_status status) {
  switch (status) {
    case SR_OK: return "Ok";
    case SR_NULL_ARGUMENT: return "NullArgument";
    case SR_PARSE_ERROR: return "ParseError";
    case SR_NOT_DECREASING: return "NotDecreasing";
    case SR_NOT_CONTAINED: return "NotContained";
    case SR_NOT_MONOTONE: return "NotMonotone";
    case SR_COLLISION_AB: return "CollisionAB";
    case SR_COLLISION_SHIFTED: return "CollisionShifted";
    case SR_ANTI_DIAGONAL_VIOLATION: return "AntiDiagonalViolation";
    case SR_INSUFFICIENT_Y_SEQUENCE: return "InsufficientYSequence";
    case SR_REPEATED_X: return "RepeatedX";
    case SR_NOT_SQUARE: return "NotSquare";
    case SR_NOT_IRREDUCIBLE: return "NotIrreducible";
    case SR_HAS_ZERO_ENTRIES: return "HasZeroEntries";
    case SR_SEARCH_BOUND_EXCEEDED: return "SearchBoundExceeded";
    case SR_RECONSTRUCTION_INVALID: return "ReconstructionInvalid";
    case SR_UNKNOWN_SUITE: return "UnknownSuite";
    case SR_THEOREM_VIOLATION: return "TheoremViolation";
    case SR_INTERNAL_ERROR: return "InternalError";
  }
  return "Unknown";
}

const char* sr_last_error(void) { return t_last_error.c_str(); }

void sr_string_free(char* s) { std::free(s); }
void sr_ints_free(int* v) { std::free(v); }

/* ---- shapes ---------------------------------------------------------- */

sr_status sr_shape_parse(const char* text, sr_shape** out) {
  if (!text) return null_argument("text");
  if (!out) return null_argument("out");
  return guarded([&] {
    auto* h = new sr_shape{sk::parse_shape(text)};
    *out = h;
  });
}

void sr_shape_free(sr_shape* s) { delete s; }

sr_status sr_shape_format(const sr_shape* s, char** out) {
  if (!s) return null_argument("s");
  if (!out) return null_argument("out");
  return guarded([&] { *out = dup_string(s->impl.str()); });
}

sr_status sr_shape_cell_count(const sr_shape* s, int* out) {
  if (!s) return null_argument("s");
  if (!out) return null_argument("out");
  return guarded([&] { *out = s->impl.cell_count(); });
}

sr_status sr_shape_row_count(const sr_shape* s, int* out) {
  if (!s) return null_argument("s");
  if (!out) return null_argument("out");
  return guarded([&] { *out = s->impl.row_count(); });
}

sr_status sr_shape_connected(const sr_shape* s, int* out) {
  if (!s) return null_argument("s");
  if (!out) return null_argument("out");
  return guarded([&] { *out = s->impl.connected() ? 1 : 0; });
}

sr_status sr_shape_normalization(const sr_shape* s, int* rows_removed, int* cols_removed) {
  if (!s) return null_argument("s");
  if (!rows_removed) return null_argument("rows_removed");
  if (!cols_removed) return null_argument("cols_removed");
  return guarded([&] {
    *rows_removed = s->impl.normalization().rows_removed;
    *cols_removed = s->impl.normalization().cols_removed;
  });
}

/* ---- ranks ------------------------------------------------------------ */

sr_status sr_rank_diagonal(const sr_shape* s, int* out) {
  if (!s) return null_argument("s");
  if (!out) return null_argument("out");
  return guarded([&] { *out = sk::rank_diagonal(s->impl); });
}

sr_status sr_rank_code(const sr_shape* s, int* out) {
  if (!s) return null_argument("s");
  if (!out) return null_argument("out");
  return guarded([&] { *out = sk::rank_code(s->impl); });
}

sr_status sr_rank_h_expansion(const sr_shape* s, int* out) {
  if (!s) return null_argument("s");
  if (!out) return null_argument("out");
  return guarded([&] { *out = sk::jrank(s->impl); });
}

sr_status sr_rank_strips(const sr_shape* s, int cell_bound, int* out) {
  if (!s) return null_argument("s");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = cell_bound > 0 ? sk::min_strip_rank(s->impl, cell_bound)
                          : sk::min_strip_rank(s->impl);
  });
}

sr_status sr_zrank(const sr_shape* s, int* out) {
  if (!s) return null_argument("s");
  if (!out) return null_argument("out");
  return guarded([&] { *out = sk::zrank(s->impl); });
}

sr_status sr_rank_report_json(const sr_shape* s, char** json_out) {
  if (!s) return null_argument("s");
  if (!json_out) return null_argument("json_out");
  return guarded([&] {
    const sk::SkewShape& sh = s->impl;
    int rd = sk::rank_diagonal(sh);
    int rc = sk::rank_code(sh);
    int rj = sk::jrank(sh);
    int rs = sk::min_strip_rank(sh);
    int rz = sk::zrank(sh);
    bool agree = rd == rc && rd == rj && rd == rs && rd == rz;
    json j;
    j["shape"] = sh.str();
    j["cells"] = sh.cell_count();
    j["connected"] = sh.connected();
    j["rank_diagonal"] = rd;
    j["rank_code"] = rc;
    j["rank_h_expansion"] = rj;
    j["rank_strips"] = rs;
    j["zrank"] = rz;
    j["verdict"] = agree ? "AGREE" : "DISAGREE";
    *json_out = dup_string(j.dump(2));
  });
}

sr_status sr_reduced_code(const sr_shape* s, char** top, char** bottom) {
  if (!s) return null_argument("s");
  if (!top) return null_argument("top");
  if (!bottom) return null_argument("bottom");
  return guarded([&] {
    sk::ReducedCode code = sk::reduced_code(s->impl);
    std::string t, b;
    for (int bit : code.top) t.push_back(bit ? '1' : '0');
    for (int bit : code.bottom) b.push_back(bit ? '1' : '0');
    *top = dup_string(t);
    *bottom = dup_string(b);
  });
}

sr_status sr_jt_json(const sr_shape* s, char** json_out) {
  if (!s) return null_argument("s");
  if (!json_out) return null_argument("json_out");
  return guarded([&] {
    sk::JTMatrix m = sk::jt_matrix(s->impl);
    json subs = json::array();
    json kinds = json::array();
    for (int i = 0; i < m.order; ++i) {
      json srow = json::array();
      std::string krow;
      for (int j = 0; j < m.order; ++j) {
        srow.push_back(m.subscript[i][j]);
        switch (m.kind(i, j)) {
          case sk::EntryKind::zero: krow.push_back('0'); break;
          case sk::EntryKind::one: krow.push_back('1'); break;
          case sk::EntryKind::positive: krow.push_back('h'); break;
        }
      }
      subs.push_back(std::move(srow));
      kinds.push_back(krow);
    }
    json j;
    j["shape"] = s->impl.str();
    j["order"] = m.order;
    j["subscripts"] = std::move(subs);
    j["kinds"] = std::move(kinds);
    j["rank"] = sk::jrank(s->impl);
    *json_out = dup_string(j.dump(2));
  });
}

/* ---- counting polynomial ---------------------------------------------- */

sr_status sr_schur_spec(const sr_shape* s, sr_poly** out) {
  if (!s) return null_argument("s");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new sr_poly{sk::skew_schur_spec(s->impl)}; });
}

void sr_poly_free(sr_poly* p) { delete p; }

sr_status sr_poly_degree(const sr_poly* p, int* out) {
  if (!p) return null_argument("p");
  if (!out) return null_argument("out");
  return guarded([&] { *out = p->impl.degree(); });
}

sr_status sr_poly_low_index(const sr_poly* p, int* out) {
  if (!p) return null_argument("p");
  if (!out) return null_argument("out");
  return guarded([&] { *out = p->impl.low_index(); });
}

sr_status sr_poly_coeff(const sr_poly* p, int i, char** out) {
  if (!p) return null_argument("p");
  if (!out) return null_argument("out");
  return guarded([&] {
    sk::require(i >= 0, sk::errc::parse_error, "coefficient index must be nonnegative");
    *out = dup_string(sk::format_rat(p->impl.coeff(i)));
  });
}

sr_status sr_poly_eval(const sr_poly* p, const char* t, char** out) {
  if (!p) return null_argument("p");
  if (!t) return null_argument("t");
  if (!out) return null_argument("out");
  return guarded([&] { *out = dup_string(sk::format_rat(p->impl.eval(sk::parse_rat(t)))); });
}

sr_status sr_poly_str(const sr_poly* p, char** out) {
  if (!p) return null_argument("p");
  if (!out) return null_argument("out");
  return guarded([&] { *out = dup_string(p->impl.str()); });
}

/* ---- structured determinants ------------------------------------------ */

sr_status sr_det_json(const char* kind, const char* a, const char* b, char** json_out) {
  if (!kind) return null_argument("kind");
  if (!a) return null_argument("a");
  if (!b) return null_argument("b");
  if (!json_out) return null_argument("json_out");
  return guarded([&] {
    std::string k(kind);
    sk::DetReport rep;
    json ja, jb;
    if (k == "cauchy" || k == "factorial") {
      std::vector<sk::Rat> av = sk::parse_rat_list(a);
      std::vector<sk::Rat> bv = sk::parse_rat_list(b);
      ja = rat_list_json(av);
      jb = rat_list_json(bv);
      sk::SequencePair pair = k == "cauchy" ? sk::restricted_pair(av, bv)
                                            : sk::factorial_pair(av, bv);
      rep = k == "cauchy" ? sk::rc_det(pair) : sk::fc_det(pair);
    } else if (k == "binomial") {
      std::vector<long> av = sk::parse_long_list(a);
      std::vector<long> bv = sk::parse_long_list(b);
      ja = json(av);
      jb = json(bv);
      rep = sk::ib_det(av, bv);
    } else {
      sk::fail(sk::errc::parse_error, "kind must be cauchy, factorial or binomial");
    }
    json j;
    j["kind"] = k;
    j["a"] = std::move(ja);
    j["b"] = std::move(jb);
    j["det"] = sk::format_rat(rep.det);
    j["omega"] = rep.omega;
    j["sign"] = rep.sign;
    j["verdict"] = "OK";
    *json_out = dup_string(j.dump(2));
  });
}

/* ---- decomposition determinants ---------------------------------------- */

sr_status sr_grank(const sr_shape* s, const char* cut, int* out) {
  if (!s) return null_argument("s");
  if (!out) return null_argument("out");
  return guarded([&] {
    sk::OutsideDecomposition d = decompose(s->impl, cut);
    *out = sk::grank(s->impl, d);
  });
}

sr_status sr_hg_json(const sr_shape* s, const char* cut, char** json_out) {
  if (!s) return null_argument("s");
  if (!json_out) return null_argument("json_out");
  return guarded([&] {
    const sk::SkewShape& sh = s->impl;
    sk::OutsideDecomposition d = decompose(sh, cut);
    sk::HGMatrix m = sk::hg_matrix(sh, d);
    json strips = json::array();
    for (const sk::BorderStrip& t : d.strips) {
      json st;
      st["word"] = sk::strip_word(t);
      st["size"] = t.size();
      st["p_content"] = sk::content(t.p());
      st["q_content"] = sk::content(t.q());
      strips.push_back(std::move(st));
    }
    json grid = json::array();
    for (int i = 0; i < m.order; ++i) {
      json row = json::array();
      for (int j = 0; j < m.order; ++j) {
        const sk::HGEntry& e = m.at(i, j);
        if (e.kind == sk::EntryKind::zero) {
          row.push_back("0");
        } else if (e.kind == sk::EntryKind::one) {
          row.push_back("1");
        } else {
          row.push_back("[" + std::to_string(e.alpha) + ".." + std::to_string(e.beta) + "]");
        }
      }
      grid.push_back(std::move(row));
    }
    sk::Poly det = sk::hg_det_spec(sh, d);
    sk::Poly spec = sk::skew_schur_spec(sh);
    json j;
    j["shape"] = sh.str();
    j["cut"] = d.phi.word;
    j["strips"] = std::move(strips);
    j["order"] = m.order;
    j["matrix"] = std::move(grid);
    j["rank"] = sk::grank(sh, d);
    j["det"] = det.str();
    j["spec"] = spec.str();
    j["det_matches_spec"] = det == spec;
    *json_out = dup_string(j.dump(2));
  });
}

sr_status sr_pq_json(const sr_shape* s, const char* cut, char** json_out) {
  if (!s) return null_argument("s");
  if (!json_out) return null_argument("json_out");
  return guarded([&] {
    const sk::SkewShape& sh = s->impl;
    sk::OutsideDecomposition d = decompose(sh, cut);
    sk::PQReport r = sk::pq_report(d.strips);
    json j;
    j["shape"] = sh.str();
    j["cut"] = d.phi.word;
    j["strip_count"] = d.size();
    j["p"] = json(r.p_contents);
    j["q"] = json(r.q_shifted);
    j["p_minus_q"] = json(r.p_minus_q);
    j["q_minus_p"] = json(r.q_minus_p);
    j["intersection"] = r.intersection_size;
    j["collision"] = r.endpoint_collision;
    j["rank"] = sk::rank_diagonal(sh);
    j["difference_equals_rank"] = static_cast<int>(r.p_minus_q.size()) == sk::rank_diagonal(sh);
    *json_out = dup_string(j.dump(2));
  });
}

/* ---- double Schur ------------------------------------------------------ */

sr_status sr_double_schur_json(const char* lambda, const char* x, const char* y,
                               char** json_out) {
  if (!lambda) return null_argument("lambda");
  if (!x) return null_argument("x");
  if (!y) return null_argument("y");
  if (!json_out) return null_argument("json_out");
  return guarded([&] {
    std::vector<long> parts = sk::parse_long_list(lambda);
    std::vector<int> iparts(parts.begin(), parts.end());
    sk::Partition lam(iparts);
    std::vector<sk::Rat> xv = sk::parse_rat_list(x);
    std::vector<sk::Rat> yv = sk::parse_rat_list(y);
    sk::Rat alternant = sk::double_schur_det(lam, xv, yv);
    sk::Rat tableau = sk::double_schur_comb(lam, xv, yv);
    json j;
    j["lambda"] = json(parts);
    j["x"] = rat_list_json(xv);
    j["y"] = rat_list_json(yv);
    j["alternant"] = sk::format_rat(alternant);
    j["tableau"] = sk::format_rat(tableau);
    j["equal"] = alternant == tableau;
    j["tableau_count"] =
        static_cast<long>(sk::column_strict_tableaux(lam, static_cast<int>(xv.size())).size());
    *json_out = dup_string(j.dump(2));
  });
}

/* ---- verification campaigns -------------------------------------------- */

sr_status sr_verify_run(const char* suite, const char* options_json, char** report_json,
                        long* failed) {
  if (!suite) return null_argument("suite");
  if (!report_json) return null_argument("report_json");
  if (!failed) return null_argument("failed");
  return guarded([&] {
    sk::CampaignOptions opt;
    if (options_json && *options_json) {
      json o = json::parse(options_json, nullptr, false);
      sk::require(!o.is_discarded() && o.is_object(), sk::errc::parse_error,
                  "options must be a JSON object");
      if (o.contains("max_cells")) opt.max_cells = o["max_cells"].get<int>();
      if (o.contains("n")) opt.n = o["n"].get<int>();
      if (o.contains("lo") || o.contains("hi")) {
        sk::require(o.contains("lo") && o.contains("hi"), sk::errc::parse_error,
                    "range needs both lo and hi");
        opt.has_range = true;
        opt.lo = o["lo"].get<long>();
        opt.hi = o["hi"].get<long>();
      }
      if (o.contains("samples")) opt.samples = o["samples"].get<long>();
      if (o.contains("seed")) opt.seed = o["seed"].get<unsigned long>();
      if (o.contains("jobs")) opt.jobs = o["jobs"].get<int>();
    }
    sk::CampaignReport rep = sk::run_campaign(suite, opt);
    *report_json = dup_string(rep.to_json());
    *failed = rep.failed;
  });
}

}  // extern "C"
