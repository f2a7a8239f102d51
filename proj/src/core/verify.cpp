#include "core/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <functional>
#include <memory>
#include <random>
#include <thread>
#include <unordered_set>

#include "core/double_schur.hpp"
#include "core/giambelli.hpp"

namespace skewrank {
namespace {

using ordered_json = nlohmann::ordered_json;

// An instance check throws check_failed (or any std::exception) to fail.
struct check_failed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void ensure(bool ok, const std::string& detail) {
  if (!ok) throw check_failed(detail);
}

long choose(int n, int k) {
  static const auto tab = [] {
    std::array<std::array<long, 41>, 41> t{};
    for (int i = 0; i <= 40; ++i) {
      t[i][0] = 1;
      for (int j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
    }
    return t;
  }();
  if (n < 0 || n > 40 || k < 0 || k > n) return 0;
  return tab[n][k];
}

// Lexicographic k-subset of {0..R-1} with the given rank.
std::vector<int> unrank_combo(long rank, int R, int k) {
  std::vector<int> out;
  out.reserve(k);
  int x = 0;
  for (int need = k; need > 0; --need) {
    for (;; ++x) {
      long c = choose(R - x - 1, need - 1);
      if (rank < c) break;
      rank -= c;
    }
    out.push_back(x++);
  }
  return out;
}

std::mt19937_64 instance_rng(unsigned long seed, long idx) {
  std::mt19937_64 g(seed + 0x9E3779B97F4A7C15ULL * static_cast<unsigned long>(idx + 1));
  g.discard(8);
  return g;
}

long rnd(std::mt19937_64& g, long lo, long hi) {
  return lo + static_cast<long>(g() % static_cast<unsigned long>(hi - lo + 1));
}

Rat make_rat(long num, long den) {
  Rat v(num, den);
  v.canonicalize();
  return v;
}

Rat pos_step(std::mt19937_64& g) { return make_rat(rnd(g, 1, 6), rnd(g, 1, 3)); }

std::vector<Rat> to_rats(const std::vector<long>& v) {
  std::vector<Rat> out;
  out.reserve(v.size());
  for (long x : v) out.push_back(Rat(x));
  return out;
}

std::string fmt_longs(const std::vector<long>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string pair_inputs(const std::vector<long>& a, const std::vector<long>& b) {
  return "a=" + fmt_longs(a) + " b=" + fmt_longs(b);
}

std::string pair_inputs(const SequencePair& p) {
  return "a=" + format_rat_list(p.a) + " b=" + format_rat_list(p.b);
}

Rat abs_rat(const Rat& v) { return v < 0 ? Rat(-v) : v; }

// ---- exhaustive integer pair families --------------------------------------

struct ExFamily {
  long a_lo = 0, a_hi = 0, b_lo = 0, b_hi = 0;
  int n_min = 1, n_max = 1;
  std::vector<long> before;  // instances with smaller length

  void init() {
    before.assign(1, 0);
    for (int n = n_min; n <= n_max; ++n) {
      long c = choose(static_cast<int>(a_hi - a_lo + 1), n) *
               choose(static_cast<int>(b_hi - b_lo + 1), n);
      before.push_back(before.back() + c);
    }
  }
  long total() const { return before.back(); }

  void decode(long idx, int& n, std::vector<long>& a, std::vector<long>& b) const {
    int pos = static_cast<int>(std::upper_bound(before.begin(), before.end(), idx) -
                               before.begin()) -
              1;
    n = n_min + pos;
    long rem = idx - before[pos];
    int Ra = static_cast<int>(a_hi - a_lo + 1);
    int Rb = static_cast<int>(b_hi - b_lo + 1);
    long cb = choose(Rb, n);
    std::vector<int> ca = unrank_combo(rem / cb, Ra, n);
    std::vector<int> cbv = unrank_combo(rem % cb, Rb, n);
    a.clear();
    b.clear();
    for (int i = n - 1; i >= 0; --i) a.push_back(a_lo + ca[i]);  // decreasing
    for (int i = 0; i < n; ++i) b.push_back(b_lo + cbv[i]);      // increasing
  }
};

bool contains_value(const std::vector<long>& v, long x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

bool valid_restricted_ints(const std::vector<long>& a, const std::vector<long>& b) {
  const int n = static_cast<int>(a.size());
  for (long x : a) {
    if (contains_value(b, x)) return false;
  }
  for (int i = 0; i < n; ++i) {
    if (a[i] <= b[n - 1 - i]) return false;
  }
  return true;
}

bool irreducible_ints(const std::vector<long>& a, const std::vector<long>& b) {
  const int n = static_cast<int>(a.size());
  for (int i = 1; i < n; ++i) {
    if (a[i] <= b[n - i]) return false;
  }
  return true;
}

bool valid_factorial_ints(const std::vector<long>& a, const std::vector<long>& b) {
  const int n = static_cast<int>(a.size());
  for (long x : a) {
    if (contains_value(b, x + 1)) return false;
  }
  for (int i = 0; i < n; ++i) {
    if (a[i] <= b[n - 1 - i] - 1) return false;
  }
  return true;
}

// ---- randomized pair generators (always valid by construction) -------------

SequencePair random_restricted_pair(std::mt19937_64& g, int n) {
  std::vector<Rat> b;
  b.push_back(make_rat(rnd(g, -12, 12), rnd(g, 1, 2)));
  for (int j = 1; j < n; ++j) b.push_back(b.back() + pos_step(g));
  std::vector<Rat> a(n);
  for (int i = n - 1; i >= 0; --i) {
    Rat floor_v = b[n - 1 - i];
    if (i < n - 1 && a[i + 1] > floor_v) floor_v = a[i + 1];
    Rat cand = floor_v + pos_step(g);
    while (std::find(b.begin(), b.end(), cand) != b.end()) cand += make_rat(1, 3);
    a[i] = cand;
  }
  return restricted_pair(std::move(a), std::move(b));
}

SequencePair random_factorial_pair(std::mt19937_64& g, int n) {
  std::vector<Rat> b;
  b.push_back(Rat(rnd(g, 1, 3)));
  for (int j = 1; j < n; ++j) b.push_back(b.back() + Rat(rnd(g, 1, 2)));
  std::vector<Rat> a(n);
  for (int i = n - 1; i >= 0; --i) {
    Rat floor_v = b[n - 1 - i] - 1;
    if (i < n - 1 && a[i + 1] > floor_v) floor_v = a[i + 1];
    Rat cand = floor_v + pos_step(g);
    while (std::find(b.begin(), b.end(), cand + 1) != b.end()) cand += make_rat(1, 3);
    a[i] = cand;
  }
  return factorial_pair(std::move(a), std::move(b));
}

// ---- shared determinant checks ----------------------------------------------

void check_restricted_det(const SequencePair& p, const std::string& inputs) {
  MatQ m = restricted_cauchy(p);
  const int w = omega(m);
  DetReport rep = rc_det(p);
  ensure(rep.det != 0, inputs + ": determinant vanished");
  ensure(rep.omega == w, inputs + ": zero-entry count mismatch");
  ensure(rep.sign == (w % 2 == 0 ? 1 : -1), inputs + ": sign law failed");
  ensure((rep.det > 0) == (rep.sign > 0), inputs + ": reported sign wrong");
  if (w == 0) {
    ensure(rep.det == cauchy_product_formula(p), inputs + ": closed form mismatch");
  }
}

void check_factorial_det(const SequencePair& p, const std::string& inputs) {
  MatQ m = factorial_cauchy(p);
  const int w = omega(m);
  DetReport rep = fc_det(p);
  ensure(rep.det != 0, inputs + ": determinant vanished");
  ensure(rep.omega == w, inputs + ": zero-entry count mismatch");
  ensure(rep.sign == (w % 2 == 0 ? 1 : -1), inputs + ": sign law failed");
  ensure((rep.det > 0) == (rep.sign > 0), inputs + ": reported sign wrong");
}

template <typename Fn>
void expect_rejected(Fn&& fn, const std::string& inputs) {
  try {
    fn();
  } catch (const error&) {
    return;
  }
  throw check_failed(inputs + ": validator accepted an invalid pair");
}

// ---- campaign runner ---------------------------------------------------------

CampaignReport execute(const std::string& suite, const CampaignOptions& opt, long count,
                       std::string parameters, const std::function<void(long)>& check) {
  const auto t0 = std::chrono::steady_clock::now();
  CampaignReport rep;
  rep.suite = suite;
  rep.parameters = std::move(parameters);
  rep.seed = opt.seed;
  rep.instances = count;

  const int jobs = std::max(1, opt.jobs);
  std::vector<std::vector<CampaignFailure>> sinks(jobs);
  std::atomic<long> next{0};
  auto worker = [&](int w) {
    for (;;) {
      long i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        check(i);
      } catch (const std::exception& e) {
        sinks[w].push_back({i, e.what()});
      }
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    for (std::thread& t : threads) t.join();
  }
  for (std::vector<CampaignFailure>& s : sinks) {
    rep.failures.insert(rep.failures.end(), s.begin(), s.end());
  }
  std::sort(rep.failures.begin(), rep.failures.end(),
            [](const CampaignFailure& x, const CampaignFailure& y) {
              return x.instance < y.instance;
            });
  rep.failed = static_cast<long>(rep.failures.size());
  rep.passed = rep.instances - rep.failed;
  rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return rep;
}

std::vector<Partition> box_partitions(int rows, int max_part) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int cap) -> void {
    out.push_back(Partition(cur));
    if (static_cast<int>(cur.size()) == rows) return;
    for (int p = cap; p >= 1; --p) {
      cur.push_back(p);
      self(self, p);
      cur.pop_back();
    }
  };
  rec(rec, max_part);
  std::sort(out.begin(), out.end(), [](const Partition& x, const Partition& y) {
    if (x.sum() != y.sum()) return x.sum() < y.sum();
    return x.parts() < y.parts();
  });
  return out;
}

std::string hg_signature(const HGMatrix& m) {
  std::string sig;
  for (int i = 0; i < m.order; ++i) {
    for (int j = 0; j < m.order; ++j) {
      const HGEntry& e = m.at(i, j);
      if (e.kind == EntryKind::zero) {
        sig += 'z';
      } else if (e.kind == EntryKind::one) {
        sig += 'o';
      } else {
        sig += strip_word(e.segment);
      }
      sig += ';';
    }
  }
  return sig;
}

}  // namespace

std::string CampaignReport::to_json() const {
  ordered_json j;
  j["suite"] = suite;
  j["parameters"] = ordered_json::parse(parameters);
  j["seed"] = seed;
  j["instances"] = instances;
  j["passed"] = passed;
  j["failed"] = failed;
  ordered_json fl = ordered_json::array();
  for (const CampaignFailure& f : failures) {
    fl.push_back(ordered_json{{"instance", f.instance}, {"detail", f.detail}});
  }
  j["failures"] = fl;
  j["wall_ms"] = wall_ms;
  return j.dump(2);
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{
      "rank-agreement", "zrank-rank",         "cauchy-sign", "cauchy-minors",
      "factorial-sign", "binomial-sign",      "double-schur-equiv",
      "lemma42",        "grank",              "hg-identity", "pq-invariance",
      "j1-coefficients"};
  return names;
}

std::vector<SkewShape> basic_shapes_with(int cells) {
  std::vector<SkewShape> out;
  if (cells <= 0) return out;
  const int m = cells;
  for (long mask = 0; mask < (1L << (m - 1)); ++mask) {
    std::vector<int> rho;
    int run = 1;
    for (int i = 0; i < m - 1; ++i) {
      if ((mask >> i) & 1) {
        rho.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    rho.push_back(run);
    const int r = static_cast<int>(rho.size());
    std::vector<int> o(std::max(r - 1, 0), 0);
    for (;;) {
      std::vector<long> sv(r), ev(r);
      sv[0] = 1;
      ev[0] = rho[0];
      for (int i = 1; i < r; ++i) {
        ev[i] = sv[i - 1] - 1 + o[i - 1];
        sv[i] = ev[i] - rho[i] + 1;
      }
      long shift = 1 - *std::min_element(sv.begin(), sv.end());
      std::vector<int> lam(r), mu(r);
      for (int i = 0; i < r; ++i) {
        lam[i] = static_cast<int>(ev[i] + shift);
        mu[i] = static_cast<int>(sv[i] + shift - 1);
      }
      SkewShape s = make_skew(Partition(lam), Partition(mu));
      require(!s.normalization().changed() && s.cell_count() == m, errc::theorem_violation,
              "shape enumeration produced a non-basic form");
      out.push_back(std::move(s));
      size_t k = 0;
      while (k < o.size()) {
        if (o[k] < std::min(rho[k], rho[k + 1])) {
          ++o[k];
          break;
        }
        o[k] = 0;
        ++k;
      }
      if (k == o.size()) break;
    }
  }
  return out;
}

std::vector<SkewShape> basic_shapes_up_to(int max_cells) {
  std::vector<SkewShape> out;
  for (int m = 1; m <= max_cells; ++m) {
    std::vector<SkewShape> part = basic_shapes_with(m);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

CampaignReport run_campaign(const std::string& suite, const CampaignOptions& opt) {
  // ---- shape-family suites ----
  if (suite == "rank-agreement" || suite == "zrank-rank" || suite == "grank" ||
      suite == "hg-identity" || suite == "pq-invariance") {
    int def = 8;
    if (suite == "grank" || suite == "hg-identity") def = 10;
    const int mc = opt.max_cells > 0 ? opt.max_cells : def;
    auto shapes = std::make_shared<std::vector<SkewShape>>(basic_shapes_up_to(mc));
    std::string params = ordered_json{{"max_cells", mc}}.dump();
    const long count = static_cast<long>(shapes->size());

    if (suite == "rank-agreement") {
      const int bound = std::max(16, mc);
      return execute(suite, opt, count, params, [shapes, bound](long i) {
        const SkewShape& s = (*shapes)[static_cast<size_t>(i)];
        const int r = rank_diagonal(s);
        ensure(rank_code(s) == r, s.str() + ": code rank disagrees");
        ensure(jrank(s) == r, s.str() + ": h-expansion rank disagrees");
        ensure(min_strip_rank(s, bound) == r, s.str() + ": strip rank disagrees");
      });
    }
    if (suite == "zrank-rank") {
      return execute(suite, opt, count, params, [shapes](long i) {
        const SkewShape& s = (*shapes)[static_cast<size_t>(i)];
        ensure(zrank(s) == rank_diagonal(s), s.str() + ": zrank differs from rank");
      });
    }
    if (suite == "grank") {
      return execute(suite, opt, count, params, [shapes](long i) {
        const SkewShape& s = (*shapes)[static_cast<size_t>(i)];
        const int r = rank_diagonal(s);
        const int k = static_cast<int>(s.diagonal_contents().size());
        Poly spec;
        bool have_spec = false;
        for (const std::string& word : direction_words(k)) {
          OutsideDecomposition d = outside_decomposition(s, word);
          ensure(grank(s, d) == r, s.str() + " cut=" + word + ": grank differs from rank");
          if (s.cell_count() <= 8) {
            LowestOrderReport rep = lowest_order_matrix(s, d);
            ensure(rep.matrix.rows() == r,
                   s.str() + " cut=" + word + ": lowest-order size differs from rank");
            if (!have_spec) {
              spec = skew_schur_spec(s);
              have_spec = true;
            }
            ensure(abs_rat(rep.det) == abs_rat(spec.coeff(spec.low_index())),
                   s.str() + " cut=" + word + ": lowest-order determinant mismatch");
          }
        }
      });
    }
    if (suite == "hg-identity") {
      return execute(suite, opt, count, params, [shapes](long i) {
        const SkewShape& s = (*shapes)[static_cast<size_t>(i)];
        const Poly spec = skew_schur_spec(s);
        const int k = static_cast<int>(s.diagonal_contents().size());
        RibbonPolyCache cache;
        std::unordered_set<std::string> seen;
        for (const std::string& word : direction_words(k)) {
          OutsideDecomposition d = outside_decomposition(s, word);
          if (!seen.insert(hg_signature(hg_matrix(s, d))).second) continue;
          ensure(hg_det_spec(s, d, &cache) == spec,
                 s.str() + " cut=" + word + ": determinant differs from direct expansion");
        }
      });
    }
    // pq-invariance
    return execute(suite, opt, count, params, [shapes](long i) {
      const SkewShape& s = (*shapes)[static_cast<size_t>(i)];
      const int r = rank_diagonal(s);
      std::vector<OutsideDecomposition> outs = enumerate_outside_decompositions(s, 12);
      PQReport ref = pq_report(outs[0].strips);
      ensure(static_cast<int>(ref.p_minus_q.size()) == r,
             s.str() + ": difference multiset size differs from rank");
      for (const OutsideDecomposition& d : outs) {
        PQReport pq = pq_report(d.strips);
        ensure(pq.p_minus_q == ref.p_minus_q && pq.q_minus_p == ref.q_minus_p,
               s.str() + " cut=" + d.phi.word + ": endpoint differences not invariant");
        HGMatrix hm = hg_matrix(s, d);
        int one_rows = 0;
        for (int x = 0; x < hm.order; ++x) {
          bool has_one = false;
          for (int y = 0; y < hm.order; ++y) {
            has_one = has_one || hm.at(x, y).kind == EntryKind::one;
          }
          if (has_one) ++one_rows;
        }
        ensure(pq.intersection_size == one_rows,
               s.str() + " cut=" + d.phi.word + ": intersection differs from one-entry rows");
      }
      for (const StripDecomposition& sd :
           enumerate_strip_decompositions(s, std::max(10, s.cell_count()))) {
        PQReport pq = pq_report(sd.strips);
        ensure(pq.p_minus_q == ref.p_minus_q && pq.q_minus_p == ref.q_minus_p,
               s.str() + ": endpoint differences not invariant across strip decompositions");
        ensure(sd.size() == r + pq.intersection_size,
               s.str() + ": strip count differs from rank plus intersection");
        ensure((sd.size() == r) == (pq.intersection_size == 0),
               s.str() + ": minimality and empty intersection disagree");
      }
    });
  }

  // ---- sequence-family suites ----
  if (suite == "cauchy-sign" || suite == "cauchy-minors") {
    ExFamily fam;
    fam.a_lo = fam.b_lo = opt.has_range ? opt.lo : -4;
    fam.a_hi = fam.b_hi = opt.has_range ? opt.hi : 8;
    fam.n_min = opt.n > 0 ? opt.n : 1;
    fam.n_max = opt.n > 0 ? opt.n : 5;
    fam.init();
    if (suite == "cauchy-minors") {
      std::string params = ordered_json{{"n_min", fam.n_min},
                                        {"n_max", fam.n_max},
                                        {"range", {fam.a_lo, fam.a_hi}}}
                               .dump();
      return execute(suite, opt, fam.total(), params, [fam](long i) {
        int n;
        std::vector<long> av, bv;
        fam.decode(i, n, av, bv);
        if (!valid_restricted_ints(av, bv) || !irreducible_ints(av, bv)) return;
        const std::string inputs = pair_inputs(av, bv);
        SequencePair p = restricted_pair(to_rats(av), to_rats(bv));
        ensure(is_irreducible(p), inputs + ": irreducibility check disagrees");
        MatQ m = restricted_cauchy(p);
        for (int r = 1; r <= n; ++r) {
          for (int c = 1; c <= n; ++c) {
            SequencePair ms = minor_sequences(p, r, c);
            MatQ mm = restricted_cauchy(ms);
            for (int x = 0; x < n - 1; ++x) {
              for (int y = 0; y < n - 1; ++y) {
                ensure(mm.at(x, y) == m.at(x < r - 1 ? x : x + 1, y < c - 1 ? y : y + 1),
                       inputs + ": minor entry mismatch");
              }
            }
            DetReport sub = rc_det(ms);
            ensure(sub.det != 0, inputs + ": minor determinant vanished");
          }
        }
      });
    }
    const int rn_max = opt.n > 0 ? opt.n : 6;
    const int rn_min = opt.n > 0 ? opt.n : 1;
    const long samples = opt.samples >= 0 ? opt.samples : 1000;
    const long randoms = samples * (rn_max - rn_min + 1);
    std::string params = ordered_json{{"n_min", fam.n_min},
                                      {"n_max", fam.n_max},
                                      {"range", {fam.a_lo, fam.a_hi}},
                                      {"samples", samples}}
                             .dump();
    const unsigned long seed = opt.seed;
    return execute(suite, opt, fam.total() + randoms, params,
                   [fam, seed, samples, rn_min](long i) {
                     if (i < fam.total()) {
                       int n;
                       std::vector<long> av, bv;
                       fam.decode(i, n, av, bv);
                       const std::string inputs = pair_inputs(av, bv);
                       if (!valid_restricted_ints(av, bv)) {
                         expect_rejected([&] { restricted_pair(to_rats(av), to_rats(bv)); },
                                         inputs);
                         return;
                       }
                       SequencePair p = restricted_pair(to_rats(av), to_rats(bv));
                       check_restricted_det(p, inputs);
                       return;
                     }
                     const long ri = i - fam.total();
                     const int n = rn_min + static_cast<int>(ri / samples);
                     std::mt19937_64 g = instance_rng(seed, i);
                     SequencePair p = random_restricted_pair(g, n);
                     check_restricted_det(p, pair_inputs(p));
                   });
  }

  if (suite == "factorial-sign" || suite == "binomial-sign" || suite == "lemma42") {
    ExFamily fam;
    fam.a_lo = 0;
    fam.a_hi = opt.has_range ? opt.hi : 10;
    if (opt.has_range) fam.a_lo = opt.lo;
    fam.b_lo = 1;
    fam.b_hi = 6;
    fam.n_min = opt.n > 0 ? opt.n : 1;
    fam.n_max = opt.n > 0 ? opt.n : 4;
    fam.init();
    ordered_json pj{{"n_min", fam.n_min},
                    {"n_max", fam.n_max},
                    {"a_range", {fam.a_lo, fam.a_hi}},
                    {"b_range", {fam.b_lo, fam.b_hi}}};

    if (suite == "binomial-sign") {
      return execute(suite, opt, fam.total(), pj.dump(), [fam](long i) {
        int n;
        std::vector<long> av, bv;
        fam.decode(i, n, av, bv);
        const std::string inputs = pair_inputs(av, bv);
        if (!valid_factorial_ints(av, bv)) {
          expect_rejected([&] { inverse_binomial(av, bv); }, inputs);
          return;
        }
        MatQ m = inverse_binomial(av, bv);
        const int w = omega(m);
        DetReport rep = ib_det(av, bv);
        ensure(rep.det != 0, inputs + ": determinant vanished");
        ensure(rep.omega == w, inputs + ": zero-entry count mismatch");
        ensure(rep.sign == (w % 2 == 0 ? 1 : -1), inputs + ": sign law failed");
        DetReport f = fc_det(factorial_pair(to_rats(av), to_rats(bv)));
        Rat scale(1);
        for (long x : bv) scale *= Rat(factorial(static_cast<unsigned long>(x)));
        ensure(rep.det == f.det * scale, inputs + ": factorial scaling identity failed");
      });
    }
    if (suite == "lemma42") {
      return execute(suite, opt, fam.total(), pj.dump(), [fam](long i) {
        int n;
        std::vector<long> av, bv;
        fam.decode(i, n, av, bv);
        if (!valid_factorial_ints(av, bv)) return;
        if (av[n - 1] <= bv[n - 1] - 1) return;  // keep only zero-free pairs
        const std::string inputs = pair_inputs(av, bv);
        SequencePair p = factorial_pair(to_rats(av), to_rats(bv));
        DetReport direct = fc_det(p);
        ensure(fc_det_via_double_schur(p) == direct.det,
               inputs + ": tableau route differs from direct determinant");
        FactorialSchurReport rep = factorial_schur_report(p);
        ensure(rep.value == direct.det, inputs + ": reported value differs");
        ensure(rep.factors_positive, inputs + ": tableau factor not positive");
        ensure(rep.tableau_count >= 1, inputs + ": no tableau found");
      });
    }
    // factorial-sign: exhaustive plus random rational-a pairs
    const int rn_max = opt.n > 0 ? opt.n : 4;
    const int rn_min = opt.n > 0 ? opt.n : 1;
    const long samples = opt.samples >= 0 ? opt.samples : 200;
    const long randoms = samples * (rn_max - rn_min + 1);
    pj["samples"] = samples;
    const unsigned long seed = opt.seed;
    return execute(suite, opt, fam.total() + randoms, pj.dump(),
                   [fam, seed, samples, rn_min](long i) {
                     if (i < fam.total()) {
                       int n;
                       std::vector<long> av, bv;
                       fam.decode(i, n, av, bv);
                       const std::string inputs = pair_inputs(av, bv);
                       if (!valid_factorial_ints(av, bv)) {
                         expect_rejected([&] { factorial_pair(to_rats(av), to_rats(bv)); },
                                         inputs);
                         return;
                       }
                       SequencePair p = factorial_pair(to_rats(av), to_rats(bv));
                       check_factorial_det(p, inputs);
                       return;
                     }
                     const long ri = i - fam.total();
                     const int n = rn_min + static_cast<int>(ri / samples);
                     std::mt19937_64 g = instance_rng(seed, i);
                     SequencePair p = random_factorial_pair(g, n);
                     check_factorial_det(p, pair_inputs(p));
                   });
  }

  if (suite == "double-schur-equiv") {
    auto lambdas = std::make_shared<std::vector<Partition>>(box_partitions(3, 3));
    const int n = 3;
    const long points = opt.samples >= 0 ? opt.samples : 20;
    std::string params =
        ordered_json{{"box", {3, 3, 3}}, {"n", n}, {"points", points}}.dump();
    const unsigned long seed = opt.seed;
    const long count = static_cast<long>(lambdas->size()) * points;
    return execute(suite, opt, count, params, [lambdas, n, points, seed](long i) {
      const Partition& lam = (*lambdas)[static_cast<size_t>(i / points)];
      std::mt19937_64 g = instance_rng(seed, i);
      std::vector<Rat> x;
      while (static_cast<int>(x.size()) < n) {
        Rat cand = make_rat(rnd(g, -9, 9), rnd(g, 1, 2));
        if (std::find(x.begin(), x.end(), cand) == x.end()) x.push_back(cand);
      }
      std::vector<Rat> y;
      const int need = lam.part(1) + n - 1;
      for (int j = 0; j < need; ++j) y.push_back(make_rat(rnd(g, -9, 9), rnd(g, 1, 2)));
      const std::string inputs = "lambda=" + format_partition(lam) +
                                 " x=" + format_rat_list(x) + " y=" + format_rat_list(y);
      ensure(double_schur_det(lam, x, y) == double_schur_comb(lam, x, y),
             inputs + ": alternant and tableau forms differ");
    });
  }

  if (suite == "j1-coefficients") {
    const int max_len = 8;  // ribbon sizes 1..8, direction words up to length 7
    std::vector<long> before{0};
    for (int len = 0; len < max_len; ++len) before.push_back(before.back() + (1L << len));
    std::string params = ordered_json{{"max_length", max_len}}.dump();
    return execute(suite, opt, before.back(), params, [before](long i) {
      int len = static_cast<int>(std::upper_bound(before.begin(), before.end(), i) -
                                 before.begin()) -
                1;
      long bits = i - before[len];
      std::string word(len, 'R');
      for (int t = 0; t < len; ++t) {
        if ((bits >> t) & 1) word[t] = 'U';
      }
      std::vector<Cell> cells{{16, 1}};
      for (char ch : word) {
        Cell c = cells.back();
        cells.push_back(ch == 'R' ? Cell{c.row, c.col + 1} : Cell{c.row - 1, c.col});
      }
      BorderStrip strip = make_border_strip(std::move(cells));
      Poly p = skew_schur_spec(ribbon_to_skew(strip));
      const std::string inputs = "ribbon=" + (word.empty() ? std::string(".") : word);
      ensure(p.low_index() == 1, inputs + ": lowest power is not t");
      ensure(p.degree() == strip.size(), inputs + ": degree differs from size");
      Rat expect(strip.height() % 2 == 0 ? 1 : -1, strip.size());
      expect.canonicalize();
      ensure(p.coeff(1) == expect, inputs + ": linear coefficient mismatch");
    });
  }

  fail(errc::unknown_suite, "no suite named '" + suite + "'");
}

}  // namespace skewrank
