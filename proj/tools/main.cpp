#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "skewrank/skewrank.h"

using json = nlohmann::ordered_json;

namespace {

struct CliError {
  sr_status status;
  std::string message;
};

void check(sr_status st) {
  if (st != SR_OK) throw CliError{st, sr_last_error()};
}

// Takes ownership of a C API string.
std::string take(char* s) {
  std::string out = s ? s : "";
  sr_string_free(s);
  return out;
}

struct ShapeHandle {
  sr_shape* h = nullptr;
  explicit ShapeHandle(const std::string& text) { check(sr_shape_parse(text.c_str(), &h)); }
  ShapeHandle(const ShapeHandle&) = delete;
  ShapeHandle& operator=(const ShapeHandle&) = delete;
  ~ShapeHandle() { sr_shape_free(h); }
};

struct Output {
  std::string text;       // human form, printed without --json
  std::string json_text;  // machine form, printed with --json and written to --out
  int exit_code = 0;
};

std::string join(const json& arr) {
  std::string out;
  for (const auto& v : arr) {
    if (!out.empty()) out.push_back(',');
    out += v.is_string() ? v.get<std::string>() : v.dump();
  }
  return out;
}

void print_grid(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> width;
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (size_t j = 0; j < r.size(); ++j) width[j] = std::max(width[j], r[j].size());
  }
  for (const auto& r : rows) {
    for (size_t j = 0; j < r.size(); ++j) {
      os << r[j];
      if (j + 1 < r.size()) os << std::string(width[j] - r[j].size() + 1, ' ');
    }
    os << "\n";
  }
}

const char* cut_or_null(const std::string& cut) { return cut.empty() ? nullptr : cut.c_str(); }

Output cmd_rank(const std::string& shape_text) {
  ShapeHandle s(shape_text);
  char* raw = nullptr;
  check(sr_rank_report_json(s.h, &raw));
  std::string json_text = take(raw);
  json j = json::parse(json_text);
  std::ostringstream os;
  os << "shape " << j["shape"].get<std::string>() << "\n";
  os << "cells " << j["cells"] << "\n";
  os << "rank " << j["rank_diagonal"] << "\n";
  os << "  diagonal " << j["rank_diagonal"] << "\n";
  os << "  code " << j["rank_code"] << "\n";
  os << "  h-expansion " << j["rank_h_expansion"] << "\n";
  os << "  strips " << j["rank_strips"] << "\n";
  os << "  zrank " << j["zrank"] << "\n";
  os << "verdict " << j["verdict"].get<std::string>() << "\n";
  return {os.str(), json_text, j["verdict"] == "AGREE" ? 0 : 1};
}

Output cmd_zrank(const std::string& shape_text) {
  ShapeHandle s(shape_text);
  int z = 0;
  check(sr_zrank(s.h, &z));
  char* fmt = nullptr;
  check(sr_shape_format(s.h, &fmt));
  json j;
  j["shape"] = take(fmt);
  j["zrank"] = z;
  std::ostringstream os;
  os << "shape " << j["shape"].get<std::string>() << "\n";
  os << "zrank " << z << "\n";
  return {os.str(), j.dump(2), 0};
}

Output cmd_code(const std::string& shape_text) {
  ShapeHandle s(shape_text);
  char* top = nullptr;
  char* bottom = nullptr;
  check(sr_reduced_code(s.h, &top, &bottom));
  std::string t = take(top), b = take(bottom);
  int rank = 0;
  check(sr_rank_code(s.h, &rank));
  char* fmt = nullptr;
  check(sr_shape_format(s.h, &fmt));
  json j;
  j["shape"] = take(fmt);
  j["top"] = t;
  j["bottom"] = b;
  j["rank"] = rank;
  std::ostringstream os;
  os << "shape " << j["shape"].get<std::string>() << "\n";
  os << "top    " << t << "\n";
  os << "bottom " << b << "\n";
  os << "rank " << rank << "\n";
  return {os.str(), j.dump(2), 0};
}

Output cmd_jt(const std::string& shape_text) {
  ShapeHandle s(shape_text);
  char* raw = nullptr;
  check(sr_jt_json(s.h, &raw));
  std::string json_text = take(raw);
  json j = json::parse(json_text);
  std::ostringstream os;
  os << "shape " << j["shape"].get<std::string>() << "\n";
  os << "order " << j["order"] << "\n";
  std::vector<std::vector<std::string>> grid;
  for (size_t i = 0; i < j["kinds"].size(); ++i) {
    std::string kinds = j["kinds"][i].get<std::string>();
    std::vector<std::string> row;
    for (size_t k = 0; k < kinds.size(); ++k) {
      if (kinds[k] == 'h') {
        row.push_back("h" + j["subscripts"][i][k].dump());
      } else {
        row.push_back(std::string(1, kinds[k]));
      }
    }
    grid.push_back(std::move(row));
  }
  print_grid(os, grid);
  os << "rank " << j["rank"] << "\n";
  return {os.str(), json_text, 0};
}

Output cmd_det(const std::string& kind, const std::string& a, const std::string& b) {
  char* raw = nullptr;
  check(sr_det_json(kind.c_str(), a.c_str(), b.c_str(), &raw));
  std::string json_text = take(raw);
  json j = json::parse(json_text);
  std::ostringstream os;
  os << "kind " << j["kind"].get<std::string>() << "\n";
  os << "a " << join(j["a"]) << "\n";
  os << "b " << join(j["b"]) << "\n";
  os << "det " << j["det"].get<std::string>() << "\n";
  os << "omega " << j["omega"] << "\n";
  os << "sign " << j["sign"] << "\n";
  os << "verdict " << j["verdict"].get<std::string>() << "\n";
  return {os.str(), json_text, 0};
}

Output cmd_grank(const std::string& shape_text, const std::string& cut) {
  ShapeHandle s(shape_text);
  int g = 0;
  check(sr_grank(s.h, cut_or_null(cut), &g));
  char* fmt = nullptr;
  check(sr_shape_format(s.h, &fmt));
  json j;
  j["shape"] = take(fmt);
  j["cut"] = cut.empty() ? "all-R (default)" : cut;
  j["grank"] = g;
  std::ostringstream os;
  os << "shape " << j["shape"].get<std::string>() << "\n";
  os << "cut " << j["cut"].get<std::string>() << "\n";
  os << "grank " << g << "\n";
  return {os.str(), j.dump(2), 0};
}

Output cmd_hg(const std::string& shape_text, const std::string& cut) {
  ShapeHandle s(shape_text);
  char* raw = nullptr;
  check(sr_hg_json(s.h, cut_or_null(cut), &raw));
  std::string json_text = take(raw);
  json j = json::parse(json_text);
  std::ostringstream os;
  os << "shape " << j["shape"].get<std::string>() << "\n";
  os << "cut " << j["cut"].get<std::string>() << "\n";
  os << "order " << j["order"] << "\n";
  int index = 0;
  for (const auto& st : j["strips"]) {
    std::string word = st["word"].get<std::string>();
    os << "strip " << ++index << ": word " << (word.empty() ? "-" : word) << " size "
       << st["size"] << " p " << st["p_content"] << " q " << st["q_content"] << "\n";
  }
  std::vector<std::vector<std::string>> grid;
  for (const auto& row : j["matrix"]) {
    std::vector<std::string> r;
    for (const auto& e : row) r.push_back(e.get<std::string>());
    grid.push_back(std::move(r));
  }
  print_grid(os, grid);
  os << "grank " << j["rank"] << "\n";
  os << "det " << j["det"].get<std::string>() << "\n";
  os << "spec " << j["spec"].get<std::string>() << "\n";
  bool match = j["det_matches_spec"].get<bool>();
  os << "match " << (match ? "yes" : "NO") << "\n";
  return {os.str(), json_text, match ? 0 : 1};
}

Output cmd_pq(const std::string& shape_text, const std::string& cut) {
  ShapeHandle s(shape_text);
  char* raw = nullptr;
  check(sr_pq_json(s.h, cut_or_null(cut), &raw));
  std::string json_text = take(raw);
  json j = json::parse(json_text);
  std::ostringstream os;
  os << "shape " << j["shape"].get<std::string>() << "\n";
  os << "cut " << j["cut"].get<std::string>() << "\n";
  os << "strips " << j["strip_count"] << "\n";
  os << "p " << join(j["p"]) << "\n";
  os << "q " << join(j["q"]) << "\n";
  os << "p-q " << join(j["p_minus_q"]) << "\n";
  os << "q-p " << join(j["q_minus_p"]) << "\n";
  os << "intersection " << j["intersection"] << "\n";
  os << "collision " << (j["collision"].get<bool>() ? "yes" : "no") << "\n";
  os << "rank " << j["rank"] << "\n";
  bool ok = j["difference_equals_rank"].get<bool>();
  os << "difference equals rank: " << (ok ? "yes" : "NO") << "\n";
  return {os.str(), json_text, ok ? 0 : 1};
}

Output cmd_double_schur(const std::string& lambda, const std::string& x, const std::string& y) {
  char* raw = nullptr;
  check(sr_double_schur_json(lambda.c_str(), x.c_str(), y.c_str(), &raw));
  std::string json_text = take(raw);
  json j = json::parse(json_text);
  std::ostringstream os;
  os << "lambda " << join(j["lambda"]) << "\n";
  os << "x " << join(j["x"]) << "\n";
  os << "y " << join(j["y"]) << "\n";
  os << "alternant " << j["alternant"].get<std::string>() << "\n";
  os << "tableau " << j["tableau"].get<std::string>() << "\n";
  os << "tableaux " << j["tableau_count"] << "\n";
  bool equal = j["equal"].get<bool>();
  os << "equal " << (equal ? "yes" : "NO") << "\n";
  return {os.str(), json_text, equal ? 0 : 1};
}

Output cmd_verify(const std::string& suite, const json& options) {
  char* raw = nullptr;
  long failed = 0;
  check(sr_verify_run(suite.c_str(), options.dump().c_str(), &raw, &failed));
  std::string json_text = take(raw);
  json j = json::parse(json_text);
  std::ostringstream os;
  os << "suite " << j["suite"].get<std::string>() << "\n";
  os << "parameters " << j["parameters"].dump() << "\n";
  os << "seed " << j["seed"] << "\n";
  os << "instances " << j["instances"] << "\n";
  os << "passed " << j["passed"] << "\n";
  os << "failed " << j["failed"] << "\n";
  os << "wall_ms " << j["wall_ms"] << "\n";
  const auto& failures = j["failures"];
  const size_t cap = 50;
  for (size_t i = 0; i < failures.size() && i < cap; ++i) {
    os << "instance " << failures[i]["instance"] << ": "
       << failures[i]["detail"].get<std::string>() << "\n";
  }
  if (failures.size() > cap) os << "... and " << failures.size() - cap << " more\n";
  return {os.str(), json_text, failed == 0 ? 0 : 1};
}

std::pair<long, long> parse_range(const std::string& text) {
  auto split = text.find("..");
  try {
    if (split == std::string::npos) throw std::invalid_argument(text);
    size_t used = 0;
    std::string lo_text = text.substr(0, split), hi_text = text.substr(split + 2);
    long lo = std::stol(lo_text, &used);
    if (used != lo_text.size()) throw std::invalid_argument(text);
    long hi = std::stol(hi_text, &used);
    if (used != hi_text.size()) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::exception&) {
    throw CliError{SR_PARSE_ERROR, "range must look like lo..hi"};
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact skew shape ranks, structured determinants and verification campaigns"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string out_path;
  int jobs = 1;
  unsigned long seed = 0;
  app.add_flag("--json", as_json, "print the JSON form instead of text");
  auto* out_opt = app.add_option("--out", out_path, "write the JSON form to this file");
  app.add_option("--jobs", jobs, "worker threads for verify")->check(CLI::PositiveNumber);
  auto* seed_opt = app.add_option("--seed", seed, "seed for randomized verify families");

  std::string shape_text, cut, kind, seq_a, seq_b, lambda, xs, ys, suite, range_text;
  int max_cells = 0, small_n = 0;
  long samples = 0;

  auto add_shape_cmd = [&](const char* name, const char* help, bool with_cut) {
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->fallthrough();
    cmd->add_option("shape", shape_text, "shape text like 6,5,5,3/2,1,1")->required();
    if (with_cut) {
      cmd->add_option("--cut", cut, "direction word over R,U; one letter per diagonal junction");
    }
    return cmd;
  };

  CLI::App* rank_cmd = add_shape_cmd("rank", "all rank characterizations and their agreement", false);
  CLI::App* zrank_cmd = add_shape_cmd("zrank", "low degree of the counting polynomial", false);
  CLI::App* code_cmd = add_shape_cmd("code", "two-row boundary word array", false);
  CLI::App* jt_cmd = add_shape_cmd("jt", "complete homogeneous expansion matrix", false);
  CLI::App* hg_cmd = add_shape_cmd("hg", "strip decomposition matrix and its determinant", true);
  CLI::App* grank_cmd = add_shape_cmd("grank", "rows without a one entry in the strip matrix", true);
  CLI::App* pq_cmd = add_shape_cmd("pq", "endpoint content multisets and their differences", true);

  CLI::App* det_cmd = app.add_subcommand("det", "structured determinant with sign certificate");
  det_cmd->fallthrough();
  det_cmd->add_option("--kind", kind, "cauchy, factorial or binomial")->required();
  det_cmd->add_option("-a,--a", seq_a, "strictly decreasing sequence, comma separated")->required();
  det_cmd->add_option("-b,--b", seq_b, "strictly increasing sequence, comma separated")->required();

  CLI::App* ds_cmd = app.add_subcommand("double-schur", "alternant and tableau forms");
  ds_cmd->fallthrough();
  ds_cmd->add_option("--lambda", lambda, "partition, comma separated")->required();
  ds_cmd->add_option("-x,--x", xs, "distinct points, comma separated")->required();
  ds_cmd->add_option("-y,--y", ys, "shift sequence, comma separated");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification campaign");
  verify_cmd->fallthrough();
  verify_cmd->add_option("suite", suite, "campaign name")->required();
  auto* mc_opt = verify_cmd->add_option("--max-cells", max_cells, "largest shape size");
  auto* n_opt = verify_cmd->add_option("--n", small_n, "matrix order");
  auto* range_opt = verify_cmd->add_option("--range", range_text, "integer entry range lo..hi");
  auto* samples_opt = verify_cmd->add_option("--samples", samples, "random instances per order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    Output out;
    if (*rank_cmd) {
      out = cmd_rank(shape_text);
    } else if (*zrank_cmd) {
      out = cmd_zrank(shape_text);
    } else if (*code_cmd) {
      out = cmd_code(shape_text);
    } else if (*jt_cmd) {
      out = cmd_jt(shape_text);
    } else if (*hg_cmd) {
      out = cmd_hg(shape_text, cut);
    } else if (*grank_cmd) {
      out = cmd_grank(shape_text, cut);
    } else if (*pq_cmd) {
      out = cmd_pq(shape_text, cut);
    } else if (*det_cmd) {
      out = cmd_det(kind, seq_a, seq_b);
    } else if (*ds_cmd) {
      out = cmd_double_schur(lambda, xs, ys);
    } else if (*verify_cmd) {
      json options = json::object();
      if (*mc_opt) options["max_cells"] = max_cells;
      if (*n_opt) options["n"] = small_n;
      if (*range_opt) {
        auto [lo, hi] = parse_range(range_text);
        options["lo"] = lo;
        options["hi"] = hi;
      }
      if (*samples_opt) options["samples"] = samples;
      if (*seed_opt) options["seed"] = seed;
      options["jobs"] = jobs;
      out = cmd_verify(suite, options);
    }
    if (*out_opt) {
      std::ofstream file(out_path);
      if (!file) throw CliError{SR_PARSE_ERROR, "cannot open " + out_path};
      file << out.json_text << "\n";
    }
    std::cout << (as_json ? out.json_text + "\n" : out.text);
    return out.exit_code;
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.status == SR_THEOREM_VIOLATION ? 1 : 2;
  }
}
