#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <regex>
#include <set>

#include "core/verify.hpp"
#include "support/test_support.hpp"

using namespace skewrank;

namespace {

std::string strip_wall(std::string json) {
  return std::regex_replace(json, std::regex("\"wall_ms\": \\d+"), "\"wall_ms\": 0");
}

}  // namespace

TEST_CASE("basic shape enumeration") {
  CHECK(basic_shapes_with(1).size() == 1);
  CHECK(basic_shapes_with(2).size() == 3);
  CHECK(basic_shapes_with(3).size() == 9);
  CHECK(basic_shapes_with(4).size() == 28);
  CHECK(basic_shapes_with(0).empty());

  std::vector<SkewShape> all = basic_shapes_up_to(6);
  CHECK(all.size() == 1 + 3 + 9 + 28 + 87 + 272);
  std::set<std::string> seen;
  for (const SkewShape& s : all) {
    CHECK_FALSE(s.normalization().changed());
    CHECK(s.cell_count() >= 1);
    seen.insert(s.str());
  }
  CHECK(seen.size() == all.size());
}

TEST_CASE("suite catalogue") {
  CHECK(verify_suite_names().size() == 12);
  CampaignOptions opt;
  CHECK_ERRC(run_campaign("no-such-suite", opt), errc::unknown_suite);
}

TEST_CASE("shape suites pass on small families") {
  CampaignOptions opt;
  opt.max_cells = 5;
  for (const char* suite : {"rank-agreement", "zrank-rank", "grank", "hg-identity",
                            "pq-invariance"}) {
    CampaignReport r = run_campaign(suite, opt);
    CAPTURE(suite);
    CHECK(r.instances == 128);
    CHECK(r.failed == 0);
    CHECK(r.passed == r.instances);
    CHECK(r.failures.empty());
  }
}

TEST_CASE("sequence suites pass on small families") {
  CampaignOptions opt;
  opt.n = 0;
  opt.has_range = true;
  opt.lo = -1;
  opt.hi = 2;
  opt.samples = 6;

  CampaignReport sign = run_campaign("cauchy-sign", opt);
  // exhaustive: sum over n of C(4,n)^2 = 16 + 36 + 16 + 1 = 69, plus 6 * 6 random
  CHECK(sign.instances == 69 + 36);
  CHECK(sign.failed == 0);

  CampaignReport minors = run_campaign("cauchy-minors", opt);
  CHECK(minors.instances == 69);
  CHECK(minors.failed == 0);

  CampaignOptions fopt;
  fopt.has_range = true;
  fopt.lo = 0;
  fopt.hi = 5;
  fopt.samples = 5;
  CampaignReport fact = run_campaign("factorial-sign", fopt);
  CHECK(fact.failed == 0);
  CHECK(fact.instances > 0);

  fopt.samples = -1;
  CampaignReport binom = run_campaign("binomial-sign", fopt);
  CHECK(binom.failed == 0);
  CampaignReport l42 = run_campaign("lemma42", fopt);
  CHECK(l42.failed == 0);
  CHECK(l42.instances == binom.instances);
}

TEST_CASE("single length restriction") {
  CampaignOptions opt;
  opt.n = 1;
  opt.has_range = true;
  opt.lo = 0;
  opt.hi = 2;
  opt.samples = 0;
  CampaignReport r = run_campaign("cauchy-sign", opt);
  CHECK(r.instances == 9);  // all 1x1 pairs over {0,1,2}
  CHECK(r.failed == 0);
}

TEST_CASE("remaining suites pass at reduced size") {
  CampaignOptions opt;
  opt.samples = 3;
  CampaignReport ds = run_campaign("double-schur-equiv", opt);
  CHECK(ds.instances == 20 * 3);
  CHECK(ds.failed == 0);

  CampaignReport j1 = run_campaign("j1-coefficients", CampaignOptions{});
  CHECK(j1.instances == 255);
  CHECK(j1.failed == 0);
}

TEST_CASE("reports are deterministic and job-count independent") {
  CampaignOptions opt;
  opt.max_cells = 4;
  CampaignReport a = run_campaign("zrank-rank", opt);
  CampaignReport b = run_campaign("zrank-rank", opt);
  opt.jobs = 3;
  CampaignReport c = run_campaign("zrank-rank", opt);
  CHECK(strip_wall(a.to_json()) == strip_wall(b.to_json()));
  CHECK(strip_wall(a.to_json()) == strip_wall(c.to_json()));

  CampaignOptions ropt;
  ropt.n = 2;
  ropt.has_range = true;
  ropt.lo = -1;
  ropt.hi = 1;
  ropt.samples = 8;
  CampaignReport d = run_campaign("cauchy-sign", ropt);
  ropt.jobs = 4;
  CampaignReport e = run_campaign("cauchy-sign", ropt);
  CHECK(strip_wall(d.to_json()) == strip_wall(e.to_json()));
  CHECK(d.seed == 20240601);

  ropt.seed = 7;
  CampaignReport f = run_campaign("cauchy-sign", ropt);
  CHECK(f.seed == 7);
  CHECK(f.failed == 0);
}

TEST_CASE("report json shape") {
  CampaignOptions opt;
  opt.max_cells = 3;
  CampaignReport r = run_campaign("rank-agreement", opt);
  std::string j = r.to_json();
  CHECK(j.find("\"suite\": \"rank-agreement\"") != std::string::npos);
  CHECK(j.find("\"max_cells\": 3") != std::string::npos);
  CHECK(j.find("\"instances\": 13") != std::string::npos);
  CHECK(j.find("\"failed\": 0") != std::string::npos);
  CHECK(j.find("\"failures\": []") != std::string::npos);
  CHECK(j.find("\"wall_ms\"") != std::string::npos);
}
