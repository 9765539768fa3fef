#include <unistd.h>

#include <catch_amalgamated.hpp>

#include "flagcalc/errors.hpp"
#include "flagcalc/harness.hpp"

using namespace flagcalc;

namespace {

const std::filesystem::path kCacheDir = std::filesystem::temp_directory_path() /
                                        ("flagcalc-harness-test-" + std::to_string(::getpid()));

struct CacheCleanup {
  ~CacheCleanup() { std::filesystem::remove_all(kCacheDir); }
} cleanup;

HarnessConfig config(std::vector<std::string> suites) {
  HarnessConfig c;
  c.suites = std::move(suites);
  c.cache_dir = kCacheDir;
  return c;
}

}  // namespace

TEST_CASE("default grid", "[harness]") {
  const auto grid = default_grid();
  // Proper Levi subsets for rank <= 3: A1 1, A2 3, A3 7, B2 3, B3 7, C2 3, C3 7, G2 3.
  // Rank 4-5: Borel and maximal parabolics (A4 B4 C4 D4 F4 five each, D5 six),
  // plus Fl(1,4;5) which is not maximal.
  CHECK(grid.size() == 34 + 5 * 5 + 6 + 1);
  for (const auto& s : grid) CHECK(s.levi.size() < static_cast<std::size_t>(s.rank));
  for (const auto& pc : projrich_cases())
    CHECK(std::find(grid.begin(), grid.end(), pc) != grid.end());
}

TEST_CASE("suite space selection", "[harness]") {
  HarnessConfig c = config({});
  c.case_name = "LG24";
  const auto lg = suite_spaces("projrich", c);
  REQUIRE(lg.size() == 1);
  CHECK(lg[0].family == Family::C);
  CHECK(lg[0].levi == std::vector<int>{0});
  CHECK_THROWS_AS(suite_spaces("seidel", c), UsageError);
  c.case_name = "nope";
  CHECK_THROWS_AS(suite_spaces("projrich", c), UsageError);

  HarnessConfig d = config({});
  d.levi = std::vector<int>{1};
  CHECK_THROWS_AS(suite_spaces("psi", d), UsageError);
  d.family = Family::A;
  d.rank = 2;
  CHECK(suite_spaces("psi", d).size() == 1);
  CHECK_THROWS_AS(suite_spaces("bogus", d), UsageError);

  HarnessConfig a = config({});
  a.family = Family::A;
  a.rank = 2;
  CHECK(suite_spaces("min-degree", a).size() == 3);
  CHECK(suite_spaces("comin-group", a).size() == 1);
}

TEST_CASE("reports are independent of parallelism", "[harness]") {
  HarnessConfig c = config({"min-degree", "dualpoint", "psi", "projrich", "comin-group"});
  c.family = Family::A;
  c.jobs = 1;
  const Report serial = run_suites(c);
  c.jobs = 4;
  const Report parallel = run_suites(c);
  const Report again = run_suites(c);
  CHECK(serial.exit_code() == 0);
  CHECK(serial.count(CaseStatus::Fail) == 0);
  CHECK(report_json(serial, false).dump() == report_json(parallel, false).dump());
  CHECK(report_markdown(parallel, false) == report_markdown(again, false));
}

TEST_CASE("report schema", "[harness]") {
  HarnessConfig c = config({"projrich"});
  c.case_name = "LG24";
  const auto j = report_json(run_suites(c));
  REQUIRE(j["cases"].size() == 1);
  const auto& k = j["cases"][0];
  for (const char* key : {"suite", "case", "status", "params", "witness", "millis"})
    CHECK(k.contains(key));
  CHECK(k["status"] == "pass");
  CHECK(k["witness"]["all_fixed_divisors"].size() >= 1);
  CHECK(k["witness"]["proportional_pairs"].empty());
  CHECK(j["summary"]["pass"] == 1);
}

TEST_CASE("resource bounds skip cases without failing the run", "[harness]") {
  HarnessConfig c = config({"seidel"});
  c.family = Family::A;
  c.rank = 3;
  c.levi = std::vector<int>{};
  c.max_quantum_points = 4;
  const Report r = run_suites(c);
  CHECK(r.count(CaseStatus::Skipped) == r.cases.size());
  CHECK(r.exit_code() == 0);
  CHECK(report_markdown(r).find("quantum bound") != std::string::npos);
}

TEST_CASE("exit code follows failures", "[harness]") {
  Report r;
  r.cases.push_back({"s", "a", CaseStatus::Pass, {}, {}, 0});
  r.cases.push_back({"s", "b", CaseStatus::Skipped, {}, {}, 0});
  CHECK(r.exit_code() == 0);
  r.cases.push_back({"s", "c", CaseStatus::Fail, {}, {}, 0});
  CHECK(r.exit_code() == 1);
}

TEST_CASE("point varieties are rejected", "[harness]") {
  HarnessConfig c = config({"psi"});
  c.family = Family::A;
  c.rank = 2;
  c.levi = std::vector<int>{0, 1};
  CHECK_THROWS_AS(run_suites(c), UsageError);
}

TEST_CASE("root list parsing", "[harness]") {
  CHECK(parse_root_list("", 3).empty());
  CHECK(parse_root_list("3,1", 3) == std::vector<int>{0, 2});
  CHECK_THROWS_AS(parse_root_list("4", 3), InputError);
  CHECK_THROWS_AS(parse_root_list("1,x", 3), InputError);
  CHECK_THROWS_AS(parse_root_list("0", 3), InputError);
}

TEST_CASE("A1 extended Seidel table", "[harness][tables]") {
  WeylGroup g{RootSystem(Family::A, 1)};
  FlagVariety p1(g, std::vector<int>{});
  const auto rows = seidel_extended_table(p1, 2);
  REQUIRE(rows.size() == 6);
  const WeylElement s = g.simple(0);
  for (const auto& r : rows) {
    CHECK(r.w == s);
    if (r.u == 0) {
      // wu = s, d = 0: the point s, moved to 1; any positive e reaches X.
      CHECK(r.d == Degree({0}));
      CHECK(r.nbhd == (r.e.is_zero() ? s : g.identity()));
      CHECK(r.fixed.count() == (r.e.is_zero() ? 1u : 2u));
      if (r.e.is_zero()) CHECK(r.fixed[0]);
    } else {
      CHECK(r.d == Degree({1}));
      CHECK(r.nbhd == g.identity());
      CHECK(r.fixed.all());
    }
  }
  CHECK(seidel_table_markdown(p1, rows).find("Conjectural RHS") != std::string::npos);
  CHECK(seidel_table_json(p1, rows)["label"] == "conjectural RHS");
}

TEST_CASE("extended table: e = 0 rows are the translated Schubert varieties", "[harness][tables]") {
  WeylGroup g{RootSystem(Family::A, 3)};
  FlagVariety gr(g, std::vector<int>{0, 2});
  const auto& par = gr.parabolic();
  const int big = 2 * gr.dimension();
  for (const auto& r : seidel_extended_table(gr, big)) {
    const std::size_t wu = gr.point(g.multiply(r.w, gr.rep(r.u)));
    if (r.e.is_zero()) {
      CHECK(gr.point(r.nbhd) == wu);
      CHECK(r.fixed == translate_points(gr, g.inverse(r.w), par.up(wu)));
    }
    if (r.e.total() == big) CHECK(r.fixed.all());
  }
}
