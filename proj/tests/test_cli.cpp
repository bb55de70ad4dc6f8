#include <doctest.h>

#include <cstdlib>

#include "report.hpp"

using namespace twistforge;
using namespace twistforge::cli;

namespace {

std::vector<const CatalogEntry*> all_entries() {
  std::vector<const CatalogEntry*> out;
  for (const CatalogEntry& e : catalog()) out.push_back(&e);
  return out;
}

int count(const std::vector<CheckResult>& rs, Verdict v) {
  return static_cast<int>(std::count_if(rs.begin(), rs.end(), [v](const CheckResult& r) { return r.verdict == v; }));
}

}  // namespace

TEST_CASE("check kinds round trip through their names") {
  for (CheckKind k : all_check_kinds()) CHECK(parse_check_kind(to_string(k)) == k);
  CHECK_FALSE(parse_check_kind("nonsense").has_value());
}

TEST_CASE("parameter assignments") {
  SpecializationMap m = SpecializationMap::defaults();
  int alpha = SymbolTable::index("alpha");
  apply_param(m, "alpha=3/4");
  CHECK(m.at(alpha).constant == GaussianRational::fraction(3, 4));
  CHECK(m.at(alpha).degree == 1);
  apply_param(m, "alpha=1+i@2");
  CHECK(m.at(alpha).constant == GaussianRational(1, 1));
  CHECK(m.at(alpha).degree == 2);
  CHECK_THROWS_AS(apply_param(m, "nosuch=1"), std::invalid_argument);
  CHECK_THROWS_AS(apply_param(m, "alpha"), std::invalid_argument);
  CHECK_THROWS_AS(apply_param(m, "alpha=x"), std::invalid_argument);
  CHECK_THROWS_AS(apply_param(m, "alpha=1@x"), std::invalid_argument);
}

TEST_CASE("default order comes from the environment") {
  unsetenv("TWISTFORGE_ORDER");
  CHECK(default_order() == 3);
  setenv("TWISTFORGE_ORDER", "5", 1);
  CHECK(default_order() == 5);
  setenv("TWISTFORGE_ORDER", "five", 1);
  CHECK(default_order() == 3);
  unsetenv("TWISTFORGE_ORDER");
}

TEST_CASE("report is independent of the number of workers") {
  RunOptions one;
  one.jobs = 1;
  RunOptions four = one;
  four.jobs = 4;
  auto a = run_checks(all_entries(), all_check_kinds(), one);
  auto b = run_checks(all_entries(), all_check_kinds(), four);
  CHECK(to_json(a.results, one).dump() == to_json(b.results, four).dump());
  CHECK(to_text(a.results) == to_text(b.results));
  CHECK(a.timings.size() == b.timings.size());

  // the case 10 cocycle is the only failing result
  CHECK(count(a.results, Verdict::Fail) == 1);
  auto fail = std::find_if(a.results.begin(), a.results.end(), [](const CheckResult& r) { return r.verdict == Verdict::Fail; });
  CHECK(fail->id == "10");
  CHECK(fail->check == "cocycle");
  CHECK(fail->order == 3);
  CHECK_FALSE(fail->witness.empty());
  CHECK(has_failure(a.results));
  CHECK_FALSE(has_error(a.results));
}

TEST_CASE("json report layout") {
  RunOptions opts;
  opts.jobs = 1;
  auto rs = run_checks({&find_entry("L1")}, {CheckKind::Cybe, CheckKind::Cocycle}, opts).results;
  nlohmann::json j = to_json(rs, opts);
  CHECK(j["tool"] == "twistforge");
  CHECK(j["order"] == 3);
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["results"].size() == rs.size());
  for (const auto& r : j["results"]) {
    CHECK(r.contains("params"));
    CHECK(r.contains("witness"));
    CHECK(r["id"] == "L1");
  }
  CHECK(j["results"][0]["check"] == "cybe");
  CHECK(j["results"][0]["order"].is_null());
}

TEST_CASE("valuation errors are reported, not thrown") {
  RunOptions opts;
  opts.jobs = 1;
  apply_param(opts.params, "alpha=2/3@0");
  auto rs = run_check(find_entry("L1"), CheckKind::Cocycle, opts);
  REQUIRE_FALSE(rs.empty());
  CHECK(has_error(rs));
}

TEST_CASE("tilde9 probe is report-only") {
  for (int chi : {0, 1, 2}) {
    CheckResult r = probe_tilde9(GaussianRational(chi));
    CHECK(r.verdict == Verdict::ReportOnly);
    CHECK(r.id == "tilde9");
  }
}

TEST_CASE("checks that do not apply produce no results") {
  RunOptions opts;
  CHECK(run_check(find_entry("12"), CheckKind::Cocycle, opts).empty());
  CHECK(run_check(find_entry("L1"), CheckKind::Jordanian, opts).size() == 1);
}
