#ifndef TWISTFORGE_TOOLS_REPORT_HPP
#define TWISTFORGE_TOOLS_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "twistforge/catalog.hpp"

namespace twistforge::cli {

enum class Verdict { Pass, Fail, ReportOnly };
std::string to_string(Verdict v);

struct CheckResult {
  std::string id;
  std::string check;
  Verdict verdict = Verdict::Pass;
  int order = -1;  // -1: exact check, no truncation
  std::string witness;
  std::string detail;
  std::vector<std::pair<std::string, std::string>> params;
  bool error = false;  // evaluation raised (valuation / non-polynomial specialization)
};

enum class CheckKind { Cybe, Zakrzewski, Subordination, Jordanian, Cocycle, LocalSymmetry };
std::string to_string(CheckKind k);
std::optional<CheckKind> parse_check_kind(std::string_view name);
const std::vector<CheckKind>& all_check_kinds();

struct RunOptions {
  int order = 3;
  SpecializationMap params = SpecializationMap::defaults();
  unsigned jobs = 0;  // 0: hardware concurrency
};

/// TWISTFORGE_ORDER if set and valid, else 3.
int default_order();

/// Parses "name=value" or "name=value@degree" into the map; throws
/// std::invalid_argument for unknown names or bad literals.
void apply_param(SpecializationMap& m, std::string_view assignment);

/// Results of one check kind on one entry; empty when the check does not apply.
std::vector<CheckResult> run_check(const CatalogEntry& e, CheckKind kind, const RunOptions& opts);

struct TaskTiming {
  std::string id;
  std::string check;
  double seconds;
};

struct RunOutcome {
  std::vector<CheckResult> results;  // entry-major, then kind order
  std::vector<TaskTiming> timings;
};

/// Fans (entry, kind) tasks out over a worker pool; output order does not
/// depend on completion order.
RunOutcome run_checks(const std::vector<const CatalogEntry*>& entries, const std::vector<CheckKind>& kinds,
                      const RunOptions& opts);

/// Conditions of the a+b+c split on entry tilde9 with chi set to a constant.
CheckResult probe_tilde9(const GaussianRational& chi);

bool has_failure(const std::vector<CheckResult>& results);
bool has_error(const std::vector<CheckResult>& results);

nlohmann::json to_json(const std::vector<CheckResult>& results, const RunOptions& opts);
nlohmann::json to_json(const std::vector<TaskTiming>& timings);
std::string to_text(const std::vector<CheckResult>& results);

}  // namespace twistforge::cli

#endif  // TWISTFORGE_TOOLS_REPORT_HPP
