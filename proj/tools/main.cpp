#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "report.hpp"

using namespace twistforge;
using namespace twistforge::cli;

namespace {

enum Exit { kOk = 0, kFailure = 1, kUnknown = 2, kEvaluation = 3 };

struct Common {
  int order = default_order();
  std::vector<std::string> params;
  unsigned jobs = 0;
  std::string format = "text";
};

void add_common(CLI::App* app, Common& c, bool with_order) {
  if (with_order) app->add_option("--order", c.order, "truncation order N (default: $TWISTFORGE_ORDER or 3)");
  app->add_option("--param", c.params, "override a parameter constant: name=value[@degree]");
}

RunOptions options(const Common& c) {
  RunOptions o;
  o.order = c.order;
  o.jobs = c.jobs;
  for (const auto& p : c.params) apply_param(o.params, p);
  return o;
}

int finish(const std::vector<CheckResult>& results, const RunOptions& o, const std::string& format) {
  if (format == "json")
    std::cout << to_json(results, o).dump(2) << "\n";
  else
    std::cout << to_text(results);
  if (has_error(results)) return kEvaluation;
  return has_failure(results) ? kFailure : kOk;
}

std::vector<const CatalogEntry*> select(const std::string& id, bool all) {
  std::vector<const CatalogEntry*> out;
  if (all) {
    for (const auto& e : catalog()) out.push_back(&e);
  } else {
    out.push_back(&find_entry(id));
  }
  return out;
}

Series entry_twist(const CatalogEntry& e, const RunOptions& o) {
  if (!e.twist) throw std::invalid_argument("entry " + e.id + " has no twist (" + e.twist_note + ")");
  return build_twist(*e.twist, e.algebra, o.params, o.order).value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twistforge: classical r-matrices and twists of the Lorentz and Poincare algebras"};
  app.require_subcommand(1);
  Common common;

  auto* list = app.add_subcommand("list", "list catalog entries");

  auto* dump = app.add_subcommand("dump", "print catalog entries in full");
  std::string dump_id;
  dump->add_option("id", dump_id, "entry id (default: all)");

  auto* check = app.add_subcommand("check", "run a check over one entry or the whole catalog");
  check->require_subcommand(1);
  std::string check_id;
  bool check_all = false;
  const std::map<CheckKind, std::string> blurb = {
      {CheckKind::Cybe, "classify r as homogeneous, modified or no CYBE solution"},
      {CheckKind::Zakrzewski, "conditions on the a+b+c split of a Poincare r-matrix"},
      {CheckKind::Subordination, "piece sums and subordination claims"},
      {CheckKind::Jordanian, "Jordanian data and Abelian pieces"},
      {CheckKind::Cocycle, "cocycle and counit conditions of the twist"},
      {CheckKind::LocalSymmetry, "local r-symmetry of the twist"}};
  for (CheckKind k : all_check_kinds()) {
    auto* sub = check->add_subcommand(to_string(k), blurb.at(k));
    sub->add_option("id", check_id, "entry id");
    sub->add_flag("--all", check_all, "every catalog entry");
    sub->add_option("--format", common.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--jobs", common.jobs, "worker threads (0: all cores)");
    add_common(sub, common, k == CheckKind::Cocycle || k == CheckKind::LocalSymmetry);
  }

  auto* build = app.add_subcommand("build-twist", "print the twist series of an entry");
  std::string build_id;
  build->add_option("id", build_id, "entry id")->required();
  add_common(build, common, true);

  auto* cop = app.add_subcommand("coproduct", "twisted coproduct of a generator");
  std::string cop_id, cop_gen;
  cop->add_option("id", cop_id, "entry id")->required();
  cop->add_option("generator", cop_gen, "generator name")->required();
  add_common(cop, common, true);

  auto* probe = app.add_subcommand("probe", "report-only probes");
  std::string probe_target, chi_text = "1";
  probe->add_option("target", probe_target, "tilde9")->required()->check(CLI::IsMember({"tilde9"}));
  probe->add_option("--chi", chi_text, "constant substituted for chi");

  auto* report = app.add_subcommand("report", "run every check and write a report");
  bool report_all = false;
  std::string report_out;
  report->add_flag("--all", report_all, "every catalog entry")->required();
  report->add_option("--format", common.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  report->add_option("--out", report_out, "output path (default: stdout)");
  report->add_option("--jobs", common.jobs, "worker threads (0: all cores)");
  add_common(report, common, true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) {
      for (const auto& e : catalog())
        std::cout << std::left << std::setw(9) << e.id << std::setw(10) << e.family << std::setw(13)
                  << to_string(e.expected_cybe) << std::setw(7) << (e.twist ? "twist" : "-") << e.summary << "\n";
      return kOk;
    }
    if (dump->parsed()) {
      std::cout << (dump_id.empty() ? dump_catalog() : dump_entry(find_entry(dump_id)));
      return kOk;
    }
    if (check->parsed()) {
      for (CheckKind k : all_check_kinds()) {
        if (!check->get_subcommand(to_string(k))->parsed()) continue;
        if (check_id.empty() == !check_all) {
          std::cerr << "give exactly one of <id> or --all\n";
          return kUnknown;
        }
        RunOptions o = options(common);
        auto out = run_checks(select(check_id, check_all), {k}, o);
        if (out.results.empty()) std::cout << "nothing to check for entry " << check_id << "\n";
        return finish(out.results, o, common.format);
      }
    }
    if (build->parsed()) {
      RunOptions o = options(common);
      const CatalogEntry& e = find_entry(build_id);
      if (!e.twist) {
        std::cout << "entry " << e.id << ": no twist (" << e.twist_note << ")\n";
        return kOk;
      }
      std::cout << "F = " << to_string(*e.twist) << "\n";
      if (e.twist->size() > 1)
        for (const auto& f : *e.twist) std::cout << "  " << f.label << " = exp(" << to_string(f.argument) << ")\n";
      std::cout << entry_twist(e, o).to_string() << "\n";
      return kOk;
    }
    if (cop->parsed()) {
      RunOptions o = options(common);
      const CatalogEntry& e = find_entry(cop_id);
      auto g = e.algebra->find(cop_gen);
      if (!g) {
        std::cerr << "unknown generator '" << cop_gen << "' in " << e.algebra->name() << "\n";
        return kUnknown;
      }
      Series f = entry_twist(e, o);
      std::cout << twisted_coproduct(f, generator_series(e.algebra, *g, o.order)).to_string() << "\n";
      return kOk;
    }
    if (probe->parsed()) {
      auto r = probe_tilde9(GaussianRational::parse(chi_text));
      std::cout << to_text({r});
      return kOk;
    }
    if (report->parsed()) {
      RunOptions o = options(common);
      catalog();
      auto out = run_checks(select("", true), all_check_kinds(), o);
      std::string body = common.format == "json" ? to_json(out.results, o).dump(2) + "\n" : to_text(out.results);
      if (report_out.empty()) {
        std::cout << body;
      } else {
        std::ofstream(report_out) << body;
        if (common.format == "json") std::ofstream(report_out + ".runtime.json") << to_json(out.timings).dump(2) << "\n";
        std::size_t fails = 0;
        for (const auto& r : out.results) fails += r.verdict == Verdict::Fail;
        std::cout << out.results.size() << " results, " << fails << " failing; written to " << report_out << "\n";
      }
      if (has_error(out.results)) return kEvaluation;
      return has_failure(out.results) ? kFailure : kOk;
    }
  } catch (const UnknownEntry& e) {
    std::cerr << e.what() << "\n";
    return kUnknown;
  } catch (const ValuationError& e) {
    std::cerr << "valuation error: " << e.what() << "\n";
    return kEvaluation;
  } catch (const NonPolynomialSpecialization& e) {
    std::cerr << "non-polynomial specialization: " << e.what() << "\n";
    return kEvaluation;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kUnknown;
  }
  return kOk;
}
