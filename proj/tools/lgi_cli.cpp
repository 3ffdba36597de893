// Command-line front end: verify, eval, sweep, list.
// Exit codes: 0 ok, 1 usage or internal error, 2 an expected-CONFIRMED identity came back REFUTED.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lgi/quad.hpp"
#include "lgi/registry.hpp"
#include "lgi/report.hpp"
#include "lgi/series.hpp"
#include "lgi/specfun.hpp"

namespace reg = lgi::registry;
using lgi::report::fmt15;

namespace {

struct FnSpec {
  int arity;
  std::function<lgi::FnEvalResult(const std::vector<double>&)> f;
};

const std::map<std::string, FnSpec>& fn_table() {
  static const std::map<std::string, FnSpec> t = {
      {"lambda", {1, [](auto& a) { return lgi::lambda_fn(a[0]); }}},
      {"lambda_prime", {1, [](auto& a) { return lgi::lambda_prime(a[0]); }}},
      {"log_gamma", {1, [](auto& a) { return lgi::log_gamma(a[0]); }}},
      {"digamma", {1, [](auto& a) { return lgi::digamma(a[0]); }}},
      {"polygamma", {2, [](auto& a) { return lgi::polygamma(int(a[0]), a[1]); }}},
      {"Si", {1, [](auto& a) { return lgi::Si(a[0]); }}},
      {"Ci", {1, [](auto& a) { return lgi::Ci(a[0]); }}},
      {"si", {1, [](auto& a) { return lgi::si(a[0]); }}},
      {"Ei", {1, [](auto& a) { return lgi::exp_integral(a[0]); }}},
      {"zeta", {1, [](auto& a) { return lgi::zeta(a[0]); }}},
      {"hurwitz_zeta", {2, [](auto& a) { return lgi::hurwitz_zeta(a[0], a[1]); }}},
      {"zeta_prime", {1, [](auto& a) { return lgi::zeta_prime(a[0]); }}},
      {"gamma1", {0, [](auto&) { return lgi::stieltjes_gamma1(); }}},
      {"log_barnes_g", {1, [](auto& a) { return lgi::log_barnes_g(a[0]); }}},
      {"clausen_cl2", {1, [](auto& a) { return lgi::clausen_cl2(a[0]); }}},
      {"bernoulli_poly", {2, [](auto& a) { return lgi::bernoulli_poly(int(a[0]), a[1]); }}},
  };
  return t;
}

std::string join_params(const std::vector<double>& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + fmt15(p[i]);
  return s;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  f << text;
  return bool(f);
}

void print_verdict(const reg::Verdict& v) {
  std::printf("%-12s %-14s %-12s res=%-22s budget=%-22s %s\n", v.id.c_str(),
              v.params.empty() ? "-" : join_params(v.params).c_str(), reg::to_string(v.status),
              fmt15(v.residual).c_str(), fmt15(v.budget).c_str(),
              v.expected == reg::Expected::confirmed ? "" : reg::to_string(v.expected));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification harness for log Gamma integral and series identities"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "Run identity checks");
  std::vector<std::string> ids;
  std::optional<int> section;
  bool all = false, no_timing = false;
  std::string tol_class, json_path, md_path, inject;
  long max_terms = 0;
  int level_cap = 12, parallelism = 1;
  verify->add_option("--ids", ids, "Identity ids")->delimiter(',');
  verify->add_option("--section", section, "Section number")->check(CLI::Range(1, 8));
  verify->add_flag("--all", all, "Every record");
  verify->add_option("--tol-class", tol_class, "strict | standard | slow")
      ->check(CLI::IsMember({"strict", "standard", "slow"}));
  verify->add_option("--max-terms", max_terms, "Series term budget (0 = per-series default)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--level-cap", level_cap, "Quadrature level cap")->check(CLI::Range(1, 14));
  verify->add_option("--json", json_path, "Write JSON report");
  verify->add_option("--md", md_path, "Write markdown report");
  verify->add_option("--parallelism", parallelism, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--no-timing", no_timing, "Omit wall-time fields");
  // test hook: shift one rhs by 1 to exercise the failure exit code
  verify->add_option("--inject-wrong-rhs", inject)->group("");

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate a function, series or integral");
  std::string kind, key;
  std::vector<double> eparams;
  eval->add_option("kind", kind, "fn | series | integral")->required()->check(CLI::IsMember({"fn", "series", "integral"}));
  eval->add_option("key", key, "Function name or catalog id")->required();
  eval->add_option("params", eparams, "Arguments")->allow_extra_args();

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Verify a parametric identity over a range");
  std::string sid, pname;
  double from = 0, to = 0;
  int steps = 0;
  bool sweep_json = false;
  sweep->add_option("id", sid, "Identity id")->required();
  sweep->add_option("--param", pname, "Parameter name")->required();
  sweep->add_option("--from", from)->required();
  sweep->add_option("--to", to)->required();
  sweep->add_option("--steps", steps)->required()->check(CLI::Range(2, 10000));
  sweep->add_flag("--json", sweep_json, "JSON rows instead of a table");

  // list
  auto* list = app.add_subcommand("list", "List catalog entries");
  std::optional<int> lsection;
  std::string lstatus, lkind = "identities";
  list->add_option("--section", lsection)->check(CLI::Range(1, 8));
  list->add_option("--status", lstatus, "CONFIRMED | DISPUTED | DIVERGENT-PROBE")
      ->check(CLI::IsMember({"CONFIRMED", "DISPUTED", "DIVERGENT-PROBE"}));
  list->add_option("--kind", lkind, "identities | series | integrals | functions")
      ->check(CLI::IsMember({"identities", "series", "integrals", "functions"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*verify) {
      if (!all && !section && ids.empty()) {
        std::cerr << "error: give --ids, --section or --all\n";
        return 1;
      }
      if (!inject.empty()) reg::perturb_rhs(inject, 1.0);
      reg::Selection sel;
      sel.all = all;
      sel.section = section;
      sel.ids = ids;
      reg::EvalConfig cfg;
      cfg.max_terms = max_terms;
      cfg.level_cap = level_cap;
      std::optional<reg::TolClass> tc;
      if (!tol_class.empty()) tc = reg::parse_tol_class(tol_class);
      reg::Report rep = reg::run_suite(sel, tc, cfg, parallelism);
      for (const reg::Verdict& v : rep.verdicts) print_verdict(v);
      const reg::Summary& s = rep.summary;
      std::printf("%d verdicts: %d CONFIRMED, %d REFUTED, %d INCONCLUSIVE\n", s.total, s.confirmed, s.refuted,
                  s.inconclusive);
      for (const std::string& f : s.failures) std::printf("FAILURE %s\n", f.c_str());
      if (!json_path.empty() && !write_file(json_path, lgi::report::to_json(rep, !no_timing))) return 1;
      if (!md_path.empty() && !write_file(md_path, lgi::report::to_markdown(rep, !no_timing))) return 1;
      return s.failures.empty() ? 0 : 2;
    }

    if (*eval) {
      lgi::FnEvalResult r;
      if (kind == "fn") {
        auto it = fn_table().find(key);
        if (it == fn_table().end()) {
          std::cerr << "error: unknown function " << key << "\n";
          return 1;
        }
        if (int(eparams.size()) != it->second.arity) {
          std::cerr << "error: " << key << " takes " << it->second.arity << " argument(s)\n";
          return 1;
        }
        r = it->second.f(eparams);
      } else if (kind == "series") {
        lgi::series::SeriesResult s = lgi::series::sum_catalog(key, eparams);
        r = {s.value, s.abs_err};
      } else {
        lgi::quad::QuadResult q = lgi::quad::integral_catalog(key, eparams);
        r = {q.value, q.abs_err};
      }
      std::string ps = join_params(eparams);
      std::printf("%s%s%s = %s \xC2\xB1 %s\n", key.c_str(), ps.empty() ? "" : " ", ps.c_str(), fmt15(r.value).c_str(),
                  fmt15(r.abs_err).c_str());
      return 0;
    }

    if (*sweep) {
      const reg::IdentityRecord* rec = reg::find_identity(sid);
      if (!rec) {
        reg::verify_identity(sid);  // throws with near-matches
        return 1;
      }
      if (!rec->parametric()) {
        std::cerr << "error: " << rec->id << " has no parameters\n";
        return 1;
      }
      std::size_t idx = 0;
      while (idx < rec->param_names.size() && rec->param_names[idx] != pname) ++idx;
      if (idx == rec->param_names.size()) {
        std::cerr << "error: " << rec->id << " has no parameter " << pname << "\n";
        return 1;
      }
      if (!(from < to)) {
        std::cerr << "error: --from must be below --to\n";
        return 1;
      }
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      if (!sweep_json) std::printf("%-22s %-22s %-22s %-22s %s\n", pname.c_str(), "lhs", "rhs", "residual", "status");
      for (int i = 0; i < steps; ++i) {
        reg::Params p = rec->grid.front();
        p[idx] = from + (to - from) * i / (steps - 1);
        reg::Verdict v = reg::verify_identity(rec->id, p);
        if (sweep_json)
          rows.push_back({{"param", lgi::report::round15(p[idx])},
                          {"lhs", lgi::report::round15(v.lhs.value)},
                          {"rhs", lgi::report::round15(v.rhs.value)},
                          {"residual", lgi::report::round15(v.residual)},
                          {"status", reg::to_string(v.status)}});
        else
          std::printf("%-22s %-22s %-22s %-22s %s\n", fmt15(p[idx]).c_str(), fmt15(v.lhs.value).c_str(),
                      fmt15(v.rhs.value).c_str(), fmt15(v.residual).c_str(), reg::to_string(v.status));
      }
      if (sweep_json) std::cout << rows.dump(2) << "\n";
      return 0;
    }

    if (*list) {
      if (lkind == "series") {
        for (const auto& e : lgi::series::series_entries()) std::printf("%-16s %s\n", e.id.c_str(), e.anchor.c_str());
      } else if (lkind == "integrals") {
        for (const auto& e : lgi::quad::integral_entries()) std::printf("%-16s %s\n", e.id.c_str(), e.anchor.c_str());
      } else if (lkind == "functions") {
        for (const auto& [name, f] : fn_table()) std::printf("%-16s %d argument(s)\n", name.c_str(), f.arity);
      } else {
        reg::Filter f;
        f.section = lsection;
        if (lstatus == "CONFIRMED") f.expected = reg::Expected::confirmed;
        if (lstatus == "DISPUTED") f.expected = reg::Expected::disputed;
        if (lstatus == "DIVERGENT-PROBE") f.expected = reg::Expected::divergent_probe;
        for (const reg::IdentityRecord* r : reg::list_identities(f))
          std::printf("%-12s s%d %-15s %s\n", r->id.c_str(), r->section, reg::to_string(r->expected),
                      r->anchor.c_str());
      }
      return 0;
    }
  } catch (const lgi::Error& e) {
    std::cerr << "error (" << lgi::to_string(e.kind()) << "): " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
