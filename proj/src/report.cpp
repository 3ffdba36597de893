#include "lgi/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>

#include "json.hpp"

namespace lgi::report {

using registry::Expected;
using registry::Report;
using registry::Status;
using registry::Verdict;
using nlohmann::ordered_json;

std::string fmt15(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

double round15(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(fmt15(v).c_str(), nullptr);
}

std::string section_title(int s) {
  switch (s) {
    case 1: return "Laplace transforms of log Gamma and psi";
    case 2: return "Trigonometric integrals of log Gamma";
    case 3: return "Sine and cosine integral sums";
    case 4: return "Fourier coefficients, Barnes G and cotangent integrals";
    case 5: return "Lambda function, zeta power series and the psi/x cluster";
    case 6: return "Cosine series, log products and digamma-weighted integrals";
    case 7: return "Alternating log series and psi sine integrals";
    case 8: return "Fourier spot checks";
  }
  return "Other";
}

namespace {

ordered_json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round15(v);
}

ordered_json side(const registry::Side& s) {
  ordered_json j;
  j["value"] = num(s.value);
  j["abs_err"] = num(s.abs_err);
  j["route"] = s.route;
  j["converged"] = s.converged;
  return j;
}

std::string params_md(const Verdict& v) {
  const registry::IdentityRecord* r = registry::find_identity(v.id);
  std::string out;
  for (std::size_t i = 0; i < v.params.size(); ++i) {
    if (i) out += ", ";
    if (r && i < r->param_names.size()) out += r->param_names[i] + "=";
    out += fmt15(v.params[i]);
  }
  return out.empty() ? "-" : out;
}

std::string esc(const std::string& s) {
  std::string o;
  for (char c : s) o += c == '|' ? std::string("\\|") : std::string(1, c);
  return o;
}

}  // namespace

std::string to_json(const Report& rep, bool timing) {
  ordered_json j;
  j["schema_version"] = rep.schema_version;
  ordered_json cfg;
  cfg["tol_class"] = rep.tol_override ? registry::to_string(*rep.tol_override) : "per-record";
  cfg["max_terms"] = rep.config.max_terms;
  cfg["quad_level_cap"] = rep.config.level_cap;
  cfg["quad_tol"] = num(rep.config.quad_tol);
  cfg["parallelism"] = rep.parallelism;
  j["config"] = cfg;
  ordered_json vs = ordered_json::array();
  for (const Verdict& v : rep.verdicts) {
    ordered_json o;
    o["id"] = v.id;
    o["anchor"] = v.anchor;
    o["section"] = v.section;
    ordered_json ps = ordered_json::array();
    for (double p : v.params) ps.push_back(num(p));
    o["params"] = ps;
    o["lhs"] = side(v.lhs);
    o["rhs"] = side(v.rhs);
    o["residual"] = num(v.residual);
    o["budget"] = num(v.budget);
    o["tol_class"] = registry::to_string(v.tol_class);
    o["status"] = registry::to_string(v.status);
    o["expected_status"] = registry::to_string(v.expected);
    if (!v.note.empty()) o["note"] = v.note;
    if (!v.diagnostics.empty()) o["diagnostics"] = v.diagnostics;
    if (timing) o["wall_time"] = v.wall_time;
    vs.push_back(o);
  }
  j["verdicts"] = vs;
  const registry::Summary& s = rep.summary;
  ordered_json sm;
  sm["total"] = s.total;
  sm["counts"] = {{"CONFIRMED", s.confirmed}, {"REFUTED", s.refuted}, {"INCONCLUSIVE", s.inconclusive}};
  ordered_json cross;
  for (int e = 0; e < 3; ++e) {
    ordered_json row;
    for (int st = 0; st < 3; ++st) row[registry::to_string(Status(st))] = s.cross[e][st];
    cross[registry::to_string(Expected(e))] = row;
  }
  sm["by_expected"] = cross;
  sm["failures"] = s.failures;
  j["summary"] = sm;
  if (timing) j["total_wall_time"] = rep.wall_time;
  return j.dump(2) + "\n";
}

std::string to_markdown(const Report& rep, bool timing) {
  std::ostringstream o;
  const registry::Summary& s = rep.summary;
  o << "# Verification report\n\n";
  o << "Schema " << rep.schema_version << ", tolerance "
    << (rep.tol_override ? registry::to_string(*rep.tol_override) : "per record") << ", parallelism "
    << rep.parallelism << ".\n\n";
  o << "| | count |\n|---|---|\n| verdicts | " << s.total << " |\n| CONFIRMED | " << s.confirmed
    << " |\n| REFUTED | " << s.refuted << " |\n| INCONCLUSIVE | " << s.inconclusive << " |\n";
  if (timing) o << "| wall time (s) | " << fmt15(rep.wall_time) << " |\n";
  o << "\n";
  if (!s.failures.empty()) {
    o << "**Failures** (expected CONFIRMED, found REFUTED):";
    for (const std::string& f : s.failures) o << " " << f;
    o << "\n\n";
  }

  std::map<int, std::vector<const Verdict*>> by_section;
  for (const Verdict& v : rep.verdicts) by_section[v.section].push_back(&v);
  for (const auto& [sec, vs] : by_section) {
    o << "## Section " << sec << ": " << section_title(sec) << "\n\n";
    o << "| id | params | lhs | rhs | residual | budget | status | expected |\n";
    o << "|---|---|---|---|---|---|---|---|\n";
    for (const Verdict* v : vs)
      o << "| " << v->id << " | " << params_md(*v) << " | " << fmt15(v->lhs.value) << " | " << fmt15(v->rhs.value)
        << " | " << fmt15(v->residual) << " | " << fmt15(v->budget) << " | " << registry::to_string(v->status)
        << " | " << registry::to_string(v->expected) << " |\n";
    o << "\n";
  }

  o << "## Appendix: disputed items\n\n";
  for (const Verdict& v : rep.verdicts) {
    if (v.expected != Expected::disputed) continue;
    o << "### " << v.id << (v.params.empty() ? "" : " (" + params_md(v) + ")") << "\n\n";
    o << "Statement: " << esc(v.anchor) << "\n\n";
    o << "| | quoted | found |\n|---|---|---|\n";
    const registry::IdentityRecord* r = registry::find_identity(v.id);
    if (r)
      for (const registry::QuotedValue& q : r->quoted) o << "| " << esc(q.label) << " | " << esc(q.text) << " | |\n";
    o << "| lhs (" << esc(v.lhs.route) << ") | | " << fmt15(v.lhs.value) << " +- " << fmt15(v.lhs.abs_err) << " |\n";
    o << "| rhs (" << esc(v.rhs.route) << ") | | " << fmt15(v.rhs.value) << " +- " << fmt15(v.rhs.abs_err) << " |\n";
    o << "| verdict | | " << registry::to_string(v.status) << ", residual " << fmt15(v.residual) << " |\n\n";
    if (!v.note.empty()) o << "Note: " << esc(v.note) << "\n\n";
  }
  bool probes = false;
  for (const Verdict& v : rep.verdicts) {
    if (v.expected != Expected::divergent_probe) continue;
    if (!probes) o << "## Appendix: divergence probes\n\n";
    probes = true;
    o << "### " << v.id << "\n\n" << esc(v.anchor) << "\n\n";
    for (const std::string& d : v.diagnostics) o << "- " << esc(d) << "\n";
    o << "- " << esc(v.note) << "\n\n";
  }
  return o.str();
}

}  // namespace lgi::report
