#include "lgi/registry.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <thread>

#include "lgi/quad.hpp"
#include "lgi/series.hpp"
#include "registry_internal.hpp"

namespace lgi::registry {

double tol_value(TolClass t) {
  switch (t) {
    case TolClass::strict: return 1e-9;
    case TolClass::standard: return 1e-7;
    case TolClass::slow: return 1e-5;
  }
  return 1e-7;
}

const char* to_string(TolClass t) {
  switch (t) {
    case TolClass::strict: return "strict";
    case TolClass::standard: return "standard";
    case TolClass::slow: return "slow";
  }
  return "?";
}

const char* to_string(Expected e) {
  switch (e) {
    case Expected::confirmed: return "CONFIRMED";
    case Expected::disputed: return "DISPUTED";
    case Expected::divergent_probe: return "DIVERGENT-PROBE";
  }
  return "?";
}

const char* to_string(Status s) {
  switch (s) {
    case Status::confirmed: return "CONFIRMED";
    case Status::refuted: return "REFUTED";
    case Status::inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::optional<TolClass> parse_tol_class(const std::string& s) {
  if (s == "strict") return TolClass::strict;
  if (s == "standard") return TolClass::standard;
  if (s == "slow") return TolClass::slow;
  return std::nullopt;
}

Status classify(double residual, double budget) {
  if (!std::isfinite(residual) || !std::isfinite(budget)) return Status::inconclusive;
  if (residual <= budget) return Status::confirmed;
  if (residual > 100 * budget) return Status::refuted;
  return Status::inconclusive;
}

std::vector<const IdentityRecord*> list_identities(const Filter& f) {
  std::vector<const IdentityRecord*> out;
  for (const IdentityRecord& r : catalog()) {
    if (f.section && r.section != *f.section) continue;
    if (f.expected && r.expected != *f.expected) continue;
    out.push_back(&r);
  }
  return out;
}

namespace {

// ASCII spellings accepted for ids that carry a Greek letter.
std::string canonical_id(const std::string& id) {
  if (id == "P-logGcot" || id == "P-loggammacot") return "P-log\xCE\x93" "cot";
  return id;
}

std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string params_text(const Params& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + fmt(p[i]);
  return s + ")";
}

const IdentityRecord& require(const std::string& id) {
  const IdentityRecord* r = find_identity(id);
  if (!r) {
    std::string msg = "unknown identity id: " + id;
    std::vector<std::string> near = near_matches(id);
    if (!near.empty()) {
      msg += " (did you mean";
      for (std::size_t i = 0; i < near.size(); ++i) msg += (i ? ", " : " ") + near[i];
      msg += "?)";
    }
    throw Error(ErrorKind::unknown_id, msg);
  }
  return *r;
}

Params resolve_params(const IdentityRecord& r, const Params& params) {
  if (!r.parametric()) {
    if (!params.empty()) throw Error(ErrorKind::domain, r.id + " takes no parameters");
    return {};
  }
  Params p = params.empty() ? r.grid.front() : params;
  if (p.size() != r.param_names.size() || !r.in_domain(p))
    throw Error(ErrorKind::domain, r.id + params_text(p) + " outside domain: " + r.domain);
  return p;
}

const char* probe_integral(const std::string& id) {
  return id == "P-logxcot" ? "Q-probe-lxcot" : "Q-probe-lgcot";
}

// Integrates over [eps, 1-eps] for three eps. Convergence would make the
// successive differences shrink; the verdict records them either way.
void run_probe(Verdict& v, const EvalConfig& cfg, double tol) {
  const double eps[3] = {1e-2, 1e-3, 1e-4};
  quad::QuadResult r[3];
  for (int i = 0; i < 3; ++i) r[i] = quad::integral_catalog(probe_integral(v.id), {eps[i]}, cfg.quad_tol, cfg.level_cap);
  for (int i = 0; i < 3; ++i)
    v.diagnostics.push_back("eps=" + fmt(eps[i]) + ": " + fmt(r[i].value) + " +- " + fmt(r[i].abs_err));
  double d1 = std::fabs(r[1].value - r[0].value), d2 = std::fabs(r[2].value - r[1].value);
  v.lhs = {r[2].value, r[2].abs_err, std::string(probe_integral(v.id)) + "(1e-4)", r[2].converged, ""};
  v.rhs = {r[1].value, r[1].abs_err, std::string(probe_integral(v.id)) + "(1e-3)", r[1].converged, ""};
  v.residual = d2;
  v.budget = r[1].abs_err + r[2].abs_err + tol;
  v.status = classify(v.residual, v.budget);
  bool cauchy = d2 <= v.budget || d2 < 0.5 * d1;
  v.diagnostics.push_back("successive differences " + fmt(d1) + ", " + fmt(d2));
  v.note = cauchy ? "truncated integrals settle; divergence not observed" : "not Cauchy: truncated integrals keep moving";
}

Verdict evaluate(const IdentityRecord& r, const Params& p, TolClass tc, const EvalConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  v.id = r.id;
  v.anchor = r.anchor;
  v.section = r.section;
  v.params = p;
  v.tol_class = tc;
  v.expected = r.expected;
  if (r.expected == Expected::divergent_probe) {
    try {
      run_probe(v, cfg, tol_value(tc));
    } catch (const std::exception& e) {
      v.status = Status::inconclusive;
      v.note = e.what();
    }
  } else {
    std::string fail;
    try {
      v.lhs = r.lhs(p, cfg);
    } catch (const std::exception& e) {
      fail = std::string("lhs: ") + e.what();
    }
    try {
      v.rhs = r.rhs(p, cfg);
    } catch (const std::exception& e) {
      fail += (fail.empty() ? "" : "; ") + std::string("rhs: ") + e.what();
    }
    if (!fail.empty()) {
      v.status = Status::inconclusive;
      v.residual = v.budget = std::nan("");
      v.note = fail;
    } else {
      v.residual = std::fabs(v.lhs.value - v.rhs.value);
      v.budget = v.lhs.abs_err + v.rhs.abs_err + tol_value(tc);
      v.status = classify(v.residual, v.budget);
      for (const Side* s : {&v.lhs, &v.rhs})
        if (!s->note.empty()) v.note += (v.note.empty() ? "" : "; ") + s->note;
    }
  }
  v.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return v;
}

Verdict adjudicate(const IdentityRecord& r, const EvalConfig& cfg) {
  EvalConfig c = cfg;
  c.max_terms = 4 * (cfg.max_terms > 0 ? cfg.max_terms : series::kDirectTerms);
  c.level_cap = std::min(cfg.level_cap + 2, 14);
  Params p = r.parametric() ? r.grid.front() : Params{};
  Verdict v = evaluate(r, p, TolClass::strict, c);
  for (const Side* s : {&v.lhs, &v.rhs}) {
    const char* which = s == &v.lhs ? "lhs" : "rhs";
    v.diagnostics.push_back(std::string(which) + " [" + s->route + "] = " + fmt(s->value) + " +- " + fmt(s->abs_err) +
                            (s->converged ? "" : " (not converged)"));
  }
  v.diagnostics.push_back("terms x4 (" + std::to_string(c.max_terms) + "), level cap " + std::to_string(c.level_cap));
  for (const QuotedValue& q : r.quoted) v.diagnostics.push_back("quoted " + q.label + ": " + q.text);
  return v;
}

}  // namespace

const IdentityRecord* find_identity(const std::string& id) {
  std::string key = canonical_id(id);
  for (const IdentityRecord& r : catalog())
    if (r.id == key) return &r;
  return nullptr;
}

std::vector<std::string> near_matches(const std::string& id, std::size_t count) {
  std::vector<std::pair<std::size_t, std::string>> d;
  for (const IdentityRecord& r : catalog()) d.emplace_back(edit_distance(id, r.id), r.id);
  std::stable_sort(d.begin(), d.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::string> out;
  for (std::size_t i = 0; i < d.size() && i < count; ++i) out.push_back(d[i].second);
  return out;
}

Verdict verify_identity(const std::string& id, const Params& params, std::optional<TolClass> tol_override,
                        const EvalConfig& cfg) {
  const IdentityRecord& r = require(id);
  Params p = resolve_params(r, params);
  return evaluate(r, p, tol_override.value_or(r.tol_class), cfg);
}

Verdict adjudicate_dispute(const std::string& id, const EvalConfig& cfg) {
  const IdentityRecord& r = require(id);
  if (r.expected != Expected::disputed)
    throw Error(ErrorKind::misuse, r.id + " is not a disputed record; use verify_identity");
  return adjudicate(r, cfg);
}

Report run_suite(const Selection& sel, std::optional<TolClass> tol_override, const EvalConfig& cfg, int parallelism) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<const IdentityRecord*> recs;
  if (sel.all || sel.section) {
    Filter f;
    if (!sel.all) f.section = sel.section;
    recs = list_identities(f);
  }
  for (const std::string& id : sel.ids) {
    const IdentityRecord* r = &require(id);
    if (std::find(recs.begin(), recs.end(), r) == recs.end()) recs.push_back(r);
  }
  if (recs.empty()) throw Error(ErrorKind::misuse, "empty selection");

  struct Job {
    const IdentityRecord* rec;
    Params p;
  };
  std::vector<Job> jobs;
  for (const IdentityRecord* r : recs) {
    if (r->expected == Expected::disputed)
      jobs.push_back({r, r->parametric() ? r->grid.front() : Params{}});
    else
      for (const Params& p : r->grid) jobs.push_back({r, p});
  }

  Report rep;
  rep.tol_override = tol_override;
  rep.config = cfg;
  rep.parallelism = std::max(1, parallelism);
  rep.verdicts.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
      const Job& j = jobs[i];
      if (j.rec->expected == Expected::disputed) {
        Verdict v = adjudicate(*j.rec, cfg);
        if (tol_override && *tol_override != TolClass::strict)
          v.diagnostics.push_back("tolerance override ignored: adjudication is always strict");
        rep.verdicts[i] = std::move(v);
      } else {
        rep.verdicts[i] = evaluate(*j.rec, j.p, tol_override.value_or(j.rec->tol_class), cfg);
      }
    }
  };
  int n = std::min<int>(rep.parallelism, int(jobs.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  Summary& s = rep.summary;
  for (const Verdict& v : rep.verdicts) {
    ++s.total;
    if (v.status == Status::confirmed) ++s.confirmed;
    if (v.status == Status::refuted) ++s.refuted;
    if (v.status == Status::inconclusive) ++s.inconclusive;
    ++s.cross[int(v.expected)][int(v.status)];
    if (v.expected == Expected::confirmed && v.status == Status::refuted)
      s.failures.push_back(v.params.empty() ? v.id : v.id + params_text(v.params));
  }
  rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace lgi::registry
