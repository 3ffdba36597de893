#pragma once

// Identity catalog and verdict engine. Each record evaluates two sides by
// independent routes (quadrature, series, closed form) and classifies the
// residual against the combined error budget.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lgi/types.hpp"

namespace lgi::registry {

using Params = std::vector<double>;

enum class TolClass { strict, standard, slow };
enum class Expected { confirmed, disputed, divergent_probe };
enum class Status { confirmed, refuted, inconclusive };

double tol_value(TolClass t);
const char* to_string(TolClass t);
const char* to_string(Expected e);
const char* to_string(Status s);
std::optional<TolClass> parse_tol_class(const std::string& s);

// Knobs shared by every route evaluation.
struct EvalConfig {
  long max_terms = 0;  // 0 selects each series' default
  int level_cap = 12;
  double quad_tol = 0;  // 0 selects each integral's default
};

struct Side {
  double value = 0;
  double abs_err = 0;
  std::string route;  // e.g. "Q-4.31", "closed form"
  bool converged = true;
  std::string note;
};

using SideFn = std::function<Side(const Params&, const EvalConfig&)>;

struct QuotedValue {
  std::string label;  // which side or quantity the quote refers to
  std::string text;   // as stated
};

struct IdentityRecord {
  std::string id;
  std::string anchor;
  int section = 0;
  std::vector<std::string> param_names;
  std::string domain;
  std::function<bool(const Params&)> in_domain;
  std::vector<Params> grid;  // default parameter points for suites
  std::string lhs_desc, rhs_desc;
  SideFn lhs, rhs;
  TolClass tol_class = TolClass::strict;
  Expected expected = Expected::confirmed;
  std::vector<QuotedValue> quoted;  // disputed records only

  bool parametric() const { return !param_names.empty(); }
};

struct Verdict {
  std::string id;
  std::string anchor;
  int section = 0;
  Params params;
  Side lhs, rhs;
  double residual = 0;
  double budget = 0;
  TolClass tol_class = TolClass::strict;
  Status status = Status::inconclusive;
  Expected expected = Expected::confirmed;
  double wall_time = 0;
  std::string note;
  std::vector<std::string> diagnostics;  // filled by adjudication and probes
};

struct Filter {
  std::optional<int> section;
  std::optional<Expected> expected;
};

// Lexicographic by id.
std::vector<const IdentityRecord*> list_identities(const Filter& f = {});
const IdentityRecord* find_identity(const std::string& id);
// Ids closest to `id` by edit distance, best first.
std::vector<std::string> near_matches(const std::string& id, std::size_t count = 3);

Status classify(double residual, double budget);

// Uses the record's first grid point when params is empty and the record is
// parametric. Route failures produce an INCONCLUSIVE verdict with a note.
Verdict verify_identity(const std::string& id, const Params& params = {},
                        std::optional<TolClass> tol_override = std::nullopt, const EvalConfig& cfg = {});

// Strict tolerance, four times the term budget, two more quadrature levels.
Verdict adjudicate_dispute(const std::string& id, const EvalConfig& cfg = {});

struct Selection {
  bool all = false;
  std::optional<int> section;
  std::vector<std::string> ids;
};

struct Summary {
  int total = 0;
  int confirmed = 0, refuted = 0, inconclusive = 0;
  // rows: expected status, columns: observed status
  int cross[3][3] = {};
  std::vector<std::string> failures;  // expected-CONFIRMED that came back REFUTED
};

struct Report {
  std::string schema_version = "1.0";
  std::optional<TolClass> tol_override;
  EvalConfig config;
  int parallelism = 1;
  std::vector<Verdict> verdicts;
  Summary summary;
  double wall_time = 0;
};

// Expands every selected record over its grid. Verdicts come back in catalog
// order whatever the completion order across workers.
Report run_suite(const Selection& sel, std::optional<TolClass> tol_override = std::nullopt,
                 const EvalConfig& cfg = {}, int parallelism = 1);

// Adds a record at runtime, replacing one with the same id. Used by tests to
// plant a deliberately wrong right-hand side.
void register_identity(IdentityRecord rec);
// Shifts the rhs of an existing record by `delta`.
void perturb_rhs(const std::string& id, double delta);

}  // namespace lgi::registry
