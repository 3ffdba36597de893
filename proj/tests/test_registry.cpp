// Identity registry: verdict engine, catalog contents, suite invariants.

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "lgi/quad.hpp"
#include "lgi/registry.hpp"
#include "lgi/specfun.hpp"

using namespace lgi;
using namespace lgi::registry;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::evaluation;  // sentinel: nothing thrown
}

// Verdicts without their wall time, for equality checks.
bool same(const Verdict& a, const Verdict& b) {
  return a.id == b.id && a.params == b.params && a.lhs.value == b.lhs.value && a.rhs.value == b.rhs.value &&
         a.lhs.abs_err == b.lhs.abs_err && a.rhs.abs_err == b.rhs.abs_err && a.residual == b.residual &&
         a.budget == b.budget && a.status == b.status && a.note == b.note && a.diagnostics == b.diagnostics;
}

const Report& full_suite() {
  static const Report r = run_suite(Selection{.all = true}, std::nullopt, {}, 8);
  return r;
}

}  // namespace

TEST_SUITE("registry") {

TEST_CASE("classification thresholds") {
  CHECK(classify(1e-10, 1e-9) == Status::confirmed);
  CHECK(classify(1e-9, 1e-9) == Status::confirmed);
  CHECK(classify(5e-8, 1e-9) == Status::inconclusive);
  CHECK(classify(1e-7, 1e-9) == Status::inconclusive);
  CHECK(classify(1.01e-7, 1e-9) == Status::refuted);
  CHECK(classify(NAN, 1e-9) == Status::inconclusive);
  CHECK(classify(1e-12, INFINITY) == Status::inconclusive);
  CHECK(tol_value(TolClass::strict) == 1e-9);
  CHECK(tol_value(TolClass::standard) == 1e-7);
  CHECK(tol_value(TolClass::slow) == 1e-5);
  CHECK(parse_tol_class("slow") == TolClass::slow);
  CHECK_FALSE(parse_tol_class("loose").has_value());
}

TEST_CASE("catalog size, ordering and filters") {
  std::vector<const IdentityRecord*> all = list_identities();
  CHECK(all.size() >= 60);
  CHECK(std::is_sorted(all.begin(), all.end(), [](auto* a, auto* b) { return a->id < b->id; }));
  std::set<std::string> ids;
  for (auto* r : all) {
    CAPTURE(r->id);
    CHECK(ids.insert(r->id).second);
    CHECK(r->section >= 1);
    CHECK(r->section <= 8);
    CHECK_FALSE(r->anchor.empty());
    CHECK(bool(r->lhs));
    CHECK(bool(r->rhs));
    if (r->parametric()) {
      CHECK_FALSE(r->grid.empty());
      for (const Params& p : r->grid) CHECK(r->in_domain(p));
    }
  }
  for (auto* r : list_identities(Filter{.section = 8})) CHECK(r->section == 8);
  auto disputed = list_identities(Filter{.expected = Expected::disputed});
  CHECK(disputed.size() >= 7);
  std::set<std::string> d;
  for (auto* r : disputed) d.insert(r->id);
  for (const char* id : {"D-4.26", "D-4.27", "D-4.28", "D-4.29", "D-4.30", "D-5.18", "D-5.55", "D-7.11"})
    CHECK(d.count(id) == 1);
  auto probes = list_identities(Filter{.expected = Expected::divergent_probe});
  REQUIRE(probes.size() == 2);
  CHECK(find_identity("P-logGcot") == find_identity("P-log\xCE\x93" "cot"));
}

TEST_CASE("unknown ids and misuse") {
  CHECK(find_identity("NO-SUCH") == nullptr);
  CHECK(kind_of([] { verify_identity("NO-SUCH"); }) == ErrorKind::unknown_id);
  try {
    verify_identity("I-6.166");
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("I-6.16") != std::string::npos);
  }
  std::vector<std::string> near = near_matches("I-6.166");
  CHECK(std::find(near.begin(), near.end(), "I-6.16") != near.end());
  CHECK(kind_of([] { verify_identity("I-2.6", {2.5}); }) == ErrorKind::domain);
  CHECK(kind_of([] { adjudicate_dispute("I-6.16"); }) == ErrorKind::misuse);
  CHECK(kind_of([] { run_suite(Selection{}); }) == ErrorKind::misuse);
  CHECK(kind_of([] { perturb_rhs("NO-SUCH", 1); }) == ErrorKind::unknown_id);
}

TEST_CASE("single-identity examples") {
  Verdict v = verify_identity("I-6.3");
  CHECK(v.status == Status::confirmed);
  CHECK(v.rhs.value == doctest::Approx(-std::log(2.0)).epsilon(1e-15));
  v = verify_identity("I-6.16");
  CHECK(v.status == Status::confirmed);
  CHECK(std::fabs(v.lhs.value - kEulerGamma / (4 * kPi)) <= 1e-9);
  // default parameters come from the first grid point
  v = verify_identity("I-2.6");
  REQUIRE(v.params.size() == 1);
  CHECK(v.params[0] == 0.05);
}

TEST_CASE("section 8 selection") {
  Report r = run_suite(Selection{.section = 8});
  std::vector<std::string> got;
  for (const Verdict& v : r.verdicts) got.push_back(v.id + (v.params.empty() ? "" : "@" + std::to_string(v.params[0])));
  CHECK(std::count(got.begin(), got.end(), "I-8.7@0.300000") == 1);
  CHECK(std::count(got.begin(), got.end(), "I-8.7@0.700000") == 1);
  CHECK(std::count(got.begin(), got.end(), "I-8.11") == 1);
  CHECK(std::count(got.begin(), got.end(), "I-8.13@0.300000") == 1);
  CHECK(std::count(got.begin(), got.end(), "I-8.14@0.300000") == 1);
  for (const Verdict& v : r.verdicts) CHECK(v.status == Status::confirmed);
}

TEST_CASE("full suite: no expected-CONFIRMED identity is refuted") {
  const Report& r = full_suite();
  CHECK(r.verdicts.size() >= 60);
  CHECK(r.summary.failures.empty());
  CHECK(r.summary.total == int(r.verdicts.size()));
  CHECK(r.summary.confirmed + r.summary.refuted + r.summary.inconclusive == r.summary.total);
  int cross = 0;
  for (auto& row : r.summary.cross)
    for (int c : row) cross += c;
  CHECK(cross == r.summary.total);
  // catalog order
  for (std::size_t i = 1; i < r.verdicts.size(); ++i) CHECK(r.verdicts[i - 1].id <= r.verdicts[i].id);
}

TEST_CASE("determinism across runs and worker counts") {
  const Report& a = full_suite();
  Report b = run_suite(Selection{.all = true}, std::nullopt, {}, 3);
  REQUIRE(a.verdicts.size() == b.verdicts.size());
  for (std::size_t i = 0; i < a.verdicts.size(); ++i) {
    CAPTURE(a.verdicts[i].id);
    CHECK(same(a.verdicts[i], b.verdicts[i]));
  }
  CHECK(a.summary.failures == b.summary.failures);
}

TEST_CASE("relaxing the tolerance never turns CONFIRMED into REFUTED") {
  Selection all{.all = true};
  Report strict = run_suite(all, TolClass::strict, {}, 8);
  Report standard = run_suite(all, TolClass::standard, {}, 8);
  Report slow = run_suite(all, TolClass::slow, {}, 8);
  REQUIRE(strict.verdicts.size() == standard.verdicts.size());
  REQUIRE(strict.verdicts.size() == slow.verdicts.size());
  for (std::size_t i = 0; i < strict.verdicts.size(); ++i) {
    CAPTURE(strict.verdicts[i].id);
    if (strict.verdicts[i].status == Status::confirmed) {
      CHECK(standard.verdicts[i].status == Status::confirmed);
      CHECK(slow.verdicts[i].status == Status::confirmed);
    }
    if (standard.verdicts[i].status == Status::confirmed) CHECK(slow.verdicts[i].status == Status::confirmed);
  }
}

TEST_CASE("swapping the two sides never changes the status") {
  for (const IdentityRecord* rec : list_identities()) {
    if (rec->expected == Expected::divergent_probe) continue;
    IdentityRecord orig = *rec, swapped = *rec;
    std::swap(swapped.lhs, swapped.rhs);
    std::swap(swapped.lhs_desc, swapped.rhs_desc);
    Params p = orig.parametric() ? orig.grid.front() : Params{};
    Verdict a = verify_identity(orig.id, p);
    register_identity(swapped);
    Verdict b = verify_identity(orig.id, p);
    register_identity(orig);
    CAPTURE(orig.id);
    CHECK(a.status == b.status);
    CHECK(a.residual == b.residual);
    CHECK(a.budget == doctest::Approx(b.budget).epsilon(1e-15));
    CHECK(a.lhs.value == b.rhs.value);
  }
  CHECK(verify_identity("I-6.16").lhs.route.find("Q-6.16") != std::string::npos);
}

TEST_CASE("parametric identities across their domains") {
  struct Sweep {
    const char* id;
    std::vector<double> at;
  };
  const Sweep sweeps[] = {
      {"I-2.6", {0.02, 0.5, 1.0, 1.5, 1.98}},   {"I-2.9", {0.02, 0.3, 0.5, 0.7, 0.98}},
      {"I-2.10", {0.02, 0.3, 0.5, 0.7, 0.98}},  {"I-3.8", {0.05, 0.5, 1.0, 1.5, 1.95}},
      {"I-3.14", {0.05, 0.5, 1.0, 1.5, 1.95}},  {"I-4.2", {0.02, 0.3, 0.5, 0.7, 0.98}},
      {"I-5.35", {0.02, 0.3, 0.5, 0.7, 0.98}},  {"I-5.36", {0.02, 0.3, 0.5, 0.7, 0.98}},
  };
  for (const Sweep& s : sweeps) {
    const IdentityRecord* rec = find_identity(s.id);
    REQUIRE(rec != nullptr);
    CHECK(rec->grid.size() >= 5);
    for (double x : s.at) {
      CAPTURE(s.id);
      CAPTURE(x);
      Verdict v = verify_identity(s.id, {x});
      CHECK(v.status == Status::confirmed);
    }
  }
}

TEST_CASE("equivalent forms: the Laplace transform written two ways") {
  for (double p : {0.2, 0.5}) {
    CAPTURE(p);
    Verdict v = verify_identity("I-1.17", {p});
    CHECK(v.status == Status::confirmed);
    CHECK(v.residual <= v.budget);
  }
}

TEST_CASE("divergence probes do not Cauchy-converge") {
  for (const char* q : {"Q-probe-lgcot", "Q-probe-lxcot"}) {
    double v2 = quad::integral_catalog(q, {1e-2}).value;
    double v3 = quad::integral_catalog(q, {1e-3}).value;
    double v4 = quad::integral_catalog(q, {1e-4}).value;
    CAPTURE(q);
    double d1 = std::fabs(v3 - v2), d2 = std::fabs(v4 - v3);
    // the integrand behaves like -log x/(pi x) at 0, so the truncations
    // grow like log^2 eps and each decade adds more than the last
    CHECK(d1 > 1);
    CHECK(d2 > d1);
  }
  for (const char* id : {"P-logGcot", "P-logxcot"}) {
    Verdict v = verify_identity(id);
    CAPTURE(id);
    CHECK(v.expected == Expected::divergent_probe);
    CHECK(v.note.find("not Cauchy") != std::string::npos);
    CHECK(v.status != Status::confirmed);
  }
}

TEST_CASE("adjudication produces precise sides and diagnostics") {
  for (const char* id : {"D-4.26", "D-4.27", "D-5.18", "D-7.11"}) {
    CAPTURE(id);
    Verdict v = adjudicate_dispute(id);
    CHECK(v.expected == Expected::disputed);
    CHECK(v.lhs.abs_err < 1e-8);
    CHECK(v.rhs.abs_err < 1e-8);
    CHECK(v.tol_class == TolClass::strict);
    CHECK_FALSE(v.diagnostics.empty());
  }
  Verdict d518 = adjudicate_dispute("D-5.18");
  const ConstantsCache& c = constants();
  double closed = 3 * c.zeta_prime_neg1 + 0.25 + std::log(2.0) / 12;
  CHECK(std::fabs(d518.rhs.value - closed) < 1e-12);
  CHECK(d518.rhs.value == doctest::Approx(-0.1885012).epsilon(1e-6));
  // the series side settles on the closed form, not the quoted -0.187878
  CHECK(std::fabs(d518.lhs.value - closed) < 1e-8);
  CHECK(std::fabs(d518.lhs.value + 0.187878) > 1e-4);
}

TEST_CASE("a planted wrong rhs shows up as a failure") {
  perturb_rhs("I-6.3", 1.0);
  Report r = run_suite(Selection{.ids = {"I-6.3", "I-6.16"}});
  perturb_rhs("I-6.3", -1.0);
  REQUIRE(r.verdicts.size() == 2);
  CHECK(r.verdicts[0].status == Status::refuted);
  CHECK(r.summary.failures.size() == 1);
  CHECK(verify_identity("I-6.3").status == Status::confirmed);

  // a fresh record with a wrong closed form
  IdentityRecord rec;
  rec.id = "Z-scratch";
  rec.anchor = "1 = 2";
  rec.section = 1;
  rec.lhs = [](const Params&, const EvalConfig&) { return Side{1.0, 0, "closed form"}; };
  rec.rhs = [](const Params&, const EvalConfig&) { return Side{2.0, 0, "closed form"}; };
  register_identity(rec);
  Verdict v = verify_identity("Z-scratch");
  CHECK(v.status == Status::refuted);
  // disputed records never count as failures
  rec.expected = Expected::disputed;
  register_identity(rec);
  Report d = run_suite(Selection{.ids = {"Z-scratch"}});
  CHECK(d.verdicts.size() == 1);
  CHECK(d.summary.failures.empty());
}

}  // TEST_SUITE
