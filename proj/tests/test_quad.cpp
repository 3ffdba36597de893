// Quadrature: error honesty on integrals with known values, plus structural
// properties (additivity, symmetry, parameter limits).

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "lgi/quad.hpp"
#include "lgi/specfun.hpp"

using namespace lgi;
using namespace lgi::quad;

namespace {

const EndpointHint kLogBoth{{Endpoint::log_singularity}, {Endpoint::log_singularity}};
const EndpointHint kLogLeft{{Endpoint::log_singularity}, {}};

struct Known {
  std::string name;
  QuadResult r;
  double exact;
};

std::vector<Known> honesty_suite() {
  const double g = kEulerGamma;
  std::vector<Known> k;
  k.push_back({"log sin", integrate([](double x, double xr) { return std::log(sin_pi(x < 0.5 ? x : xr)); }, 0, 1, kLogBoth),
               -std::log(2.0)});
  k.push_back({"log log", integrate([](double x, double xr) { return std::log(x < 0.5 ? -std::log(x) : -std::log1p(-xr)); }, 0, 1, kLogBoth), -g});
  k.push_back({"e^-x log x",
               integrate_semi_infinite([](double x) { return x == 0 ? 0 : std::exp(-x) * std::log(x); }, 0, Decay{}), -g});
  k.push_back({"log Gamma", integrate([](double x, double) { return log_gamma(x).value; }, 0, 1, kLogLeft),
               0.5 * std::log(2 * kPi)});
  for (int j = 1; j <= 3; ++j) {
    k.push_back({"Q-6.17 k=" + std::to_string(j), integral_catalog("Q-6.17", {double(j)}), 1.0 / (4 * j)});
    k.push_back({"Q-6.9 k=" + std::to_string(j), integral_catalog("Q-6.9", {double(j)}),
                 (g + std::log(2 * kPi * j)) / (2 * kPi * j)});
  }
  const double si2 = 1.4181515761326284502, si4 = 1.4921612255844600555;
  k.push_back({"Q-4.25 n=1", integral_catalog("Q-4.25", {1}), -si2 / (4 * kPi * kPi)});
  k.push_back({"Q-4.25 n=2", integral_catalog("Q-4.25", {2}), -si4 / (16 * kPi * kPi)});
  return k;
}

}  // namespace

TEST_SUITE("quad") {

TEST_CASE("error honesty: true error within twice the reported bound") {
  std::vector<Known> suite = honesty_suite();
  CHECK(suite.size() == 12);
  for (const Known& k : suite) {
    CAPTURE(k.name);
    CAPTURE(k.r.value);
    CAPTURE(k.r.abs_err);
    double slack = 4e-16 * std::fabs(k.exact);
    CHECK(std::fabs(k.r.value - k.exact) <= 2 * k.r.abs_err + slack);
    CHECK(k.r.abs_err < 1e-8);
    CHECK(k.r.converged);
  }
}

TEST_CASE("polynomials are exact") {
  QuadResult r = integrate([](double x, double) { return x * x * x; }, 0, 2);
  CHECK(r.value == doctest::Approx(4).epsilon(1e-15));
  r = integrate([](double x, double) { return std::exp(x); }, -1, 1);
  CHECK(std::fabs(r.value - (std::exp(1.0) - std::exp(-1.0))) < 1e-14);
}

TEST_CASE("interval additivity on random smooth integrands") {
  std::mt19937_64 rng(20261019);
  std::uniform_real_distribution<double> U(-2, 2);
  for (int t = 0; t < 20; ++t) {
    double c0 = U(rng), c1 = U(rng), w = 1 + std::fabs(U(rng)) * 3, ph = U(rng);
    double a = U(rng) - 2, b = a + 1 + std::fabs(U(rng)), c = a + (b - a) * (0.2 + 0.15 * std::fabs(U(rng)));
    auto f = [=](double x, double) { return c0 + c1 * std::sin(w * x + ph) * std::exp(-0.3 * x * x); };
    QuadResult ab = integrate(f, a, b), ac = integrate(f, a, c), cb = integrate(f, c, b);
    CAPTURE(t);
    CHECK(std::fabs(ac.value + cb.value - ab.value) <= ab.abs_err + ac.abs_err + cb.abs_err + 1e-15);
  }
}

TEST_CASE("odd symmetry about 1/2 integrates to zero") {
  std::vector<Integrand> odd = {
      [](double x, double xr) { return std::log(x) - std::log(xr); },
      [](double x, double xr) { return (x - xr) * log_gamma(1 + x * xr).value; },
      [](double x, double) { return cos_pi(x) * std::exp(std::sin(kPi * x)); },
      [](double x, double xr) { return (2 * x - 1) * std::log(sin_pi(x < 0.5 ? x : xr)); },
  };
  for (std::size_t i = 0; i < odd.size(); ++i) {
    CAPTURE(i);
    QuadResult r = integrate(odd[i], 0, 1, kLogBoth);
    CHECK(std::fabs(r.value) <= std::max(r.abs_err, 1e-15));
  }
}

TEST_CASE("Laplace transform at p -> 0 reduces to the Raabe integral") {
  QuadResult r = integral_catalog("Q-1.1", {1e-6});
  CHECK(std::fabs(r.value - 0.5 * std::log(2 * kPi)) <= 1e-5);
}

TEST_CASE("p-derivative of Q-1.1 is minus the first moment") {
  double h = 1e-3;
  double d = (integral_catalog("Q-1.1", {0.5 + h}).value - integral_catalog("Q-1.1", {0.5 - h}).value) / (2 * h);
  CHECK(std::fabs(d + integral_catalog("Q-2.6-moment", {0.5}).value) <= 1e-6);
}

TEST_CASE("removable endpoint limit") {
  // sin(x)/x on [0, 1] = Si(1)
  EndpointHint h{{Endpoint::removable_by_limit, 1.0}, {}};
  QuadResult r = integrate([](double x, double) { return std::sin(x) / x; }, 0, 1, h);
  CHECK(std::fabs(r.value - Si(1).value) <= 2 * r.abs_err + 1e-15);
}

TEST_CASE("semi-infinite without a decay hint reports non-convergence") {
  Decay none;
  none.kind = Decay::none;
  QuadResult r = integrate_semi_infinite([](double x) { return 1 / (1 + x); }, 0, none);
  CHECK_FALSE(r.converged);
  r = integrate_semi_infinite([](double x) { return std::exp(-2 * x); }, 0, Decay{Decay::exponential, 2});
  CHECK(r.value == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("non-finite interior value is an evaluation error") {
  try {
    integrate([](double x, double) { return x > 0.3 && x < 0.4 ? NAN : x; }, 0, 1);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::evaluation);
  }
}

TEST_CASE("catalog lookups") {
  CHECK(integral_entries().size() >= 40);
  try {
    integral_catalog("Q-NOPE", {});
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::unknown_id);
  }
  CHECK_THROWS_AS(integral_catalog("Q-6.17", {0.5}), Error);  // k must be a positive integer
}

}  // TEST_SUITE
