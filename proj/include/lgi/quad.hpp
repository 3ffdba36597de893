#pragma once

// Double-exponential (tanh-sinh) quadrature with level doubling, plus the
// keyed catalog of integrals used by the identity registry.

#include <functional>
#include <string>
#include <vector>

#include "lgi/types.hpp"

namespace lgi::quad {

enum class Endpoint { regular, log_singularity, removable_by_limit };

struct EndpointSpec {
  Endpoint kind = Endpoint::regular;
  double limit = 0.0;  // used when kind == removable_by_limit
};

struct EndpointHint {
  EndpointSpec left;
  EndpointSpec right;
};

struct QuadResult {
  double value = 0.0;
  double abs_err = 0.0;
  long evals = 0;
  bool converged = false;
};

// The integrand receives x and xr = b - x, both free of cancellation near
// their own endpoint. Integrands that do not care can ignore xr.
using Integrand = std::function<double(double x, double xr)>;

inline constexpr int kDefaultLevelCap = 12;
inline constexpr double kDefaultTol = 1e-10;
inline constexpr double kCotTol = 1e-8;
// Distance at which a removable endpoint is replaced by its limit.
inline constexpr double kLimitBand = 1e-8;

QuadResult integrate(const Integrand& f, double a, double b, const EndpointHint& hints = {},
                     double tol = kDefaultTol, int level_cap = kDefaultLevelCap);

struct Decay {
  enum Kind { exponential, none } kind = exponential;
  double rate = 1.0;
};

// Integral over [a, inf). Exponential decay: split at a + 40/rate and
// bound the tail by |f(T)|/rate. No decay hint: integrate [a, a+T] and
// [a+T, a+2T] and report converged=false if the second piece is not small.
QuadResult integrate_semi_infinite(const std::function<double(double)>& f, double a, Decay decay,
                                   double tol = kDefaultTol, int level_cap = kDefaultLevelCap);

struct IntegralEntry {
  std::string id;
  std::string anchor;
  std::vector<std::string> params;  // parameter names, in order
  std::string domain;               // human-readable parameter domain
  double default_tol = kDefaultTol;
  std::function<bool(const std::vector<double>&)> in_domain;
  std::function<QuadResult(const std::vector<double>&, double tol, int level_cap)> eval;
};

const std::vector<IntegralEntry>& integral_entries();
const IntegralEntry& integral_entry(const std::string& id);

// tol <= 0 selects the entry default.
QuadResult integral_catalog(const std::string& id, const std::vector<double>& params,
                            double tol = 0.0, int level_cap = kDefaultLevelCap);

}  // namespace lgi::quad
