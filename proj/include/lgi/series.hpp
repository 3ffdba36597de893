#pragma once

// Infinite-series engine and the keyed catalog of named sums.

#include <functional>
#include <string>
#include <vector>

#include "lgi/types.hpp"

namespace lgi::series {

enum class TailModel { euler_maclaurin, asymptotic_subtraction, alternating, none };

const char* to_string(TailModel m);

struct SeriesSpec {
  // Term as a function of the index. Euler-Maclaurin tails evaluate it at
  // non-integer arguments beyond the direct range, so it must be smooth there.
  std::function<double(double)> term;
  long n0 = 1;
  TailModel tail_model = TailModel::euler_maclaurin;
  int em_degree = 2;      // 2: f/2 - f'/12, 4: adds f'''/720
  long max_terms = 10000;
  // Optional analytic pieces for the Euler-Maclaurin tail at N.
  std::function<double(double)> tail_integral;  // int_N^inf f
  std::function<double(double)> derivative;     // f'
  // For asymptotic_subtraction: closed-form estimate of sum_{n>=N} term(n).
  std::function<double(long)> closed_tail;
};

struct SeriesResult {
  double value = 0.0;
  double abs_err = 0.0;
  long terms_used = 0;
  TailModel method = TailModel::none;
  bool converged = true;
};

inline constexpr long kDirectTerms = 10000;

SeriesResult sum_series(const SeriesSpec& spec);

// Sum over n >= n0 of f(n, phase) where f is smooth in n apart from a
// factor periodic in n with period q. The phase argument is n0 + (n - n0) mod q
// and must be used for every periodic factor. Consecutive periods are grouped
// into one smooth summand before the Euler-Maclaurin tail is applied.
SeriesResult sum_grouped(long q, std::function<double(double n, long phase)> f, long n0,
                         long max_terms = kDirectTerms);

// Smallest q <= 64 with q*x an integer, or 0 if there is none.
long rational_period(double x);

struct SeriesEntry {
  std::string id;
  std::string anchor;
  std::vector<std::string> params;
  std::string domain;
  std::function<bool(const std::vector<double>&)> in_domain;
  std::function<SeriesResult(const std::vector<double>&, long max_terms)> eval;
};

const std::vector<SeriesEntry>& series_entries();
const SeriesEntry& series_entry(const std::string& id);

// max_terms <= 0 selects the default direct range.
SeriesResult sum_catalog(const std::string& id, const std::vector<double>& params, long max_terms = 0);

// Maclaurin families; |x| must be inside the radius.
SeriesResult power_series_eval(const std::string& id, double x, long max_terms = 200);
double power_series_radius(const std::string& id);

}  // namespace lgi::series
