#include "lgi/series.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "lgi/kernels.hpp"
#include "lgi/quad.hpp"

namespace lgi::series {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kAveragingLevels = 12;
constexpr long kAlternatingTerms = 2000;

double eval_term(const SeriesSpec& s, double n) {
  double t = s.term(n);
  if (!std::isfinite(t))
    throw Error(ErrorKind::evaluation, "series term is not finite at n = " + std::to_string(n));
  return t;
}

double numeric_derivative(const std::function<double(double)>& f, double x) {
  double h = 1e-3 * x;
  return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

double numeric_third(const std::function<double(double)>& f, double x) {
  double h = 0.05 * x;
  return (f(x + 2 * h) - 2 * f(x + h) + 2 * f(x - h) - f(x - 2 * h)) / (2 * h * h * h);
}

// int_N^inf f(x) dx via x = N/u on (0, 1]
quad::QuadResult tail_integral(const std::function<double(double)>& f, double N) {
  quad::Integrand g = [&f, N](double u, double) {
    double x = N / u;
    double v = f(x) * N / (u * u);
    return std::isfinite(v) ? v : 0.0;
  };
  return quad::integrate(g, 0.0, 1.0, {}, 1e-16, 10);
}

SeriesResult direct(const SeriesSpec& s, long count, std::vector<double>& terms, bool early_exit) {
  terms.clear();
  terms.reserve(static_cast<std::size_t>(count));
  kernels::Accumulator running;
  int small_run = 0;
  SeriesResult r;
  for (long i = 0; i < count; ++i) {
    double t = eval_term(s, double(s.n0 + i));
    terms.push_back(t);
    running.add(t);
    if (early_exit) {
      if (std::fabs(t) <= 1e-19 * std::fabs(running.value())) {
        if (++small_run >= 3) break;
      } else {
        small_run = 0;
      }
    }
  }
  kernels::SumResult sr = kernels::sum(terms);
  r.value = sr.sum;
  r.abs_err = 10 * kEps * sr.abs_sum;
  r.terms_used = long(terms.size());
  return r;
}

}  // namespace

const char* to_string(TailModel m) {
  switch (m) {
    case TailModel::euler_maclaurin: return "euler_maclaurin";
    case TailModel::asymptotic_subtraction: return "asymptotic_subtraction";
    case TailModel::alternating: return "alternating";
    case TailModel::none: return "none";
  }
  return "?";
}

SeriesResult sum_series(const SeriesSpec& s) {
  if (s.n0 < 0) throw Error(ErrorKind::domain, "sum_series: n0 < 0");
  if (s.max_terms < 1) throw Error(ErrorKind::domain, "sum_series: max_terms < 1");
  std::vector<double> terms;
  SeriesResult r;
  switch (s.tail_model) {
    case TailModel::none: {
      r = direct(s, s.max_terms, terms, false);
      double last = std::fabs(terms.back());
      r.converged = last <= 1e-15 * std::max(1.0, std::fabs(r.value));
      break;
    }
    case TailModel::euler_maclaurin: {
      r = direct(s, s.max_terms, terms, true);
      if (r.terms_used < s.max_terms) break;  // geometric decay, tail negligible
      const double N = double(s.n0 + r.terms_used);
      auto f = [&s](double x) { return s.term(x); };
      double I, Ierr = 0;
      if (s.tail_integral) {
        I = s.tail_integral(N);
      } else {
        quad::QuadResult q = tail_integral(f, N);
        I = q.value;
        Ierr = q.abs_err;
      }
      double fN = eval_term(s, N);
      double fp = s.derivative ? s.derivative(N) : numeric_derivative(f, N);
      double tail = I + fN / 2 - fp / 12;
      double trunc = std::fabs(fp) / (10 * N * N);
      if (s.em_degree >= 4) {
        double f3 = numeric_third(f, N);
        tail += f3 / 720;
        trunc = std::fabs(f3) / (N * N) + std::fabs(fp) * 1e-5 / (N * N);
      }
      r.value += tail;
      r.abs_err += trunc + Ierr + 10 * kEps * std::fabs(tail);
      break;
    }
    case TailModel::alternating: {
      long N = std::min(s.max_terms, kAlternatingTerms);
      long count = N + kAveragingLevels;
      r = direct(s, count, terms, false);
      std::vector<double> partial(kAveragingLevels + 1);
      kernels::Accumulator acc;
      for (long i = 0; i < N; ++i) acc.add(terms[std::size_t(i)]);
      partial[0] = acc.value();
      for (int j = 1; j <= kAveragingLevels; ++j) {
        acc.add(terms[std::size_t(N + j - 1)]);
        partial[std::size_t(j)] = acc.value();
      }
      double prev = partial[0];
      for (int m = 1; m <= kAveragingLevels; ++m) {
        prev = partial[0];
        for (int j = 0; j + m <= kAveragingLevels; ++j)
          partial[std::size_t(j)] = 0.5 * (partial[std::size_t(j)] + partial[std::size_t(j + 1)]);
      }
      r.value = partial[0];
      r.abs_err += std::fabs(partial[0] - prev);
      break;
    }
    case TailModel::asymptotic_subtraction: {
      if (!s.closed_tail) throw Error(ErrorKind::misuse, "sum_series: asymptotic_subtraction needs closed_tail");
      r = direct(s, s.max_terms, terms, false);
      long half = std::max(1L, s.max_terms / 2);
      kernels::SumResult first = kernels::sum(terms.data(), std::size_t(half));
      double est_n = r.value + s.closed_tail(s.n0 + s.max_terms);
      double est_m = first.sum + s.closed_tail(s.n0 + half);
      r.value = est_n;
      r.abs_err += std::fabs(est_n - est_m);
      break;
    }
  }
  r.method = s.tail_model;
  if (!std::isfinite(r.value)) throw Error(ErrorKind::evaluation, "series value is not finite");
  return r;
}

SeriesResult sum_grouped(long q, std::function<double(double, long)> f, long n0, long max_terms) {
  if (q < 1) throw Error(ErrorKind::misuse, "sum_grouped: period must be >= 1");
  SeriesSpec s;
  s.term = [q, f, n0](double k) {
    double acc = 0;
    for (long r = 0; r < q; ++r) acc += f(double(n0) + k * double(q) + double(r), n0 + r);
    return acc;
  };
  s.n0 = 0;
  s.max_terms = std::max(1L, max_terms / q);
  s.tail_model = TailModel::euler_maclaurin;
  SeriesResult r = sum_series(s);
  r.terms_used *= q;
  return r;
}

long rational_period(double x) {
  for (long q = 1; q <= 64; ++q) {
    double y = x * double(q);
    if (std::fabs(y - std::round(y)) < 1e-12 * std::max(1.0, std::fabs(y))) return q;
  }
  return 0;
}

}  // namespace lgi::series
