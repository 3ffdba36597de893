// Named sums. Each entry evaluates the series side only; closed forms live in
// the registry so that the two routes stay independent.

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "lgi/kernels.hpp"
#include "lgi/series.hpp"
#include "lgi/specfun.hpp"

namespace lgi::series {

namespace {

using Params = std::vector<double>;
constexpr double kEps = 2.220446049250313e-16;
constexpr double kTwoPi = 2 * kPi;

double lmx(double x) {  // log1p(x) - x
  if (std::fabs(x) < 1e-2) {
    double t = x, s = 0;
    for (int k = 2; k < 14; ++k) {
      t *= -x;
      s += t / k;  // (-1)^(k+1) x^k / k with the sign carried by t
    }
    return s;
  }
  return std::log1p(x) - x;
}

double lmx2(double x) {  // log1p(x) - x + x^2/2
  if (std::fabs(x) < 0.05) {
    double t = x * x, s = 0;
    for (int k = 3; k < 26; ++k) {
      t *= -x;
      s -= t / k;
    }
    return s;
  }
  return std::log1p(x) - x + 0.5 * x * x;
}

double sgn(double n) { return (long(std::llround(n)) % 2 == 0) ? 1.0 : -1.0; }
double zint(int k) { return 1.0 + zeta_int_m1(k); }

// gamma + log n - H_n for integer or continuous n
double glh(double n) {
  if (n >= 30) {
    double r = 1 / n, r2 = r * r;
    return -0.5 * r + r2 * (1.0 / 12 - r2 * (1.0 / 120 - r2 * (1.0 / 252 - r2 / 240)));
  }
  return std::log(n) - digamma(n + 1).value;
}
// psi(n+1) - log n
double delta_h(double n) { return -glh(n); }

// si(y), Ci(y) at a point where cos y and sin y are known exactly.
constexpr double kAsymFrom = kTwoPi * 200;
struct SC {
  double si, ci;
};
SC lattice_sici(double y, double cy, double sy) {
  if (y <= kAsymFrom) {
    SiCi r = sici(y);
    return {r.sine_int.value - kPi / 2, r.ci.value};
  }
  double r = 1 / y, r2 = r * r;
  double f = r * (1 - r2 * (2 - r2 * (24 - r2 * 720)));
  double g = r2 * (1 - r2 * (6 - r2 * (120 - r2 * 5040)));
  return {-f * cy - g * sy, f * sy - g * cy};
}
SC sici_2pi_n(double n) { return lattice_sici(kTwoPi * n, 1.0, 0.0); }

long terms_or_default(long m) { return m > 0 ? m : kDirectTerms; }

SeriesResult em(std::function<double(double)> f, long n0, long max_terms,
                std::function<double(double)> tail = {}) {
  SeriesSpec s;
  s.term = std::move(f);
  s.n0 = n0;
  s.max_terms = terms_or_default(max_terms);
  s.tail_model = TailModel::euler_maclaurin;
  s.tail_integral = std::move(tail);
  return sum_series(s);
}

SeriesResult alt(std::function<double(double)> f, long n0, long max_terms) {
  SeriesSpec s;
  s.term = std::move(f);
  s.n0 = n0;
  s.max_terms = terms_or_default(max_terms);
  s.tail_model = TailModel::alternating;
  return sum_series(s);
}

// Geometric-type series: sum until terms are negligible.
SeriesResult geo(std::function<double(double)> f, long n0, long max_terms, double ratio) {
  kernels::Accumulator acc;
  double last = 0;
  long used = 0;
  long cap = max_terms > 0 ? max_terms : 400;
  for (long n = n0; n < n0 + cap; ++n) {
    double t = f(double(n));
    if (!std::isfinite(t)) throw Error(ErrorKind::evaluation, "series term is not finite");
    acc.add(t);
    last = t;
    ++used;
    if (std::fabs(t) < 1e-19 * std::max(1.0, std::fabs(acc.value())) && n > n0 + 2) break;
  }
  SeriesResult r;
  r.value = acc.value();
  double tail = ratio < 1 ? std::fabs(last) * ratio / (1 - ratio) : std::fabs(last) * 1e3;
  r.abs_err = tail + 10 * kEps * acc.abs_sum();
  r.terms_used = used;
  r.method = TailModel::none;
  r.converged = tail <= 1e-12;
  return r;
}

long period_of(double x, const char* id) {
  long q = rational_period(x);
  if (q == 0) throw Error(ErrorKind::domain, std::string(id) + ": parameter must be rational with denominator <= 64");
  return q;
}

bool is_int(double x) { return std::fabs(x - std::round(x)) < 1e-12; }
bool rational(double x) { return rational_period(x) != 0; }

// Taylor routes used for the cross-route deviation of S-1.20 and S-1.23.
FnEvalResult taylor_120(double u) {
  kernels::Accumulator acc;
  double up = 1, err = 0;
  for (int m = 1; m < 400; ++m) {
    FnEvalResult zp = zeta_prime(2.0 * m);
    double t = (m % 2 ? -1.0 : 1.0) * zp.value * up;
    acc.add(t);
    err += zp.abs_err * up;
    if (std::fabs(t) < 1e-19) break;
    up *= u * u;
  }
  return {acc.value(), err + 10 * kEps * acc.abs_sum()};
}
FnEvalResult taylor_123(double u) {
  kernels::Accumulator acc;
  double up = 1;
  for (int m = 1; m < 400; ++m) {
    double t = (m % 2 ? 1.0 : -1.0) * zint(2 * m) * up;
    acc.add(t);
    if (std::fabs(t) < 1e-19) break;
    up *= u * u;
  }
  return {acc.value(), 10 * kEps * acc.abs_sum()};
}

// T_n = sum_{m != n} log m / (m^2 - n^2), cached for FS-4.16.
SeriesResult t_n(long n, long max_terms) {
  SeriesSpec s;
  double nn = double(n);
  s.term = [nn](double m) {
    if (std::fabs(m - nn) < 0.5) return 0.0;
    return std::log(m) / ((m - nn) * (m + nn));
  };
  s.n0 = 2;
  s.max_terms = std::max(terms_or_default(max_terms), 4 * n + 1000);
  return sum_series(s);
}

const std::vector<double>& t_n_table(long N) {
  static std::mutex mu;
  static std::vector<double> table;
  std::lock_guard<std::mutex> lock(mu);
  if (long(table.size()) < N + 1) {
    long from = std::max<long>(1, long(table.size()));
    table.resize(std::size_t(N + 1), 0.0);
    for (long n = from; n <= N; ++n) table[std::size_t(n)] = t_n(n, 0).value;
  }
  return table;
}

SeriesResult fs416(double x, long max_terms) {
  long N = max_terms > 0 ? std::min<long>(max_terms, 20000) : 2000;
  const std::vector<double>& T = t_n_table(N);
  const ConstantsCache& c = constants();
  double a0 = 1.0 / 12 - 2 * c.log_A - 0.25 * c.log_2pi;
  kernels::Accumulator acc, cn, sn, lsn;
  acc.add(a0);
  double H = 0;
  for (long n = 1; n <= N; ++n) {
    double nn = double(n);
    H += 1.0 / nn;
    // last term is T_n/pi^2, checked against quadrature of the coefficients
    double a = (0.5 * std::log(nn) - c.gamma - c.log_2pi - 1) / (2 * kPi * kPi * nn * nn) - 0.25 / nn -
               T[std::size_t(n)] / (kPi * kPi);
    double b = (0.5 / nn - c.gamma - std::log(4 * kPi * kPi * nn) - H) / (2 * kPi * nn);
    double cs = cos_pi(2 * nn * x), sn_ = sin_pi(2 * nn * x);
    acc.add(a * cs + b * sn_);
    cn.add(cs / nn);
    sn.add(sn_ / nn);
    lsn.add(std::log(nn) * sn_ / nn);
  }
  // Tail from the leading behaviour a_n ~ -1/(2n) (T_n ~ pi^2/(4n)), b_n ~ -(gamma + log 2pi + log n)/(pi n)
  double s = sin_pi(x);
  double full_c = -std::log(2 * s);
  double full_s = kPi * (0.5 - x);
  double full_ls = kPi * (log_gamma(x).value - (0.5 - x) * (c.gamma + std::log(2.0)) - (1 - x) * std::log(kPi) +
                          0.5 * std::log(s));
  double tail_c = full_c - cn.value();
  double tail_s = full_s - sn.value();
  double tail_ls = full_ls - lsn.value();
  double tail = -0.5 * tail_c - (c.gamma + c.log_2pi) / kPi * tail_s - tail_ls / kPi;
  SeriesResult r;
  r.value = acc.value() + tail;
  double NN = double(N);
  r.abs_err = 4 * std::log(NN) / (NN * NN) / (s * s) + 1e-12;
  r.terms_used = N;
  r.method = TailModel::asymptotic_subtraction;
  return r;
}

// ------------------------------------------------------------ power series

struct PowerFamily {
  double radius;
  // term index n >= n0 at x
  std::function<double(int n, double x)> term;
  int n0;
  double constant;  // added term independent of the sum, as a function of x below
  std::function<double(double x)> extra;
};

const std::map<std::string, PowerFamily>& power_families() {
  static const std::map<std::string, PowerFamily> m = [] {
    std::map<std::string, PowerFamily> p;
    const double g = kEulerGamma;
    p["PS-5.1"] = {1.0, [](int n, double x) { return (n % 2 ? -1.0 : 1.0) * zint(2 * n + 1) * std::pow(x, 2 * n); },
                   1, 0, [g](double) { return g; }};
    p["PS-5.4"] = {1.0,
                   [](int n, double x) {
                     return (n % 2 ? -1.0 : 1.0) * zint(2 * n + 1) / (2 * n + 1) * std::pow(x, 2 * n + 1);
                   },
                   1, 0, [g](double x) { return g * x; }};
    p["PS-5.17"] = {1.0, [](int n, double x) { return zint(2 * n + 1) / (n + 1) * std::pow(x, 2 * n + 2); }, 1, 0,
                    {}};
    p["PS-5.30"] = {1.0, [](int n, double x) { return zint(2 * n + 1) * std::pow(x, 2 * n); }, 1, 0, {}};
    p["PS-5.32"] = {1.0, [](int n, double x) { return zint(2 * n + 1) / (2 * n + 1) * std::pow(x, 2 * n + 1); },
                    1, 0, {}};
    // real part of log Gamma(1+ix)
    p["PS-5.41"] = {1.0, [](int n, double x) { return (n % 2 ? -1.0 : 1.0) * zint(2 * n) / (2 * n) * std::pow(x, 2 * n); },
                    1, 0, {}};
    p["PS-5.48"] = {2.0,
                    [](int n, double x) { return zeta_int_m1(2 * n + 1) / (n + 1) * std::pow(x, 2 * n + 2); }, 1,
                    0, {}};
    p["PS-5.53"] = {1.0, [](int n, double u) { return 2 * zint(2 * n + 1) / n * std::pow(u, 2 * n); }, 1, 0, {}};
    p["PS-5.54"] = {1.0,
                    [](int n, double u) {
                      return zint(2 * n) / n * std::pow(u, 2 * n) +
                             zint(2 * n) / (n * (2.0 * n - 1)) * std::pow(u, 2 * n - 1);
                    },
                    1, 0, {}};
    // PS-5.54 with the 1/x from the integration by parts restored
    p["PS-5.54-odd"] = {1.0,
                        [](int n, double u) {
                          return zint(2 * n) / n * std::pow(u, 2 * n - 1) +
                                 zint(2 * n) / (n * (2.0 * n - 1)) * std::pow(u, 2 * n - 1);
                        },
                        1, 0, {}};
    p["PS-5.55"] = {1.0,
                    [](int n, double u) {
                      return zint(2 * n) / n * std::pow(u, 2 * n) +
                             zint(2 * n) / (n * (2.0 * n - 1)) * std::pow(u, 2 * n - 1) -
                             zint(2 * n + 1) / n * std::pow(u, 2 * n);
                    },
                    1, 0, {}};
    p["PS-1.25"] = {1.0, [](int n, double t) { return -2 * (n % 2 ? -1.0 : 1.0) * zint(2 * n) * std::pow(t, 2 * n); },
                    1, 0, [](double) { return 1.0; }};
    p["PS-1.17"] = {1.0,
                    [](int n, double p) {
                      const ConstantsCache& c = constants();
                      double s = n % 2 ? -1.0 : 1.0;
                      double pp = std::pow(p, 2 * n);
                      return s * pp *
                             ((c.log_2pi + c.gamma) * zint(2 * n + 2) + kPi / 2 * zint(2 * n + 3) * p -
                              zeta_prime(2.0 * n + 2).value);
                    },
                    0, 0, [](double p) { return kPi / (2 * p) * constants().log_2pi; }};
    return p;
  }();
  return m;
}

SeriesResult power_eval(const PowerFamily& f, double x, long max_terms) {
  require_finite(x, "power_series_eval");
  if (!(std::fabs(x) < f.radius)) throw Error(ErrorKind::domain, "power_series_eval: |x| >= radius");
  double q = (x / f.radius) * (x / f.radius);
  long cap = max_terms > 0 ? max_terms : 400;
  cap = std::max(cap, long(std::ceil(45 / std::max(1e-3, -std::log(std::max(q, 1e-300))))) + 4);
  kernels::Accumulator acc;
  double last = 0;
  long used = 0;
  for (int n = f.n0; n < f.n0 + cap; ++n) {
    double t = f.term(n, x);
    acc.add(t);
    last = t;
    ++used;
    if (q == 0 && n > f.n0) break;
    if (std::fabs(t) < 1e-19 && n > f.n0 + 2) break;
  }
  SeriesResult r;
  r.value = acc.value() + (f.extra ? f.extra(x) : 0.0);
  // coefficients are eventually monotone in n; a 4x safety factor covers
  // the polynomial growth of n-dependent prefactors
  double tail = q < 1 ? 4 * std::fabs(last) * q / (1 - q) : 0;
  r.abs_err = tail + 16 * kEps * (acc.abs_sum() + std::fabs(r.value));
  r.terms_used = used;
  r.method = TailModel::none;
  r.converged = tail <= 1e-12;
  return r;
}

// ------------------------------------------------------------ table

std::function<bool(const Params&)> any(std::size_t k) {
  return [k](const Params& p) {
    if (p.size() != k) return false;
    for (double v : p)
      if (!std::isfinite(v)) return false;
    return true;
  };
}

std::vector<SeriesEntry> build() {
  std::vector<SeriesEntry> v;
  auto add = [&v](std::string id, std::string anchor, std::vector<std::string> params, std::string domain,
                  std::function<bool(const Params&)> dom,
                  std::function<SeriesResult(const Params&, long)> eval) {
    v.push_back({std::move(id), std::move(anchor), std::move(params), std::move(domain), std::move(dom),
                  std::move(eval)});
  };
  const double g = kEulerGamma;
  const double l2p = std::log(kTwoPi);

  // ---- section 1
  add("S-1.20", "sum log n/(n^2+u^2) = sum (-1)^m zeta'(2m) u^(2(m-1))", {"u"}, "u real", any(1),
      [](const Params& p, long M) {
        double u = p[0];
        SeriesResult r = em([u](double n) { return std::log(n) / (n * n + u * u); }, 1, M);
        if (std::fabs(u) < 1) r.abs_err += std::fabs(r.value - taylor_120(u).value);
        return r;
      });
  add("S-1.23", "sum 1/(n^2+u^2) = sum (-1)^(m+1) zeta(2m) u^(2(m-1))", {"u"}, "u real", any(1),
      [](const Params& p, long M) {
        double u = p[0];
        SeriesResult r = em([u](double n) { return 1.0 / (n * n + u * u); }, 1, M,
                            [u](double N) { return u == 0 ? 1.0 / N : std::atan(u / N) / u; });
        if (std::fabs(u) < 1) r.abs_err += std::fabs(r.value - taylor_123(u).value);
        return r;
      });
  add("S-1.8", "sum (gamma + log 2 pi n)/(4 pi^2 n^2 + p^2)", {"p"}, "p real", any(1),
      [g, l2p](const Params& p, long M) {
        double q = p[0];
        return em([=](double n) { return (g + l2p + std::log(n)) / (4 * kPi * kPi * n * n + q * q); }, 1, M);
      });
  add("S-1.1", "sum log n/(4 pi^2 n^2 + p^2)", {"p"}, "p real", any(1), [](const Params& p, long M) {
    double q = p[0];
    return em([=](double n) { return std::log(n) / (4 * kPi * kPi * n * n + q * q); }, 1, M);
  });
  add("S-1.1-sq", "sum log n/(4 pi^2 n^2 + p^2)^2", {"p"}, "p real", any(1), [](const Params& p, long M) {
    double q = p[0];
    return em([=](double n) {
      double d = 4 * kPi * kPi * n * n + q * q;
      return std::log(n) / (d * d);
    }, 1, M);
  });
  add("S-2.5", "2 sum x/(x^2 + 4 pi^2 n^2)", {"x"}, "x real", any(1), [](const Params& p, long M) {
    double x = p[0];
    return em([=](double n) { return 2 * x / (x * x + 4 * kPi * kPi * n * n); }, 1, M,
              [=](double N) { return x == 0 ? 0.0 : std::atan(x / (kTwoPi * N)) / kPi; });
  });

  // ---- section 2
  add("S-2.1", "sum log n/(4n^2 - p^2)", {"p"}, "p/2 not a positive integer",
      [](const Params& p) { return p.size() == 1 && std::isfinite(p[0]) && !(is_int(p[0] / 2) && p[0] != 0); },
      [](const Params& p, long M) {
        double q = p[0];
        return em([=](double n) { return std::log(n) / (4 * n * n - q * q); }, 1, M);
      });
  add("S-2.8", "sum (1/n) 1/(n^2 - p^2)", {"p"}, "p not a nonzero integer",
      [](const Params& p) { return p.size() == 1 && std::isfinite(p[0]) && !(is_int(p[0]) && p[0] != 0); },
      [](const Params& p, long M) {
        double q = p[0];
        return em([=](double n) { return 1.0 / (n * (n * n - q * q)); }, 1, M);
      });
  add("S-2.10", "sum (-1)^n n/(n^2 - p^2)", {"p"}, "p not a nonzero integer",
      [](const Params& p) { return p.size() == 1 && std::isfinite(p[0]) && !(is_int(p[0]) && p[0] != 0); },
      [](const Params& p, long M) {
        double q = p[0];
        return alt([=](double n) { return sgn(n) * n / (n * n - q * q); }, 1, M);
      });

  // ---- section 3
  add("S-3.8", "sum (1/n) si(2 n pi)/(4n^2 - p^2)", {"p"}, "p/2 not a positive integer",
      [](const Params& p) { return p.size() == 1 && std::isfinite(p[0]) && !(is_int(p[0] / 2) && p[0] != 0); },
      [](const Params& p, long M) {
        double q = p[0];
        return em([=](double n) { return sici_2pi_n(n).si / (n * (4 * n * n - q * q)); }, 1, M);
      });
  add("S-3.6-ci", "sum Ci(2 n pi)/(4n^2 - p^2)", {"p"}, "p/2 not a positive integer",
      [](const Params& p) { return p.size() == 1 && std::isfinite(p[0]) && !(is_int(p[0] / 2) && p[0] != 0); },
      [](const Params& p, long M) {
        double q = p[0];
        return em([=](double n) { return sici_2pi_n(n).ci / (4 * n * n - q * q); }, 1, M);
      });
  add("S-3.14", "sum [Ci(2n pi) - gamma - log(2 pi n)]/(4n^2 - p^2)", {"p"},
      "p/2 not a positive integer",
      [](const Params& p) { return p.size() == 1 && std::isfinite(p[0]) && !(is_int(p[0] / 2) && p[0] != 0); },
      [g, l2p](const Params& p, long M) {
        double q = p[0];
        return em([=](double n) { return (sici_2pi_n(n).ci - g - l2p - std::log(n)) / (4 * n * n - q * q); }, 1, M);
      });
  add("S-3.16-log", "sum (gamma + log(2 pi n x))/(4n^2 - 1)", {"x"}, "x > 0",
      [](const Params& p) { return p.size() == 1 && p[0] > 0; },
      [g](const Params& p, long M) {
        double x = p[0];
        return em([=](double n) { return (g + std::log(kTwoPi * n * x)) / (4 * n * n - 1); }, 1, M);
      });
  add("S-3.16-ci", "sum Ci(2 n pi x)/(4n^2 - 1)", {"x"}, "x > 0 rational (denominator <= 32)",
      [](const Params& p) { return p.size() == 1 && p[0] > 0 && rational(2 * p[0]); },
      [](const Params& p, long M) {
        double x = p[0];
        long q = period_of(x, "S-3.16-ci");
        return sum_grouped(
            q,
            [x](double n, long ph) {
              double c = cos_pi(2 * double(ph) * x), s = sin_pi(2 * double(ph) * x);
              return lattice_sici(kTwoPi * n * x, c, s).ci / (4 * n * n - 1);
            },
            1, terms_or_default(M));
      });
  add("S-3.22", "sum (-1)^(n+1) cos(n u)/(n^2 - x^2), u = pi w", {"x", "w"},
      "x not an integer, w rational in [-1, 1]",
      [](const Params& p) {
        return p.size() == 2 && std::isfinite(p[0]) && !is_int(p[0]) && std::fabs(p[1]) <= 1 && rational(p[1]);
      },
      [](const Params& p, long M) {
        double x = p[0], w = p[1];
        long q = period_of((w + 1) / 2, "S-3.22");
        return sum_grouped(
            q, [x, w](double n, long ph) { return -cos_pi(double(ph) * (w + 1)) / (n * n - x * x); }, 1,
            terms_or_default(M));
      });

  // ---- section 4
  add("S-4.2", "sum (gamma + log(2 pi n))/(n^2 - p^2)", {"p"}, "p not a nonzero integer",
      [](const Params& p) { return p.size() == 1 && std::isfinite(p[0]) && !(is_int(p[0]) && p[0] != 0); },
      [g, l2p](const Params& p, long M) {
        double q = p[0];
        return em([=](double n) { return (g + l2p + std::log(n)) / (n * n - q * q); }, 1, M);
      });
  add("S-4.4-Tn", "T_n = sum_{m != n} log m/(m^2 - n^2)", {"n"}, "integer n >= 1",
      [](const Params& p) { return p.size() == 1 && p[0] >= 1 && is_int(p[0]) && p[0] <= 1e5; },
      [](const Params& p, long M) { return t_n(std::lround(p[0]), M); });
  add("S-4.5", "sum_{m != n} 1/(m^2 - n^2)", {"n"}, "integer n >= 1",
      [](const Params& p) { return p.size() == 1 && p[0] >= 1 && is_int(p[0]) && p[0] <= 1e5; },
      [](const Params& p, long M) {
        double nn = std::round(p[0]);
        SeriesSpec s;
        s.term = [nn](double m) { return std::fabs(m - nn) < 0.5 ? 0.0 : 1.0 / ((m - nn) * (m + nn)); };
        s.n0 = 1;
        s.max_terms = std::max(terms_or_default(M), long(4 * nn) + 1000);
        s.tail_integral = [nn](double N) { return std::log((N + nn) / (N - nn)) / (2 * nn); };
        return sum_series(s);
      });
  add("S-4.26", "sum Si(2 n pi)/n^2", {}, "none", any(0), [](const Params&, long M) {
    return em([](double n) { return (kPi / 2 + sici_2pi_n(n).si) / (n * n); }, 1, M);
  });
  add("S-4.27", "sum zeta(2n)/(2n+1)^2", {}, "none", any(0), [](const Params&, long M) {
    // terms tend to 1/(2n+1)^2; the zeta(2n) - 1 part is geometric
    SeriesResult a = em([](double n) { return 1.0 / ((2 * n + 1) * (2 * n + 1)); }, 1, M,
                        [](double N) { return 1.0 / (2 * (2 * N + 1)); });
    SeriesResult b = geo([](double n) { return zeta_int_m1(2 * int(n)) / ((2 * n + 1) * (2 * n + 1)); }, 1, 0, 0.25);
    a.value += b.value;
    a.abs_err += b.abs_err;
    return a;
  });
  add("S-4.29", "sum Si(n pi)/n^2", {}, "none", any(0), [](const Params&, long M) {
    return sum_grouped(
        2,
        [](double n, long ph) {
          double c = (ph % 2) ? -1.0 : 1.0;
          return (kPi / 2 + lattice_sici(kPi * n, c, 0.0).si) / (n * n);
        },
        1, terms_or_default(M));
  });
  add("S-4.30", "sum Si((2n-1) pi)/(2n-1)^2", {}, "none", any(0), [](const Params&, long M) {
    return em(
        [](double n) {
          double k = 2 * n - 1;
          return (kPi / 2 + lattice_sici(kPi * k, -1.0, 0.0).si) / (k * k);
        },
        1, M);
  });
  add("S-4.31.1", "sum (gamma + log n - H_n)/n", {}, "none", any(0),
      [](const Params&, long M) { return em([](double n) { return glh(n) / n; }, 1, M); });
  add("S-4.32", "sum H_n [log(1 + 1/n) - 1/n]", {}, "none", any(0), [g](const Params&, long M) {
    return em([g](double n) { return (std::log(n) + g + delta_h(n)) * lmx(1 / n); }, 1, M);
  });
  add("S-4.32.1", "sum {(gamma + log n)/n - H_n log(1 + 1/n)}", {}, "none", any(0),
      [g](const Params&, long M) {
        return em([g](double n) { return -(g + std::log(n)) * lmx(1 / n) - delta_h(n) * std::log1p(1 / n); }, 1, M);
      });
  add("S-4.35", "sum Ci(2 pi n)/(pi n)", {}, "none", any(0), [](const Params&, long M) {
    return em([](double n) { return sici_2pi_n(n).ci / (kPi * n); }, 1, M);
  });
  add("S-4.24", "sum [(gamma + log n - H_n)/n + 1/n^2]", {}, "none", any(0),
      [](const Params&, long M) { return em([](double n) { return glh(n) / n + 1 / (n * n); }, 1, M); });

  // ---- section 5
  add("S-5.13", "sum [n/(n^2 - x^2) - log(1 + 1/n)]", {"x"}, "x not a nonzero integer",
      [](const Params& p) { return p.size() == 1 && std::isfinite(p[0]) && !(is_int(p[0]) && p[0] != 0); },
      [](const Params& p, long M) {
        double x = p[0];
        return em([x](double n) { return x * x / (n * (n * n - x * x)) - lmx(1 / n); }, 1, M);
      });
  add("S-5.16", "sum [n log(1 - x^2/n^2) + x^2 log(1 + 1/n)]", {"x"}, "|x| < 1",
      [](const Params& p) { return p.size() == 1 && std::fabs(p[0]) < 1; },
      [](const Params& p, long M) {
        double x = p[0];
        return em([x](double n) { return n * lmx(-x * x / (n * n)) + x * x * lmx(1 / n); }, 1, M);
      });
  add("S-5.18", "sum [n log(1 - 1/(4n^2)) + (1/4) log(1 + 1/n)]", {}, "none", any(0),
      [](const Params&, long M) {
        return em([](double n) { return n * lmx(-0.25 / (n * n)) + 0.25 * lmx(1 / n); }, 1, M);
      });
  add("S-5.44.4", "sum [(1+n) log(1 + 1/n) - 1 - 1/(2n)]", {}, "none", any(0),
      [](const Params&, long M) { return em([](double n) { return (1 + n) * lmx2(1 / n) - 0.5 / (n * n); }, 1, M); });
  add("S-5.44.5", "sum [(1/2 + n) log(1 + 1/n) - 1]", {}, "none", any(0),
      [](const Params&, long M) { return em([](double n) { return (0.5 + n) * lmx2(1 / n) - 0.25 / (n * n); }, 1, M); });
  add("S-5.45", "sum log(n+1)/(n(n+1)) and equivalent forms", {"form"},
      "form in {1, 2, 3, 4}",
      [](const Params& p) { return p.size() == 1 && is_int(p[0]) && p[0] >= 1 && p[0] <= 4; },
      [](const Params& p, long M) {
        switch (std::lround(p[0])) {
          case 1: return em([](double n) { return std::log1p(n) / (n * (n + 1)); }, 1, M);
          case 2: {
            // sum (-1)^(n+1)/n is log 2; the zeta - 1 part converges geometrically
            SeriesResult r = geo([](double n) { return -sgn(n) * zeta_int_m1(int(n) + 1) / n; }, 1, 0, 0.5);
            r.value += std::log(2.0);
            return r;
          }
          case 3: return geo([](double n) { return -zeta_prime(n).value; }, 2, 0, 0.5);
          default: return em([](double n) { return std::log1p(1 / n) / n; }, 1, M);
        }
      });
  add("S-5.46.2", "sum [zeta(2n+1) - 1]", {}, "none", any(0), [](const Params&, long M) {
    return geo([](double n) { return zeta_int_m1(2 * int(n) + 1); }, 1, M, 0.25);
  });
  add("S-5.49", "sum_{n>=2} (1/n) log(1 - 1/n^2)", {}, "none", any(0), [](const Params&, long M) {
    return em([](double n) { return std::log1p(-1 / (n * n)) / n; }, 2, M);
  });
  add("S-5.50", "sum_{n>=2} (1/n) log(1 - 1/n)", {}, "none", any(0), [](const Params&, long M) {
    return em([](double n) { return std::log1p(-1 / n) / n; }, 2, M);
  });
  add("S-5.52", "sum (1/n) log((n+u)/n)", {"u"}, "u > -1",
      [](const Params& p) { return p.size() == 1 && p[0] > -1; },
      [](const Params& p, long M) {
        double u = p[0];
        return em([u](double n) { return std::log1p(u / n) / n; }, 1, M);
      });
  add("S-5.55-stated", "sum_{n>=2} (1/n) log(1 + 1/n) + 1 - log 2", {}, "none", any(0),
      [](const Params&, long M) {
        SeriesResult r = em([](double n) { return std::log1p(1 / n) / n; }, 2, M);
        r.value += 1 - std::log(2.0);
        return r;
      });
  add("S-5.56", "sum_{j>=2} [j log(1 - 1/j) + 1 + 1/(2j)]", {}, "none", any(0),
      [](const Params&, long M) { return em([](double j) { return j * lmx2(-1 / j); }, 2, M); });
  add("S-5.57-aux", "auxiliary sums for S-5.56 (variant k)", {"k"}, "k in {1, ..., 5}",
      [](const Params& p) { return p.size() == 1 && is_int(p[0]) && p[0] >= 1 && p[0] <= 5; },
      [](const Params& p, long M) {
        switch (std::lround(p[0])) {
          case 1: return em([](double j) { return j / ((j * j - 1) * (j * j - 1)); }, 2, M);
          case 2: return em([](double j) { return 1 / (j * (j * j - 1)); }, 2, M);
          case 3: return em([](double j) { return j * lmx(-1 / (j * j)); }, 2, M);
          case 4:
            return geo([](double n) { return n * n / (n + 1) * zeta_int_m1(2 * int(n) + 1); }, 1, 0, 0.3);
          default: return em([](double j) { return j * lmx(-1 / (j * j)) + lmx(1 / j); }, 2, M);
        }
      });
  add("S-5.58.1", "sum [j log(1 + 1/j) - 1 + 1/(2j)]", {}, "none", any(0),
      [](const Params&, long M) { return em([](double j) { return j * lmx2(1 / j); }, 1, M); });

  // ---- section 6
  add("S-6.3", "sum_{n>=2} log(1 - 1/n^2)", {}, "none", any(0),
      [](const Params&, long M) { return em([](double n) { return std::log1p(-1 / (n * n)); }, 2, M); });
  add("S-6.4", "sum_{n>=2} (-1)^(n+1) log(1 - 1/n^2)", {}, "none", any(0),
      [](const Params&, long M) { return alt([](double n) { return -sgn(n) * std::log1p(-1 / (n * n)); }, 2, M); });
  add("S-6.5", "sum (-1)^(n+1) log(1 + 1/n)", {}, "none", any(0),
      [](const Params&, long M) { return alt([](double n) { return -sgn(n) * std::log1p(1 / n); }, 1, M); });
  add("S-6.6", "sum_{n>=2} (-1)^(n+1) log(1 - 1/n)", {}, "none", any(0),
      [](const Params&, long M) { return alt([](double n) { return -sgn(n) * std::log1p(-1 / n); }, 2, M); });
  add("S-6.7.2", "sum_{n>=2} log(1 - 1/n^2)/n^2", {}, "none", any(0),
      [](const Params&, long M) { return em([](double n) { return std::log1p(-1 / (n * n)) / (n * n); }, 2, M); });
  add("S-6.11", "sum_{n>=2} (1/n) log(1 - 1/n^2) sin(2 n pi u)", {"u"}, "u rational",
      [](const Params& p) { return p.size() == 1 && rational(p[0]); },
      [](const Params& p, long M) {
        double u = p[0];
        return sum_grouped(
            period_of(u, "S-6.11"),
            [u](double n, long ph) { return std::log1p(-1 / (n * n)) / n * sin_pi(2 * double(ph) * u); }, 2,
            terms_or_default(M));
      });
  add("S-6.23", "sum_{n>=2} psi(n + 1/2) log(1 - 1/n^2)", {}, "none", any(0),
      [](const Params&, long M) {
        return em([](double n) { return digamma(n + 0.5).value * std::log1p(-1 / (n * n)); }, 2, M);
      });
  add("S-6.24-aux", "sum n/(4n^2 - 1)^k", {"k"}, "integer k >= 2",
      [](const Params& p) { return p.size() == 1 && is_int(p[0]) && p[0] >= 2 && p[0] <= 8; },
      [](const Params& p, long M) {
        double k = std::round(p[0]);
        return em([k](double n) { return n / std::pow(4 * n * n - 1, k); }, 1, M);
      });
  add("S-6.33", "sum (-1)^n n/(4n^2 - 1)^3", {}, "none", any(0), [](const Params&, long M) {
    return alt([](double n) { double d = 4 * n * n - 1; return sgn(n) * n / (d * d * d); }, 1, M);
  });

  // ---- section 7
  add("S-7.11", "sum (-1)^n/(2n+1) log(1 + 1/n)", {}, "none", any(0), [](const Params&, long M) {
    return alt([](double n) { return sgn(n) * std::log1p(1 / n) / (2 * n + 1); }, 1, M);
  });
  add("S-7.11-rhs", "sum (-1)^n n log n/(4n^2 - 1)", {}, "none", any(0), [](const Params&, long M) {
    return alt([](double n) { return sgn(n) * n * std::log(n) / (4 * n * n - 1); }, 1, M);
  });
  add("S-6.38", "sum_{n>=2} (1/n^2) log(1 - 1/(4n^2))", {}, "none", any(0),
      [](const Params&, long M) { return em([](double n) { return std::log1p(-0.25 / (n * n)) / (n * n); }, 2, M); });
  add("S-7.12", "sum (1/(2n+1)) log(1 + 1/n)", {}, "none", any(0),
      [](const Params&, long M) { return em([](double n) { return std::log1p(1 / n) / (2 * n + 1); }, 1, M); });
  add("S-7.12-rhs", "sum log n/(4n^2 - 1)", {}, "none", any(0),
      [](const Params&, long M) { return em([](double n) { return std::log(n) / (4 * n * n - 1); }, 1, M); });
  add("S-7.15", "sum [2n sin(2n pi u) sin(pi u) + cos(2n pi u)(cos(pi u) - 1)] log n/(4n^2 - 1)",
      {"u"}, "u rational", [](const Params& p) { return p.size() == 1 && rational(p[0]); },
      [](const Params& p, long M) {
        double u = p[0];
        double su = sin_pi(u), cu = cos_pi(u);
        return sum_grouped(
            period_of(u, "S-7.15"),
            [=](double n, long ph) {
              double a = 2 * double(ph) * u;
              return (2 * n * sin_pi(a) * su + cos_pi(a) * (cu - 1)) * std::log(n) / (4 * n * n - 1);
            },
            1, terms_or_default(M));
      });
  // termwise integral of the Lerch sine series of psi(x) sin(pi x)
  add("S-7.15-lerch", "sum log(1 + 1/n)(1 - cos((2n+1) pi u))/(2n+1)", {"u"}, "u rational",
      [](const Params& p) { return p.size() == 1 && rational(p[0]); },
      [](const Params& p, long M) {
        double u = p[0];
        return sum_grouped(
            period_of(u, "S-7.15-lerch"),
            [=](double n, long ph) { return std::log1p(1 / n) * (1 - cos_pi(2 * double(ph) * u + u)) / (2 * n + 1); },
            1, terms_or_default(M));
      });
  add("S-7.17", "sum (-1)^n log n/(4n^2 - 1)", {}, "none", any(0), [](const Params&, long M) {
    return alt([](double n) { return sgn(n) * std::log(n) / (4 * n * n - 1); }, 1, M);
  });

  // ---- section 8
  add("S-8.7", "sum (-1)^n/(n^2 - mu^2)", {"mu"}, "mu not an integer",
      [](const Params& p) { return p.size() == 1 && std::isfinite(p[0]) && !is_int(p[0]); },
      [](const Params& p, long M) {
        double mu = p[0];
        return alt([mu](double n) { return sgn(n) / (n * n - mu * mu); }, 1, M);
      });
  add("S-8.11", "sum 1/(4n^2 - 1)", {}, "none", any(0), [](const Params&, long M) {
    return em([](double n) { return 1 / (4 * n * n - 1); }, 1, M,
              [](double N) { return 0.25 * std::log((2 * N + 1) / (2 * N - 1)); });
  });

  // ---- Fourier series
  add("FS-6.2", "-sum_{n>=2} log(1 - 1/n^2) cos(2 n pi x)", {"x"}, "x rational",
      [](const Params& p) { return p.size() == 1 && rational(p[0]); },
      [](const Params& p, long M) {
        double x = p[0];
        return sum_grouped(
            period_of(x, "FS-6.2"),
            [x](double n, long ph) { return -std::log1p(-1 / (n * n)) * cos_pi(2 * double(ph) * x); }, 2,
            terms_or_default(M));
      });
  add("FS-7.1", "-sum sin((2n+1) pi x) log(1 + 1/n)", {"x"}, "x rational",
      [](const Params& p) { return p.size() == 1 && rational(p[0]); },
      [](const Params& p, long M) {
        double x = p[0];
        return sum_grouped(
            period_of(x, "FS-7.1"),
            [x](double n, long ph) { return -sin_pi((2 * double(ph) + 1) * x) * std::log1p(1 / n); }, 1,
            terms_or_default(M));
      });
  add("FS-8.12", "sum [sin(pi t) cos(2 pi n t) - (-1)^n - 2n cos(pi t) sin(2 pi n t)]/(4n^2 - 1)",
      {"t"}, "t rational", [](const Params& p) { return p.size() == 1 && rational(p[0]); },
      [](const Params& p, long M) {
        double t = p[0];
        long q = period_of(t, "FS-8.12");
        if (q % 2) q *= 2;
        double st = sin_pi(t), ct = cos_pi(t);
        return sum_grouped(
            q,
            [=](double n, long ph) {
              double a = 2 * double(ph) * t;
              double s = (ph % 2) ? -1.0 : 1.0;
              return (st * cos_pi(a) - s - 2 * n * ct * sin_pi(a)) / (4 * n * n - 1);
            },
            1, terms_or_default(M));
      });
  add("FS-8.13", "sum cos(2 pi n t)/(4n^2 - 1)", {"t"}, "t rational",
      [](const Params& p) { return p.size() == 1 && rational(p[0]); },
      [](const Params& p, long M) {
        double t = p[0];
        return sum_grouped(
            period_of(t, "FS-8.13"),
            [t](double n, long ph) { return cos_pi(2 * double(ph) * t) / (4 * n * n - 1); }, 1,
            terms_or_default(M));
      });
  add("FS-8.14", "sum n sin(2 pi n t)/(4n^2 - 1)", {"t"}, "t rational",
      [](const Params& p) { return p.size() == 1 && rational(p[0]); },
      [](const Params& p, long M) {
        double t = p[0];
        return sum_grouped(
            period_of(t, "FS-8.14"),
            [t](double n, long ph) { return n * sin_pi(2 * double(ph) * t) / (4 * n * n - 1); }, 1,
            terms_or_default(M));
      });
  add("FS-4.16", "a_0 + sum a_n cos(2 n pi x) + b_n sin(2 n pi x)", {"x"}, "0 < x < 1",
      [](const Params& p) { return p.size() == 1 && p[0] > 0 && p[0] < 1; },
      [](const Params& p, long M) { return fs416(p[0], M > 0 ? M / 5 : 0); });

  // ---- power series
  for (const auto& [id, fam] : power_families()) {
    double R = fam.radius;
    const PowerFamily* f = &fam;
    std::string name = id == "PS-1.17" ? "p" : id.rfind("PS-5.5", 0) == 0 ? "u" : "x";
    add(id, "Maclaurin family " + id.substr(3), {name}, "|" + name + "| < " + std::to_string(int(R)),
        [R, id](const Params& p) { return p.size() == 1 && std::fabs(p[0]) < R && !(id == "PS-1.17" && p[0] == 0); },
        [f](const Params& p, long M) { return power_eval(*f, p[0], M > 0 ? std::min<long>(M, 2000) : 0); });
  }

  std::sort(v.begin(), v.end(), [](const SeriesEntry& a, const SeriesEntry& b) { return a.id < b.id; });
  return v;
}

}  // namespace

const std::vector<SeriesEntry>& series_entries() {
  static const std::vector<SeriesEntry> v = build();
  return v;
}

const SeriesEntry& series_entry(const std::string& id) {
  for (const SeriesEntry& e : series_entries())
    if (e.id == id) return e;
  throw Error(ErrorKind::unknown_id, "unknown series id: " + id);
}

SeriesResult sum_catalog(const std::string& id, const std::vector<double>& params, long max_terms) {
  const SeriesEntry& e = series_entry(id);
  if (!e.in_domain(params)) throw Error(ErrorKind::domain, id + ": parameters outside domain (" + e.domain + ")");
  return e.eval(params, max_terms);
}

SeriesResult power_series_eval(const std::string& id, double x, long max_terms) {
  auto it = power_families().find(id);
  if (it == power_families().end()) throw Error(ErrorKind::unknown_id, "unknown power series id: " + id);
  return power_eval(it->second, x, max_terms);
}

double power_series_radius(const std::string& id) {
  auto it = power_families().find(id);
  if (it == power_families().end()) throw Error(ErrorKind::unknown_id, "unknown power series id: " + id);
  return it->second.radius;
}

}  // namespace lgi::series
