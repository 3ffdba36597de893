// Named integrals. Integrands are rewritten so that no endpoint is probed by
// a cancelling difference; removable endpoints carry their analytic limit.

#include <algorithm>
#include <cmath>

#include "lgi/quad.hpp"
#include "lgi/specfun.hpp"

namespace lgi::quad {

namespace {

using Params = std::vector<double>;
constexpr double kTwoPi = 2 * kPi;

// log Gamma(x) on (0,1], given y = 1 - x computed without cancellation
double lgam(double x, double y) { return x <= 0.5 ? log_gamma(x).value : log_gamma_1p(-y).value; }
// log Gamma(1+x) for x in [0,1]
double lgam1p(double x, double y) { return x <= 0.5 ? log_gamma_1p(x).value : log_gamma_1p(-y).value + std::log1p(-y); }
// log sin(pi x) on (0,1)
double lsin(double x, double y) { return std::log(sin_pi(std::min(x, y))); }
// x log x on (0,1], via log1p near 1
double logx(double x, double y) { return x <= 0.5 ? std::log(x) : std::log1p(-y); }
// psi(1+x) + gamma
double psig(double x) { return std::fabs(x) <= 0.5 ? digamma_1p_gamma(x).value : digamma(1 + x).value + kEulerGamma; }
// x psi(x) = x psi(1+x) - 1
double xpsi(double x) { return x * digamma(1 + x).value - 1; }
// 1/x - pi cot(pi x), no cancellation for small x
double s_cot(double x) {
  if (std::fabs(x) < 0.1) {
    double x2 = x * x, p = x, s = 0;
    for (int k = 1; k < 14; ++k) {
      s += 2 * (1 + zeta_int_m1(2 * k)) * p;
      p *= x2;
    }
    return s;
  }
  return 1 / x - kPi * cot_pi(x);
}
// 1/(e^t - 1) - 1/t
double a_fn(double t) {
  if (t < 1e-2) {
    double t2 = t * t;
    return -0.5 + t / 12 - t * t2 / 720 + t * t2 * t2 / 30240;
  }
  return 1 / std::expm1(t) - 1 / t;
}

EndpointHint log_left() { return {{Endpoint::log_singularity, 0}, {}}; }
EndpointHint limits(double l, double r) {
  return {{Endpoint::removable_by_limit, l}, {Endpoint::removable_by_limit, r}};
}
EndpointHint limit_right(double r, Endpoint left = Endpoint::log_singularity) {
  return {{left, 0}, {Endpoint::removable_by_limit, r}};
}

// [0, inf) with the integrand replaced by a two-term expansion below t0.
QuadResult semi_inf(std::function<double(double)> f, std::function<double(double)> small, double t0, double rate,
                    double tol, int cap) {
  auto g = [f, small, t0](double t) { return t < t0 ? small(t) : f(t); };
  return integrate_semi_infinite(g, 0, {Decay::exponential, rate}, tol, cap);
}

bool n_ok(const Params& p, int lo, int hi) {
  return p.size() == 1 && p[0] == std::floor(p[0]) && p[0] >= lo && p[0] <= hi;
}
bool one(const Params& p, double lo, double hi) { return p.size() == 1 && p[0] > lo && p[0] < hi; }

std::vector<IntegralEntry> build() {
  std::vector<IntegralEntry> v;
  auto add = [&v](std::string id, std::string anchor, std::vector<std::string> params, std::string domain,
                  double tol, std::function<bool(const Params&)> dom,
                  std::function<QuadResult(const Params&, double, int)> eval) {
    v.push_back({std::move(id), std::move(anchor), std::move(params), std::move(domain), tol, std::move(dom),
                 std::move(eval)});
  };
  auto none = [](const Params& p) { return p.empty(); };
  const double g = kEulerGamma;
  const double l2p = std::log(kTwoPi);
  const double T = kDefaultTol, C = kCotTol;

  // ---- Q-1.x, Laplace-type
  add("Q-1.1", "int_0^1 e^{-px} log Gamma(x) dx", {"p"}, "|p| <= 60", T,
      [](const Params& p) { return p.size() == 1 && std::fabs(p[0]) <= 60; },
      [](const Params& p, double tol, int cap) {
        double q = p[0];
        return integrate([q](double x, double y) { return std::exp(-q * x) * lgam(x, y); }, 0, 1, log_left(),
                         tol, cap);
      });
  add("Q-2.6-moment", "int_0^1 x e^{-px} log Gamma(x) dx", {"p"}, "|p| <= 60", T,
      [](const Params& p) { return p.size() == 1 && std::fabs(p[0]) <= 60; },
      [](const Params& p, double tol, int cap) {
        double q = p[0];
        return integrate([q](double x, double y) { return x * std::exp(-q * x) * lgam(x, y); }, 0, 1, {}, tol,
                         cap);
      });
  add("Q-1.11", "int_0^1 e^{-px} log x dx", {"p"}, "|p| <= 60", T,
      [](const Params& p) { return p.size() == 1 && std::fabs(p[0]) <= 60; },
      [](const Params& p, double tol, int cap) {
        double q = p[0];
        return integrate([q](double x, double y) { return std::exp(-q * x) * logx(x, y); }, 0, 1, log_left(), tol,
                         cap);
      });
  add("Q-1.12", "int_0^1 e^{-px} psi(1+x) dx", {"p"}, "|p| <= 60", T,
      [](const Params& p) { return p.size() == 1 && std::fabs(p[0]) <= 60; },
      [](const Params& p, double tol, int cap) {
        double q = p[0];
        return integrate([q](double x, double) { return std::exp(-q * x) * (psig(x) - kEulerGamma); }, 0, 1, {},
                         tol, cap);
      });
  add("Q-1.13", "int_0^inf e^{-px} psi(1+x) dx", {"p"}, "0 < p <= 60", T,
      [](const Params& p) { return p.size() == 1 && p[0] > 0 && p[0] <= 60; },
      [](const Params& p, double tol, int cap) {
        double q = p[0];
        return integrate_semi_infinite([q](double x) { return std::exp(-q * x) * (psig(x) - kEulerGamma); }, 0,
                                       {Decay::exponential, q}, tol, cap);
      });

  // ---- Q-2.x, trigonometric transforms
  add("Q-2.1", "int_0^1 log Gamma(x) cos(p pi x) dx", {"p"}, "|p| <= 16", T,
      [](const Params& p) { return p.size() == 1 && std::fabs(p[0]) <= 16; },
      [](const Params& p, double tol, int cap) {
        double q = p[0];
        return integrate([q](double x, double y) { return lgam(x, y) * cos_pi(q * x); }, 0, 1, log_left(), tol,
                         cap);
      });
  add("Q-2.2", "int_0^1 log Gamma(x) sin(p pi x) dx", {"p"}, "|p| <= 16", T,
      [](const Params& p) { return p.size() == 1 && std::fabs(p[0]) <= 16; },
      [](const Params& p, double tol, int cap) {
        double q = p[0];
        return integrate([q](double x, double y) { return lgam(x, y) * sin_pi(q * x); }, 0, 1, {}, tol, cap);
      });
  add("Q-2.6", "int_0^1 log sin(pi x) sin(p pi x) dx", {"p"}, "|p| <= 16", T,
      [](const Params& p) { return p.size() == 1 && std::fabs(p[0]) <= 16; },
      [](const Params& p, double tol, int cap) {
        double q = p[0];
        return integrate([q](double x, double y) { return lsin(x, y) * sin_pi(q * x); }, 0, 1, {}, tol, cap);
      });
  add("Q-2.9", "int_0^1 log(2 sin pi x) cos(2p pi x) dx", {"p"}, "|p| <= 8", T,
      [](const Params& p) { return p.size() == 1 && std::fabs(p[0]) <= 8; },
      [](const Params& p, double tol, int cap) {
        double q = p[0];
        return integrate([q](double x, double y) { return (std::log(2.0) + lsin(x, y)) * cos_pi(2 * q * x); }, 0,
                         1, {{Endpoint::log_singularity, 0}, {Endpoint::log_singularity, 0}}, tol, cap);
      });
  add("Q-2.10", "int_0^{1/2} log sin(pi x) cos(2p pi x) dx", {"p"}, "|p| <= 8", T,
      [](const Params& p) { return p.size() == 1 && std::fabs(p[0]) <= 8; },
      [](const Params& p, double tol, int cap) {
        double q = p[0];
        return integrate([q](double x, double) { return std::log(sin_pi(x)) * cos_pi(2 * q * x); }, 0, 0.5,
                         log_left(), tol, cap);
      });
  add("Q-2.12", "int_0^1 log sin(pi x) sin((2x-1) p pi) dx", {"p"}, "|p| <= 16", T,
      [](const Params& p) { return p.size() == 1 && std::fabs(p[0]) <= 16; },
      [](const Params& p, double tol, int cap) {
        double q = p[0];
        return integrate([q](double x, double y) { return lsin(x, y) * sin_pi((x - y) * q); }, 0, 1, {}, tol, cap);
      });
  add("Q-2.13", "int_0^1 (2x-1)^{2n+1} log sin(pi x) dx", {"n"}, "n = 0..8", T,
      [](const Params& p) { return n_ok(p, 0, 8); },
      [](const Params& p, double tol, int cap) {
        int n = int(p[0]);
        return integrate([n](double x, double y) { return std::pow(x - y, 2 * n + 1) * lsin(x, y); }, 0, 1, {},
                         tol, cap);
      });

  // ---- Q-3.x
  for (const char* id : {"Q-3.6", "Q-3.7"}) {
    bool cosine = id[4] == '6';
    add(id, cosine ? "int_0^1 log Gamma(x) cos(p pi x) dx" : "int_0^1 log Gamma(x) sin(p pi x) dx", {"p"},
        "|p| <= 16", T, [](const Params& p) { return p.size() == 1 && std::fabs(p[0]) <= 16; },
        [cosine](const Params& p, double tol, int cap) {
          double q = p[0];
          return integrate(
              [q, cosine](double x, double y) { return lgam(x, y) * (cosine ? cos_pi(q * x) : sin_pi(q * x)); }, 0,
              1, log_left(), tol, cap);
        });
  }
  add("Q-3.13", "int_0^1 log Gamma(x) sin(pi x) dx", {}, "", T, none, [](const Params&, double tol, int cap) {
    return integrate([](double x, double y) { return lgam(x, y) * sin_pi(std::min(x, y)); }, 0, 1, {}, tol, cap);
  });

  // ---- Q-4.x
  add("Q-4.1", "int_0^1 x log Gamma(x) dx", {}, "", T, none, [](const Params&, double tol, int cap) {
    return integrate([](double x, double y) { return x * lgam(x, y); }, 0, 1, {}, tol, cap);
  });
  add("Q-4.11", "int_0^1 x^2 log Gamma(x) dx", {}, "", T, none, [](const Params&, double tol, int cap) {
    return integrate([](double x, double y) { return x * x * lgam(x, y); }, 0, 1, {}, tol, cap);
  });
  add("Q-4.4", "int_0^1 x log Gamma(x) cos(2n pi x) dx", {"n"}, "n = 1..8", T,
      [](const Params& p) { return n_ok(p, 1, 8); },
      [](const Params& p, double tol, int cap) {
        double n = p[0];
        return integrate([n](double x, double y) { return x * lgam(x, y) * cos_pi(2 * n * x); }, 0, 1, {}, tol,
                         cap);
      });
  add("Q-4.8", "int_0^1 x log Gamma(x) sin(2n pi x) dx", {"n"}, "n = 1..8", T,
      [](const Params& p) { return n_ok(p, 1, 8); },
      [](const Params& p, double tol, int cap) {
        double n = p[0];
        return integrate([n](double x, double y) { return x * lgam(x, y) * sin_pi(2 * n * x); }, 0, 1, {}, tol,
                         cap);
      });
  add("Q-4.12.7", "int_0^1 B_{2n+1}(x) cot(pi x) dx", {"n"}, "n = 1..5", C,
      [](const Params& p) { return n_ok(p, 1, 5); },
      [](const Params& p, double tol, int cap) {
        int m = 2 * int(p[0]) + 1;
        double lim = m * bernoulli_number(m - 1) / kPi;
        // B_m(1-t) = -B_m(t) and cot(pi(1-t)) = -cot(pi t): the integrand is symmetric
        return integrate(
            [m](double x, double y) {
              double t = std::min(x, y);
              return bernoulli_poly(m, t).value * cos_pi(t) / sin_pi(t);
            },
            0, 1, limits(lim, lim), tol, cap);
      });
  add("Q-4.12.8", "int_0^1 B_{2n}(x) log sin(pi x) dx", {"n"}, "n = 1..6", T,
      [](const Params& p) { return n_ok(p, 1, 6); },
      [](const Params& p, double tol, int cap) {
        int m = 2 * int(p[0]);
        return integrate([m](double x, double y) { return bernoulli_poly(m, std::min(x, y)).value * lsin(x, y); },
                         0, 1, {}, tol, cap);
      });
  add("Q-4.12.10", "int_0^1 B_{2n}(x) log Gamma(x) dx", {"n"}, "n = 1..6", T,
      [](const Params& p) { return n_ok(p, 1, 6); },
      [](const Params& p, double tol, int cap) {
        int m = 2 * int(p[0]);
        return integrate([m](double x, double y) { return bernoulli_poly(m, std::min(x, y)).value * lgam(x, y); },
                         0, 1, log_left(), tol, cap);
      });
  add("Q-4.17", "int_0^u log Gamma(x) dx", {"u"}, "0 < u <= 1", T,
      [](const Params& p) { return p.size() == 1 && p[0] > 0 && p[0] <= 1; },
      [](const Params& p, double tol, int cap) {
        return integrate([](double x, double) { return lgam(x, 1 - x); }, 0, p[0], log_left(), tol, cap);
      });
  add("Q-4.25", "int_0^1 x log x sin(2n pi x) dx", {"n"}, "n = 1..8", T,
      [](const Params& p) { return n_ok(p, 1, 8); },
      [](const Params& p, double tol, int cap) {
        double n = p[0];
        return integrate([n](double x, double y) { return x * logx(x, y) * sin_pi(2 * n * x); }, 0, 1, {}, tol,
                         cap);
      });
  add("Q-4.26-lhs", "int_0^1 x log x cot(pi x) dx", {}, "", C, none, [](const Params&, double tol, int cap) {
    return integrate(
        [](double x, double y) {
          double c = x <= 0.5 ? cos_pi(x) / sin_pi(x) : -cos_pi(y) / sin_pi(y);
          return x * logx(x, y) * c;
        },
        0, 1, limit_right(1 / kPi), tol, cap);
  });
  add("Q-4.28-lhs", "int_0^1 log x log sin(pi x) dx", {}, "", T, none, [](const Params&, double tol, int cap) {
    return integrate([](double x, double y) { return logx(x, y) * lsin(x, y); }, 0, 1, log_left(), tol, cap);
  });
  add("Q-4.29-lhs", "int_0^pi log x log(2 sin(x/2)) dx", {}, "", T, none, [](const Params&, double tol, int cap) {
    return integrate([](double x, double) { return std::log(x) * std::log(2 * std::sin(0.5 * x)); }, 0, kPi,
                     log_left(), tol, cap);
  });
  add("Q-4.30-lhs", "int_0^pi log x log cot(x/2) dx", {}, "", T, none, [](const Params&, double tol, int cap) {
    return integrate(
        [](double x, double y) {
          double c = x <= 0.5 * kPi ? 1 / std::tan(0.5 * x) : std::tan(0.5 * y);
          return std::log(x) * std::log(c);
        },
        0, kPi, {{Endpoint::log_singularity, 0}, {Endpoint::log_singularity, 0}}, tol, cap);
  });
  // x log Gamma(x) cot(pi x) = x log Gamma(1+x) cot(pi x) - x log x cot(pi x)
  auto q431 = [](double x, double y) {
    if (x <= 0.5) {
      double c = cos_pi(x) / sin_pi(x);
      return x * c * (log_gamma_1p(x).value - std::log(x));
    }
    // log Gamma(1-y)/y stays accurate through log_gamma_1p
    return -x * lgam(x, y) * cos_pi(y) / sin_pi(y);
  };
  add("Q-4.31", "int_0^1 x log Gamma(x) cot(pi x) dx", {}, "", C, none, [q431, g](const Params&, double tol, int cap) {
    return integrate(q431, 0, 1, limit_right(-g / kPi), tol, cap);
  });
  // log G(1+x) near x = 1 via log G(2-t) = log G(1-t) + log Gamma(1-t)
  auto lg1p = [](double x, double y) {
    if (x <= 0.5) return log_barnes_g(1 + x).value;
    return log_barnes_g(1 - y).value + log_gamma_1p(-y).value;
  };
  add("Q-4.33", "int_0^1 log G(1+x) cot(pi x) dx", {}, "", C, none,
      [lg1p, g, l2p](const Params&, double tol, int cap) {
        return integrate(
            [lg1p](double x, double y) {
              double c = x <= 0.5 ? cos_pi(x) / sin_pi(x) : -cos_pi(y) / sin_pi(y);
              return lg1p(x, y) * c;
            },
            0, 1, limits((l2p - 1) / (2 * kPi), (0.5 * (l2p - 1) - g) / kPi), tol, cap);
      });
  add("Q-4.34", "int_0^1 [log G(1+x) - x log Gamma(x)] cot(pi x) dx", {}, "", C, none,
      [lg1p, q431, g, l2p](const Params&, double tol, int cap) {
        return integrate(
            [lg1p, q431](double x, double y) {
              double c = x <= 0.5 ? cos_pi(x) / sin_pi(x) : -cos_pi(y) / sin_pi(y);
              return lg1p(x, y) * c - q431(x, y);
            },
            0, 1, limit_right((0.5 * (l2p - 1) - g) / kPi + g / kPi), tol, cap);
      });
  add("Q-4.35", "int_0^1 log Gamma(1+x) cot(pi x) dx", {}, "", C, none, [g](const Params&, double tol, int cap) {
    return integrate(
        [](double x, double y) {
          double c = x <= 0.5 ? cos_pi(x) / sin_pi(x) : -cos_pi(y) / sin_pi(y);
          return lgam1p(x, y) * c;
        },
        0, 1, limits(-g / kPi, (1 - g) / kPi), tol, cap);
  });
  add("Q-4.36", "int_0^1 x log Gamma(x) psi(x) dx", {}, "", T, none, [](const Params&, double tol, int cap) {
    return integrate([](double x, double y) { return lgam(x, y) * xpsi(x); }, 0, 1, log_left(), tol, cap);
  });
  add("Q-4.36-sq", "int_0^1 log^2 Gamma(x) dx", {}, "", T, none, [](const Params&, double tol, int cap) {
    return integrate([](double x, double y) { double l = lgam(x, y); return l * l; }, 0, 1, log_left(), tol, cap);
  });
  add("Q-4.37", "int_0^1 x log Gamma(x) psi(1-x) dx", {}, "", T, none, [](const Params&, double tol, int cap) {
    return integrate(
        [](double x, double y) {
          if (x <= 0.5) return x * lgam(x, y) * digamma(y).value;
          // psi(y) = psi(1+y) - 1/y and log Gamma(1-y)/y is smooth
          double l = log_gamma_1p(-y).value;
          return x * (l * digamma(1 + y).value - l / y);
        },
        0, 1, log_left(), tol, cap);
  });

  // ---- Q-5.x, semi-infinite family, x carried as parameter
  add("Q-5.4", "int_0^inf [sin(xt)/(t(e^t-1)) - x/(t e^t)] dt", {"x"}, "|x| <= 4", T,
      [](const Params& p) { return p.size() == 1 && std::fabs(p[0]) <= 4; },
      [](const Params& p, double tol, int cap) {
        double x = p[0];
        return semi_inf([x](double t) { return std::sin(x * t) / (t * std::expm1(t)) - x * std::exp(-t) / t; },
                        [x](double t) { return 0.5 * x + t * (x / 12 - x * x * x / 6 - 0.5 * x); }, 1e-4, 1, tol,
                        cap);
      });
  add("Q-5.5", "int_0^inf [cos(xt)/(e^t-1) - 1/(t e^t)] dt", {"x"}, "|x| <= 4", T,
      [](const Params& p) { return p.size() == 1 && std::fabs(p[0]) <= 4; },
      [](const Params& p, double tol, int cap) {
        double x = p[0];
        return semi_inf([x](double t) { return std::cos(x * t) / std::expm1(t) - std::exp(-t) / t; },
                        [x](double t) { return 0.5 + t * (-5.0 / 12 - 0.5 * x * x); }, 1e-4, 1, tol, cap);
      });
  add("Q-5.7", "int_0^inf [1/(e^t-1) - 1/t] cos(xt) dt", {"x"}, "0 < x <= 4", T,
      [](const Params& p) { return p.size() == 1 && p[0] > 0 && p[0] <= 4; },
      [](const Params& p, double tol, int cap) {
        double x = p[0], Tc = 40;
        // beyond Tc the weight is -1/t up to e^{-Tc}; its cosine transform is Ci(x Tc)
        QuadResult r = integrate([x](double t, double) { return a_fn(t) * std::cos(x * t); }, 0, Tc, {}, tol, cap);
        FnEvalResult tail = Ci(x * Tc);
        r.value += tail.value;
        r.abs_err += tail.abs_err + 2 * std::exp(-Tc);
        r.converged = r.converged && r.abs_err <= tol;
        return r;
      });
  for (const char* id : {"Q-5.34", "Q-5.35"}) {
    add(id, "int_0^inf [sinh(xt)/(t(e^t-1)) - x/(t e^t)] dt", {"x"}, "|x| < 1", T,
        [](const Params& p) { return one(p, -1, 1); },
        [](const Params& p, double tol, int cap) {
          double x = p[0];
          // sinh(xt)/(e^t-1) written with decaying exponentials only
          auto f = [x](double t) {
            double d = -std::expm1(-t);
            double sh = 0.5 * (std::exp((x - 1) * t) - std::exp(-(x + 1) * t));
            return sh / (t * d) - x * std::exp(-t) / t;
          };
          return semi_inf(f, [x](double t) { return 0.5 * x + t * (x / 12 + x * x * x / 6 - 0.5 * x); }, 1e-4,
                          1 - std::fabs(x), tol, cap);
        });
  }
  add("Q-5.36", "int_0^inf [cosh(xt)/(e^t-1) - 1/(t e^t)] dt", {"x"}, "|x| < 1", T,
      [](const Params& p) { return one(p, -1, 1); },
      [](const Params& p, double tol, int cap) {
        double x = p[0];
        auto f = [x](double t) {
          double d = -std::expm1(-t);
          double ch = 0.5 * (std::exp((x - 1) * t) + std::exp(-(x + 1) * t));
          return ch / d - std::exp(-t) / t;
        };
        return semi_inf(f, [x](double t) { return 0.5 + t * (-5.0 / 12 + 0.5 * x * x); }, 1e-4, 1 - std::fabs(x),
                        tol, cap);
      });
  add("Q-5.20", "int_0^x pi t cot(pi t) dt", {"x"}, "0 < x < 1", T, [](const Params& p) { return one(p, 0, 1); },
      [](const Params& p, double tol, int cap) {
        return integrate([](double t, double) { return 1 - t * s_cot(t); }, 0, p[0], {}, tol, cap);
      });
  add("Q-5.45-int", "int_0^1 (psi(1+x) + gamma)/x dx", {}, "", T, none, [](const Params&, double tol, int cap) {
    return integrate([](double x, double) { return psig(x) / x; }, 0, 1, {}, tol, cap);
  });
  add("Q-5.45-alt", "int_0^1 (1-x) log(1-x)/(x log x) dx", {}, "", T, none,
      [](const Params&, double tol, int cap) {
        return integrate([](double x, double y) { return y * (x <= 0.5 ? std::log1p(-x) : std::log(y)) / (x * logx(x, y)); }, 0, 1,
                         {{}, {Endpoint::log_singularity, 0}}, tol, cap);
      });
  add("Q-5.49-int2", "int_0^1 [(psi(1-x) + gamma)/x + 2x/(1-x^2)] dx", {}, "", T, none,
      [](const Params&, double tol, int cap) {
        return integrate(
            [](double x, double y) {
              if (x < 0.5) return digamma_1p_gamma(-x).value / x + 1 / y - 1 / (1 + x);
              return psig(y) / x - (2 * x + 1) / (x * (1 + x));
            },
            0, 1, {}, tol, cap);
      });
  add("Q-5.51-int", "int_0^1 [(1/(2x))(1/x - pi cot pi x) - x/(1-x^2)] dx", {}, "", T, none,
      [](const Params&, double tol, int cap) {
        return integrate(
            [](double x, double y) {
              if (x < 0.5) return 0.5 * s_cot(x) / x - x / (y * (1 + x));
              return 0.5 / (x * x) - 0.5 * s_cot(y) / x + (1 + 2 * x) / (2 * x * (1 + x));
            },
            0, 1, {}, tol, cap);
      });
  add("Q-5.52", "int_0^u (psi(1+x) + gamma)/x dx", {"u"}, "0 < u <= 4", T,
      [](const Params& p) { return p.size() == 1 && p[0] > 0 && p[0] <= 4; },
      [](const Params& p, double tol, int cap) {
        return integrate([](double x, double) { return psig(x) / x; }, 0, p[0], {}, tol, cap);
      });
  add("Q-5.53", "int_0^u (1/x)(1/x - pi cot pi x) dx", {"u"}, "0 < u < 1", T,
      [](const Params& p) { return one(p, 0, 1); },
      [](const Params& p, double tol, int cap) {
        return integrate([](double x, double) { return s_cot(x) / x; }, 0, p[0], {}, tol, cap);
      });

  // ---- Q-6.x
  add("Q-6.7.1", "int_0^1 (1 - cos 2 pi x) psi(1-x) dx", {}, "", T, none, [](const Params&, double tol, int cap) {
    return integrate(
        [](double x, double y) {
          double s = sin_pi(std::min(x, y));
          return 2 * s * s * digamma(1 + y).value - 2 * s * (s / y);
        },
        0, 1, {}, tol, cap);
  });
  add("Q-6.7.2-int", "int_0^1 x(1-x)(1 - cos 2 pi x) psi(x) dx", {}, "", T, none,
      [](const Params&, double tol, int cap) {
        return integrate(
            [](double x, double y) {
              double s = sin_pi(std::min(x, y));
              return 2 * s * s * y * xpsi(x);
            },
            0, 1, {}, tol, cap);
      });
  add("Q-6.8", "int_0^1 log Gamma(x) sin(2 pi x) dx", {}, "", T, none, [](const Params&, double tol, int cap) {
    return integrate([](double x, double y) { return lgam(x, y) * sin_pi(2 * x); }, 0, 1, {}, tol, cap);
  });
  add("Q-6.9", "int_0^1 log Gamma(x) sin(2k pi x) dx", {"k"}, "k = 1..8", T,
      [](const Params& p) { return n_ok(p, 1, 8); },
      [](const Params& p, double tol, int cap) {
        double k = p[0];
        return integrate([k](double x, double y) { return lgam(x, y) * sin_pi(2 * k * x); }, 0, 1, {}, tol, cap);
      });
  add("Q-6.14", "int_0^{1/2} psi(1+x) cos^2(pi x) dx", {}, "", T, none, [](const Params&, double tol, int cap) {
    return integrate(
        [](double x, double) {
          double c = cos_pi(x);
          return (psig(x) - kEulerGamma) * c * c;
        },
        0, 0.5, {}, tol, cap);
  });
  auto psisin2 = [](double x, double y) {
    double s = sin_pi(std::min(x, y));
    return digamma(1 + x).value * s * s - s * (s / x);
  };
  for (const char* id : {"Q-6.14.1", "Q-7.13"}) {
    add(id, "int_0^1 psi(x) sin^2(pi x) dx", {}, "", T, none, [psisin2](const Params&, double tol, int cap) {
      return integrate(psisin2, 0, 1, {}, tol, cap);
    });
  }
  add("Q-6.14.2", "int_0^{1/2} psi(x) sin^2(pi x) dx", {}, "", T, none, [psisin2](const Params&, double tol, int cap) {
    return integrate([psisin2](double x, double) { return psisin2(x, 1 - x); }, 0, 0.5, {}, tol, cap);
  });
  add("Q-6.15", "int_0^u sin^2(pi x)/x dx", {"u"}, "0 < u <= 4", T,
      [](const Params& p) { return p.size() == 1 && p[0] > 0 && p[0] <= 4; },
      [](const Params& p, double tol, int cap) {
        return integrate([](double x, double) { double s = sin_pi(x); return s * (s / x); }, 0, p[0], {}, tol, cap);
      });
  add("Q-6.16", "int_0^1 x log Gamma(x) sin(2 pi x) dx", {}, "", T, none, [](const Params&, double tol, int cap) {
    return integrate([](double x, double y) { return x * lgam(x, y) * sin_pi(2 * x); }, 0, 1, {}, tol, cap);
  });
  add("Q-6.17", "int_0^1 log Gamma(x) cos(2k pi x) dx", {"k"}, "k = 1..8", T,
      [](const Params& p) { return n_ok(p, 1, 8); },
      [](const Params& p, double tol, int cap) {
        double k = p[0];
        return integrate([k](double x, double y) { return lgam(x, y) * cos_pi(2 * k * x); }, 0, 1, log_left(), tol,
                         cap);
      });
  add("Q-6.22", "int_0^1 psi(x) sin(pi x) dx", {}, "", T, none, [](const Params&, double tol, int cap) {
    return integrate(
        [](double x, double y) {
          double s = sin_pi(std::min(x, y));
          return digamma(1 + x).value * s - s / x;
        },
        0, 1, {}, tol, cap);
  });
  add("Q-6.24", "int_0^1 x(1-x) cos(pi x) cot(pi x) dx", {}, "", T, none, [](const Params&, double tol, int cap) {
    return integrate(
        [](double x, double y) {
          double c = cos_pi(x);
          return x * y * c * c / sin_pi(std::min(x, y));
        },
        0, 1, {}, tol, cap);
  });
  add("Q-6.34", "int_0^1 psi(x) x(1-x) cos(pi x) dx", {}, "", T, none, [](const Params&, double tol, int cap) {
    return integrate([](double x, double y) { return xpsi(x) * y * cos_pi(x); }, 0, 1, {}, tol, cap);
  });
  add("Q-6.38", "int_0^1 x(1-x) cos(pi x) psi(x/2) dx", {}, "", T, none, [](const Params&, double tol, int cap) {
    return integrate([](double x, double y) { return (x * digamma(1 + 0.5 * x).value - 2) * y * cos_pi(x); }, 0, 1,
                     {}, tol, cap);
  });
  add("Q-6.40", "int_0^1 x(1-x) psi(x/2) dx", {}, "", T, none, [](const Params&, double tol, int cap) {
    return integrate([](double x, double y) { return (x * digamma(1 + 0.5 * x).value - 2) * y; }, 0, 1, {}, tol,
                     cap);
  });

  // ---- Q-7.x
  auto psisin = [](double x) {
    double s = sin_pi(x);
    return digamma(1 + x).value * s - s / x;
  };
  add("Q-7.15", "int_0^u psi(x) sin(pi x) dx", {"u"}, "0 < u <= 1", T,
      [](const Params& p) { return p.size() == 1 && p[0] > 0 && p[0] <= 1; },
      [psisin](const Params& p, double tol, int cap) {
        return integrate([psisin](double x, double) { return psisin(x); }, 0, p[0], {}, tol, cap);
      });
  add("Q-7.17", "int_0^{1/2} psi(x) sin(pi x) dx", {}, "", T, none, [psisin](const Params&, double tol, int cap) {
    return integrate([psisin](double x, double) { return psisin(x); }, 0, 0.5, {}, tol, cap);
  });

  // ---- truncated divergent integrals for the registry probes
  add("Q-probe-lgcot", "int_eps^{1-eps} log Gamma(x) cot(pi x) dx", {"eps"}, "0 < eps < 1/2", C,
      [](const Params& p) { return one(p, 0, 0.5); },
      [](const Params& p, double tol, int cap) {
        return integrate([](double x, double) { return lgam(x, 1 - x) * cot_pi(x); }, p[0], 1 - p[0], {}, tol, cap);
      });
  add("Q-probe-lxcot", "int_eps^{1-eps} log x cot(pi x) dx", {"eps"}, "0 < eps < 1/2", C,
      [](const Params& p) { return one(p, 0, 0.5); },
      [](const Params& p, double tol, int cap) {
        return integrate([](double x, double) { return std::log(x) * cot_pi(x); }, p[0], 1 - p[0], {}, tol, cap);
      });

  std::sort(v.begin(), v.end(), [](const IntegralEntry& a, const IntegralEntry& b) { return a.id < b.id; });
  return v;
}

}  // namespace

const std::vector<IntegralEntry>& integral_entries() {
  static const std::vector<IntegralEntry> v = build();
  return v;
}

const IntegralEntry& integral_entry(const std::string& id) {
  for (const IntegralEntry& e : integral_entries())
    if (e.id == id) return e;
  throw Error(ErrorKind::unknown_id, "unknown integral id: " + id);
}

QuadResult integral_catalog(const std::string& id, const std::vector<double>& params, double tol, int level_cap) {
  const IntegralEntry& e = integral_entry(id);
  if (!e.in_domain(params)) throw Error(ErrorKind::domain, id + ": parameters outside domain (" + e.domain + ")");
  for (double p : params) require_finite(p, id.c_str());
  return e.eval(params, tol > 0 ? tol : e.default_tol, level_cap);
}

}  // namespace lgi::quad
