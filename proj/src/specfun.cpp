#include "lgi/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "lgi/kernels.hpp"

namespace lgi {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kLog2Pi = 1.83787706640934548356;

// B_{2k}, k = 0..10
constexpr std::array<double, 11> kB2k = {
    1.0,           1.0 / 6,          -1.0 / 30,       1.0 / 42,
    -1.0 / 30,     5.0 / 66,         -691.0 / 2730,   7.0 / 6,
    -3617.0 / 510, 43867.0 / 798,    -174611.0 / 330,
};

double factorial(int n) {
  double f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void check_arg(double x, const char* fn) {
  if (!std::isfinite(x))
    throw Error(ErrorKind::domain, std::string(fn) + ": non-finite argument");
}

// Truncated Taylor jet in s: value, first and second derivative.
struct Jet {
  double v = 0, d1 = 0, d2 = 0;
};
Jet operator+(Jet a, Jet b) { return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2}; }
Jet operator-(Jet a, Jet b) { return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2}; }
Jet operator*(double k, Jet a) { return {k * a.v, k * a.d1, k * a.d2}; }
Jet operator*(Jet a, Jet b) {
  return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2 * a.d1 * b.d1 + a.v * b.d2};
}
Jet recip(Jet b) {
  double r = 1 / b.v;
  return {r, -b.d1 * r * r, 2 * b.d1 * b.d1 * r * r * r - b.d2 * r * r};
}
// c^(-s) for constant c > 0
Jet pow_neg(double c, Jet s) {
  double L = std::log(c);
  double e = std::pow(c, -s.v);
  return {e, -L * s.d1 * e, e * (L * L * s.d1 * s.d1 - L * s.d2)};
}

struct JetErr {
  Jet val;
  Jet err;
};

// Euler-Maclaurin for sum_{n>=0} (n+a)^(-s) with derivatives in s.
JetErr hurwitz_jet(double s0, double a) {
  const Jet s{s0, 1, 0};
  const int N = 24;
  kernels::Accumulator v, d1, d2;
  for (int n = 0; n < N; ++n) {
    Jet t = pow_neg(n + a, s);
    v.add(t.v);
    d1.add(t.d1);
    d2.add(t.d2);
  }
  const double x0 = N + a;
  Jet sm1 = s - Jet{1, 0, 0};
  Jet tail = pow_neg(x0, sm1) * recip(sm1);
  Jet xs = pow_neg(x0, s);
  tail = tail + 0.5 * xs;
  Jet poch = s;
  double xpow = 1.0 / x0;  // x0^{-(2k-1)}
  Jet last{};
  for (int k = 1; k <= 10; ++k) {
    Jet term = (kB2k[k] / factorial(2 * k) * xpow) * (poch * xs);
    tail = tail + term;
    last = term;
    poch = poch * Jet{s0 + 2 * k - 1, 1, 0} * Jet{s0 + 2 * k, 1, 0};
    xpow /= x0 * x0;
  }
  Jet total{v.value() + tail.v, d1.value() + tail.d1, d2.value() + tail.d2};
  Jet err{std::fabs(last.v) + 8 * kEps * (v.abs_sum() + std::fabs(tail.v)),
          std::fabs(last.d1) + 8 * kEps * (d1.abs_sum() + std::fabs(tail.d1)),
          std::fabs(last.d2) + 8 * kEps * (d2.abs_sum() + std::fabs(tail.d2))};
  return {total, err};
}

constexpr int kZetaTable = 130;

struct ZetaTable {
  std::array<double, kZetaTable + 1> m1{};  // zeta(k) - 1
  ZetaTable() {
    for (int k = 2; k <= kZetaTable; ++k) m1[k] = hurwitz_jet(k, 2.0).val.v;
  }
};

const ZetaTable& zeta_table() {
  static const ZetaTable t;
  return t;
}

// sum_{k>=2} c_k (zeta(k)-1) z^k, stopping once terms are negligible.
template <typename Coef>
double zeta_m1_series(double z, Coef coef, double* abs_sum) {
  kernels::Accumulator acc;
  double zk = z;
  for (int k = 2; k <= kZetaTable; ++k) {
    zk *= z;
    double t = coef(k) * zeta_int_m1(k) * zk;
    acc.add(t);
    if (std::fabs(t) < 1e-18 * std::fabs(acc.value()) + 1e-300) break;
  }
  if (abs_sum) *abs_sum = acc.abs_sum();
  return acc.value();
}

double log_gamma_asym(double x, double* err) {
  double x2 = x * x;
  double s = 0, xp = x;
  for (int k = 1; k <= 8; ++k) {
    s += kB2k[k] / (2.0 * k * (2 * k - 1) * xp);
    xp *= x2;
  }
  double main = (x - 0.5) * std::log(x) - x + 0.5 * kLog2Pi;
  *err = 4 * kEps * (std::fabs(main) + std::fabs((x - 0.5) * std::log(x)) + x) +
         std::fabs(kB2k[9] / (18.0 * 17 * xp));
  return main + s;
}

double digamma_asym(double x) {
  double x2 = x * x, xp = x2, s = 0;
  for (int k = 1; k <= 7; ++k) {
    s += kB2k[k] / (2.0 * k * xp);
    xp *= x2;
  }
  return std::log(x) - 0.5 / x - s;
}

Cplx digamma_asym(Cplx z) {
  Cplx z2 = z * z, zp = z2, s = 0;
  for (int k = 1; k <= 7; ++k) {
    s += kB2k[k] / (2.0 * k * zp);
    zp *= z2;
  }
  return std::log(z) - 0.5 / z - s;
}

}  // namespace

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::domain: return "domain error";
    case ErrorKind::pole: return "pole";
    case ErrorKind::overflow: return "overflow";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::inconsistency: return "inconsistency";
    case ErrorKind::evaluation: return "evaluation error";
    case ErrorKind::unknown_id: return "unknown id";
    case ErrorKind::misuse: return "misuse";
  }
  return "error";
}

void require_finite(double x, const char* what) { check_arg(x, what); }

double zeta_int_m1(int k) {
  if (k < 2) throw Error(ErrorKind::domain, "zeta_int_m1: k < 2");
  if (k > kZetaTable) return std::pow(2.0, -k) + std::pow(3.0, -k);
  return zeta_table().m1[k];
}

double sin_pi(double x) {
  double r = x - 2 * std::round(x / 2);  // r in [-1, 1]
  if (r == 0 || r == 1 || r == -1) return 0.0;
  if (r > 0.5) r = 1 - r;
  if (r < -0.5) r = -1 - r;
  return std::sin(kPi * r);
}

double cos_pi(double x) { return sin_pi(x + 0.5); }

double cot_pi(double x) {
  double r = x - std::round(x);  // r in [-1/2, 1/2]
  if (r == 0) throw Error(ErrorKind::pole, "cot_pi: integer argument");
  return std::cos(kPi * r) / std::sin(kPi * r);
}

double harmonic(long n) {
  kernels::Accumulator acc;
  for (long k = n; k >= 1; --k) acc.add(1.0 / k);
  return acc.value();
}

// ---------------------------------------------------------------- log gamma

FnEvalResult log_gamma_1p(double z) {
  check_arg(z, "log_gamma_1p");
  if (std::fabs(z) > 0.5) return log_gamma(1 + z);
  double a = 0;
  double s = zeta_m1_series(-z, [](int k) { return 1.0 / k; }, &a);
  double l1 = std::log1p(z);
  double lin = z * (1 - kEulerGamma);
  double v = -l1 + lin + s;
  return {v, 4 * kEps * (std::fabs(l1) + std::fabs(lin) + a)};
}

FnEvalResult log_gamma(double x) {
  check_arg(x, "log_gamma");
  if (x <= 0) throw Error(ErrorKind::domain, "log_gamma: x <= 0");
  if (x > 2.5e305) throw Error(ErrorKind::overflow, "log_gamma: overflow");
  if (x == 1.0 || x == 2.0) return {0.0, 0.0};
  if (x < 0.5) {
    FnEvalResult r = log_gamma_1p(x);
    double lx = std::log(x);
    return {r.value - lx, r.abs_err + 2 * kEps * std::fabs(lx)};
  }
  if (x <= 1.5) return log_gamma_1p(x - 1);
  if (x <= 2.5) {
    double z = x - 2, a = 0;
    double s = zeta_m1_series(-z, [](int k) { return 1.0 / k; }, &a);
    double lin = z * (1 - kEulerGamma);
    return {lin + s, 4 * kEps * (std::fabs(lin) + a)};
  }
  if (x < 8) {
    double y = x, prod = 1;
    while (y > 2.5) {
      y -= 1;
      prod *= y;
    }
    FnEvalResult base = log_gamma(y);
    double lp = std::log(prod);
    return {base.value + lp, base.abs_err + 4 * kEps * std::fabs(lp)};
  }
  double err = 0;
  double v = log_gamma_asym(x, &err);
  return {v, err};
}

// ---------------------------------------------------------------- digamma

FnEvalResult digamma_1p_gamma(double z) {
  check_arg(z, "digamma_1p_gamma");
  if (std::fabs(z) > 0.5) {
    FnEvalResult r = digamma(1 + z);
    return {r.value + kEulerGamma, r.abs_err + kEps};
  }
  // sum_{k>=2} (-1)^k (zeta(k)-1) z^{k-1} written as a series in -z
  double a = 0;
  double s = z == 0 ? 0.0 : zeta_m1_series(-z, [](int) { return 1.0; }, &a) / z;
  double lead = z / (1 + z);
  return {lead + s, 4 * kEps * (std::fabs(lead) + std::fabs(a / (z == 0 ? 1 : z)))};
}

FnEvalResult digamma(double x) {
  check_arg(x, "digamma");
  if (x <= 0 && x == std::floor(x)) throw Error(ErrorKind::pole, "digamma: pole at non-positive integer");
  if (x < 0) {
    FnEvalResult r = digamma(1 - x);
    double c = kPi * cot_pi(x);
    return {r.value - c, r.abs_err + 4 * kEps * std::fabs(c)};
  }
  kernels::Accumulator acc;
  double y = x;
  while (y < 8) {
    acc.add(-1.0 / y);
    y += 1;
  }
  double a = digamma_asym(y);
  acc.add(a);
  double v = acc.value();
  double trunc = std::fabs(kB2k[8] / (16.0 * std::pow(y, 16)));
  return {v, 4 * kEps * (acc.abs_sum() + std::fabs(v)) + trunc};
}

CplxEvalResult digamma(Cplx z) {
  check_arg(z.real(), "digamma");
  check_arg(z.imag(), "digamma");
  if (z.imag() == 0) {
    FnEvalResult r = digamma(z.real());
    return {Cplx(r.value, 0.0), r.abs_err};
  }
  Cplx acc = 0;
  double mag = 0;
  while (z.real() < 1 || std::abs(z) < 8) {
    Cplx t = 1.0 / z;
    acc -= t;
    mag += std::abs(t);
    z += 1.0;
  }
  Cplx a = digamma_asym(z);
  Cplx v = acc + a;
  double trunc = std::fabs(kB2k[8]) / (16.0 * std::pow(std::abs(z), 16));
  return {v, 8 * kEps * (mag + std::abs(a)) + trunc};
}

FnEvalResult polygamma(int k, double x) {
  check_arg(x, "polygamma");
  if (k != 1 && k != 2) throw Error(ErrorKind::unsupported, "polygamma: order must be 1 or 2");
  if (x <= 0) throw Error(ErrorKind::domain, "polygamma: x <= 0");
  FnEvalResult h = hurwitz_zeta(k + 1.0, x);
  double f = k == 1 ? 1.0 : -2.0;
  return {f * h.value, std::fabs(f) * h.abs_err};
}

// ---------------------------------------------------------------- Lambda

LambdaRoutes lambda_routes(double v) {
  check_arg(v, "lambda_fn");
  LambdaRoutes out;
  CplxEvalResult p = digamma(Cplx(1.0, v));
  out.via_digamma = {-p.value.real(), p.abs_err};

  // Direct sum to N, then the Euler-Maclaurin tail with exact integral
  // and derivative of f(x) = x/(x^2+v^2) - log(1+1/x).
  const long N = 10000;
  const double v2 = v * v;
  kernels::Accumulator acc;
  for (long j = N - 1; j >= 1; --j) {
    double jd = static_cast<double>(j);
    acc.add(jd / (jd * jd + v2) - std::log1p(1.0 / jd));
  }
  const double n = static_cast<double>(N);
  double integral = (n + 1) * std::log1p(1 / n) - 1 - 0.5 * std::log1p(v2 / (n * n));
  double fN = n / (n * n + v2) - std::log1p(1 / n);
  double fpN = (v2 - n * n) / ((n * n + v2) * (n * n + v2)) + 1 / (n * (n + 1));
  double tail = integral + fN / 2 - fpN / 12;
  double value = acc.value() + tail;
  // next Euler-Maclaurin term is f'''(N)/720 with f''' ~ 9/N^5
  double trunc = 9.0 / (720.0 * std::pow(n, 5)) * (1 + v2);
  out.series = {value, trunc + 10 * kEps * (acc.abs_sum() + 1.0)};
  return out;
}

FnEvalResult lambda_fn(double v) {
  LambdaRoutes r = lambda_routes(v);
  double budget = r.series.abs_err + r.via_digamma.abs_err;
  double diff = std::fabs(r.series.value - r.via_digamma.value);
  if (diff > 10 * budget)
    throw Error(ErrorKind::inconsistency, "lambda_fn: series and digamma routes disagree");
  double err = std::max(r.series.abs_err, r.via_digamma.abs_err);
  if (std::fabs(v) < 0.5) {
    // gamma + sum (-1)^n zeta(2n+1) v^{2n}, exact at v = 0
    double v2 = v * v, p = 1, s = 0;
    for (int n = 1; n < 60; ++n) {
      p *= -v2;
      s += p * (1 + zeta_int_m1(2 * n + 1));
      if (std::fabs(p) < 1e-18) break;
    }
    return {constants().gamma + s, 4e-16 * (1 + std::fabs(s))};
  }
  return {r.via_digamma.value, err};
}

FnEvalResult lambda_prime(double v) {
  auto L = [](double t) { return -digamma(Cplx(1.0, t)).value.real(); };
  const double h = 1e-3;
  double d = (-L(v + 2 * h) + 8 * L(v + h) - 8 * L(v - h) + L(v - 2 * h)) / (12 * h);
  double d2 = (-L(v + 4 * h) + 8 * L(v + 2 * h) - 8 * L(v - 2 * h) + L(v - 4 * h)) / (24 * h);
  return {d, std::fabs(d - d2) + 1e-12};
}

// ---------------------------------------------------------------- Si, Ci

SiCi sici(double x) {
  check_arg(x, "sici");
  if (x < 0) throw Error(ErrorKind::domain, "sici: x < 0");
  SiCi out;
  if (x == 0) {
    out.sine_int = {0.0, 0.0};
    out.ci = {-std::numeric_limits<double>::infinity(), 0.0};
    return out;
  }
  if (x <= 4) {
    kernels::Accumulator s, c;
    double x2 = x * x, term = x;  // x^{2k+1}/(2k+1)!
    for (int k = 0; k < 40; ++k) {
      s.add((k % 2 ? -1 : 1) * term / (2 * k + 1));
      if (k > 0) {
        // x^{2k}/(2k)! from the previous odd term times (2k+1)/x
        double even = term * (2 * k + 1) / x;
        c.add((k % 2 ? -1 : 1) * even / (2 * k));
      }
      term *= x2 / ((2 * k + 2) * (2 * k + 3));
      if (term < 1e-20) break;
    }
    double lx = std::log(x);
    out.sine_int = {s.value(), 4 * kEps * s.abs_sum() + 1e-17};
    out.ci = {kEulerGamma + lx + c.value(), 4 * kEps * (c.abs_sum() + std::fabs(lx) + 1)};
    return out;
  }
  // Continued fraction for E1(ix), modified Lentz.
  const double tiny = 1e-300;
  Cplx b(1.0, x), c = 1.0 / tiny, d = 1.0 / b, h = d;
  for (int i = 2; i < 100000; ++i) {
    double a = -double(i - 1) * (i - 1);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    Cplx del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  h *= Cplx(std::cos(x), -std::sin(x));
  double siv = kPi / 2 + h.imag();
  out.sine_int = {siv, 8 * kEps * (1 + std::abs(h))};
  out.ci = {-h.real(), 8 * kEps * std::abs(h) + 1e-17};
  return out;
}

FnEvalResult Si(double x) { return sici(x).sine_int; }

FnEvalResult Ci(double x) {
  if (x == 0) throw Error(ErrorKind::domain, "Ci: logarithmic singularity at 0");
  return sici(x).ci;
}

FnEvalResult si(double x) {
  FnEvalResult s = Si(x);
  return {s.value - kPi / 2, s.abs_err + kEps};
}

FnEvalResult exp_integral(double x) {
  check_arg(x, "exp_integral");
  if (x >= 0) throw Error(ErrorKind::domain, "exp_integral: only x < 0 supported");
  double y = -x;
  if (y <= 1) {
    kernels::Accumulator acc;
    double term = 1;
    for (int n = 1; n < 40; ++n) {
      term *= -y / n;
      acc.add(term / n);
    }
    double ly = std::log(y);
    return {kEulerGamma + ly + acc.value(), 4 * kEps * (1 + std::fabs(ly) + acc.abs_sum())};
  }
  const double tiny = 1e-300;
  double b = y + 1, c = 1 / tiny, d = 1 / b, h = d;
  for (int i = 1; i < 100000; ++i) {
    double a = -double(i) * i;
    b += 2;
    d = 1 / (a * d + b);
    c = b + a / c;
    double del = c * d;
    h *= del;
    if (std::fabs(del - 1) < kEps) break;
  }
  double e1 = h * std::exp(-y);
  return {-e1, 16 * kEps * e1 + 1e-300};
}

// ---------------------------------------------------------------- zeta

FnEvalResult hurwitz_zeta(double s, double a) {
  check_arg(s, "hurwitz_zeta");
  check_arg(a, "hurwitz_zeta");
  if (s <= 1) throw Error(ErrorKind::domain, "hurwitz_zeta: s <= 1");
  if (a <= 0) throw Error(ErrorKind::domain, "hurwitz_zeta: a <= 0");
  JetErr j = hurwitz_jet(s, a);
  return {j.val.v, j.err.v};
}

FnEvalResult zeta(double s) {
  check_arg(s, "zeta");
  if (s <= 1) throw Error(ErrorKind::domain, "zeta: s <= 1");
  // 1 + zeta(s, 2) keeps the small part accurate for large s
  JetErr j = hurwitz_jet(s, 2.0);
  return {1.0 + j.val.v, j.err.v + kEps};
}

FnEvalResult zeta_prime(double s) {
  check_arg(s, "zeta_prime");
  if (s <= 1) throw Error(ErrorKind::domain, "zeta_prime: s <= 1");
  JetErr j = hurwitz_jet(s, 2.0);  // log 1 = 0, so the n = 1 term drops out
  return {j.val.d1, j.err.d1};
}

FnEvalResult zeta_family(ZetaKind kind, double s, double a) {
  switch (kind) {
    case ZetaKind::zeta: return zeta(s);
    case ZetaKind::hurwitz: return hurwitz_zeta(s, a);
    case ZetaKind::zeta_prime: return zeta_prime(s);
    case ZetaKind::zeta_prime2_at_2: {
      JetErr j = hurwitz_jet(2.0, 2.0);
      return {j.val.d2, j.err.d2};
    }
    case ZetaKind::zeta_prime_neg1: {
      FnEvalResult zp2 = zeta_prime(2.0);
      double v = (1 - kEulerGamma - kLog2Pi) / 12 + zp2.value / (2 * kPi * kPi);
      return {v, zp2.abs_err / (2 * kPi * kPi) + 4 * kEps};
    }
  }
  throw Error(ErrorKind::unsupported, "zeta_family: unknown kind");
}

// ---------------------------------------------------------------- gamma_1

FnEvalResult stieltjes_gamma1() {
  // gamma_1 = S_N - log^2(N)/2 - f(N)/2 - sum_j B_2j/(2j)! f^(2j-1)(N),
  // f(x) = log x / x, f^(m)(x) = (-1)^m m! (log x - H_m) / x^(m+1).
  const long N = 1000;
  kernels::Accumulator acc;
  for (long k = N; k >= 2; --k) acc.add(std::log(double(k)) / k);
  const double n = double(N), ln = std::log(n);
  double corr = -0.5 * ln * ln - 0.5 * ln / n;
  double last = 0;
  for (int j = 1; j <= 6; ++j) {
    int m = 2 * j - 1;
    double Hm = 0;
    for (int i = 1; i <= m; ++i) Hm += 1.0 / i;
    double fm = -factorial(m) * (ln - Hm) / std::pow(n, m + 1);
    last = kB2k[j] / factorial(2 * j) * fm;
    corr -= last;
  }
  return {acc.value() + corr, std::fabs(last) + 10 * kEps * (acc.abs_sum() + 0.5 * ln * ln)};
}

// ---------------------------------------------------------------- constants

const ConstantsCache& constants() {
  static const ConstantsCache c = [] {
    ConstantsCache k;
    k.gamma = kEulerGamma;
    k.log_2pi = kLog2Pi;
    k.zeta2 = kPi * kPi / 6;
    k.zeta3 = zeta(3.0).value;
    k.zeta_prime_2 = zeta_prime(2.0).value;
    k.zeta_prime2_2 = zeta_family(ZetaKind::zeta_prime2_at_2).value;
    k.zeta_prime_neg1 = zeta_family(ZetaKind::zeta_prime_neg1).value;
    k.log_A = 1.0 / 12 - k.zeta_prime_neg1;
    k.catalan = (hurwitz_zeta(2, 0.25).value - hurwitz_zeta(2, 0.75).value) / 16;
    k.gamma1 = stieltjes_gamma1().value;
    return k;
  }();
  return c;
}

// ---------------------------------------------------------------- Barnes G

FnEvalResult log_barnes_g(double x) {
  check_arg(x, "log_barnes_g");
  if (x <= 0) throw Error(ErrorKind::domain, "log_barnes_g: x <= 0");
  if (x > 4) throw Error(ErrorKind::domain, "log_barnes_g: x > 4");
  if (x < 0.5) {
    FnEvalResult up = log_barnes_g(x + 1);
    FnEvalResult lg = log_gamma(x);
    return up - lg;
  }
  if (x > 1.5) {
    FnEvalResult down = log_barnes_g(x - 1);
    FnEvalResult lg = log_gamma(x - 1);
    return down + lg;
  }
  double t = x - 1;
  if (t == 0) return {0.0, 0.0};
  double a = 0;
  // sum_{n>=2} (-1)^n (zeta(n)-1)/(n+1) t^{n+1} = t * sum (zeta(n)-1)/(n+1) (-t)^n
  double s = t * zeta_m1_series(-t, [](int k) { return 1.0 / (k + 1); }, &a);
  double lin = 0.5 * (kLog2Pi - 1) * t;
  double quad = -0.5 * (1 + kEulerGamma) * t * t;
  double lg = std::log1p(t) - t + 0.5 * t * t;
  double v = lin + quad + lg + s;
  return {v, 4 * kEps * (std::fabs(lin) + std::fabs(quad) + std::fabs(t) + std::fabs(t * a))};
}

// ---------------------------------------------------------------- Clausen

FnEvalResult clausen_cl2(double theta) {
  check_arg(theta, "clausen_cl2");
  double r = std::remainder(theta, 2 * kPi);  // in [-pi, pi]
  double sign = r < 0 ? -1 : 1;
  r = std::fabs(r);
  if (r == 0) return {0.0, 0.0};
  // Cl2 = r - r log r + sum_k zeta(2k) / (k (2k+1)) r^{2k+1} / (2 pi)^{2k}
  kernels::Accumulator acc;
  acc.add(r);
  acc.add(-r * std::log(r));
  double q = r / (2 * kPi), q2 = q * q, qp = 1.0;
  for (int k = 1; k <= 60; ++k) {
    qp *= q2;
    double term = (1.0 + zeta_int_m1(2 * k)) / (k * (2.0 * k + 1)) * r * qp;
    acc.add(term);
    if (term < 1e-19) break;
  }
  // periodic reduction loses about |theta| * eps of absolute accuracy
  return {sign * acc.value(), 4 * kEps * acc.abs_sum() + kEps * std::fabs(theta)};
}

// ---------------------------------------------------------------- Bernoulli

double bernoulli_number(int n) {
  static constexpr std::array<std::array<double, 2>, 13> B = {{
      {1, 1}, {-1, 2}, {1, 6}, {0, 1}, {-1, 30}, {0, 1}, {1, 42},
      {0, 1}, {-1, 30}, {0, 1}, {5, 66}, {0, 1}, {-691, 2730},
  }};
  if (n < 0 || n > 12) throw Error(ErrorKind::unsupported, "bernoulli_number: n > 12");
  return B[n][0] / B[n][1];
}

FnEvalResult bernoulli_poly(int n, double x) {
  check_arg(x, "bernoulli_poly");
  if (n < 0 || n > 12) throw Error(ErrorKind::unsupported, "bernoulli_poly: n > 12");
  // Horner in x over coefficients C(n,k) B_k of x^{n-k}
  double v = 0, mag = 0, ax = std::fabs(x);
  double binom = 1;  // C(n,k)
  std::array<double, 13> coef{};
  for (int k = 0; k <= n; ++k) {
    coef[k] = binom * bernoulli_number(k);
    binom = binom * (n - k) / (k + 1);
  }
  for (int k = 0; k <= n; ++k) {
    v = v * x + coef[k];
    mag = mag * ax + std::fabs(coef[k]);
  }
  return {v, 4 * (n + 1) * kEps * mag};
}

}  // namespace lgi
