#pragma once

// Scalar special-function kernels. Every function returns its value with an
// absolute-error estimate. The estimates are engineering bounds (truncation
// bound plus a roundoff term), tested rather than proven.

#include "lgi/types.hpp"

namespace lgi {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kEulerGamma = 0.57721566490153286061;

struct ConstantsCache {
  double gamma = 0;            // Euler's constant
  double gamma1 = 0;           // first Stieltjes constant
  double log_2pi = 0;
  double zeta2 = 0;
  double zeta3 = 0;
  double zeta_prime_2 = 0;
  double zeta_prime2_2 = 0;    // second derivative at 2
  double zeta_prime_neg1 = 0;  // derived from zeta_prime_2
  double log_A = 0;            // 1/12 - zeta_prime_neg1
  double catalan = 0;
};

// Built on first use, read-only afterwards.
const ConstantsCache& constants();

FnEvalResult log_gamma(double x);
// log Gamma(1+z) for |z| <= 1/2, accurate relative to the (small) value.
FnEvalResult log_gamma_1p(double z);

CplxEvalResult digamma(Cplx z);
FnEvalResult digamma(double x);
// psi(1+z) + gamma for |z| <= 1/2 without cancellation.
FnEvalResult digamma_1p_gamma(double z);

FnEvalResult polygamma(int k, double x);

FnEvalResult lambda_fn(double v);
struct LambdaRoutes {
  FnEvalResult series;
  FnEvalResult via_digamma;
};
LambdaRoutes lambda_routes(double v);
// d/dv Lambda(v), five-point difference on the digamma route.
FnEvalResult lambda_prime(double v);

struct SiCi {
  FnEvalResult sine_int;  // Si
  FnEvalResult ci;        // Ci, only filled for x > 0
};
SiCi sici(double x);
FnEvalResult Si(double x);
FnEvalResult Ci(double x);
// si(x) = Si(x) - pi/2
FnEvalResult si(double x);

FnEvalResult exp_integral(double x);

enum class ZetaKind { zeta, hurwitz, zeta_prime, zeta_prime2_at_2, zeta_prime_neg1 };
FnEvalResult zeta_family(ZetaKind kind, double s = 0.0, double a = 1.0);
FnEvalResult zeta(double s);
FnEvalResult hurwitz_zeta(double s, double a);
FnEvalResult zeta_prime(double s);
// zeta(k) - 1 for integer k >= 2, tabulated.
double zeta_int_m1(int k);

FnEvalResult stieltjes_gamma1();

FnEvalResult log_barnes_g(double x);

FnEvalResult clausen_cl2(double theta);

FnEvalResult bernoulli_poly(int n, double x);
double bernoulli_number(int n);  // n <= 12

// Small exact helpers shared by the catalogs.
double sin_pi(double x);
double cos_pi(double x);
double cot_pi(double x);
double harmonic(long n);

}  // namespace lgi
