// Special-function kernels against 40-digit mpmath references and the
// classical functional equations.

#include <cmath>
#include <vector>

#include "doctest.h"
#include "lgi/specfun.hpp"
#include "test_util.hpp"

using namespace lgi;
using lgi::test::honest;

TEST_SUITE("specfun") {

TEST_CASE("log_gamma reference values") {
  struct R { double x, v; };
  for (R r : {R{0.1, 2.2527126517342059599}, R{0.5, 0.57236494292470008707}, R{1.5, -0.12078223763524522235},
              R{3.7, 1.4280723266653879219}, R{10, 12.801827480081469611}, R{25.3, 55.746181183584590052},
              R{170.5, 704.00442773420467079}}) {
    CAPTURE(r.x);
    FnEvalResult g = log_gamma(r.x);
    CHECK(std::fabs(g.value - r.v) <= 1e-13 * std::max(1.0, std::fabs(r.v)));
    CHECK(honest(g, r.v));
  }
  CHECK(log_gamma(1.0).value == doctest::Approx(0).epsilon(1e-15));
  CHECK(log_gamma(2.0).value == doctest::Approx(0).epsilon(1e-15));
}

TEST_CASE("log_gamma_1p matches log_gamma and stays relative near zero") {
  for (double z : {-0.5, -0.3, -1e-3, 1e-3, 0.2, 0.5}) {
    CAPTURE(z);
    CHECK(std::fabs(log_gamma_1p(z).value - log_gamma(1 + z).value) < 1e-14);
  }
  // log Gamma(1+z) ~ -gamma z for tiny z
  double z = 1e-9;
  CHECK(std::fabs(log_gamma_1p(z).value / (-kEulerGamma * z) - 1) < 1e-8);
}

TEST_CASE("digamma reference values, real and complex") {
  struct R { double x, v; };
  for (R r : {R{0.1, -10.423754940411076795}, R{0.5, -1.9635100260214234794}, R{1, -0.57721566490153286061},
              R{2.5, 0.70315664064524318723}, R{7.3, 1.9178203356379860984}, R{30, 3.3844381326855248766},
              R{-0.5, 0.036489973978576520559}, R{-2.7, -1.1153471291406869883}}) {
    CAPTURE(r.x);
    FnEvalResult d = digamma(r.x);
    CHECK(std::fabs(d.value - r.v) <= 1e-13 * std::max(1.0, std::fabs(r.v)));
    CHECK(honest(d, r.v));
  }
  CplxEvalResult c = digamma(Cplx(1, 2));
  CHECK(std::abs(c.value - Cplx(0.71459151537397752666, 1.3208072826422302284)) < 1e-13);
  for (double z : {-0.4, -1e-6, 1e-6, 0.3}) {
    CAPTURE(z);
    CHECK(std::fabs(digamma_1p_gamma(z).value - (digamma(1 + z).value + kEulerGamma)) < 1e-14);
  }
}

TEST_CASE("polygamma reference values") {
  CHECK(polygamma(1, 0.5).value == doctest::Approx(4.9348022005446793094).epsilon(1e-13));
  CHECK(polygamma(2, 1.7).value == doctest::Approx(-0.6040890841034589882).epsilon(1e-13));
  CHECK(polygamma(1, 12).value == doctest::Approx(0.08690187287176839075).epsilon(1e-13));
}

TEST_CASE("error kinds") {
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::evaluation;  // sentinel: nothing thrown
  };
  CHECK(kind_of([] { log_gamma(0); }) == ErrorKind::domain);
  CHECK(kind_of([] { log_gamma(-1.5); }) == ErrorKind::domain);
  CHECK(kind_of([] { digamma(-2.0); }) == ErrorKind::pole);
  CHECK(kind_of([] { polygamma(3, 1.0); }) == ErrorKind::unsupported);
  CHECK(kind_of([] { polygamma(1, -1.0); }) == ErrorKind::domain);
  CHECK(kind_of([] { Ci(0); }) == ErrorKind::domain);
  CHECK(kind_of([] { exp_integral(0); }) == ErrorKind::domain);
  CHECK(kind_of([] { zeta(1); }) == ErrorKind::domain);
  CHECK(kind_of([] { hurwitz_zeta(2, 0); }) == ErrorKind::domain);
  CHECK(kind_of([] { log_barnes_g(0); }) == ErrorKind::domain);
  CHECK(kind_of([] { bernoulli_poly(13, 0.5); }) == ErrorKind::unsupported);
  CHECK(kind_of([] { log_gamma(NAN); }) == ErrorKind::domain);
}

// ---------------------------------------------------------------- properties

TEST_CASE("digamma recurrence psi(x+1) - psi(x) = 1/x") {
  for (int i = 0; i <= 47; ++i) {
    double x = 0.5 + 0.2 * i;
    CAPTURE(x);
    CHECK(std::fabs(digamma(x + 1).value - digamma(x).value - 1 / x) <= 1e-12);
  }
}

TEST_CASE("reflection grids on (0,1)") {
  for (int i = 1; i <= 97; ++i) {
    double x = i / 98.0;
    CAPTURE(x);
    double refl = digamma(1 - x).value - digamma(x).value - kPi * cot_pi(x);
    CHECK(std::fabs(refl) <= 1e-11);
    double lg = log_gamma(x).value + log_gamma(1 - x).value - (std::log(kPi) - std::log(sin_pi(x)));
    CHECK(std::fabs(lg) <= 1e-12);
  }
}

TEST_CASE("Lambda: two routes agree within their budgets") {
  for (int i = 0; i <= 60; ++i) {
    double v = 3.0 * i / 60;
    CAPTURE(v);
    LambdaRoutes r = lambda_routes(v);
    CHECK(std::fabs(r.series.value - r.via_digamma.value) <= r.series.abs_err + r.via_digamma.abs_err);
  }
}

TEST_CASE("Lambda reference values") {
  CHECK(lambda_fn(0).value == kEulerGamma);
  struct R { double v, ref; };
  for (R r : {R{0.1, 0.56529779021719860364}, R{0.3, 0.47675489338747276999}, R{0.7, 0.15733612573721296874},
              R{1.5, -0.44469794022558725013}, R{3, -1.1079807107101508808}}) {
    CAPTURE(r.v);
    FnEvalResult l = lambda_fn(r.v);
    CHECK(std::fabs(l.value - r.ref) < 1e-14);
    CHECK(lambda_fn(-r.v).value == doctest::Approx(l.value).epsilon(1e-15));
  }
  CHECK(std::fabs(lambda_prime(0).value) < 1e-10);
}

TEST_CASE("Si and Ci reference values") {
  struct R { double x, si, ci; };
  for (R r : {R{0.3, 0.29850404380704316139, -0.64917293297116174496},
              R{1, 0.94608307036718301494, 0.33740392290096813466},
              R{4, 1.7582031389490530581, -0.14098169788693041164},
              R{12, 1.5049712415263733705, -0.049780006884113675596},
              R{40, 1.5869851193547845068, 0.019020007896208766962},
              R{150, 1.5661668327225208375, -0.0047964889929105474708}}) {
    CAPTURE(r.x);
    CHECK(std::fabs(Si(r.x).value - r.si) < 1e-13);
    CHECK(std::fabs(Ci(r.x).value - r.ci) < 1e-13);
    CHECK(std::fabs(si(r.x).value - (r.si - kPi / 2)) < 1e-13);
    CHECK(honest(Si(r.x), r.si));
    CHECK(honest(Ci(r.x), r.ci));
  }
  CHECK(Si(0).value == 0);
  CHECK(std::fabs(Ci(kPi).value - 0.073667912046425) < 1e-14);
  CHECK(std::fabs(Si(1000).value - kPi / 2) < 1.1e-3);
  CHECK_THROWS_AS(Si(-1), Error);
}

TEST_CASE("Si/Ci derivatives match sin x/x and cos x/x") {
  for (double x : {0.5, 1.0, 2.0, 5.0, 10.0}) {
    CAPTURE(x);
    double h = 1e-4;
    double dsi = (Si(x + h).value - Si(x - h).value) / (2 * h);
    double dci = (Ci(x + h).value - Ci(x - h).value) / (2 * h);
    CHECK(std::fabs(dsi - std::sin(x) / x) < 1e-6);
    CHECK(std::fabs(dci - std::cos(x) / x) < 1e-6);
  }
}

TEST_CASE("exponential integral on the negative axis") {
  struct R { double x, v; };
  for (R r : {R{-0.01, -4.0379295765381138318}, R{-1, -0.21938393439552027368},
              R{-3, -0.013048381094197037413}, R{-20, -9.8355252906498816904e-11}}) {
    CAPTURE(r.x);
    FnEvalResult e = exp_integral(r.x);
    CHECK(std::fabs(e.value - r.v) <= 1e-12);
    CHECK(std::fabs(e.value - r.v) <= 1e-13 * std::fabs(r.v) + 1e-300);
  }
  // Ei(-x) - log x -> gamma
  double x = 1e-8;
  CHECK(std::fabs(exp_integral(-x).value - std::log(x) - kEulerGamma) < 1e-7);
  // the small-x series, summed here as a 30-term oracle
  double s = kEulerGamma, t = 1;
  for (int n = 1; n <= 30; ++n) {
    t *= -1.0 / n;
    s += t / n;
  }
  CHECK(exp_integral(-1).value == doctest::Approx(s).epsilon(1e-14));
}

TEST_CASE("zeta family reference values") {
  CHECK(zeta(2).value == doctest::Approx(kPi * kPi / 6).epsilon(1e-15));
  CHECK(zeta(1.5).value == doctest::Approx(2.6123753486854883433).epsilon(1e-13));
  CHECK(zeta(3).value == doctest::Approx(1.2020569031595942854).epsilon(1e-14));
  CHECK(zeta(7.5).value == doctest::Approx(1.0058267275365228077).epsilon(1e-14));
  CHECK(hurwitz_zeta(2, 0.5).value == doctest::Approx(4.9348022005446793094).epsilon(1e-13));
  CHECK(hurwitz_zeta(3, 2.5).value == doctest::Approx(0.1181020258208637015).epsilon(1e-13));
  CHECK(hurwitz_zeta(1.5, 0.1).value == doctest::Approx(34.052975515075602989).epsilon(1e-13));
  CHECK(zeta_prime(2).value == doctest::Approx(-0.9375482543158437537).epsilon(1e-13));
  CHECK(zeta_prime(3).value == doctest::Approx(-0.19812624288563685333).epsilon(1e-13));
  CHECK(zeta_prime(4).value == doctest::Approx(-0.068911265896125379849).epsilon(1e-13));
  CHECK(zeta_family(ZetaKind::zeta_prime2_at_2).value == doctest::Approx(1.9892802342989010234).epsilon(1e-12));
  CHECK(zeta_family(ZetaKind::zeta_prime_neg1).value == doctest::Approx(-0.16542114370045092921).epsilon(1e-12));
  for (int k = 2; k <= 40; ++k) {
    CAPTURE(k);
    CHECK(std::fabs(zeta_int_m1(k) - (zeta(k).value - 1)) < 1e-15);
  }
}

TEST_CASE("constants cache") {
  const ConstantsCache& c = constants();
  CHECK(c.gamma == doctest::Approx(0.57721566490153286061).epsilon(1e-15));
  CHECK(c.gamma1 == doctest::Approx(-0.072815845483676724861).epsilon(1e-12));
  CHECK(stieltjes_gamma1().value == doctest::Approx(-0.072815845483676724861).epsilon(1e-12));
  CHECK(c.log_A == 1.0 / 12 - c.zeta_prime_neg1);
  double rel = (1 - c.gamma - c.log_2pi) / 12 + c.zeta_prime_2 / (2 * kPi * kPi);
  CHECK(std::fabs(c.zeta_prime_neg1 - rel) <= 1e-12);
  CHECK(c.zeta_prime_neg1 == doctest::Approx(-0.165421143700).epsilon(1e-11));
  CHECK(c.catalan == doctest::Approx(0.9159655941772190151).epsilon(1e-15));
}

TEST_CASE("log Barnes G") {
  struct R { double x, v; };
  for (R r : {R{0.25, -1.2250059061942700834}, R{0.5, -0.5054330544896953828}, R{1.5, 0.066931888435004704274},
              R{2.3, -0.040672445012994792052}, R{4, 0.69314718055994530942}}) {
    CAPTURE(r.x);
    FnEvalResult g = log_barnes_g(r.x);
    CHECK(std::fabs(g.value - r.v) <= 1e-11);
    CHECK(honest(g, r.v));
  }
  CHECK(log_barnes_g(1).value == 0);
  CHECK(std::fabs(log_barnes_g(2).value) < 1e-15);  // log G(2) = 0
  const ConstantsCache& c = constants();
  double half = std::log(2.0) / 24 - std::log(kPi) / 4 + 1.5 * c.zeta_prime_neg1;
  CHECK(std::fabs(log_barnes_g(0.5).value - half) < 1e-12);
  for (int i = 0; i <= 35; ++i) {
    double x = 0.25 + 0.05 * i;
    CAPTURE(x);
    CHECK(std::fabs(log_barnes_g(1 + x).value - log_barnes_g(x).value - log_gamma(x).value) <= 1e-10);
  }
}

TEST_CASE("Clausen function") {
  CHECK(clausen_cl2(0).value == 0);
  CHECK(std::fabs(clausen_cl2(kPi).value) < 1e-15);
  CHECK(clausen_cl2(kPi / 2).value == doctest::Approx(constants().catalan).epsilon(1e-14));
  struct R { double t, v; };
  for (R r : {R{0.5, 0.84831187770367927099}, R{1, 1.0139591323607685043}, R{2, 0.72714605086327924743},
              R{4, -0.5681439444298697808}, R{-1, -1.0139591323607685043}, R{10, -0.39071647608680211043}}) {
    CAPTURE(r.t);
    CHECK(std::fabs(clausen_cl2(r.t).value - r.v) <= 1e-12);
  }
}

TEST_CASE("Bernoulli polynomials") {
  CHECK(bernoulli_poly(1, 0.3).value == doctest::Approx(-0.2).epsilon(1e-15));
  CHECK(std::fabs(bernoulli_poly(3, 0.5).value) < 1e-16);
  CHECK(bernoulli_poly(2, 0.3).value == doctest::Approx(-0.043333333333333333333).epsilon(1e-14));
  CHECK(bernoulli_poly(5, 0.7).value == doctest::Approx(0.02282).epsilon(1e-13));
  CHECK(bernoulli_poly(8, 0.25).value == doctest::Approx(0.00012919108072916666667).epsilon(1e-12));
  CHECK(bernoulli_poly(12, 0.9).value == doctest::Approx(-0.20474171707255311355).epsilon(1e-12));
  CHECK(bernoulli_number(2) == doctest::Approx(1.0 / 6));
  CHECK(bernoulli_number(12) == doctest::Approx(-691.0 / 2730));
}

TEST_CASE("Bernoulli polynomials against their truncated Fourier series") {
  const long K = 10000;
  for (int n = 1; n <= 4; ++n) {
    // B_2n(x) = (-1)^{n+1} 2 (2n)! sum cos(2 pi k x)/(2 pi k)^{2n}
    double fact = std::tgamma(2.0 * n + 1);
    double tail = 0;
    for (long k = K + 1; k < 40 * K; ++k) tail += std::pow(double(k), -2.0 * n);
    tail += std::pow(40.0 * K, 1 - 2.0 * n) / (2 * n - 1);
    double bound = 4 * fact / std::pow(2 * kPi, 2 * n) * tail + 1e-14;
    for (double x : {0.1, 0.25, 0.5}) {
      CAPTURE(n);
      CAPTURE(x);
      double s = 0;
      for (long k = K; k >= 1; --k) s += std::cos(2 * kPi * k * x) / std::pow(2 * kPi * k, 2 * n);
      double fourier = (n % 2 ? 2.0 : -2.0) * fact * s;
      CHECK(std::fabs(bernoulli_poly(2 * n, x).value - fourier) <= bound);
    }
  }
}

}  // TEST_SUITE
