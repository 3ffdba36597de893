// Scalar and AVX2 reduction kernels agree, and both are compensated.

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "lgi/kernels.hpp"
#include "lgi/quad.hpp"

using namespace lgi::kernels;

TEST_SUITE("kernels") {

TEST_CASE("compensated sum survives cancellation") {
  std::vector<double> x = {1e16, 1.0, -1e16, 1.0};
  CHECK(scalar::sum(x.data(), x.size()).sum == 2.0);
  Accumulator a;
  for (double v : x) a.add(v);
  CHECK(a.value() == 2.0);
  CHECK(a.abs_sum() == 2e16 + 2);
}

TEST_CASE("scalar and avx2 paths agree") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> N(0, 1);
  for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 16u, 33u, 1000u, 4097u}) {
    std::vector<double> w(n), f(n);
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = N(rng);
      f[i] = N(rng) * std::exp(N(rng) * 5);
    }
    SumResult s1 = scalar::sum(f.data(), n), d1 = scalar::dot(w.data(), f.data(), n);
    CAPTURE(n);
    if (avx2::available()) {
      SumResult s2 = avx2::sum(f.data(), n), d2 = avx2::dot(w.data(), f.data(), n);
      CHECK(std::fabs(s1.sum - s2.sum) <= 4e-16 * s1.abs_sum);
      CHECK(std::fabs(d1.sum - d2.sum) <= 4e-16 * d1.abs_sum + 1e-300);
      CHECK(s1.abs_sum == doctest::Approx(s2.abs_sum).epsilon(1e-14));
    }
    SumResult sd = sum(f.data(), n);
    CHECK(std::fabs(sd.sum - s1.sum) <= 4e-16 * s1.abs_sum);
  }
}

TEST_CASE("forcing the isa changes dispatch, not results") {
  auto q = [] {
    return lgi::quad::integrate([](double x, double) { return std::log(1 + x) * std::cos(3 * x); }, 0, 2).value;
  };
  Isa orig = active_isa();
  force_isa(Isa::scalar);
  CHECK(active_isa() == Isa::scalar);
  double a = q();
  force_isa(Isa::avx2);
  CHECK(active_isa() == (avx2::available() ? Isa::avx2 : Isa::scalar));
  double b = q();
  force_isa(orig);
  CHECK(std::fabs(a - b) < 1e-15);
  CHECK(std::string(isa_name(Isa::scalar)) == "scalar");
}

}  // TEST_SUITE
