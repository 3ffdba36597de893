#include "lgi/kernels.hpp"

#include <cmath>

#if defined(LGI_HAVE_AVX2)
#include <immintrin.h>
#endif

namespace lgi::kernels::avx2 {

#if defined(LGI_HAVE_AVX2)

bool available() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

namespace {

// Branch-free TwoSum per lane.
inline void two_sum(__m256d& s, __m256d& c, __m256d x) {
  __m256d t = _mm256_add_pd(s, x);
  __m256d z = _mm256_sub_pd(t, s);
  __m256d e = _mm256_add_pd(_mm256_sub_pd(s, _mm256_sub_pd(t, z)), _mm256_sub_pd(x, z));
  c = _mm256_add_pd(c, e);
  s = t;
}

SumResult fold(__m256d s, __m256d c, __m256d a, Accumulator& tail, double tail_abs) {
  alignas(32) double sv[4], cv[4], av[4];
  _mm256_store_pd(sv, s);
  _mm256_store_pd(cv, c);
  _mm256_store_pd(av, a);
  Accumulator acc;
  for (int k = 0; k < 4; ++k) acc.add(sv[k]);
  for (int k = 0; k < 4; ++k) acc.add(cv[k]);
  acc.add(tail.value());
  return {acc.value(), av[0] + av[1] + av[2] + av[3] + tail_abs};
}

}  // namespace

SumResult sum(const double* x, std::size_t n) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d s = _mm256_setzero_pd(), c = s, a = s;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_loadu_pd(x + i);
    two_sum(s, c, v);
    a = _mm256_add_pd(a, _mm256_andnot_pd(sign, v));
  }
  Accumulator tail;
  for (; i < n; ++i) tail.add(x[i]);
  return fold(s, c, a, tail, tail.abs_sum());
}

SumResult dot(const double* w, const double* f, std::size_t n) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d s = _mm256_setzero_pd(), c = s, a = s;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d wv = _mm256_loadu_pd(w + i);
    __m256d fv = _mm256_loadu_pd(f + i);
    __m256d p = _mm256_mul_pd(wv, fv);
    __m256d ep = _mm256_fmsub_pd(wv, fv, p);
    two_sum(s, c, p);
    c = _mm256_add_pd(c, ep);
    a = _mm256_add_pd(a, _mm256_andnot_pd(sign, p));
  }
  SumResult rest = scalar::dot(w + i, f + i, n - i);
  Accumulator tail;
  tail.add(rest.sum);
  return fold(s, c, a, tail, rest.abs_sum);
}

#else

bool available() { return false; }
SumResult sum(const double* x, std::size_t n) { return scalar::sum(x, n); }
SumResult dot(const double* w, const double* f, std::size_t n) { return scalar::dot(w, f, n); }

#endif

}  // namespace lgi::kernels::avx2
