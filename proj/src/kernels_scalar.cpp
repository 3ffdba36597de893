#include "lgi/kernels.hpp"

#include <atomic>
#include <cmath>

namespace lgi::kernels {

namespace scalar {

SumResult sum(const double* x, std::size_t n) {
  Accumulator acc;
  for (std::size_t i = 0; i < n; ++i) acc.add(x[i]);
  return {acc.value(), acc.abs_sum()};
}

// Dot2 of Ogita, Rump and Oishi: exact products via fma, compensated sum.
SumResult dot(const double* w, const double* f, std::size_t n) {
  double s = 0.0, c = 0.0, a = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double p = w[i] * f[i];
    double ep = std::fma(w[i], f[i], -p);
    double t = s + p;
    double z = t - s;
    c += (s - (t - z)) + (p - z) + ep;
    s = t;
    a += std::fabs(p);
  }
  return {s + c, a};
}

}  // namespace scalar

namespace {

std::atomic<int> g_forced{-1};

Isa detect() {
  return avx2::available() ? Isa::avx2 : Isa::scalar;
}

}  // namespace

Isa active_isa() {
  int f = g_forced.load(std::memory_order_relaxed);
  if (f >= 0) return static_cast<Isa>(f);
  static const Isa isa = detect();
  return isa;
}

void force_isa(Isa isa) {
  if (isa == Isa::avx2 && !avx2::available()) isa = Isa::scalar;
  g_forced.store(static_cast<int>(isa), std::memory_order_relaxed);
}

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

SumResult sum(const double* x, std::size_t n) {
  return active_isa() == Isa::avx2 ? avx2::sum(x, n) : scalar::sum(x, n);
}

SumResult dot(const double* w, const double* f, std::size_t n) {
  return active_isa() == Isa::avx2 ? avx2::dot(w, f, n) : scalar::dot(w, f, n);
}

}  // namespace lgi::kernels
