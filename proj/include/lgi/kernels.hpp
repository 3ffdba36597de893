#pragma once

// Reduction kernels used by the quadrature and series loops.
//
// Each kernel has a scalar reference version and, on x86-64, an AVX2+FMA
// version selected once at runtime. Both use compensated arithmetic, so
// they agree to within a few ulps of the absolute sum; they are not
// bit-identical because lane order differs.

#include <cstddef>
#include <string>
#include <vector>

namespace lgi::kernels {

struct SumResult {
  double sum = 0.0;
  double abs_sum = 0.0;  // sum of |terms|, feeds the roundoff estimate
};

enum class Isa { scalar, avx2 };

namespace scalar {
SumResult sum(const double* x, std::size_t n);
SumResult dot(const double* w, const double* f, std::size_t n);
}  // namespace scalar

namespace avx2 {
bool available();
SumResult sum(const double* x, std::size_t n);
SumResult dot(const double* w, const double* f, std::size_t n);
}  // namespace avx2

// Dispatching entry points.
SumResult sum(const double* x, std::size_t n);
SumResult dot(const double* w, const double* f, std::size_t n);
inline SumResult sum(const std::vector<double>& x) { return sum(x.data(), x.size()); }

Isa active_isa();
// Overrides the runtime choice; asking for avx2 on a machine without it
// falls back to scalar. Used by the equivalence tests and --isa.
void force_isa(Isa isa);
const char* isa_name(Isa isa);

// Streaming Neumaier accumulator for loops that do not materialise terms.
class Accumulator {
 public:
  void add(double x) {
    double t = s_ + x;
    if ((s_ < 0 ? -s_ : s_) >= (x < 0 ? -x : x))
      c_ += (s_ - t) + x;
    else
      c_ += (x - t) + s_;
    s_ = t;
    a_ += x < 0 ? -x : x;
  }
  double value() const { return s_ + c_; }
  double abs_sum() const { return a_; }

 private:
  double s_ = 0.0, c_ = 0.0, a_ = 0.0;
};

}  // namespace lgi::kernels
