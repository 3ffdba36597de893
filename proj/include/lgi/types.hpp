#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace lgi {

using Cplx = std::complex<double>;

enum class ErrorKind {
  domain,
  pole,
  overflow,
  unsupported,
  inconsistency,
  evaluation,
  unknown_id,
  misuse,
};

const char* to_string(ErrorKind k);

// Every failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// A value with a claimed absolute-error bound.
template <typename T>
struct Eval {
  T value{};
  double abs_err = 0.0;
};

using FnEvalResult = Eval<double>;
using CplxEvalResult = Eval<Cplx>;

inline FnEvalResult operator+(FnEvalResult a, FnEvalResult b) {
  return {a.value + b.value, a.abs_err + b.abs_err};
}
inline FnEvalResult operator-(FnEvalResult a, FnEvalResult b) {
  return {a.value - b.value, a.abs_err + b.abs_err};
}
inline FnEvalResult operator*(double k, FnEvalResult a) {
  return {k * a.value, (k < 0 ? -k : k) * a.abs_err};
}
inline FnEvalResult operator*(FnEvalResult a, FnEvalResult b) {
  double av = a.value < 0 ? -a.value : a.value;
  double bv = b.value < 0 ? -b.value : b.value;
  return {a.value * b.value, av * b.abs_err + bv * a.abs_err + a.abs_err * b.abs_err};
}
inline FnEvalResult exact(double v) { return {v, 0.0}; }

// Throws domain error on NaN or infinity.
void require_finite(double x, const char* what);

}  // namespace lgi
