#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <ostream>
#include <string>

#include <Eigen/Core>

#include "nambu3/error.hpp"

namespace nambu3 {

/// Gaussian integer a + bi with 64-bit components. Every operation is
/// overflow-checked, so equality is exact and a result is never silently
/// wrapped.
class GaussInt {
public:
  constexpr GaussInt() = default;
  constexpr GaussInt(std::int64_t re) : re_(re) {}  // NOLINT: implicit from integer literals
  constexpr GaussInt(std::int64_t re, std::int64_t im) : re_(re), im_(im) {}

  constexpr std::int64_t real() const { return re_; }
  constexpr std::int64_t imag() const { return im_; }

  friend GaussInt operator+(GaussInt a, GaussInt b) { return {add(a.re_, b.re_), add(a.im_, b.im_)}; }
  friend GaussInt operator-(GaussInt a, GaussInt b) { return {sub(a.re_, b.re_), sub(a.im_, b.im_)}; }
  friend GaussInt operator-(GaussInt a) { return {sub(0, a.re_), sub(0, a.im_)}; }
  friend GaussInt operator*(GaussInt a, GaussInt b) {
    return {sub(mul(a.re_, b.re_), mul(a.im_, b.im_)), add(mul(a.re_, b.im_), mul(a.im_, b.re_))};
  }
  GaussInt& operator+=(GaussInt b) { return *this = *this + b; }
  GaussInt& operator-=(GaussInt b) { return *this = *this - b; }
  GaussInt& operator*=(GaussInt b) { return *this = *this * b; }

  friend constexpr bool operator==(GaussInt a, GaussInt b) = default;

  friend std::ostream& operator<<(std::ostream& os, GaussInt z) {
    return os << '(' << z.re_ << ',' << z.im_ << ')';
  }

private:
  static std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("GaussInt: addition overflow");
    return r;
  }
  static std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("GaussInt: subtraction overflow");
    return r;
  }
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("GaussInt: multiplication overflow");
    return r;
  }

  std::int64_t re_ = 0;
  std::int64_t im_ = 0;
};

inline GaussInt conj(GaussInt z) { return {z.real(), -z.imag()}; }

using Complex = std::complex<double>;

/// Per-scalar policy used by the generic algorithms: exactness, conjugation,
/// magnitude for residual norms, and construction from integer parts.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<GaussInt> {
  static constexpr bool exact = true;
  static constexpr const char* name = "exact";
  static GaussInt conj(GaussInt z) { return nambu3::conj(z); }
  static double abs(GaussInt z) {
    return std::hypot(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  }
  static bool is_zero(GaussInt z) { return z == GaussInt{}; }
  static GaussInt from_int(std::int64_t re, std::int64_t im = 0) { return {re, im}; }
  static Complex to_complex(GaussInt z) {
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
  }
};

template <>
struct scalar_traits<Complex> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";
  static Complex conj(Complex z) { return std::conj(z); }
  static double abs(Complex z) { return std::abs(z); }
  static bool is_zero(Complex z) { return z == Complex{}; }
  static Complex from_int(std::int64_t re, std::int64_t im = 0) {
    return {static_cast<double>(re), static_cast<double>(im)};
  }
  static Complex to_complex(Complex z) { return z; }
};

template <class S>
concept ScalarType = requires { scalar_traits<S>::exact; };

/// (-1)^k for an integer k, using the representative in {0, 1} of k mod 2.
inline int sign_pow(int k) { return (k & 1) ? -1 : 1; }

template <ScalarType S>
S signed_scalar(int sign, S value) {
  return sign < 0 ? S(-value) : value;
}

}  // namespace nambu3

namespace Eigen {

template <>
struct NumTraits<nambu3::GaussInt> : GenericNumTraits<nambu3::GaussInt> {
  using Real = nambu3::GaussInt;
  using NonInteger = nambu3::GaussInt;
  using Literal = nambu3::GaussInt;
  using Nested = nambu3::GaussInt;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 0,
    ReadCost = 2,
    AddCost = 4,
    MulCost = 8
  };
  static inline nambu3::GaussInt epsilon() { return {}; }
  static inline nambu3::GaussInt dummy_precision() { return {}; }
  static inline int digits10() { return 18; }
};

}  // namespace Eigen
