#pragma once

// Arbitrary-precision reals. Every value carries its own MPFR precision;
// there is no process-wide default, so independent evaluations at different
// precisions can run concurrently.

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

namespace mzv {

/// Bits needed to hold `digits` decimal digits, plus a few spare bits.
mpfr_prec_t bits_for_digits(int digits);

class Real {
 public:
  explicit Real(mpfr_prec_t bits = 64);
  Real(long value, mpfr_prec_t bits);
  Real(const mpq_class& value, mpfr_prec_t bits);
  Real(const mpz_class& value, mpfr_prec_t bits);

  /// Rounds `other` to `bits`.
  Real(const Real& other, mpfr_prec_t bits);

  static Real parse(std::string_view decimal, mpfr_prec_t bits);
  static Real pi(mpfr_prec_t bits);
  static Real sqrt(unsigned long n, mpfr_prec_t bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  Real& operator+=(const Real& x);
  Real& operator-=(const Real& x);
  Real& operator*=(const Real& x);
  Real& operator/=(const Real& x);
  Real& operator*=(long k);
  Real& operator/=(unsigned long k);
  /// Exact scaling by 2^k.
  Real& scale2(long k);

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator*(Real a, long k) { return a *= k; }
  friend Real operator/(Real a, unsigned long k) { return a /= k; }
  Real operator-() const;

  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_); }

  bool is_zero() const { return mpfr_zero_p(value_); }
  int sign() const { return mpfr_sgn(value_); }
  Real abs() const;
  Real pow(unsigned long k) const;
  /// Nearest integer (ties away from zero).
  mpz_class round() const;
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// log10|x|; -inf for zero.
  double log10_abs() const;

  /// Fixed-point with `decimals` digits after the point.
  std::string to_fixed(int decimals) const;
  /// Scientific notation with `significant` digits; "0" for exact zero.
  std::string to_scientific(int significant = 6) const;

 private:
  mpfr_t value_;
};

/// 10^-k at the given precision.
Real ten_to_minus(int k, mpfr_prec_t bits);

/// Decimal precision contract for an evaluation: results are accurate to
/// `target_digits`, internal arithmetic runs at `working_digits`.
class PrecisionContext {
 public:
  static constexpr int kGuardDigits = 20;

  explicit PrecisionContext(int target_digits, int guard_digits = kGuardDigits);

  int target_digits() const noexcept { return target_; }
  int working_digits() const noexcept { return working_; }
  mpfr_prec_t working_bits() const { return bits_for_digits(working_); }

  /// Same guard, twice the target.
  PrecisionContext doubled() const;

 private:
  int target_;
  int working_;
};

/// A real together with the decimal precision it was computed at.
struct RealValue {
  Real value;
  int digits = 0;
};

}  // namespace mzv
