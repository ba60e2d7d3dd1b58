#include "mzv/real.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

#include "mzv/errors.hpp"

namespace mzv {

mpfr_prec_t bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 16;
}

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const mpq_class& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const mpz_class& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Real& other, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real Real::parse(std::string_view decimal, mpfr_prec_t bits) {
  Real out(bits);
  const std::string text(decimal);
  if (mpfr_set_str(out.value_, text.c_str(), 10, MPFR_RNDN) != 0) {
    throw ParseError("not a decimal number: '" + text + "'");
  }
  return out;
}

Real Real::pi(mpfr_prec_t bits) {
  Real out(bits);
  mpfr_const_pi(out.value_, MPFR_RNDN);
  return out;
}

Real Real::sqrt(unsigned long n, mpfr_prec_t bits) {
  Real out(bits);
  mpfr_sqrt_ui(out.value_, n, MPFR_RNDN);
  return out;
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept : Real(other.precision()) { mpfr_swap(value_, other.value_); }

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

namespace {

// Binary results take the wider of the two precisions.
void widen(mpfr_ptr target, mpfr_srcptr other) {
  if (mpfr_get_prec(other) > mpfr_get_prec(target)) {
    mpfr_prec_round(target, mpfr_get_prec(other), MPFR_RNDN);
  }
}

}  // namespace

Real& Real::operator+=(const Real& x) {
  widen(value_, x.value_);
  mpfr_add(value_, value_, x.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& x) {
  widen(value_, x.value_);
  mpfr_sub(value_, value_, x.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& x) {
  widen(value_, x.value_);
  mpfr_mul(value_, value_, x.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& x) {
  widen(value_, x.value_);
  mpfr_div(value_, value_, x.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long k) {
  mpfr_mul_si(value_, value_, k, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(unsigned long k) {
  mpfr_div_ui(value_, value_, k, MPFR_RNDN);
  return *this;
}

Real& Real::scale2(long k) {
  mpfr_mul_2si(value_, value_, k, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

Real Real::abs() const {
  Real out(*this);
  mpfr_abs(out.value_, out.value_, MPFR_RNDN);
  return out;
}

Real Real::pow(unsigned long k) const {
  Real out(precision());
  mpfr_pow_ui(out.value_, value_, k, MPFR_RNDN);
  return out;
}

mpz_class Real::round() const {
  Real r(precision());
  mpfr_round(r.value_, value_);
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), r.value_, MPFR_RNDN);
  return out;
}

double Real::log10_abs() const {
  if (mpfr_zero_p(value_)) return -std::numeric_limits<double>::infinity();
  long exp2 = 0;
  const double mantissa = mpfr_get_d_2exp(&exp2, value_, MPFR_RNDN);
  return std::log10(std::fabs(mantissa)) + static_cast<double>(exp2) * 0.30102999566398120;
}

namespace {

std::string format_mpfr(const char* fmt, int digits, mpfr_srcptr x) {
  char* buffer = nullptr;
  if (mpfr_asprintf(&buffer, fmt, digits, x) < 0) throw std::bad_alloc();
  std::unique_ptr<char, decltype(&mpfr_free_str)> owned(buffer, &mpfr_free_str);
  return std::string(buffer);
}

}  // namespace

std::string Real::to_fixed(int decimals) const {
  return format_mpfr("%.*Rf", decimals, value_);
}

std::string Real::to_scientific(int significant) const {
  if (mpfr_zero_p(value_)) return "0";
  return format_mpfr("%.*Re", significant - 1, value_);
}

Real ten_to_minus(int k, mpfr_prec_t bits) {
  Real out(bits);
  mpfr_ui_pow_ui(out.get(), 10, static_cast<unsigned long>(k < 0 ? -k : k), MPFR_RNDN);
  if (k > 0) {
    mpfr_ui_div(out.get(), 1, out.get(), MPFR_RNDN);
  }
  return out;
}

PrecisionContext::PrecisionContext(int target_digits, int guard_digits)
    : target_(target_digits), working_(target_digits + guard_digits) {
  if (target_digits <= 0) throw std::invalid_argument("target digits must be positive");
  if (guard_digits < kGuardDigits) {
    throw std::invalid_argument("at least 20 guard digits are required");
  }
}

PrecisionContext PrecisionContext::doubled() const {
  return PrecisionContext(2 * target_, working_ - target_);
}

}  // namespace mzv
