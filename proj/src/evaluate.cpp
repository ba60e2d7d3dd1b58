#include "mzv/evaluate.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "mzv/errors.hpp"

namespace mzv {

std::size_t truncation_terms(int digits) {
  return static_cast<std::size_t>(std::ceil((digits + 5) * 3.3219280948873623));
}

namespace {

void apply_letter(Letter x, std::vector<Real>& c) {
  if (x == Letter::A) {
    c[0] = Real(0L, c[0].precision());
    for (std::size_t m = 1; m < c.size(); ++m) c[m] /= static_cast<unsigned long>(m);
    return;
  }
  Real acc(c[0].precision());
  for (std::size_t m = 0; m < c.size(); ++m) {
    Real previous = std::move(c[m]);
    if (m == 0) {
      c[m] = Real(0L, previous.precision());
    } else {
      c[m] = acc;
      c[m] /= static_cast<unsigned long>(m);
    }
    acc += previous;
  }
}

Real evaluate_at_half(const std::vector<Real>& c, mpfr_prec_t bits) {
  // Horner in z = 1/2 from the top coefficient down.
  Real sum(bits);
  for (std::size_t m = c.size(); m-- > 1;) {
    sum += c[m];
    sum.scale2(-1);
  }
  return sum;
}

// out[i] = iterated integral of w[i:] over [0, 1/2]; out[|w|] = 1.
std::vector<Real> suffix_integrals(const Word& w, std::size_t terms, mpfr_prec_t bits) {
  std::vector<Real> c(terms + 1, Real(bits));
  c[0] = Real(1L, bits);
  std::vector<Real> out(w.size() + 1, Real(bits));
  out[w.size()] = Real(1L, bits);
  for (std::size_t i = w.size(); i-- > 0;) {
    apply_letter(w[i], c);
    out[i] = evaluate_at_half(c, bits);
  }
  return out;
}

RealValue rounded(const Real& x, const PrecisionContext& ctx) {
  return RealValue{Real(x, ctx.working_bits()), ctx.working_digits()};
}

RealValue absolute_residual(const Real& lhs, const Real& rhs, const PrecisionContext& ctx) {
  return rounded((lhs - rhs).abs(), ctx);
}

}  // namespace

std::vector<Real> series_coefficients(const Word& w, std::size_t terms, mpfr_prec_t bits) {
  std::vector<Real> c(terms + 1, Real(bits));
  c[0] = Real(1L, bits);
  for (std::size_t i = w.size(); i-- > 0;) apply_letter(w[i], c);
  return c;
}

RealValue li_half(const Word& w, const PrecisionContext& ctx) {
  if (w.empty() || w.back() != Letter::B) {
    throw DivergenceError("divergent series: word '" + w.str() +
                          "' must be nonempty and end with B");
  }
  const mpfr_prec_t bits = ctx.working_bits();
  const auto c = series_coefficients(w, truncation_terms(ctx.working_digits()), bits);
  return RealValue{evaluate_at_half(c, bits), ctx.working_digits()};
}

RealValue zeta_word(const Word& w, const PrecisionContext& ctx) {
  if (!w.admissible()) throw NonAdmissibleWordError(w.str());
  const int digits = ctx.working_digits() + static_cast<int>(w.size());
  const mpfr_prec_t bits = bits_for_digits(digits);
  const std::size_t terms = truncation_terms(digits);

  const std::size_t n = w.size();
  const auto outer = suffix_integrals(w, terms, bits);
  // Suffixes of τ(reverse w) are the words τx_j ⋯ τx_1.
  const auto inner = suffix_integrals(tau(w.reversed()), terms, bits);

  Real sum(bits);
  for (std::size_t j = 0; j <= n; ++j) sum += outer[j] * inner[n - j];
  return rounded(sum, ctx);
}

RealValue zeta(const Composition& s, const PrecisionContext& ctx) {
  return zeta_word(composition_to_word(s), ctx);
}

Real pi_power_over_factorial(unsigned power, unsigned factorial, mpfr_prec_t bits) {
  Real out = Real::pi(bits).pow(power);
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), factorial);
  out /= Real(f, bits);
  return out;
}

RealValue zeta_two_power(unsigned r, const PrecisionContext& ctx) {
  return RealValue{pi_power_over_factorial(2 * r, 2 * r + 1, ctx.working_bits()),
                   ctx.working_digits()};
}

// ---------------------------------------------------------------------------
// Insertion vectors

InsertionVector::InsertionVector(std::vector<unsigned> slots) : slots_(std::move(slots)) {
  if (slots_.size() % 2 == 0) {
    throw std::invalid_argument("insertion vector must have odd length 2n+1");
  }
}

unsigned InsertionVector::total() const noexcept {
  return std::accumulate(slots_.begin(), slots_.end(), 0u);
}

InsertionVector InsertionVector::rotated(std::size_t j) const {
  const std::size_t len = slots_.size();
  std::vector<unsigned> out(len);
  for (std::size_t i = 0; i < len; ++i) out[(i + j) % len] = slots_[i];
  return InsertionVector(std::move(out));
}

InsertionVector InsertionVector::reversed() const {
  return InsertionVector(std::vector<unsigned>(slots_.rbegin(), slots_.rend()));
}

std::vector<unsigned> InsertionVector::arguments() const {
  std::vector<unsigned> args;
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (i > 0) args.push_back(i % 2 == 1 ? 3 : 1);
    args.insert(args.end(), slots_[i], 2u);
  }
  return args;
}

std::string InsertionVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(slots_[i]);
  }
  return out;
}

std::vector<InsertionVector> insertion_vectors(unsigned n, unsigned M) {
  std::vector<InsertionVector> out;
  const std::size_t len = 2 * n + 1;
  std::vector<unsigned> slots(len, 0);
  // Odometer over weak compositions, lexicographically increasing.
  auto recurse = [&](auto&& self, std::size_t i, unsigned remaining) -> void {
    if (i + 1 == len) {
      slots[i] = remaining;
      out.emplace_back(slots);
      return;
    }
    for (unsigned v = 0; v <= remaining; ++v) {
      slots[i] = v;
      self(self, i + 1, remaining - v);
    }
  };
  recurse(recurse, 0, M);
  return out;
}

RealValue Z(const InsertionVector& v, const PrecisionContext& ctx) {
  auto args = v.arguments();
  if (args.empty()) return RealValue{Real(1L, ctx.working_bits()), ctx.working_digits()};
  return zeta(Composition(std::move(args)), ctx);
}

RealValue cyclic_residual(const InsertionVector& v, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.working_bits();
  Real sum(bits);
  for (std::size_t j = 0; j < v.size(); ++j) sum += Z(v.rotated(j), ctx).value;
  const unsigned weight = v.weight();
  return absolute_residual(sum, pi_power_over_factorial(weight, weight + 1, bits), ctx);
}

RealValue zagier_residual(unsigned n, const PrecisionContext& ctx) {
  if (n == 0) throw std::invalid_argument("zagier_residual needs n >= 1");
  const mpfr_prec_t bits = ctx.working_bits();
  const Real value = Z(InsertionVector(std::vector<unsigned>(2 * n + 1, 0)), ctx).value;
  return absolute_residual(value, pi_power_over_factorial(4 * n, 4 * n + 2, bits) * 2L, ctx);
}

RealValue dressed_residual(unsigned n, const PrecisionContext& ctx) {
  if (n == 0) throw std::invalid_argument("dressed_residual needs n >= 1");
  const mpfr_prec_t bits = ctx.working_bits();
  Real sum(bits);
  for (const auto& v : insertion_vectors(n, 1)) sum += Z(v, ctx).value;
  return absolute_residual(sum, pi_power_over_factorial(4 * n + 2, 4 * n + 3, bits), ctx);
}

RealValue conjecture2_residual(unsigned a1, unsigned a2, unsigned a3, unsigned b1,
                               unsigned b2, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.working_bits();
  auto side = [&](unsigned x, unsigned y) {
    Real sum(bits);
    sum += Z({a1, x, a2, y, a3}, ctx).value;
    sum += Z({a2, x, a3, y, a1}, ctx).value;
    sum += Z({a3, x, a1, y, a2}, ctx).value;
    return sum;
  };
  return absolute_residual(side(b1, b2), side(b2, b1), ctx);
}

}  // namespace mzv
