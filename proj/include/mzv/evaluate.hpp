#pragma once

// Numerical evaluation of multiple zeta values.
//
// ζ(w) for an admissible word is split at z = 1/2 (Hölder convolution):
//
//   ζ(x_1⋯x_n) = Σ_{j=0}^{n} L(x_{j+1}⋯x_n) · L(τx_j ⋯ τx_1)
//
// where L(u) is the iterated integral of u from 0 to 1/2. Each L(u) is a
// power series Σ c_m(u) 2^{-m} with |c_m| <= 1, so N terms leave a tail
// below 2^{-N}.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mzv/real.hpp"
#include "mzv/word.hpp"

namespace mzv {

/// Number of series terms for an absolute tail below 10^-(digits+5).
std::size_t truncation_terms(int digits);

/// c_0(w) .. c_terms(w) of the series Σ c_m z^m for the iterated integral
/// of w from 0 to z:
///   c_m(ε) = [m = 0],  c_m(A w') = c_m(w')/m,  c_m(B w') = Σ_{k<m} c_k(w')/m.
std::vector<Real> series_coefficients(const Word& w, std::size_t terms, mpfr_prec_t bits);

/// Iterated integral of w over [0, 1/2]. Requires w nonempty ending in B.
RealValue li_half(const Word& w, const PrecisionContext& ctx);

/// ζ of an admissible word; absolute error below 10^-target_digits.
RealValue zeta_word(const Word& w, const PrecisionContext& ctx);

/// ζ(s_1, ..., s_k); throws DivergenceError when s_1 = 1.
RealValue zeta(const Composition& s, const PrecisionContext& ctx);

/// ζ({2}^r) = π^{2r}/(2r+1)!, from the closed form.
RealValue zeta_two_power(unsigned r, const PrecisionContext& ctx);

/// π^power / factorial! at the working precision.
Real pi_power_over_factorial(unsigned power, unsigned factorial, mpfr_prec_t bits);

/// Counts (m_0, ..., m_{2n}) of 2's inserted after each element of {3,1}^n.
class InsertionVector {
 public:
  /// Throws std::invalid_argument unless the length is odd.
  explicit InsertionVector(std::vector<unsigned> slots);
  InsertionVector(std::initializer_list<unsigned> slots)
      : InsertionVector(std::vector<unsigned>(slots)) {}

  const std::vector<unsigned>& slots() const noexcept { return slots_; }
  std::size_t size() const noexcept { return slots_.size(); }
  unsigned n() const noexcept { return static_cast<unsigned>(slots_.size() / 2); }
  /// Total number of inserted 2's.
  unsigned total() const noexcept;
  unsigned weight() const noexcept { return 4 * n() + 2 * total(); }

  /// C^j: (m_{2n-j+1}, ..., m_{2n}, m_0, ..., m_{2n-j}).
  InsertionVector rotated(std::size_t j) const;
  InsertionVector reversed() const;

  /// ({2}^{m_0}, 3, {2}^{m_1}, 1, ..., 3, {2}^{m_{2n-1}}, 1, {2}^{m_{2n}});
  /// empty for the single vector (0).
  std::vector<unsigned> arguments() const;

  /// "0,2,1"
  std::string to_string() const;

  friend auto operator<=>(const InsertionVector&, const InsertionVector&) = default;
  friend bool operator==(const InsertionVector&, const InsertionVector&) = default;

 private:
  std::vector<unsigned> slots_;
};

/// ζ of the expanded insertion vector; Z(0) = 1.
RealValue Z(const InsertionVector& v, const PrecisionContext& ctx);

/// |Σ_j Z(C^j v) - π^{4n+2M}/(4n+2M+1)!|
RealValue cyclic_residual(const InsertionVector& v, const PrecisionContext& ctx);

/// |ζ({3,1}^n) - 2π^{4n}/(4n+2)!|
RealValue zagier_residual(unsigned n, const PrecisionContext& ctx);

/// |Σ over the 2n+1 single insertions of a 2 into {3,1}^n - π^{4n+2}/(4n+3)!|
RealValue dressed_residual(unsigned n, const PrecisionContext& ctx);

/// |Z(a1,b1,a2,b2,a3) + Z(a2,b1,a3,b2,a1) + Z(a3,b1,a1,b2,a2)
///  - Z(a1,b2,a2,b1,a3) - Z(a2,b2,a3,b1,a1) - Z(a3,b2,a1,b1,a2)|
RealValue conjecture2_residual(unsigned a1, unsigned a2, unsigned a3, unsigned b1,
                               unsigned b2, const PrecisionContext& ctx);

/// All insertion vectors with 2n+1 slots summing to M, lexicographic order.
std::vector<InsertionVector> insertion_vectors(unsigned n, unsigned M);

}  // namespace mzv
