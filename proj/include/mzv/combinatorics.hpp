#pragma once

// Exact combinatorics around the shuffles (AB)^p ⧢ (AB)^q: the interlaced
// word sets, the multiplicity expansion, the factorial identities that drive
// the ζ({3,1}^n) and dressed-with-2 evaluations, Euler's decomposition of
// ζ(s)ζ(t), and dihedral orbit counting on insertion slots.

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "mzv/word.hpp"

namespace mzv {

/// Exact factorials 0!..max! and binomials built from them.
class FactorialTable {
 public:
  explicit FactorialTable(unsigned max);

  const mpz_class& factorial(unsigned k) const;
  /// C(n, k); zero when k > n.
  mpz_class binomial(unsigned n, unsigned k) const;
  unsigned max() const noexcept { return static_cast<unsigned>(table_.size() - 1); }

 private:
  std::vector<mpz_class> table_;
};

/// C(n, k) without a table.
mpz_class binomial(unsigned n, unsigned k);

/// Words of length 2N occurring in (AB)^p ⧢ (AB)^q (p + q = N, min(p,q) >= j)
/// that contain A² exactly j times.
struct SSet {
  unsigned N = 0;
  unsigned j = 0;
  std::set<Word> words;
};

/// Built block by block: 2j of the N length-2 blocks alternate AA, BB, AA, ...
/// and the others are AB below the fold, BA above it. Empty when 2j > N.
SSet interlaced_words(unsigned N, unsigned j);

/// Coefficient-one sum of interlaced_words(N, j).
WordPolynomial interlaced_sum(unsigned N, unsigned j);

/// Σ_j 4^j C(p+q-2j, p-j) T_{p+q,j}; equals (AB)^p ⧢ (AB)^q.
WordPolynomial ab_shuffle_expansion(unsigned p, unsigned q);

struct RationalIdentity {
  mpq_class lhs;
  mpq_class rhs;
  bool holds() const { return lhs == rhs; }
};

struct PolynomialIdentity {
  WordPolynomial lhs;
  WordPolynomial rhs;
  bool holds() const { return lhs == rhs; }
};

/// Σ_{r=-n}^{n} (-1)^r / ((2n+2r+1)!(2n-2r+1)!)  vs  2^{2n+1}/(4n+2)!
RationalIdentity alternating_factorial_sum(unsigned n);

/// Σ_{r=0}^{n} (-1)^r (2r+1) / ((2n+1-2r)!(2n+3+2r)!)  vs  4^n/(4n+3)!
RationalIdentity weighted_factorial_sum(unsigned n);

/// Σ_{r=0}^{n} (-1)^r (2r+1) C(2n+1, n-r); 1 for n = 0, else 0.
mpz_class weighted_binomial_sum(unsigned n);

/// Σ_{r=-n}^{n} (-1)^r (AB)^{n-r} ⧢ (AB)^{n+r}  vs  4^n (A²B²)^n
PolynomialIdentity zagier_shuffle_identity(unsigned n);

/// Σ_{r=0}^{n} (-1)^r (2r+1) (AB)^{n-r} ⧢ (AB)^{n+1+r}  vs
/// 4^n (Σ_r (A²B²)^r AB (A²B²)^{n-r} + Σ_{r>=1} (A²B²)^{r-1} A²BAB² (A²B²)^{n-r})
PolynomialIdentity dressed_shuffle_identity(unsigned n);

using DecompositionTerm = std::pair<mpz_class, Composition>;

/// ζ(s)ζ(t) = Σ_j C(s+t-j-1, s-j) ζ(s+t-j, j) + Σ_j C(s+t-j-1, t-j) ζ(s+t-j, j)
/// with like terms merged, ordered like poly_as_zeta_combination.
/// Throws std::invalid_argument if s < 2 or t < 2.
std::vector<DecompositionTerm> euler_decomposition(unsigned s, unsigned t);

/// Orbits of the dihedral group D_{2n+1} on functions {0..2n} -> N summing
/// to M, by Burnside's lemma.
mpz_class dihedral_orbit_count(unsigned n, unsigned M);

}  // namespace mzv
