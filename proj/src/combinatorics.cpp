#include "mzv/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mzv {

namespace {

const Word kAB{Letter::A, Letter::B};
const Word kBA{Letter::B, Letter::A};
const Word kAA{Letter::A, Letter::A};
const Word kBB{Letter::B, Letter::B};
const Word kAABB{Letter::A, Letter::A, Letter::B, Letter::B};
const Word kAABABB{Letter::A, Letter::A, Letter::B, Letter::A, Letter::B, Letter::B};

int sign(int r) { return r % 2 == 0 ? 1 : -1; }

mpz_class pow_ui(unsigned long base, unsigned long exp) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

}  // namespace

FactorialTable::FactorialTable(unsigned max) : table_(max + 1) {
  table_[0] = 1;
  for (unsigned k = 1; k <= max; ++k) table_[k] = table_[k - 1] * k;
}

const mpz_class& FactorialTable::factorial(unsigned k) const {
  if (k >= table_.size()) throw std::out_of_range("factorial table too small");
  return table_[k];
}

mpz_class FactorialTable::binomial(unsigned n, unsigned k) const {
  if (k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

SSet interlaced_words(unsigned N, unsigned j) {
  SSet out{N, j, {}};
  if (2 * j > N) return out;
  // Walk all subsets of 2j block positions in lexicographic order.
  std::vector<bool> chosen(N, false);
  std::fill(chosen.end() - 2 * j, chosen.end(), true);
  do {
    Word w;
    bool raised = false;  // inside an AA ... BB bracket
    for (unsigned b = 0; b < N; ++b) {
      if (chosen[b]) {
        w += raised ? kBB : kAA;
        raised = !raised;
      } else {
        w += raised ? kBA : kAB;
      }
    }
    out.words.insert(std::move(w));
  } while (std::next_permutation(chosen.begin(), chosen.end()));
  return out;
}

WordPolynomial interlaced_sum(unsigned N, unsigned j) {
  WordPolynomial out;
  for (const Word& w : interlaced_words(N, j).words) out.add(w, 1);
  return out;
}

WordPolynomial ab_shuffle_expansion(unsigned p, unsigned q) {
  WordPolynomial out;
  for (unsigned j = 0; j <= std::min(p, q); ++j) {
    const mpz_class weight = pow_ui(4, j) * binomial(p + q - 2 * j, p - j);
    out += mpq_class(weight) * interlaced_sum(p + q, j);
  }
  return out;
}

RationalIdentity alternating_factorial_sum(unsigned n) {
  const FactorialTable f(4 * n + 2);
  RationalIdentity out;
  const int nn = static_cast<int>(n);
  for (int r = -nn; r <= nn; ++r) {
    mpq_class term(1, f.factorial(2 * nn + 2 * r + 1) * f.factorial(2 * nn - 2 * r + 1));
    term.canonicalize();
    out.lhs += sign(r) * term;
  }
  out.rhs = mpq_class(pow_ui(2, 2 * n + 1), f.factorial(4 * n + 2));
  out.rhs.canonicalize();
  return out;
}

RationalIdentity weighted_factorial_sum(unsigned n) {
  const FactorialTable f(4 * n + 3);
  RationalIdentity out;
  for (unsigned r = 0; r <= n; ++r) {
    mpq_class term(2 * r + 1, f.factorial(2 * n + 1 - 2 * r) * f.factorial(2 * n + 3 + 2 * r));
    term.canonicalize();
    out.lhs += sign(static_cast<int>(r)) * term;
  }
  out.rhs = mpq_class(pow_ui(4, n), f.factorial(4 * n + 3));
  out.rhs.canonicalize();
  return out;
}

mpz_class weighted_binomial_sum(unsigned n) {
  const FactorialTable f(2 * n + 1);
  mpz_class total = 0;
  for (unsigned r = 0; r <= n; ++r) {
    total += sign(static_cast<int>(r)) * mpz_class(2 * r + 1) * f.binomial(2 * n + 1, n - r);
  }
  return total;
}

PolynomialIdentity zagier_shuffle_identity(unsigned n) {
  PolynomialIdentity out;
  const int nn = static_cast<int>(n);
  for (int r = -nn; r <= nn; ++r) {
    out.lhs += mpq_class(sign(r)) *
               shuffle_words(repeat(kAB, nn - r), repeat(kAB, nn + r));
  }
  out.rhs = WordPolynomial(repeat(kAABB, n), mpq_class(pow_ui(4, n)));
  return out;
}

PolynomialIdentity dressed_shuffle_identity(unsigned n) {
  PolynomialIdentity out;
  for (unsigned r = 0; r <= n; ++r) {
    out.lhs += mpq_class(sign(static_cast<int>(r)) * static_cast<int>(2 * r + 1)) *
               shuffle_words(repeat(kAB, n - r), repeat(kAB, n + 1 + r));
  }
  WordPolynomial bracket;
  for (unsigned r = 0; r <= n; ++r) {
    bracket.add(repeat(kAABB, r) + kAB + repeat(kAABB, n - r), 1);
  }
  for (unsigned r = 1; r <= n; ++r) {
    bracket.add(repeat(kAABB, r - 1) + kAABABB + repeat(kAABB, n - r), 1);
  }
  out.rhs = mpq_class(pow_ui(4, n)) * bracket;
  return out;
}

std::vector<DecompositionTerm> euler_decomposition(unsigned s, unsigned t) {
  if (s < 2 || t < 2) {
    throw std::invalid_argument("Euler decomposition needs s, t >= 2");
  }
  // Keyed by word so the order matches poly_as_zeta_combination.
  std::map<Word, DecompositionTerm> merged;
  auto add = [&](unsigned j, const mpz_class& c) {
    Composition term{s + t - j, j};
    auto [it, inserted] = merged.try_emplace(composition_to_word(term), c, term);
    if (!inserted) it->second.first += c;
  };
  for (unsigned j = 1; j <= s; ++j) add(j, binomial(s + t - j - 1, s - j));
  for (unsigned j = 1; j <= t; ++j) add(j, binomial(s + t - j - 1, t - j));
  std::vector<DecompositionTerm> out;
  out.reserve(merged.size());
  for (auto& [w, term] : merged) out.push_back(std::move(term));
  return out;
}

mpz_class dihedral_orbit_count(unsigned n, unsigned M) {
  const unsigned slots = 2 * n + 1;
  mpz_class fixed = 0;

  // Rotation by d: gcd(d, slots) cycles of equal length.
  for (unsigned d = 0; d < slots; ++d) {
    const unsigned cycles = std::gcd(d, slots);
    const unsigned length = slots / cycles;
    if (M % length == 0) fixed += binomial(M / length + cycles - 1, cycles - 1);
  }

  // Each reflection fixes one slot and pairs the remaining 2n.
  mpz_class per_reflection = 0;
  for (unsigned v = M % 2; v <= M; v += 2) {
    const unsigned pair_total = (M - v) / 2;
    if (n == 0) {
      per_reflection += pair_total == 0 ? 1 : 0;
    } else {
      per_reflection += binomial(pair_total + n - 1, n - 1);
    }
  }
  fixed += per_reflection * slots;

  return fixed / (2 * slots);
}

}  // namespace mzv
