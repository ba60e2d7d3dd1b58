#pragma once

// Words over the alphabet {A, B}, the shuffle algebra Q<A,B>, and the
// correspondence between admissible words and MZV argument strings.
//
// Letter A stands for the form dx/x and B for dx/(1-x). The leftmost letter
// of a word is the outermost integration.

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"

namespace mzv {

enum class Letter : char { A = 'A', B = 'B' };

constexpr Letter swap_letter(Letter x) noexcept {
  return x == Letter::A ? Letter::B : Letter::A;
}

class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);

  /// Strict parse: every character must be 'A' or 'B'. Empty input is ε.
  static Word parse(std::string_view text);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const noexcept {
    return static_cast<Letter>(letters_[i]);
  }
  Letter front() const noexcept { return (*this)[0]; }
  Letter back() const noexcept { return (*this)[size() - 1]; }

  void push_back(Letter x) { letters_.push_back(static_cast<char>(x)); }

  /// Nonempty, first letter A, last letter B.
  bool admissible() const noexcept;

  Word reversed() const;
  Word suffix(std::size_t from) const { return Word(letters_.substr(from)); }

  /// Number of (possibly overlapping) occurrences of `pattern`.
  std::size_t count_factor(const Word& pattern) const;

  const std::string& str() const noexcept { return letters_; }

  friend Word operator+(const Word& u, const Word& v) {
    return Word(u.letters_ + v.letters_);
  }
  Word& operator+=(const Word& v) {
    letters_ += v.letters_;
    return *this;
  }

  // Lexicographic with A < B; a proper prefix sorts first.
  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  explicit Word(std::string letters) : letters_(std::move(letters)) {}

  std::string letters_;
};

/// Concatenation of k copies of w.
Word repeat(const Word& w, std::size_t k);

/// Letter swap A <-> B (the substitution x -> 1-x).
Word tau(const Word& w);

/// Element of Q<A,B>: a finite map from words to nonzero rationals.
class WordPolynomial {
 public:
  using Terms = std::map<Word, mpq_class>;

  WordPolynomial() = default;
  explicit WordPolynomial(const Word& w, const mpq_class& coefficient = 1);

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  mpq_class coefficient(const Word& w) const;

  /// Adds c·w, dropping the term if the coefficient cancels.
  void add(const Word& w, const mpq_class& c);

  WordPolynomial& operator+=(const WordPolynomial& other);
  WordPolynomial& operator-=(const WordPolynomial& other);
  WordPolynomial& operator*=(const mpq_class& scalar);

  friend WordPolynomial operator+(WordPolynomial p, const WordPolynomial& q) {
    return p += q;
  }
  friend WordPolynomial operator-(WordPolynomial p, const WordPolynomial& q) {
    return p -= q;
  }
  friend WordPolynomial operator*(const mpq_class& c, WordPolynomial p) {
    return p *= c;
  }

  friend bool operator==(const WordPolynomial& p, const WordPolynomial& q);

  /// Sum of all coefficients.
  mpq_class mass() const;

  /// "c1*W1 + c2*W2 + ..." in canonical word order; "0" for the zero
  /// polynomial; the empty word prints as "1".
  std::string to_string() const;

  /// [{"word": "...", "num": "...", "den": "..."}, ...]
  nlohmann::json to_json() const;
  static WordPolynomial from_json(const nlohmann::json& j);

 private:
  Terms terms_;
};

/// MZV argument string (s_1, ..., s_k), every part >= 1.
class Composition {
 public:
  explicit Composition(std::vector<unsigned> parts);
  Composition(std::initializer_list<unsigned> parts)
      : Composition(std::vector<unsigned>(parts)) {}

  const std::vector<unsigned>& parts() const noexcept { return parts_; }
  std::size_t depth() const noexcept { return parts_.size(); }
  unsigned weight() const noexcept;
  bool admissible() const noexcept { return parts_.front() >= 2; }

  /// "3,1"
  std::string to_string() const;

  friend auto operator<=>(const Composition&, const Composition&) = default;
  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<unsigned> parts_;
};

/// Sum over all order-preserving interleavings of u and v.
WordPolynomial shuffle_words(const Word& u, const Word& v);

/// Bilinear extension of shuffle_words.
WordPolynomial shuffle_poly(const WordPolynomial& p, const WordPolynomial& q);

/// A^{s1-1} B A^{s2-1} B ... A^{sk-1} B. Throws DivergenceError if s1 = 1.
Word composition_to_word(const Composition& s);

/// Inverse of composition_to_word. Throws NonAdmissibleWordError.
Composition word_to_composition(const Word& w);

/// The dual argument string: reverse the word, then swap letters.
Composition dual(const Composition& s);

using ZetaTerm = std::pair<mpq_class, Composition>;

/// Reads every word of p as an MZV; order follows the canonical word order.
std::vector<ZetaTerm> poly_as_zeta_combination(const WordPolynomial& p);

}  // namespace mzv
