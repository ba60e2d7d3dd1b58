#include "mzv/word.hpp"

#include <algorithm>
#include <numeric>

#include "mzv/errors.hpp"

namespace mzv {

Word::Word(std::initializer_list<Letter> letters) {
  letters_.reserve(letters.size());
  for (Letter x : letters) push_back(x);
}

Word Word::parse(std::string_view text) {
  for (char c : text) {
    if (c != 'A' && c != 'B') {
      throw ParseError("invalid letter '" + std::string(1, c) +
                       "' in word '" + std::string(text) + "'");
    }
  }
  return Word(std::string(text));
}

bool Word::admissible() const noexcept {
  return !empty() && front() == Letter::A && back() == Letter::B;
}

Word Word::reversed() const {
  return Word(std::string(letters_.rbegin(), letters_.rend()));
}

std::size_t Word::count_factor(const Word& pattern) const {
  if (pattern.empty() || pattern.size() > size()) return 0;
  std::size_t count = 0;
  for (std::size_t i = 0; i + pattern.size() <= size(); ++i) {
    if (letters_.compare(i, pattern.size(), pattern.letters_) == 0) ++count;
  }
  return count;
}

Word repeat(const Word& w, std::size_t k) {
  Word out;
  for (std::size_t i = 0; i < k; ++i) out += w;
  return out;
}

Word tau(const Word& w) {
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(swap_letter(w[i]));
  return out;
}

// ---------------------------------------------------------------------------
// WordPolynomial

WordPolynomial::WordPolynomial(const Word& w, const mpq_class& coefficient) {
  add(w, coefficient);
}

mpq_class WordPolynomial::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void WordPolynomial::add(const Word& w, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WordPolynomial& WordPolynomial::operator+=(const WordPolynomial& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

WordPolynomial& WordPolynomial::operator-=(const WordPolynomial& other) {
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

WordPolynomial& WordPolynomial::operator*=(const mpq_class& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= scalar;
  return *this;
}

bool operator==(const WordPolynomial& p, const WordPolynomial& q) {
  return p.terms_ == q.terms_;
}

mpq_class WordPolynomial::mass() const {
  mpq_class total = 0;
  for (const auto& [w, c] : terms_) total += c;
  return total;
}

std::string WordPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    const std::string word = w.empty() ? "1" : w.str();
    if (first) {
      out += c.get_str() + "*" + word;
      first = false;
    } else if (c < 0) {
      out += " - " + mpq_class(-c).get_str() + "*" + word;
    } else {
      out += " + " + c.get_str() + "*" + word;
    }
  }
  return out;
}

nlohmann::json WordPolynomial::to_json() const {
  auto out = nlohmann::json::array();
  for (const auto& [w, c] : terms_) {
    out.push_back({{"word", w.str()},
                   {"num", c.get_num().get_str()},
                   {"den", c.get_den().get_str()}});
  }
  return out;
}

WordPolynomial WordPolynomial::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array");
  WordPolynomial p;
  for (const auto& term : j) {
    try {
      mpq_class c(mpz_class(term.at("num").get<std::string>()),
                  mpz_class(term.at("den").get<std::string>()));
      if (c.get_den() == 0) throw ParseError("zero denominator");
      c.canonicalize();
      p.add(Word::parse(term.at("word").get<std::string>()), c);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("malformed polynomial term: ") + e.what());
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("malformed polynomial term: ") + e.what());
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Composition

Composition::Composition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("empty composition");
  if (std::find(parts_.begin(), parts_.end(), 0u) != parts_.end()) {
    throw std::invalid_argument("composition parts must be positive");
  }
}

unsigned Composition::weight() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

std::string Composition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Shuffle

namespace {

using CountMap = std::map<Word, mpz_class>;

CountMap prefixed(Letter x, const CountMap& tail) {
  CountMap out;
  const Word head{x};
  for (const auto& [w, c] : tail) out.emplace_hint(out.end(), head + w, c);
  return out;
}

void accumulate_into(CountMap& acc, const CountMap& more) {
  for (const auto& [w, c] : more) acc[w] += c;
}

}  // namespace

WordPolynomial shuffle_words(const Word& u, const Word& v) {
  // table[i][j] = u[i:] ⧢ v[j:], filled from the back:
  // xu' ⧢ yv' = x(u' ⧢ yv') + y(xu' ⧢ v').
  const std::size_t n = u.size();
  const std::size_t m = v.size();
  std::vector<std::vector<CountMap>> table(n + 1, std::vector<CountMap>(m + 1));
  for (std::size_t i = n + 1; i-- > 0;) {
    for (std::size_t j = m + 1; j-- > 0;) {
      CountMap& cell = table[i][j];
      if (i == n) {
        cell.emplace(v.suffix(j), 1);
      } else if (j == m) {
        cell.emplace(u.suffix(i), 1);
      } else {
        cell = prefixed(u[i], table[i + 1][j]);
        accumulate_into(cell, prefixed(v[j], table[i][j + 1]));
      }
    }
    // Row i+1 is no longer needed once row i is complete.
    if (i + 1 <= n) table[i + 1].clear();
  }
  WordPolynomial out;
  for (const auto& [w, c] : table[0][0]) out.add(w, mpq_class(c));
  return out;
}

WordPolynomial shuffle_poly(const WordPolynomial& p, const WordPolynomial& q) {
  WordPolynomial out;
  for (const auto& [u, a] : p.terms()) {
    for (const auto& [v, b] : q.terms()) {
      const mpq_class ab = a * b;
      const WordPolynomial product = shuffle_words(u, v);
      for (const auto& [w, c] : product.terms()) out.add(w, ab * c);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Words <-> argument strings

Word composition_to_word(const Composition& s) {
  if (!s.admissible()) {
    throw DivergenceError("divergent: leading argument must exceed 1 (got " +
                          s.to_string() + ")");
  }
  Word w;
  for (unsigned part : s.parts()) {
    for (unsigned i = 1; i < part; ++i) w.push_back(Letter::A);
    w.push_back(Letter::B);
  }
  return w;
}

Composition word_to_composition(const Word& w) {
  if (!w.admissible()) throw NonAdmissibleWordError(w.str());
  std::vector<unsigned> parts;
  unsigned run = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == Letter::B) {
      parts.push_back(run);
      run = 1;
    } else {
      ++run;
    }
  }
  return Composition(std::move(parts));
}

Composition dual(const Composition& s) {
  return word_to_composition(tau(composition_to_word(s).reversed()));
}

std::vector<ZetaTerm> poly_as_zeta_combination(const WordPolynomial& p) {
  std::vector<ZetaTerm> out;
  out.reserve(p.size());
  for (const auto& [w, c] : p.terms()) out.emplace_back(c, word_to_composition(w));
  return out;
}

}  // namespace mzv
