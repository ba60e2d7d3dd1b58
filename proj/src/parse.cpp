#include "mzv/parse.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "mzv/errors.hpp"

namespace mzv {

namespace {

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  Word parse() {
    Word w = sequence();
    if (pos_ != text_.size()) fail("unexpected ')'");
    return w;
  }

 private:
  Word sequence() {
    Word out;
    while (pos_ < text_.size() && text_[pos_] != ')') out += atom();
    return out;
  }

  Word atom() {
    Word base;
    const char c = text_[pos_];
    if (c == 'A' || c == 'B') {
      base = Word{static_cast<Letter>(c)};
      ++pos_;
    } else if (c == '(') {
      ++pos_;
      base = sequence();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      if (start == pos_) fail("exponent expected after '^'");
      unsigned k = 0;
      auto [p, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, k);
      if (ec != std::errc() || k > 4096) fail("exponent out of range");
      base = repeat(base, k);
    }
    return base;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse word '" + std::string(text_) + "': " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

unsigned parse_unsigned(std::string_view token, std::string_view context) {
  unsigned value = 0;
  auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || p != token.data() + token.size()) {
    throw ParseError("expected a non-negative integer in '" + std::string(context) +
                     "', got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Word parse_word_expression(std::string_view text) { return WordParser(text).parse(); }

std::vector<unsigned> parse_unsigned_list(std::string_view text) {
  std::vector<unsigned> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_unsigned(text.substr(start, comma - start), text));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Composition parse_composition(std::string_view text) {
  auto parts = parse_unsigned_list(text);
  for (unsigned s : parts) {
    if (s == 0) throw ParseError("composition parts must be positive: '" + std::string(text) + "'");
  }
  return Composition(std::move(parts));
}

std::pair<unsigned, unsigned> parse_range(std::string_view text) {
  const std::size_t dots = text.find("..");
  if (dots == std::string_view::npos) {
    const unsigned v = parse_unsigned(text, text);
    return {v, v};
  }
  const unsigned lo = parse_unsigned(text.substr(0, dots), text);
  const unsigned hi = parse_unsigned(text.substr(dots + 2), text);
  if (lo > hi) throw ParseError("empty range '" + std::string(text) + "'");
  return {lo, hi};
}

}  // namespace mzv
