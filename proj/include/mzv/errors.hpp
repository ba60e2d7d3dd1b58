#pragma once

#include <stdexcept>
#include <string>

namespace mzv {

/// Raised when an argument string, word or series would not converge.
class DivergenceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A word that is empty, starts with B or ends with A.
class NonAdmissibleWordError : public DivergenceError {
 public:
  explicit NonAdmissibleWordError(std::string word)
      : DivergenceError("non-admissible word '" + word +
                        "': must be nonempty, start with A and end with B"),
        word_(std::move(word)) {}

  const std::string& word() const noexcept { return word_; }

 private:
  std::string word_;
};

/// Malformed textual input (words, compositions, vectors, ranges).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical results could not be trusted at the requested precision.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mzv
