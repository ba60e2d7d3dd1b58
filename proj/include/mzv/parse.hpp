#pragma once

// Command-line text syntax. All functions throw ParseError on bad input.

#include <string_view>
#include <utility>
#include <vector>

#include "mzv/word.hpp"

namespace mzv {

/// Words with power shorthand: "AABB", "(AB)^3", "A^2B^2", "(A(AB)^2B)^2".
/// The empty string is the empty word.
Word parse_word_expression(std::string_view text);

/// Comma-separated non-negative integers: "0,2,1".
std::vector<unsigned> parse_unsigned_list(std::string_view text);

/// Comma-separated positive integers: "3,1".
Composition parse_composition(std::string_view text);

/// "3" or "1..4" (inclusive).
std::pair<unsigned, unsigned> parse_range(std::string_view text);

}  // namespace mzv
