#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mzv/combinatorics.hpp"
#include "oracles.hpp"

using namespace mzv;

namespace {

Word W(std::string_view s) { return Word::parse(s); }

std::set<std::string> as_strings(const SSet& s) {
  std::set<std::string> out;
  for (const auto& w : s.words) out.insert(w.str());
  return out;
}

const Word kAB = W("AB");

}  // namespace

TEST_CASE("interlaced word sets") {
  CHECK(as_strings(interlaced_words(2, 1)) == std::set<std::string>{"AABB"});
  CHECK(as_strings(interlaced_words(2, 0)) == std::set<std::string>{"ABAB"});
  CHECK(as_strings(interlaced_words(3, 1)) ==
        std::set<std::string>{"AABBAB", "AABABB", "ABAABB"});
  CHECK(interlaced_words(3, 2).words.empty());

  for (unsigned N = 1; N <= 8; ++N) {
    for (unsigned j = 0; 2 * j <= N; ++j) {
      const auto s = interlaced_words(N, j);
      REQUIRE(s.words.size() == binomial(N, 2 * j).get_ui());
      for (const auto& w : s.words) {
        REQUIRE(w.size() == 2 * N);
        REQUIRE(w.count_factor(W("AA")) == j);
      }
    }
  }
}

TEST_CASE("interlaced sets agree with filtering every valid split") {
  for (unsigned N = 1; N <= 8; ++N) {
    for (unsigned j = 0; 2 * j <= N; ++j) {
      const auto constructed = as_strings(interlaced_words(N, j));
      for (unsigned p = j; p + j <= N; ++p) {
        REQUIRE(oracle::filtered_s_set(p, N - p, j) == constructed);
      }
    }
  }
}

TEST_CASE("interlaced sums") {
  CHECK(interlaced_sum(2, 1) == WordPolynomial(W("AABB")));
  CHECK(interlaced_sum(2, 0) == WordPolynomial(W("ABAB")));
  CHECK(interlaced_sum(1, 0) == WordPolynomial(W("AB")));
}

TEST_CASE("(AB)^p shuffle (AB)^q multiplicities") {
  WordPolynomial one_one;
  one_one.add(W("ABAB"), 2);
  one_one.add(W("AABB"), 4);
  CHECK(ab_shuffle_expansion(1, 1) == one_one);
  CHECK(ab_shuffle_expansion(0, 3) == WordPolynomial(repeat(kAB, 3)));

  const auto one_two = ab_shuffle_expansion(1, 2);
  CHECK(one_two.mass() == 15);
  CHECK(one_two.coefficient(repeat(kAB, 3)) == 3);

  for (unsigned p = 0; p <= 8; ++p) {
    for (unsigned q = 0; p + q <= 8; ++q) {
      REQUIRE(oracle::as_counts(ab_shuffle_expansion(p, q)) ==
              oracle::brute_shuffle(oracle::ab_power(p), oracle::ab_power(q)));
    }
  }
}

TEST_CASE("factorial identities") {
  const auto l1_0 = alternating_factorial_sum(0);
  CHECK(l1_0.lhs == 1);
  CHECK(l1_0.rhs == 1);
  const auto l1_1 = alternating_factorial_sum(1);
  CHECK(l1_1.lhs == mpq_class(1, 90));
  CHECK(l1_1.rhs == mpq_class(1, 90));

  const auto l3_0 = weighted_factorial_sum(0);
  CHECK(l3_0.lhs == mpq_class(1, 6));
  CHECK(l3_0.rhs == mpq_class(1, 6));

  CHECK(weighted_binomial_sum(0) == 1);
  CHECK(weighted_binomial_sum(1) == 0);
  CHECK(weighted_binomial_sum(7) == 0);

  for (unsigned n = 0; n <= 50; ++n) {
    REQUIRE(alternating_factorial_sum(n).holds());
    REQUIRE(weighted_factorial_sum(n).holds());
    REQUIRE(weighted_binomial_sum(n) == (n == 0 ? 1 : 0));
  }
}

TEST_CASE("factorial table") {
  const FactorialTable f(20);
  CHECK(f.factorial(0) == 1);
  CHECK(f.factorial(10) == 3628800);
  CHECK(f.binomial(10, 3) == 120);
  CHECK(f.binomial(3, 10) == 0);
  CHECK_THROWS_AS(f.factorial(21), std::out_of_range);
}

TEST_CASE("shuffle identities behind the Zagier and dressed evaluations") {
  const auto z0 = zagier_shuffle_identity(0);
  CHECK(z0.lhs == WordPolynomial(Word{}));
  CHECK(z0.holds());

  const auto z1 = zagier_shuffle_identity(1);
  CHECK(z1.lhs == WordPolynomial(W("AABB"), 4));
  CHECK(z1.holds());

  const auto d0 = dressed_shuffle_identity(0);
  CHECK(d0.lhs == WordPolynomial(W("AB")));
  CHECK(d0.holds());

  WordPolynomial d1_rhs;
  d1_rhs.add(W("ABAABB"), 4);
  d1_rhs.add(W("AABBAB"), 4);
  d1_rhs.add(W("AABABB"), 4);
  CHECK(dressed_shuffle_identity(1).rhs == d1_rhs);

  for (unsigned n = 0; n <= 5; ++n) {
    REQUIRE(zagier_shuffle_identity(n).holds());
    REQUIRE(dressed_shuffle_identity(n).holds());
  }
}

TEST_CASE("Euler decomposition matches the shuffle of A^{s-1}B and A^{t-1}B") {
  const auto two_two = euler_decomposition(2, 2);
  REQUIRE(two_two.size() == 2);
  CHECK(two_two[0] == DecompositionTerm{4, Composition{3, 1}});
  CHECK(two_two[1] == DecompositionTerm{2, Composition{2, 2}});

  CHECK_THROWS_AS(euler_decomposition(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(euler_decomposition(3, 1), std::invalid_argument);

  for (unsigned s = 2; s <= 10; ++s) {
    for (unsigned t = 2; s + t <= 12; ++t) {
      const auto terms = euler_decomposition(s, t);
      mpz_class total = 0;
      for (const auto& [c, comp] : terms) total += c;
      REQUIRE(total == binomial(s + t, s));

      const auto shuffled = poly_as_zeta_combination(
          shuffle_words(composition_to_word({s}), composition_to_word({t})));
      REQUIRE(terms.size() == shuffled.size());
      for (std::size_t i = 0; i < terms.size(); ++i) {
        REQUIRE(mpq_class(terms[i].first) == shuffled[i].first);
        REQUIRE(terms[i].second == shuffled[i].second);
      }
      REQUIRE(terms == euler_decomposition(t, s));
    }
  }
}

TEST_CASE("dihedral orbit counts") {
  CHECK(dihedral_orbit_count(1, 1) == 1);
  CHECK(dihedral_orbit_count(2, 3) == 5);
  CHECK(dihedral_orbit_count(4, 3) == 12);
  CHECK(dihedral_orbit_count(0, 5) == 1);
  CHECK(dihedral_orbit_count(3, 0) == 1);

  const unsigned grid[4][3] = {{1, 2, 3}, {1, 3, 5}, {1, 4, 8}, {1, 5, 12}};
  for (unsigned n = 1; n <= 4; ++n) {
    for (unsigned M = 1; M <= 3; ++M) REQUIRE(dihedral_orbit_count(n, M) == grid[n - 1][M - 1]);
  }

  // Direct orbit enumeration for a few larger cases.
  for (unsigned n = 1; n <= 3; ++n) {
    for (unsigned M = 0; M <= 6; ++M) {
      const unsigned len = 2 * n + 1;
      std::set<std::vector<unsigned>> representatives;
      std::vector<unsigned> v(len, 0);
      auto visit = [&](auto&& self, unsigned i, unsigned rest) -> void {
        if (i + 1 == len) {
          v[i] = rest;
          std::vector<unsigned> best = v;
          for (unsigned r = 0; r < len; ++r) {
            std::vector<unsigned> rot(len), ref(len);
            for (unsigned k = 0; k < len; ++k) {
              rot[(k + r) % len] = v[k];
              ref[(len - k + r) % len] = v[k];
            }
            best = std::min({best, rot, ref});
          }
          representatives.insert(best);
          return;
        }
        for (unsigned x = 0; x <= rest; ++x) {
          v[i] = x;
          self(self, i + 1, rest - x);
        }
      };
      visit(visit, 0, M);
      REQUIRE(dihedral_orbit_count(n, M) == representatives.size());
    }
  }
}
