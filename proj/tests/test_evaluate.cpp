#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "mzv/errors.hpp"
#include "mzv/evaluate.hpp"
#include "oracles.hpp"

using namespace mzv;

namespace {

Word W(std::string_view s) { return Word::parse(s); }

// Reference constants straight from MPFR, independent of the series code.
Real log2_const(mpfr_prec_t bits) {
  Real out(bits);
  mpfr_const_log2(out.get(), MPFR_RNDN);
  return out;
}

Real riemann_zeta(unsigned long s, mpfr_prec_t bits) {
  Real out(bits);
  mpfr_zeta_ui(out.get(), s, MPFR_RNDN);
  return out;
}

Real pi_pow(unsigned k, mpfr_prec_t bits) { return Real::pi(bits).pow(k); }

bool close(const Real& a, const Real& b, int digits) {
  return (a - b).abs() < ten_to_minus(digits, a.precision());
}

std::vector<Word> admissible_words(unsigned max_weight) {
  std::vector<Word> out;
  for (unsigned weight = 2; weight <= max_weight; ++weight) {
    for (unsigned mask = 0; mask < (1u << (weight - 2)); ++mask) {
      Word w{Letter::A};
      for (unsigned b = 0; b < weight - 2; ++b) w.push_back((mask >> b) & 1u ? Letter::B : Letter::A);
      w.push_back(Letter::B);
      out.push_back(w);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("series coefficients stay within [-1, 1]") {
  // Every word of length <= 8 ending in B.
  std::vector<std::string> words{"B"};
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].size() < 8) {
      words.push_back("A" + words[i]);
      words.push_back("B" + words[i]);
    }
  }
  const Real one(1L, 128);
  for (const auto& w : words) {
    const auto c = series_coefficients(W(w), 64, 128);
    for (std::size_t m = 1; m < c.size(); ++m) REQUIRE(c[m].abs() <= one);
  }
  // c_m(B) = 1/m and c_m(AB) = 1/m².
  const auto b = series_coefficients(W("B"), 10, 128);
  const auto ab = series_coefficients(W("AB"), 10, 128);
  CHECK(b[0].is_zero());
  CHECK(close(b[7], Real(mpq_class(1, 7), 128), 30));
  CHECK(close(ab[7], Real(mpq_class(1, 49), 128), 30));
}

TEST_CASE("integrals over [0, 1/2]") {
  const PrecisionContext ctx(200);
  const auto bits = ctx.working_bits();
  const Real log2 = log2_const(bits);

  const auto b = li_half(W("B"), ctx);
  CHECK(b.digits == ctx.working_digits());
  CHECK(close(b.value, log2, 200));

  const Real dilog = pi_pow(2, bits) / 12UL - log2 * log2 / 2UL;
  CHECK(close(li_half(W("AB"), ctx).value, dilog, 200));

  const PrecisionContext ctx100(100);
  CHECK(close(li_half(W("BB"), ctx100).value, log2 * log2 / 2UL, 100));

  CHECK_THROWS_AS(li_half(Word{}, ctx), DivergenceError);
  CHECK_THROWS_AS(li_half(W("BA"), ctx), DivergenceError);
}

TEST_CASE("zeta of words and compositions") {
  const PrecisionContext ctx(100);
  const auto bits = ctx.working_bits();

  CHECK(close(zeta_word(W("AB"), ctx).value, pi_pow(2, bits) / 6UL, 100));
  CHECK(close(zeta_word(W("AABB"), ctx).value, pi_pow(4, bits) / 360UL, 100));
  CHECK(close(zeta_word(W("AAB"), ctx).value, riemann_zeta(3, bits), 100));
  CHECK(std::abs(zeta_word(W("AAB"), ctx).value.to_double() - oracle::nested_sum_zeta({3})) < 1e-10);

  CHECK(close(zeta({2}, ctx).value, pi_pow(2, bits) / 6UL, 100));
  CHECK(close(zeta({3, 1}, ctx).value, pi_pow(4, bits) / 360UL, 100));
  CHECK(close(zeta({2, 1}, ctx).value, riemann_zeta(3, bits), 100));
  for (unsigned s = 2; s <= 12; ++s) {
    REQUIRE(close(zeta({s}, ctx).value, riemann_zeta(s, bits), 100));
  }

  CHECK_THROWS_AS(zeta_word(W("BAB"), ctx), DivergenceError);
  CHECK_THROWS_AS(zeta_word(Word{}, ctx), DivergenceError);
  CHECK_THROWS_AS(zeta({1, 2}, ctx), DivergenceError);
}

TEST_CASE("zeta of {2}^r") {
  const PrecisionContext ctx(100);
  const auto bits = ctx.working_bits();
  CHECK(zeta_two_power(0, ctx).value == Real(1L, bits));
  CHECK(close(zeta_two_power(1, ctx).value, pi_pow(2, bits) / 6UL, 100));
  CHECK(close(zeta_two_power(2, ctx).value, pi_pow(4, bits) / 120UL, 100));
  for (unsigned r = 1; r <= 6; ++r) {
    const Composition twos(std::vector<unsigned>(r, 2));
    REQUIRE(close(zeta(twos, ctx).value, zeta_two_power(r, ctx).value, 100));
  }
}

TEST_CASE("Hölder convolution agrees with truncated nested sums") {
  const PrecisionContext ctx(30);
  for (const auto& w : admissible_words(6)) {
    const auto s = word_to_composition(w);
    const double expected = oracle::nested_sum_zeta(s.parts());
    const double got = zeta_word(w, ctx).value.to_double();
    INFO("zeta(" << s.to_string() << ")");
    REQUIRE(std::abs(got - expected) < 1e-8 * std::abs(expected));
  }
}

TEST_CASE("products of MZVs follow the shuffle rule") {
  const PrecisionContext ctx(60);
  const auto words = admissible_words(6);
  for (const auto& u : words) {
    for (const auto& v : words) {
      if (u.size() + v.size() > 8 || v < u) continue;
      Real expanded(ctx.working_bits());
      for (const auto& [c, s] : poly_as_zeta_combination(shuffle_words(u, v))) {
        expanded += zeta(s, ctx).value * Real(c, ctx.working_bits());
      }
      const Real product = zeta_word(u, ctx).value * zeta_word(v, ctx).value;
      INFO(u.str() << " x " << v.str());
      REQUIRE(close(product, expanded, ctx.target_digits() - 5));
    }
  }
}

TEST_CASE("duality leaves values unchanged") {
  const PrecisionContext ctx(60);
  for (const auto& w : admissible_words(8)) {
    const auto s = word_to_composition(w);
    REQUIRE(close(zeta(s, ctx).value, zeta(dual(s), ctx).value, ctx.target_digits() - 5));
  }
}

TEST_CASE("doubling the precision only changes digits beyond the target") {
  const PrecisionContext ctx(80);
  for (const auto& s : {Composition{5, 3}, Composition{3, 1, 2}, Composition{2, 2, 3, 1, 2}}) {
    const Real low = zeta(s, ctx).value;
    const Real high = zeta(s, ctx.doubled()).value;
    REQUIRE(close(Real(low, high.precision()), high, 80));
  }
}

TEST_CASE("insertion vectors") {
  CHECK_THROWS_AS(InsertionVector({0, 1}), std::invalid_argument);
  const InsertionVector v{2, 0, 1};
  CHECK(v.n() == 1);
  CHECK(v.total() == 3);
  CHECK(v.weight() == 10);
  CHECK(v.arguments() == std::vector<unsigned>{2, 2, 3, 1, 2});
  CHECK(v.rotated(1) == InsertionVector{1, 2, 0});
  CHECK(v.rotated(3) == v);
  CHECK(v.reversed() == InsertionVector{1, 0, 2});
  CHECK(InsertionVector{0}.arguments().empty());

  CHECK(insertion_vectors(1, 1) ==
        std::vector<InsertionVector>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  CHECK(insertion_vectors(2, 3).size() == 35);
}

TEST_CASE("Z-values") {
  const PrecisionContext ctx(100);
  const auto bits = ctx.working_bits();
  CHECK(Z({2, 0, 1}, ctx).value == zeta({2, 2, 3, 1, 2}, ctx).value);
  CHECK(close(Z({0, 0, 0}, ctx).value, pi_pow(4, bits) / 360UL, 100));
  CHECK(close(Z({1}, ctx).value, pi_pow(2, bits) / 6UL, 100));
  CHECK(Z({0}, ctx).value == Real(1L, bits));
}

TEST_CASE("cyclic sums") {
  const Real tiny95 = ten_to_minus(95, 512);
  CHECK(cyclic_residual({0, 2, 1}, PrecisionContext(100)).value < tiny95);
  CHECK(cyclic_residual({0, 0, 0}, PrecisionContext(50)).value < ten_to_minus(45, 512));
  CHECK(cyclic_residual({1, 0, 0, 0, 0}, PrecisionContext(100)).value < tiny95);
  CHECK(cyclic_residual({4}, PrecisionContext(100)).value < tiny95);

  // The instance written out: ζ(3,2,2,1,2)+ζ(2,2,3,2,1)+ζ(2,3,1,2,2) = π^10/11!.
  const PrecisionContext ctx(100);
  const Real sum = zeta({3, 2, 2, 1, 2}, ctx).value + zeta({2, 2, 3, 2, 1}, ctx).value +
                   zeta({2, 3, 1, 2, 2}, ctx).value;
  CHECK(close(sum, pi_power_over_factorial(10, 11, ctx.working_bits()), 95));

  // A false variant misses by O(1): dropping one rotation.
  const Real partial = zeta({3, 2, 2, 1, 2}, ctx).value + zeta({2, 2, 3, 2, 1}, ctx).value;
  CHECK_FALSE(close(partial, pi_power_over_factorial(10, 11, ctx.working_bits()), 5));
}

TEST_CASE("Zagier and dressed residuals") {
  const Real tiny95 = ten_to_minus(95, 512);
  for (unsigned n : {1u, 2u, 4u}) REQUIRE(zagier_residual(n, PrecisionContext(100)).value < tiny95);
  for (unsigned n : {1u, 2u}) REQUIRE(dressed_residual(n, PrecisionContext(100)).value < tiny95);
  CHECK(dressed_residual(3, PrecisionContext(50)).value < ten_to_minus(45, 512));

  const PrecisionContext ctx(100);
  const Real dressed_one = zeta({2, 3, 1}, ctx).value + zeta({3, 2, 1}, ctx).value +
                           zeta({3, 1, 2}, ctx).value;
  CHECK(close(dressed_one, pi_power_over_factorial(6, 7, ctx.working_bits()), 95));

  CHECK_THROWS_AS(zagier_residual(0, ctx), std::invalid_argument);
  CHECK_THROWS_AS(dressed_residual(0, ctx), std::invalid_argument);
}

TEST_CASE("three-term Z identity") {
  CHECK(conjecture2_residual(0, 0, 0, 0, 0, PrecisionContext(50)).value.is_zero());
  const Real tiny95 = ten_to_minus(95, 512);
  CHECK(conjecture2_residual(1, 0, 0, 0, 0, PrecisionContext(100)).value < tiny95);
  CHECK(conjecture2_residual(1, 2, 0, 1, 0, PrecisionContext(100)).value < tiny95);
}
