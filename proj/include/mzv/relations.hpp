#pragma once

// Integer relation detection (PSLQ) and the relation counts for the vectors
// V_{n,M} of insertion Z-values.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mzv/evaluate.hpp"
#include "mzv/real.hpp"

namespace mzv {

/// Nonzero integer vector with gcd 1 and positive leading nonzero entry.
class RelationVector {
 public:
  /// Divides out the gcd and fixes the sign. Throws on the zero vector.
  explicit RelationVector(std::vector<mpz_class> coefficients);

  const std::vector<mpz_class>& coefficients() const noexcept { return coefficients_; }
  std::size_t size() const noexcept { return coefficients_.size(); }
  mpz_class max_abs() const;
  std::vector<std::string> to_strings() const;

  friend bool operator==(const RelationVector&, const RelationVector&) = default;

 private:
  std::vector<mpz_class> coefficients_;
};

struct RelationSearch {
  std::optional<RelationVector> relation;
  /// No relation with Euclidean norm below this bound exists.
  double norm_bound = 0.0;
  std::size_t iterations = 0;
};

/// PSLQ with γ = 2/√3. A relation is accepted when max|a_i| <= max_norm and
/// |Σ a_i z_i| < 10^-(target-10) · max|z_i|.
/// Throws std::invalid_argument for fewer than two values or values computed
/// below ctx.working_digits.
RelationSearch find_relation(std::span<const RealValue> values, const mpz_class& max_norm,
                             const PrecisionContext& ctx);

/// |Σ a_i z_i| < 10^-(target-10) · max|z_i|, evaluated at ctx's precision.
bool relation_holds(const RelationVector& relation, std::span<const RealValue> values,
                    const PrecisionContext& ctx);

/// Duality-reduced Z-values with 2n+1 slots and M inserted 2's, followed by
/// ζ({2}^{2n+M}).
struct VNM {
  unsigned n = 0;
  unsigned M = 0;
  /// Lexicographic; of each reversal pair only the smaller vector is kept.
  std::vector<InsertionVector> entries;

  unsigned appended_twos() const noexcept { return 2 * n + M; }
  std::size_t length() const noexcept { return entries.size() + 1; }
  /// Entry labels: "m_0,...,m_2n" for Z-values, then "zeta2^{k}".
  std::vector<std::string> labels() const;
};

VNM build_V(unsigned n, unsigned M);

/// Digits needed for a relation search on a vector of this length:
/// max(300, 20 · length).
int required_digits(std::size_t vector_length);

struct RelationReport {
  VNM vector;
  /// Relations over the full vector (eliminated entries carry 0).
  std::vector<RelationVector> relations;
  int digits = 0;
  mpz_class max_norm;
  /// Norm bound of the final unsuccessful search.
  double exclusion_bound = 0.0;

  std::size_t count() const noexcept { return relations.size(); }
};

/// Counts independent relations of V_{n,M} by deflation: find a relation,
/// drop the entry with the largest |coefficient|, repeat. The context's
/// target is raised to required_digits() when smaller. Each relation is
/// re-checked against values at twice the precision; a relation that does
/// not survive raises PrecisionError.
RelationReport find_relations(unsigned n, unsigned M, const PrecisionContext& ctx,
                              const mpz_class& max_norm);

std::size_t relation_count(unsigned n, unsigned M, const PrecisionContext& ctx,
                           const mpz_class& max_norm);

}  // namespace mzv
