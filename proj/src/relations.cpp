#include "mzv/relations.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mzv/errors.hpp"

namespace mzv {

RelationVector::RelationVector(std::vector<mpz_class> coefficients)
    : coefficients_(std::move(coefficients)) {
  mpz_class g = 0;
  for (const auto& a : coefficients_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  if (g == 0) throw std::invalid_argument("relation vector must be nonzero");
  const auto lead = std::find_if(coefficients_.begin(), coefficients_.end(),
                                 [](const mpz_class& a) { return a != 0; });
  if (*lead < 0) g = -g;
  for (auto& a : coefficients_) a /= g;
}

mpz_class RelationVector::max_abs() const {
  mpz_class best = 0;
  for (const auto& a : coefficients_) best = std::max<mpz_class>(best, abs(a));
  return best;
}

std::vector<std::string> RelationVector::to_strings() const {
  std::vector<std::string> out;
  for (const auto& a : coefficients_) out.push_back(a.get_str());
  return out;
}

// ---------------------------------------------------------------------------
// PSLQ

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;
using RealMatrix = std::vector<std::vector<Real>>;

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Real relation_residual(std::span<const RealValue> values, const std::vector<mpz_class>& a,
                       mpfr_prec_t bits) {
  Real sum(bits);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) sum += values[i].value * Real(a[i], bits);
  }
  return sum.abs();
}

Real max_magnitude(std::span<const RealValue> values, mpfr_prec_t bits) {
  Real best(bits);
  for (const auto& v : values) {
    if (v.value.abs() > best) best = Real(v.value.abs(), bits);
  }
  return best;
}

class Pslq {
 public:
  Pslq(std::span<const RealValue> values, mpfr_prec_t bits)
      : n_(values.size()), bits_(bits), y_(n_, Real(bits)), H_(n_), A_(identity(n_)),
        B_(identity(n_)) {
    Real norm2(bits);
    std::vector<Real> x;
    x.reserve(n_);
    for (const auto& v : values) {
      x.emplace_back(v.value, bits);
      norm2 += x.back() * x.back();
    }
    // Partial norms s_k = sqrt(Σ_{j>=k} x_j²) of the normalised vector.
    std::vector<Real> s(n_, Real(bits));
    Real tail(bits);
    for (std::size_t k = n_; k-- > 0;) {
      tail += x[k] * x[k];
      s[k] = tail;
      mpfr_sqrt(s[k].get(), s[k].get(), MPFR_RNDN);
    }
    const Real scale = s[0];
    for (std::size_t k = 0; k < n_; ++k) {
      y_[k] = x[k] / scale;
      s[k] /= scale;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      H_[i].assign(n_ - 1, Real(bits));
      for (std::size_t j = 0; j < std::min(i + 1, n_ - 1); ++j) {
        if (i == j) {
          H_[i][j] = s[j + 1] / s[j];
        } else {
          H_[i][j] = -(y_[i] * y_[j]) / (s[j] * s[j + 1]);
        }
      }
    }
    for (std::size_t i = 1; i < n_; ++i) reduce_row(i, i - 1);

    gamma_powers_.reserve(n_);
    const Real gamma = Real(2L, bits) / Real::sqrt(3, bits);
    Real g = gamma;
    for (std::size_t i = 0; i + 1 < n_; ++i) {
      gamma_powers_.push_back(g);
      g *= gamma;
    }
  }

  // One PSLQ iteration. Returns false when H has a zero diagonal entry.
  bool step() {
    std::size_t m = 0;
    Real best(bits_);
    for (std::size_t i = 0; i + 1 < n_; ++i) {
      Real v = gamma_powers_[i] * H_[i][i].abs();
      if (v > best) {
        best = std::move(v);
        m = i;
      }
    }
    std::swap(y_[m], y_[m + 1]);
    std::swap(A_[m], A_[m + 1]);
    std::swap(H_[m], H_[m + 1]);
    for (auto& row : B_) std::swap(row[m], row[m + 1]);

    if (m + 2 < n_) {
      Real t0 = H_[m][m] * H_[m][m] + H_[m][m + 1] * H_[m][m + 1];
      mpfr_sqrt(t0.get(), t0.get(), MPFR_RNDN);
      const Real t1 = H_[m][m] / t0;
      const Real t2 = H_[m][m + 1] / t0;
      for (std::size_t i = m; i < n_; ++i) {
        const Real t3 = H_[i][m];
        const Real t4 = H_[i][m + 1];
        H_[i][m] = t1 * t3 + t2 * t4;
        H_[i][m + 1] = t1 * t4 - t2 * t3;
      }
    }
    for (std::size_t i = m + 1; i < n_; ++i) {
      reduce_row(i, std::min(i - 1, m + 1));
    }
    for (std::size_t j = 0; j + 1 < n_; ++j) {
      if (H_[j][j].is_zero()) return false;
    }
    return true;
  }

  // Lower bound on the Euclidean norm of any relation.
  double norm_bound() const {
    Real largest(bits_);
    for (std::size_t j = 0; j + 1 < n_; ++j) largest = std::max(largest, H_[j][j].abs());
    if (largest.is_zero()) return INFINITY;
    return std::pow(10.0, -largest.log10_abs());
  }

  std::size_t smallest_y() const {
    std::size_t best = 0;
    for (std::size_t j = 1; j < n_; ++j) {
      if (y_[j].abs() < y_[best].abs()) best = j;
    }
    return best;
  }

  const Real& y(std::size_t j) const { return y_[j]; }

  std::vector<mpz_class> column(std::size_t j) const {
    std::vector<mpz_class> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = B_[i][j];
    return out;
  }

  // Largest |entry| of A, in decimal digits.
  double a_digits() const {
    std::size_t best = 0;
    for (const auto& row : A_) {
      for (const auto& a : row) best = std::max(best, mpz_sizeinbase(a.get_mpz_t(), 10));
    }
    return static_cast<double>(best);
  }

 private:
  // Hermite-reduce row i against rows j_max, ..., 0.
  void reduce_row(std::size_t i, std::size_t j_max) {
    for (std::size_t j = j_max + 1; j-- > 0;) {
      if (H_[j][j].is_zero()) continue;
      const mpz_class t = (H_[i][j] / H_[j][j]).round();
      if (t == 0) continue;
      const Real tr(t, bits_);
      y_[j] += tr * y_[i];
      for (std::size_t k = 0; k <= j; ++k) H_[i][k] -= tr * H_[j][k];
      for (std::size_t k = 0; k < n_; ++k) {
        A_[i][k] -= t * A_[j][k];
        B_[k][j] += t * B_[k][i];
      }
    }
  }

  std::size_t n_;
  mpfr_prec_t bits_;
  std::vector<Real> y_;
  RealMatrix H_;
  IntMatrix A_;
  IntMatrix B_;
  std::vector<Real> gamma_powers_;
};

}  // namespace

RelationSearch find_relation(std::span<const RealValue> values, const mpz_class& max_norm,
                             const PrecisionContext& ctx) {
  if (values.size() < 2) throw std::invalid_argument("need at least two values");
  for (const auto& v : values) {
    if (v.digits < ctx.working_digits()) {
      throw std::invalid_argument("value computed at " + std::to_string(v.digits) +
                                  " digits, context requires " +
                                  std::to_string(ctx.working_digits()));
    }
  }
  const mpfr_prec_t bits = ctx.working_bits();
  const std::size_t n = values.size();
  RelationSearch out;

  // An exactly vanishing entry is its own relation.
  for (std::size_t i = 0; i < n; ++i) {
    if (values[i].value.is_zero()) {
      std::vector<mpz_class> a(n, 0);
      a[i] = 1;
      out.relation = RelationVector(std::move(a));
      return out;
    }
  }

  const Real scale = max_magnitude(values, bits);
  const Real tolerance = ten_to_minus(ctx.target_digits() - 10, bits) * scale;
  const double exclusion = std::sqrt(static_cast<double>(n)) * max_norm.get_d();

  auto accept = [&](const std::vector<mpz_class>& a) {
    if (RelationVector(a).max_abs() > max_norm) return false;
    return relation_residual(values, a, bits) < tolerance;
  };

  Pslq pslq(values, bits);
  const double digit_budget = 0.9 * ctx.working_digits();
  for (;;) {
    const bool nonsingular = pslq.step();
    ++out.iterations;

    const std::size_t j = pslq.smallest_y();
    if (!nonsingular || pslq.y(j).abs() < tolerance) {
      auto a = pslq.column(j);
      if (accept(a)) {
        out.relation = RelationVector(std::move(a));
        out.norm_bound = pslq.norm_bound();
        return out;
      }
      if (!nonsingular) break;
    }
    out.norm_bound = pslq.norm_bound();
    if (out.norm_bound > exclusion) return out;
    if (pslq.a_digits() > digit_budget) {
      throw PrecisionError("PSLQ exhausted " + std::to_string(ctx.working_digits()) +
                           " digits before excluding relations up to norm " +
                           max_norm.get_str() + "; increase --digits");
    }
  }
  return out;
}

bool relation_holds(const RelationVector& relation, std::span<const RealValue> values,
                    const PrecisionContext& ctx) {
  if (relation.size() != values.size()) {
    throw std::invalid_argument("relation and value vector differ in length");
  }
  const mpfr_prec_t bits = ctx.working_bits();
  return relation_residual(values, relation.coefficients(), bits) <
         ten_to_minus(ctx.target_digits() - 10, bits) * max_magnitude(values, bits);
}

// ---------------------------------------------------------------------------
// V_{n,M}

std::vector<std::string> VNM::labels() const {
  std::vector<std::string> out;
  for (const auto& v : entries) out.push_back(v.to_string());
  out.push_back("zeta2^{" + std::to_string(appended_twos()) + "}");
  return out;
}

VNM build_V(unsigned n, unsigned M) {
  if (n == 0) throw std::invalid_argument("build_V needs n >= 1");
  VNM out{n, M, {}};
  for (auto& v : insertion_vectors(n, M)) {
    if (v <= v.reversed()) out.entries.push_back(std::move(v));
  }
  return out;
}

int required_digits(std::size_t vector_length) {
  return std::max(300, static_cast<int>(20 * vector_length));
}

namespace {

std::vector<RealValue> evaluate_V(const VNM& v, const PrecisionContext& ctx) {
  std::vector<RealValue> out;
  out.reserve(v.length());
  for (const auto& e : v.entries) out.push_back(Z(e, ctx));
  out.push_back(zeta_two_power(v.appended_twos(), ctx));
  return out;
}

}  // namespace

RelationReport find_relations(unsigned n, unsigned M, const PrecisionContext& requested,
                              const mpz_class& max_norm) {
  RelationReport report;
  report.vector = build_V(n, M);
  report.max_norm = max_norm;
  const std::size_t len = report.vector.length();
  const PrecisionContext ctx(std::max(requested.target_digits(), required_digits(len)),
                             requested.working_digits() - requested.target_digits());
  report.digits = ctx.target_digits();

  const auto values = evaluate_V(report.vector, ctx);
  std::vector<RealValue> check_values;
  const PrecisionContext check_ctx = ctx.doubled();

  std::vector<std::size_t> active(len);
  for (std::size_t i = 0; i < len; ++i) active[i] = i;

  while (active.size() >= 2) {
    std::vector<RealValue> subset;
    subset.reserve(active.size());
    for (std::size_t i : active) subset.push_back(values[i]);

    const auto search = find_relation(subset, max_norm, ctx);
    report.exclusion_bound = search.norm_bound;
    if (!search.relation) break;

    const auto& local = search.relation->coefficients();
    std::vector<mpz_class> full(len, 0);
    for (std::size_t k = 0; k < active.size(); ++k) full[active[k]] = local[k];

    RelationVector relation(std::move(full));
    if (check_values.empty()) check_values = evaluate_V(report.vector, check_ctx);
    if (!relation_holds(relation, check_values, check_ctx)) {
      throw PrecisionError("relation found at " + std::to_string(ctx.target_digits()) +
                           " digits is unstable at " +
                           std::to_string(check_ctx.target_digits()) +
                           " digits; increase --digits");
    }
    report.relations.push_back(std::move(relation));

    std::size_t drop = 0;
    for (std::size_t k = 1; k < local.size(); ++k) {
      if (abs(local[k]) > abs(local[drop])) drop = k;
    }
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(drop));
  }
  return report;
}

std::size_t relation_count(unsigned n, unsigned M, const PrecisionContext& ctx,
                           const mpz_class& max_norm) {
  return find_relations(n, M, ctx, max_norm).count();
}

}  // namespace mzv
