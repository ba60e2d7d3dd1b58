// mzv: command-line front end for MZV evaluation, shuffle computations,
// identity verification and integer-relation searches.
//
// Exit codes: 0 all checks pass, 1 a check failed or was unstable,
// 2 usage or parse error.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <fmt/core.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "mzv/combinatorics.hpp"
#include "mzv/errors.hpp"
#include "mzv/evaluate.hpp"
#include "mzv/parse.hpp"
#include "mzv/relations.hpp"
#include "mzv/report.hpp"
#include "mzv/word.hpp"

namespace {

using json = nlohmann::json;
using mzv::ResidualEntry;
using mzv::RunReport;

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2 };

struct Options {
  int digits = 100;
  bool json = false;
  std::string max_norm = "1000000";
  std::string n_range;
  std::optional<unsigned> M;
  std::string vector;
  std::optional<unsigned> n_max;
  std::optional<unsigned> max_weight;
  bool all = false;
  bool as_zeta = false;
  std::string composition;
  std::string target;
  std::string left;
  std::string right;
};

int default_digits() {
  if (const char* env = std::getenv("MZV_DEFAULT_DIGITS")) {
    try {
      const int d = std::stoi(env);
      if (d > 0) return d;
    } catch (const std::exception&) {
    }
    throw mzv::ParseError(std::string("MZV_DEFAULT_DIGITS must be a positive integer, got '") +
                          env + "'");
  }
  return 100;
}

std::string exact_residual(const mpq_class& difference) {
  if (difference == 0) return "0";
  return fmt::format("{:.6e}", mpq_class(abs(difference)).get_d());
}

std::string polynomial_residual(const mzv::PolynomialIdentity& id) {
  mpq_class worst = 0;
  const mzv::WordPolynomial difference = id.lhs - id.rhs;
  for (const auto& [w, c] : difference.terms()) worst = std::max<mpq_class>(worst, abs(c));
  return exact_residual(worst);
}

// One verification instance: a sortable key and a deferred residual.
struct Instance {
  std::string key;
  std::function<std::string()> residual;
};

// Evaluates instances on worker threads and emits them in list order as
// soon as each prefix is complete.
std::vector<ResidualEntry> run_instances(const std::vector<Instance>& instances, int digits,
                                         bool as_json) {
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::future<std::string>> pending(instances.size());
  std::size_t launched = 0;
  auto launch_up_to = [&](std::size_t limit) {
    for (; launched < std::min(limit, instances.size()); ++launched) {
      pending[launched] = std::async(std::launch::async, instances[launched].residual);
    }
  };
  launch_up_to(workers);

  std::vector<ResidualEntry> out;
  out.reserve(instances.size());
  for (std::size_t i = 0; i < instances.size(); ++i) {
    std::string residual = pending[i].get();
    launch_up_to(i + 1 + workers);
    const bool ok = mzv::residual_passes(residual, digits);
    if (as_json) {
      std::cout << json{{"instance", instances[i].key}, {"residual", residual}, {"pass", ok}}.dump()
                << std::endl;
    } else {
      std::cout << fmt::format("{:<32} {:>14}  {}", instances[i].key, residual,
                               ok ? "ok" : "FAIL")
                << std::endl;
    }
    out.push_back({instances[i].key, std::move(residual)});
  }
  return out;
}

std::string numeric(const mzv::RealValue& v) { return v.value.to_scientific(); }

std::vector<Instance> verify_instances(const Options& opt, const mzv::PrecisionContext& ctx,
                                       json& inputs) {
  std::vector<Instance> out;
  const std::string& target = opt.target;

  if (target == "zagier" || target == "dressed") {
    const auto [lo, hi] = mzv::parse_range(opt.n_range.empty() ? "1..3" : opt.n_range);
    if (lo == 0) throw mzv::ParseError("--n must be at least 1");
    inputs["n"] = {lo, hi};
    for (unsigned n = lo; n <= hi; ++n) {
      if (target == "zagier") {
        out.push_back({"zeta({3,1}^" + std::to_string(n) + ")",
                       [n, ctx] { return numeric(mzv::zagier_residual(n, ctx)); }});
      } else {
        out.push_back({"dressed(n=" + std::to_string(n) + ")",
                       [n, ctx] { return numeric(mzv::dressed_residual(n, ctx)); }});
      }
    }
  } else if (target == "cyclic") {
    std::vector<mzv::InsertionVector> vectors;
    if (!opt.vector.empty()) {
      try {
        vectors.emplace_back(mzv::parse_unsigned_list(opt.vector));
      } catch (const std::invalid_argument& e) {
        throw mzv::ParseError(e.what());
      }
      inputs["vector"] = opt.vector;
    } else if (opt.all) {
      const unsigned w = opt.max_weight.value_or(18);
      inputs["all"] = true;
      inputs["max_weight"] = w;
      for (unsigned n = 0; 4 * n <= w; ++n) {
        for (unsigned M = 0; 4 * n + 2 * M <= w; ++M) {
          for (auto& v : mzv::insertion_vectors(n, M)) vectors.push_back(std::move(v));
        }
      }
    } else {
      throw mzv::ParseError("verify cyclic needs --vector or --all");
    }
    for (auto& v : vectors) {
      out.push_back({"Z-cyclic(" + v.to_string() + ")",
                     [v, ctx] { return numeric(mzv::cyclic_residual(v, ctx)); }});
    }
  } else if (target == "conjecture2") {
    std::vector<std::vector<unsigned>> cases;
    if (!opt.vector.empty()) {
      auto v = mzv::parse_unsigned_list(opt.vector);
      if (v.size() != 5) throw mzv::ParseError("conjecture2 takes --vector a1,a2,a3,b1,b2");
      cases.push_back(std::move(v));
      inputs["vector"] = opt.vector;
    } else if (opt.all) {
      const unsigned w = opt.max_weight.value_or(14);
      inputs["all"] = true;
      inputs["max_weight"] = w;
      for (unsigned M = 0; 8 + 2 * M <= w; ++M) {
        for (const auto& v : mzv::insertion_vectors(2, M)) cases.push_back(v.slots());
      }
    } else {
      throw mzv::ParseError("verify conjecture2 needs --vector or --all");
    }
    for (const auto& c : cases) {
      out.push_back({"conjecture2(" + mzv::InsertionVector(c).to_string() + ")", [c, ctx] {
                       return numeric(mzv::conjecture2_residual(c[0], c[1], c[2], c[3], c[4], ctx));
                     }});
    }
  } else if (target == "lemmas") {
    const unsigned n_max = opt.n_max.value_or(50);
    inputs["n_max"] = n_max;
    for (unsigned n = 0; n <= n_max; ++n) {
      out.push_back({fmt::format("L1(n={})", n), [n] {
                       const auto id = mzv::alternating_factorial_sum(n);
                       return exact_residual(id.lhs - id.rhs);
                     }});
      out.push_back({fmt::format("L2(n={})", n), [n] {
                       return exact_residual(mzv::weighted_binomial_sum(n) - (n == 0 ? 1 : 0));
                     }});
      out.push_back({fmt::format("L3(n={})", n), [n] {
                       const auto id = mzv::weighted_factorial_sum(n);
                       return exact_residual(id.lhs - id.rhs);
                     }});
    }
  } else if (target == "prop3") {
    const unsigned n_max = opt.n_max.value_or(8);
    inputs["n_max"] = n_max;
    for (unsigned p = 0; p <= n_max; ++p) {
      for (unsigned q = 0; p + q <= n_max; ++q) {
        out.push_back({fmt::format("(AB)^{}*(AB)^{}", p, q), [p, q] {
                         const mzv::Word ab{mzv::Letter::A, mzv::Letter::B};
                         return polynomial_residual(
                             {mzv::ab_shuffle_expansion(p, q),
                              mzv::shuffle_words(mzv::repeat(ab, p), mzv::repeat(ab, q))});
                       }});
      }
    }
  } else if (target == "corollaries") {
    const unsigned n_max = opt.n_max.value_or(5);
    inputs["n_max"] = n_max;
    for (unsigned n = 0; n <= n_max; ++n) {
      out.push_back({fmt::format("zagier-shuffle(n={})", n),
                     [n] { return polynomial_residual(mzv::zagier_shuffle_identity(n)); }});
    }
    for (unsigned n = 0; n <= n_max; ++n) {
      out.push_back({fmt::format("dressed-shuffle(n={})", n),
                     [n] { return polynomial_residual(mzv::dressed_shuffle_identity(n)); }});
    }
  } else if (target == "euler") {
    const unsigned w = opt.max_weight.value_or(10);
    inputs["max_weight"] = w;
    for (unsigned s = 2; 2 * s <= w; ++s) {
      for (unsigned t = s; s + t <= w; ++t) {
        out.push_back({fmt::format("euler({},{}) symbolic", s, t), [s, t] {
                         const auto symbolic = mzv::euler_decomposition(s, t);
                         const auto shuffled = mzv::poly_as_zeta_combination(mzv::shuffle_words(
                             mzv::composition_to_word({s}), mzv::composition_to_word({t})));
                         bool same = symbolic.size() == shuffled.size();
                         for (std::size_t i = 0; same && i < symbolic.size(); ++i) {
                           same = mpq_class(symbolic[i].first) == shuffled[i].first &&
                                  symbolic[i].second == shuffled[i].second;
                         }
                         return std::string(same ? "0" : "1");
                       }});
        out.push_back({fmt::format("euler({},{}) numeric", s, t), [s, t, ctx] {
                         const auto bits = ctx.working_bits();
                         mzv::Real rhs(bits);
                         for (const auto& [c, comp] : mzv::euler_decomposition(s, t)) {
                           rhs += mzv::zeta(comp, ctx).value * mzv::Real(c, bits);
                         }
                         const mzv::Real lhs =
                             mzv::zeta({s}, ctx).value * mzv::zeta({t}, ctx).value;
                         return (lhs - rhs).abs().to_scientific();
                       }});
      }
    }
  } else if (target == "dual") {
    const unsigned w = opt.max_weight.value_or(8);
    inputs["max_weight"] = w;
    // Admissible words of each weight, i.e. A·{A,B}^{w-2}·B.
    for (unsigned weight = 2; weight <= w; ++weight) {
      for (unsigned mask = 0; mask < (1u << (weight - 2)); ++mask) {
        mzv::Word word{mzv::Letter::A};
        for (unsigned b = weight - 2; b-- > 0;) {
          word.push_back((mask >> b) & 1u ? mzv::Letter::B : mzv::Letter::A);
        }
        word.push_back(mzv::Letter::B);
        const auto s = mzv::word_to_composition(word);
        out.push_back({"dual(" + s.to_string() + ")", [s, ctx] {
                         const auto d = mzv::dual(s);
                         return (mzv::zeta(s, ctx).value - mzv::zeta(d, ctx).value)
                             .abs()
                             .to_scientific();
                       }});
      }
    }
  } else {
    throw mzv::ParseError("unknown verify target '" + target + "'");
  }
  return out;
}

int cmd_eval(const Options& opt, RunReport& report) {
  const auto s = mzv::parse_composition(opt.composition);
  report.inputs = {{"composition", s.to_string()}};
  const mzv::PrecisionContext ctx(opt.digits);
  const auto value = mzv::zeta(s, ctx).value.to_fixed(opt.digits);
  report.data = {{"value", value}, {"weight", s.weight()}, {"depth", s.depth()}};
  if (!opt.json) std::cout << value << std::endl;
  return kOk;
}

int cmd_shuffle(const Options& opt, RunReport& report) {
  const auto u = mzv::parse_word_expression(opt.left);
  const auto v = mzv::parse_word_expression(opt.right);
  report.inputs = {{"left", u.str()}, {"right", v.str()}, {"as_zeta", opt.as_zeta}};
  const auto product = mzv::shuffle_words(u, v);
  report.data = {{"polynomial", product.to_string()}, {"terms", product.to_json()}};
  if (!opt.json) std::cout << product.to_string() << std::endl;
  if (opt.as_zeta) {
    const bool admissible = std::all_of(product.terms().begin(), product.terms().end(),
                                        [](const auto& t) { return t.first.admissible(); });
    if (admissible) {
      std::string text;
      json terms = json::array();
      for (const auto& [c, s] : mzv::poly_as_zeta_combination(product)) {
        if (!text.empty()) text += " + ";
        text += c.get_str() + "*zeta(" + s.to_string() + ")";
        terms.push_back({{"coefficient", c.get_str()}, {"composition", s.parts()}});
      }
      report.data["zeta"] = terms;
      if (!opt.json) std::cout << text << std::endl;
    } else {
      report.data["zeta"] = nullptr;
      if (!opt.json) std::cout << "(not every term is admissible)" << std::endl;
    }
  }
  return kOk;
}

int cmd_verify(const Options& opt, RunReport& report) {
  json inputs = {{"target", opt.target}};
  const mzv::PrecisionContext ctx(opt.digits);
  const auto instances = verify_instances(opt, ctx, inputs);
  report.inputs = inputs;
  report.residuals = run_instances(instances, opt.digits, opt.json);
  report.status = report.residual_status();
  report.data = {{"instances", report.residuals.size()}};
  return report.status == "pass" ? kOk : kCheckFailed;
}

int cmd_orbits(const Options& opt, RunReport& report) {
  const auto [n, n_hi] = mzv::parse_range(opt.n_range);
  if (n != n_hi) throw mzv::ParseError("orbits takes a single --n");
  const unsigned M = opt.M.value();
  report.inputs = {{"n", n}, {"M", M}};
  const auto count = mzv::dihedral_orbit_count(n, M);
  report.data = {{"orbits", count.get_str()}};
  if (!opt.json) std::cout << count.get_str() << std::endl;
  return kOk;
}

int cmd_relations(const Options& opt, RunReport& report) {
  const auto [n, n_hi] = mzv::parse_range(opt.n_range);
  if (n != n_hi || n == 0) throw mzv::ParseError("relations takes a single --n >= 1");
  const unsigned M = opt.M.value();
  mpz_class max_norm;
  if (max_norm.set_str(opt.max_norm, 10) != 0 || max_norm <= 0) {
    throw mzv::ParseError("--max-norm must be a positive integer");
  }
  report.inputs = {{"n", n}, {"M", M}, {"max_norm", opt.max_norm}};
  const mzv::PrecisionContext ctx(opt.digits);
  const auto found = mzv::find_relations(n, M, ctx, max_norm);
  report.digits = found.digits;

  json entries = json::array();
  for (const auto& e : found.vector.entries) entries.push_back(e.slots());
  entries.push_back("zeta2^{" + std::to_string(found.vector.appended_twos()) + "}");
  json relations = json::array();
  for (const auto& r : found.relations) {
    json row = json::array();
    for (const auto& a : r.coefficients()) row.push_back(a.get_si());
    relations.push_back(row);
  }
  const auto orbits = mzv::dihedral_orbit_count(n, M);
  const long delta = static_cast<long>(found.count()) - orbits.get_si();
  report.data = {{"n", n},
                 {"M", M},
                 {"entries", entries},
                 {"relations", relations},
                 {"digits", found.digits},
                 {"max_norm", opt.max_norm},
                 {"count", found.count()},
                 {"orbit_count", orbits.get_si()},
                 {"delta", delta},
                 {"exclusion_bound", found.exclusion_bound}};
  report.status = found.count() > 0 ? "found" : "none";

  if (!opt.json) {
    const auto labels = found.vector.labels();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      std::cout << fmt::format("  z[{}] = {}", i,
                               i + 1 < labels.size() ? "Z(" + labels[i] + ")" : labels[i])
                << std::endl;
    }
    for (const auto& r : found.relations) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (r.coefficients()[i] == 0) continue;
        line += fmt::format(" {:+}*z[{}]", r.coefficients()[i].get_si(), i);
      }
      std::cout << "  relation:" << line << " = 0" << std::endl;
    }
    std::cout << fmt::format("independent relations: {} (cyclic-type: {}, delta {:+})",
                             found.count(), orbits.get_str(), delta)
              << std::endl;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Multiple zeta values: shuffle algebra, evaluation and identity checks", "mzv"};
  app.require_subcommand(1);
  app.fallthrough();

  int exit_code = kOk;
  try {
    opt.digits = default_digits();
  } catch (const mzv::ParseError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kUsage;
  }

  app.add_option("--digits", opt.digits, "Target decimal digits")->check(CLI::PositiveNumber);
  app.add_flag("--json", opt.json, "Emit JSON (line-delimited for sweeps)");

  auto* eval = app.add_subcommand("eval", "Evaluate zeta(s_1,...,s_k)");
  eval->add_option("composition", opt.composition, "Arguments, e.g. 3,1")->required();

  auto* shuffle = app.add_subcommand("shuffle", "Shuffle product of two words");
  shuffle->add_option("left", opt.left, "Word, e.g. AB or (AB)^3")->required();
  shuffle->add_option("right", opt.right, "Word")->required();
  shuffle->add_flag("--as-zeta", opt.as_zeta, "Also print the product as MZVs");

  auto* verify = app.add_subcommand("verify", "Verify identities");
  verify->add_option("target", opt.target, "zagier|dressed|cyclic|conjecture2|lemmas|prop3|"
                                           "corollaries|euler|dual")
      ->required();
  verify->add_option("--n", opt.n_range, "n or range lo..hi");
  verify->add_option("--vector", opt.vector, "Insertion vector, e.g. 0,2,1");
  verify->add_option("--n-max", opt.n_max, "Largest n for exact checks");
  verify->add_option("--max-weight", opt.max_weight, "Weight bound for sweeps");
  verify->add_flag("--all", opt.all, "Sweep every instance up to --max-weight");

  auto* orbits = app.add_subcommand("orbits", "Dihedral orbit count");
  orbits->add_option("--n", opt.n_range, "n")->required();
  orbits->add_option("--M", opt.M, "Number of inserted 2's")->required();

  auto* relations = app.add_subcommand("relations", "PSLQ relation search on V_{n,M}");
  relations->add_option("--n", opt.n_range, "n >= 1")->required();
  relations->add_option("--M", opt.M, "Number of inserted 2's")->required();
  relations->add_option("--max-norm", opt.max_norm, "Coefficient bound (default 1000000)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  RunReport report;
  report.digits = opt.digits;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (eval->parsed()) {
      report.command = "eval";
      exit_code = cmd_eval(opt, report);
    } else if (shuffle->parsed()) {
      report.command = "shuffle";
      exit_code = cmd_shuffle(opt, report);
    } else if (verify->parsed()) {
      report.command = "verify";
      exit_code = cmd_verify(opt, report);
    } else if (orbits->parsed()) {
      report.command = "orbits";
      exit_code = cmd_orbits(opt, report);
    } else if (relations->parsed()) {
      report.command = "relations";
      exit_code = cmd_relations(opt, report);
    }
  } catch (const mzv::PrecisionError& e) {
    std::cerr << "unstable: " << e.what() << std::endl;
    return kCheckFailed;
  } catch (const mzv::DivergenceError& e) {
    std::cerr << e.what() << std::endl;
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kUsage;
  }
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  if (opt.json) {
    std::cout << report.to_json().dump() << std::endl;
  } else if (report.command == "verify") {
    std::cout << fmt::format("status: {} ({} instances, {} digits, {} ms)", report.status,
                             report.residuals.size(), report.digits, report.elapsed_ms)
              << std::endl;
  }
  return exit_code;
}
