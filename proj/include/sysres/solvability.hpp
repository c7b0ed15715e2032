#pragma once

// Monte Carlo decision procedure for nonzero common zeros of an
// overdetermined homogeneous system. The system has a nonzero solution iff
// R(sum_j A_0j f_j, ..., sum_j A_nj f_j) vanishes identically in the
// multiplier coordinates; we evaluate that resultant at random coordinates.
// A nonzero evaluation certifies that no solution exists; all-zero
// evaluations mean "solvable" up to a Schwartz-Zippel error bound.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <future>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "sysres/error.hpp"
#include "sysres/field.hpp"
#include "sysres/multipliers.hpp"
#include "sysres/polynomial.hpp"
#include "sysres/random.hpp"
#include "sysres/resultant.hpp"

namespace sysres {

enum class FieldMode { modular, rational };

enum class Verdict { certified_no_nonzero_solution, certified_solvable, probably_solvable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::certified_no_nonzero_solution:
      return "certified_no_nonzero_solution";
    case Verdict::certified_solvable:
      return "certified_solvable";
    case Verdict::probably_solvable:
      return "probably_solvable";
  }
  return "?";
}

inline const char* to_string(FieldMode m) { return m == FieldMode::modular ? "modular" : "rational"; }

struct SolverConfig {
  Scheme scheme = Scheme::full;
  unsigned trials = 2;
  unsigned prime_bits = 62;
  std::uint64_t seed = 0;
  /// Redraws allowed per trial for degenerate samples or unlucky primes.
  unsigned retries = 10;
  FieldMode mode = FieldMode::modular;
  /// Uniform increase of every m_i (full, powersum, coupled).
  unsigned inflate = 0;
  /// Worker threads for the trials; the report does not depend on it.
  unsigned threads = 1;
  /// Unbound custom plan, required when scheme is custom_linear.
  std::optional<MultiplierPlan> custom_plan;
  ResultantOptions resultant;
};

struct TrialRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  /// Modulus of the final attempt; 0 in rational mode.
  std::uint64_t prime = 0;
  bool value_zero = true;
  std::string value;
  unsigned redraws = 0;
  ResultantPath path = ResultantPath::direct;
};

struct Witness {
  std::size_t trial = 0;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  std::string value;
};

struct SolvabilityReport {
  Verdict verdict = Verdict::probably_solvable;
  Scheme scheme = Scheme::full;
  FieldMode mode = FieldMode::modular;
  std::size_t num_vars = 0;
  std::vector<unsigned> degrees;
  /// Plan used on the nonzero subsystem; absent when the dimension shortcut fired.
  std::optional<MultiplierPlan> plan;
  std::optional<Witness> witness;
  std::uint64_t degree_bound = 0;
  /// Upper bound on the probability that a probably_solvable verdict is wrong; 0 otherwise.
  mpq_class error_bound = 0;
  std::vector<TrialRecord> trials;
  std::string note;
};

/// Total degree of the resultant in the multiplier coordinates is at most
/// sum_i prod_{l != i} m_l; 0 when the plan has no coordinates.
inline std::uint64_t degree_bound_in_b(const MultiplierPlan& plan) {
  if (plan.coordinate_count() == 0) return 0;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < plan.target_degrees.size(); ++i) {
    std::uint64_t prod = 1;
    for (std::size_t l = 0; l < plan.target_degrees.size(); ++l)
      if (l != i) prod *= plan.target_degrees[l];
    total += prod;
  }
  return total;
}

/// (D/p)^t.
inline mpq_class error_bound(std::uint64_t degree, std::uint64_t field_size, unsigned trials) {
  if (field_size <= degree)
    throw Error(ErrorKind::prime_too_small, "sampling set of size " + std::to_string(field_size) +
                                                " does not exceed the degree bound " + std::to_string(degree));
  mpz_class num, den;
  mpz_ui_pow_ui(num.get_mpz_t(), degree, trials);
  mpz_ui_pow_ui(den.get_mpz_t(), field_size, trials);
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

namespace detail {

inline bool prime_is_clean(std::uint64_t p, const PolySystem<RationalField>& system) {
  for (const auto& f : system.polys())
    for (const auto& [m, c] : f.terms())
      if (mpz_divisible_ui_p(c.get_num_mpz_t(), p) || mpz_divisible_ui_p(c.get_den_mpz_t(), p)) return false;
  return true;
}

inline MultiplierPlan plan_for(const PolySystem<RationalField>& system, const SolverConfig& config) {
  if (config.scheme == Scheme::custom_linear) {
    if (!config.custom_plan) throw Error(ErrorKind::invalid_argument, "custom scheme selected without a plan");
    if (config.custom_plan->num_vars != system.num_vars())
      throw Error(ErrorKind::dimension_mismatch, "custom plan variable count does not match the system");
    return bind_custom_plan(*config.custom_plan, system.degrees());
  }
  return make_plan(config.scheme, system.num_vars(), system.degrees(), config.inflate);
}

template <Field F>
bool has_zero_member(const std::vector<Polynomial<F>>& gs) {
  return std::any_of(gs.begin(), gs.end(), [](const auto& g) { return g.is_zero(); });
}

}  // namespace detail

/**
 * One randomized evaluation of the combined resultant. Fully determined by
 * (system, plan, config.seed, index), which makes witnesses reproducible.
 */
inline TrialRecord run_trial(const PolySystem<RationalField>& system, const MultiplierPlan& plan,
                             const SolverConfig& config, std::size_t index) {
  TrialRecord record;
  record.index = index;
  record.seed = derive_seed(config.seed, index);
  Rng rng(record.seed);
  for (unsigned attempt = 0; attempt <= config.retries; ++attempt) {
    record.redraws = attempt;
    if (config.mode == FieldMode::modular) {
      std::uint64_t p = random_prime(config.prime_bits, rng);
      while (!detail::prime_is_clean(p, system)) p = random_prime(config.prime_bits, rng);
      record.prime = p;
      const PrimeField field(p);
      const auto reduced = system.to(field);
      const auto gs = combine(reduced, plan, sample(plan, field, rng));
      if (detail::has_zero_member(gs)) continue;
      try {
        const auto r = macaulay_resultant(gs, rng, config.resultant);
        record.value_zero = field.is_zero(r.value);
        record.value = field.to_string(r.value);
        record.path = r.path;
        return record;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::unlucky_prime) throw;
      }
    } else {
      const RationalField field;
      const auto gs = combine(system, plan, sample(plan, field, rng));
      if (detail::has_zero_member(gs)) continue;
      const auto r = macaulay_resultant(gs, rng, config.resultant);
      record.value_zero = field.is_zero(r.value);
      record.value = field.to_string(r.value);
      record.path = r.path;
      return record;
    }
  }
  throw Error(ErrorKind::degeneracy_exhausted, "trial " + std::to_string(index) + " exhausted " +
                                                   std::to_string(config.retries) +
                                                   " redraws (zero combined form or unlucky prime)");
}

inline SolvabilityReport solvable_test(const PolySystem<RationalField>& system, const SolverConfig& config) {
  if (config.trials == 0) throw Error(ErrorKind::invalid_argument, "at least one trial is required");
  if (config.mode == FieldMode::modular && (config.prime_bits < 31 || config.prime_bits > 62))
    throw Error(ErrorKind::invalid_argument, "prime bits must lie in [31, 62]");

  SolvabilityReport report;
  report.scheme = config.scheme;
  report.mode = config.mode;
  report.num_vars = system.num_vars();
  report.degrees = system.degrees();

  const auto nonzero = system.without_zeros();
  if (nonzero.size() < system.num_vars()) {
    // At most n hypersurfaces in P^n always meet; zero members impose nothing.
    report.verdict = Verdict::certified_solvable;
    report.note = "fewer than n+1 nonzero equations: a common projective zero always exists";
    return report;
  }

  const auto plan = detail::plan_for(nonzero, config);
  report.degree_bound = degree_bound_in_b(plan);
  report.plan = plan;

  report.trials.resize(config.trials);
  const unsigned workers = std::max(1u, std::min(config.threads, config.trials));
  if (workers == 1) {
    for (unsigned t = 0; t < config.trials; ++t) report.trials[t] = run_trial(nonzero, plan, config, t);
  } else {
    std::vector<std::future<void>> jobs;
    for (unsigned w = 0; w < workers; ++w)
      jobs.push_back(std::async(std::launch::async, [&, w] {
        for (unsigned t = w; t < config.trials; t += workers) report.trials[t] = run_trial(nonzero, plan, config, t);
      }));
    for (auto& j : jobs) j.get();
  }

  for (const auto& trial : report.trials) {
    if (!trial.value_zero) {
      report.verdict = Verdict::certified_no_nonzero_solution;
      report.witness = Witness{trial.index, trial.prime, trial.seed, trial.value};
      report.error_bound = 0;
      return report;
    }
  }

  report.verdict = Verdict::probably_solvable;
  if (config.mode == FieldMode::modular) {
    std::uint64_t smallest = std::numeric_limits<std::uint64_t>::max();
    for (const auto& trial : report.trials) smallest = std::min(smallest, trial.prime);
    report.error_bound = error_bound(report.degree_bound, smallest, config.trials);
  } else {
    report.error_bound = error_bound(report.degree_bound, RationalField::kSampleGridSize, config.trials);
  }
  return report;
}

struct SquareCheck {
  bool agree = false;
  mpq_class direct_value;
  Verdict verdict = Verdict::probably_solvable;
};

/// For m = n the resultant itself is an exact oracle for the randomized pipeline.
inline SquareCheck cross_check_square(const PolySystem<RationalField>& system, const SolverConfig& config) {
  if (system.size() != system.num_vars())
    throw Error(ErrorKind::dimension_mismatch, "square cross-check needs exactly n+1 equations");
  SquareCheck out;
  const auto& polys = system.polys();
  const bool has_zero = std::any_of(polys.begin(), polys.end(), [](const auto& f) { return f.is_zero(); });
  if (has_zero) {
    out.direct_value = 0;
  } else {
    Rng rng(derive_seed(config.seed, 0xc0ffee));
    out.direct_value = macaulay_resultant(polys, rng, config.resultant).value;
  }
  out.verdict = solvable_test(system, config).verdict;
  const bool solvable = out.verdict != Verdict::certified_no_nonzero_solution;
  out.agree = solvable == (sgn(out.direct_value) == 0);
  return out;
}

}  // namespace sysres
