#pragma once

// Multiplier schemes. A plan fixes target degrees m_i, offsets
// k_ij = m_i - n_j, and for every i a basis of (m+1)-tuples spanning the
// space of admissible (A_i0, ..., A_im). A sample draws one coordinate per
// basis tuple and realizes the A_ij; combine forms g_i = sum_j A_ij f_j.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sysres/error.hpp"
#include "sysres/field.hpp"
#include "sysres/matrix.hpp"
#include "sysres/monomial.hpp"
#include "sysres/polynomial.hpp"
#include "sysres/random.hpp"

namespace sysres {

enum class Scheme { full, theorem2, powersum, coupled, custom_linear };

inline const char* to_string(Scheme s) {
  switch (s) {
    case Scheme::full:
      return "full";
    case Scheme::theorem2:
      return "theorem2";
    case Scheme::powersum:
      return "powersum";
    case Scheme::coupled:
      return "coupled";
    case Scheme::custom_linear:
      return "custom";
  }
  return "?";
}

inline Scheme parse_scheme(std::string_view name) {
  if (name == "full") return Scheme::full;
  if (name == "theorem2") return Scheme::theorem2;
  if (name == "powersum") return Scheme::powersum;
  if (name == "coupled") return Scheme::coupled;
  if (name == "custom") return Scheme::custom_linear;
  throw Error(ErrorKind::invalid_argument, "unknown scheme '" + std::string(name) + "'");
}

using RationalPolynomial = Polynomial<RationalField>;

/// One element of a multiplier space: the j-th slot multiplies f_j.
struct BasisTuple {
  std::vector<RationalPolynomial> slots;
};

struct MultiplierPlan {
  Scheme scheme = Scheme::full;
  std::size_t num_vars = 0;
  std::size_t num_slots = 0;
  /// n_j of the polynomial occupying slot j (after `permutation`).
  std::vector<unsigned> slot_degrees;
  /// m_i.
  std::vector<unsigned> target_degrees;
  /// k_ij; nullopt marks a slot that block i never uses.
  std::vector<std::vector<std::optional<unsigned>>> offsets;
  std::vector<std::vector<BasisTuple>> basis;
  /// Fixed affine part added with coefficient 1 (theorem2 pins f_i into g_i).
  std::vector<std::optional<BasisTuple>> pinned;
  /// Slot j holds input polynomial permutation[j].
  std::vector<std::size_t> permutation;

  std::size_t num_blocks() const { return basis.size(); }
  std::size_t coordinate_count() const {
    std::size_t total = 0;
    for (const auto& b : basis) total += b.size();
    return total;
  }
};

template <Field F>
struct MultiplierSample {
  /// One coordinate per basis tuple, per block.
  std::vector<std::vector<typename F::value_type>> coordinates;
  /// A_ij for block i and slot j.
  std::vector<std::vector<Polynomial<F>>> multipliers;
};

namespace detail {

inline BasisTuple single_slot(std::size_t num_vars, std::size_t num_slots, std::size_t slot, const Monomial& m) {
  BasisTuple t;
  t.slots.assign(num_slots, RationalPolynomial(RationalField{}, num_vars));
  t.slots[slot].add_term(m, 1);
  return t;
}

/// Distinct pure powers x_l^k over l in `vars` (k = 0 collapses to 1).
inline std::vector<Monomial> pure_powers(std::size_t num_vars, unsigned k, const std::vector<std::size_t>& vars) {
  std::vector<Monomial> out;
  for (auto l : vars) {
    auto m = Monomial::power(num_vars, l, k);
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
  }
  return out;
}

/// Rows are tuples flattened over (slot, monomial) coordinates.
inline Matrix<mpq_class> tuple_coordinates(const std::vector<BasisTuple>& tuples) {
  std::map<std::pair<std::size_t, std::vector<unsigned>>, std::size_t> column;
  for (const auto& t : tuples)
    for (std::size_t j = 0; j < t.slots.size(); ++j)
      for (const auto& [m, c] : t.slots[j].terms()) column.try_emplace({j, m.exponents()}, column.size());
  Matrix<mpq_class> a(tuples.size(), column.size(), mpq_class(0));
  for (std::size_t r = 0; r < tuples.size(); ++r)
    for (std::size_t j = 0; j < tuples[r].slots.size(); ++j)
      for (const auto& [m, c] : tuples[r].slots[j].terms()) a(r, column.at({j, m.exponents()})) = c;
  return a;
}

inline bool tuples_independent(const std::vector<BasisTuple>& tuples) {
  return rank(RationalField{}, tuple_coordinates(tuples)) == tuples.size();
}

/// Keeps each tuple only if it enlarges the span of those kept before it.
inline std::vector<BasisTuple> drop_dependent(std::vector<BasisTuple> tuples) {
  std::vector<BasisTuple> kept;
  for (auto& t : tuples) {
    kept.push_back(std::move(t));
    if (!tuples_independent(kept)) kept.pop_back();
  }
  return kept;
}

inline void require_positive_degrees(std::span<const unsigned> degrees) {
  if (degrees.empty()) throw Error(ErrorKind::invalid_argument, "empty system");
  for (auto d : degrees)
    if (d == 0) throw Error(ErrorKind::invalid_argument, "multiplier plans need degrees >= 1");
}

inline MultiplierPlan uniform_skeleton(Scheme scheme, std::size_t num_vars, std::span<const unsigned> degrees,
                                       unsigned inflate) {
  require_positive_degrees(degrees);
  MultiplierPlan plan;
  plan.scheme = scheme;
  plan.num_vars = num_vars;
  plan.num_slots = degrees.size();
  plan.slot_degrees.assign(degrees.begin(), degrees.end());
  plan.permutation.resize(degrees.size());
  std::iota(plan.permutation.begin(), plan.permutation.end(), std::size_t{0});
  const unsigned top = *std::max_element(degrees.begin(), degrees.end()) + inflate;
  plan.target_degrees.assign(num_vars, top);
  plan.offsets.assign(num_vars, {});
  for (auto& row : plan.offsets)
    for (auto d : degrees) row.push_back(top - d);
  plan.basis.assign(num_vars, {});
  plan.pinned.assign(num_vars, std::nullopt);
  return plan;
}

}  // namespace detail

/// Every A_ij ranges over all forms of degree k_ij; m_i = max_j n_j + inflate.
inline MultiplierPlan plan_full(std::size_t num_vars, std::span<const unsigned> degrees, unsigned inflate = 0) {
  auto plan = detail::uniform_skeleton(Scheme::full, num_vars, degrees, inflate);
  for (std::size_t i = 0; i < num_vars; ++i)
    for (std::size_t j = 0; j < plan.num_slots; ++j)
      for (const auto& mu : monomials_of_degree(num_vars, *plan.offsets[i][j]))
        plan.basis[i].push_back(detail::single_slot(num_vars, plan.num_slots, j, mu));
  return plan;
}

/**
 * Sort inputs by descending degree; g_i = f_i + sum_{j>n} A_ij f_j with
 * k_ij = n_i - n_j. Slots j <= n other than i are unused.
 */
inline MultiplierPlan plan_theorem2(std::size_t num_vars, std::span<const unsigned> degrees) {
  detail::require_positive_degrees(degrees);
  const std::size_t n = num_vars - 1;
  if (degrees.size() < num_vars)
    throw Error(ErrorKind::scheme_inapplicable, "theorem2 scheme needs at least n+1 equations");
  MultiplierPlan plan;
  plan.scheme = Scheme::theorem2;
  plan.num_vars = num_vars;
  plan.num_slots = degrees.size();
  plan.permutation.resize(degrees.size());
  std::iota(plan.permutation.begin(), plan.permutation.end(), std::size_t{0});
  std::stable_sort(plan.permutation.begin(), plan.permutation.end(),
                   [&](std::size_t a, std::size_t b) { return degrees[a] > degrees[b]; });
  for (auto p : plan.permutation) plan.slot_degrees.push_back(degrees[p]);
  plan.offsets.assign(num_vars, std::vector<std::optional<unsigned>>(plan.num_slots));
  plan.basis.assign(num_vars, {});
  plan.pinned.assign(num_vars, std::nullopt);
  for (std::size_t i = 0; i <= n; ++i) {
    const unsigned mi = plan.slot_degrees[i];
    plan.target_degrees.push_back(mi);
    plan.offsets[i][i] = 0;
    plan.pinned[i] = detail::single_slot(num_vars, plan.num_slots, i, Monomial::one(num_vars));
    for (std::size_t j = n + 1; j < plan.num_slots; ++j) {
      const unsigned k = mi - plan.slot_degrees[j];
      plan.offsets[i][j] = k;
      for (const auto& mu : monomials_of_degree(num_vars, k))
        plan.basis[i].push_back(detail::single_slot(num_vars, plan.num_slots, j, mu));
    }
  }
  return plan;
}

/// A_ij ranges over sum_l c_l x_l^{k_ij}.
inline MultiplierPlan plan_powersum(std::size_t num_vars, std::span<const unsigned> degrees, unsigned inflate = 0) {
  auto plan = detail::uniform_skeleton(Scheme::powersum, num_vars, degrees, inflate);
  std::vector<std::size_t> all(num_vars);
  std::iota(all.begin(), all.end(), std::size_t{0});
  for (std::size_t i = 0; i < num_vars; ++i)
    for (std::size_t j = 0; j < plan.num_slots; ++j)
      for (const auto& mu : detail::pure_powers(num_vars, *plan.offsets[i][j], all))
        plan.basis[i].push_back(detail::single_slot(num_vars, plan.num_slots, j, mu));
  return plan;
}

/**
 * Slots j <= n use the pure powers x_l^{k_ij} with l != j, plus one shared
 * tuple putting x_j^{k_ij} into every slot j <= n at once; slots j > n use all
 * pure powers.
 */
inline MultiplierPlan plan_coupled(std::size_t num_vars, std::span<const unsigned> degrees, unsigned inflate = 0) {
  if (degrees.size() < num_vars)
    throw Error(ErrorKind::scheme_inapplicable, "coupled scheme needs at least n+1 equations");
  auto plan = detail::uniform_skeleton(Scheme::coupled, num_vars, degrees, inflate);
  const std::size_t n = num_vars - 1;
  for (std::size_t i = 0; i < num_vars; ++i) {
    std::vector<BasisTuple> tuples;
    for (std::size_t j = 0; j < plan.num_slots; ++j) {
      std::vector<std::size_t> vars;
      for (std::size_t l = 0; l < num_vars; ++l)
        if (j > n || l != j) vars.push_back(l);
      for (const auto& mu : detail::pure_powers(num_vars, *plan.offsets[i][j], vars))
        tuples.push_back(detail::single_slot(num_vars, plan.num_slots, j, mu));
    }
    BasisTuple shared;
    shared.slots.assign(plan.num_slots, RationalPolynomial(RationalField{}, num_vars));
    for (std::size_t j = 0; j <= n; ++j) shared.slots[j].add_term(Monomial::power(num_vars, j, *plan.offsets[i][j]), 1);
    tuples.push_back(std::move(shared));
    // With all k_ij = 0 the shared tuple is already in the span of the constants.
    plan.basis[i] = detail::drop_dependent(std::move(tuples));
  }
  return plan;
}

/**
 * User-supplied basis tuples, one list per block. Offsets are read off the
 * entries' degrees; target degrees stay empty until bind_custom_plan.
 */
inline MultiplierPlan plan_custom(std::size_t num_vars, std::size_t num_slots,
                                  std::vector<std::vector<BasisTuple>> blocks) {
  if (blocks.size() != num_vars)
    throw Error(ErrorKind::dimension_mismatch, "custom plan needs one block per variable (" +
                                                   std::to_string(num_vars) + "), got " + std::to_string(blocks.size()));
  MultiplierPlan plan;
  plan.scheme = Scheme::custom_linear;
  plan.num_vars = num_vars;
  plan.num_slots = num_slots;
  plan.permutation.resize(num_slots);
  std::iota(plan.permutation.begin(), plan.permutation.end(), std::size_t{0});
  plan.offsets.assign(num_vars, std::vector<std::optional<unsigned>>(num_slots));
  plan.pinned.assign(num_vars, std::nullopt);
  for (std::size_t i = 0; i < num_vars; ++i) {
    for (const auto& t : blocks[i]) {
      if (t.slots.size() != num_slots)
        throw Error(ErrorKind::dimension_mismatch, "basis tuple in block " + std::to_string(i) + " has " +
                                                       std::to_string(t.slots.size()) + " slots, expected " +
                                                       std::to_string(num_slots));
      for (std::size_t j = 0; j < num_slots; ++j) {
        const auto& p = t.slots[j];
        if (p.num_vars() != num_vars) throw Error(ErrorKind::dimension_mismatch, "basis entry has wrong variable count");
        if (p.is_zero()) continue;
        auto d = is_homogeneous(p);
        if (!d) throw Error(ErrorKind::invalid_argument, "basis entry is not homogeneous");
        auto& k = plan.offsets[i][j];
        if (k && *k != *d)
          throw Error(ErrorKind::invalid_argument, "block " + std::to_string(i) + " slot " + std::to_string(j) +
                                                       " mixes degrees " + std::to_string(*k) + " and " +
                                                       std::to_string(*d));
        k = *d;
      }
    }
    if (!detail::tuples_independent(blocks[i]))
      throw Error(ErrorKind::invalid_argument, "basis tuples of block " + std::to_string(i) + " are dependent");
  }
  plan.basis = std::move(blocks);
  return plan;
}

/// Checks m_i = k_ij + n_j against a concrete degree list and fills m_i.
inline MultiplierPlan bind_custom_plan(MultiplierPlan plan, std::span<const unsigned> degrees) {
  if (degrees.size() != plan.num_slots)
    throw Error(ErrorKind::dimension_mismatch, "custom plan has " + std::to_string(plan.num_slots) +
                                                   " slots but the system has " + std::to_string(degrees.size()) +
                                                   " equations");
  plan.slot_degrees.assign(degrees.begin(), degrees.end());
  plan.target_degrees.assign(plan.num_vars, 0);
  for (std::size_t i = 0; i < plan.num_vars; ++i) {
    std::optional<unsigned> mi;
    for (std::size_t j = 0; j < plan.num_slots; ++j) {
      if (!plan.offsets[i][j]) continue;
      const unsigned candidate = *plan.offsets[i][j] + degrees[j];
      if (mi && *mi != candidate)
        throw Error(ErrorKind::invalid_argument,
                    "custom plan block " + std::to_string(i) + " violates m_i = k_ij + n_j at slot " + std::to_string(j));
      mi = candidate;
    }
    if (!mi) throw Error(ErrorKind::invalid_argument, "custom plan block " + std::to_string(i) + " is empty");
    plan.target_degrees[i] = *mi;
    for (std::size_t j = 0; j < plan.num_slots; ++j)
      if (!plan.offsets[i][j] && *mi >= degrees[j]) plan.offsets[i][j] = *mi - degrees[j];
  }
  return plan;
}

inline MultiplierPlan make_plan(Scheme scheme, std::size_t num_vars, std::span<const unsigned> degrees,
                                unsigned inflate = 0) {
  switch (scheme) {
    case Scheme::full:
      return plan_full(num_vars, degrees, inflate);
    case Scheme::theorem2:
      return plan_theorem2(num_vars, degrees);
    case Scheme::powersum:
      return plan_powersum(num_vars, degrees, inflate);
    case Scheme::coupled:
      return plan_coupled(num_vars, degrees, inflate);
    case Scheme::custom_linear:
      break;
  }
  throw Error(ErrorKind::invalid_argument, "custom plans are built from a plan file");
}

/// m_i = k_ij + n_j and k_ij >= 0 on every used slot, plus independent bases.
inline bool plan_invariants_hold(const MultiplierPlan& plan) {
  if (plan.target_degrees.size() != plan.num_vars || plan.slot_degrees.size() != plan.num_slots) return false;
  for (std::size_t i = 0; i < plan.num_vars; ++i) {
    for (std::size_t j = 0; j < plan.num_slots; ++j) {
      const auto& k = plan.offsets[i][j];
      if (k && *k + plan.slot_degrees[j] != plan.target_degrees[i]) return false;
    }
    for (const auto& t : plan.basis[i])
      for (std::size_t j = 0; j < plan.num_slots; ++j)
        if (!t.slots[j].is_zero() && (!plan.offsets[i][j] || is_homogeneous(t.slots[j]) != plan.offsets[i][j]))
          return false;
    if (!detail::tuples_independent(plan.basis[i])) return false;
  }
  return true;
}

/// A_ij = pinned_ij + sum_r coordinates[i][r] * basis[i][r]_j.
template <Field F>
MultiplierSample<F> realize(const MultiplierPlan& plan, const F& field,
                            std::vector<std::vector<typename F::value_type>> coordinates) {
  if (coordinates.size() != plan.num_blocks())
    throw Error(ErrorKind::dimension_mismatch, "coordinate blocks do not match the plan");
  MultiplierSample<F> sample;
  sample.multipliers.assign(plan.num_blocks(),
                            std::vector<Polynomial<F>>(plan.num_slots, Polynomial<F>(field, plan.num_vars)));
  for (std::size_t i = 0; i < plan.num_blocks(); ++i) {
    if (coordinates[i].size() != plan.basis[i].size())
      throw Error(ErrorKind::dimension_mismatch, "coordinate count does not match block " + std::to_string(i));
    auto& row = sample.multipliers[i];
    if (plan.pinned[i])
      for (std::size_t j = 0; j < plan.num_slots; ++j) row[j] += to_field(plan.pinned[i]->slots[j], field);
    for (std::size_t r = 0; r < plan.basis[i].size(); ++r) {
      const auto& c = coordinates[i][r];
      if (field.is_zero(c)) continue;
      for (std::size_t j = 0; j < plan.num_slots; ++j) {
        const auto& entry = plan.basis[i][r].slots[j];
        if (!entry.is_zero()) row[j] += to_field(entry, field).scaled(c);
      }
    }
  }
  sample.coordinates = std::move(coordinates);
  return sample;
}

/// Coordinates drawn uniformly from the field (or its sampling grid over Q).
template <Field F>
MultiplierSample<F> sample(const MultiplierPlan& plan, const F& field, Rng& rng) {
  std::vector<std::vector<typename F::value_type>> coords(plan.num_blocks());
  for (std::size_t i = 0; i < plan.num_blocks(); ++i)
    for (std::size_t r = 0; r < plan.basis[i].size(); ++r) coords[i].push_back(field.random(rng));
  return realize(plan, field, std::move(coords));
}

/// g_i = sum_j A_ij * f_{permutation[j]}.
template <Field F>
std::vector<Polynomial<F>> combine(const PolySystem<F>& system, const MultiplierPlan& plan,
                                   const MultiplierSample<F>& sample) {
  if (system.size() != plan.num_slots || system.num_vars() != plan.num_vars)
    throw Error(ErrorKind::dimension_mismatch, "system shape does not match the multiplier plan");
  if (system.size() == 0) throw Error(ErrorKind::dimension_mismatch, "empty system");
  const F& field = system[0].field();
  std::vector<Polynomial<F>> out;
  out.reserve(plan.num_blocks());
  for (std::size_t i = 0; i < plan.num_blocks(); ++i) {
    Polynomial<F> g(field, plan.num_vars);
    for (std::size_t j = 0; j < plan.num_slots; ++j) {
      const auto& a = sample.multipliers[i][j];
      if (!a.is_zero()) g += a * system[plan.permutation[j]];
    }
    out.push_back(std::move(g));
  }
  return out;
}

struct AdmissibilityReport {
  /// False for affine schemes (theorem2), whose multipliers do not form a linear space.
  bool applicable = true;
  std::uint64_t prime = 0;
  std::vector<bool> trial_passed;
  /// Evaluation points, one per trial.
  std::vector<std::vector<std::uint64_t>> points;

  bool passed() const {
    return applicable && std::all_of(trial_passed.begin(), trial_passed.end(), [](bool b) { return b; });
  }
};

/**
 * Probabilistic evidence that every V_i evaluates onto k^{m+1}: at random
 * nonzero points over GF(2^61 - 1), the evaluated basis tuples of each block
 * must have rank m+1. A failed trial is a definite counterexample.
 */
inline AdmissibilityReport check_admissible(const MultiplierPlan& plan, unsigned trials, Rng& rng) {
  if (trials == 0) throw Error(ErrorKind::invalid_argument, "admissibility check needs at least one trial");
  AdmissibilityReport report;
  const PrimeField field((std::uint64_t{1} << 61) - 1);
  report.prime = field.modulus();
  if (std::any_of(plan.pinned.begin(), plan.pinned.end(), [](const auto& p) { return p.has_value(); })) {
    report.applicable = false;
    return report;
  }
  for (unsigned t = 0; t < trials; ++t) {
    std::vector<std::uint64_t> x(plan.num_vars, 0);
    while (std::all_of(x.begin(), x.end(), [](auto v) { return v == 0; }))
      for (auto& v : x) v = field.random(rng);
    bool ok = true;
    for (std::size_t i = 0; i < plan.num_blocks() && ok; ++i) {
      Matrix<std::uint64_t> values(plan.basis[i].size(), plan.num_slots, 0);
      for (std::size_t r = 0; r < plan.basis[i].size(); ++r)
        for (std::size_t j = 0; j < plan.num_slots; ++j)
          values(r, j) = reduce_mod_p(plan.basis[i][r].slots[j], field).evaluate(x);
      ok = rank(field, values) == plan.num_slots;
    }
    report.trial_passed.push_back(ok);
    report.points.push_back(std::move(x));
  }
  return report;
}

}  // namespace sysres
