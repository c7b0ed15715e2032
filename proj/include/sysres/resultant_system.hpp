#pragma once

// Explicit system of resultants for small instances: the resultant of the
// combined forms, expanded as a polynomial in the multiplier coordinates by
// dense exact interpolation. Its coefficients vanish simultaneously iff the
// input system has a nonzero common zero.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sysres/error.hpp"
#include "sysres/field.hpp"
#include "sysres/matrix.hpp"
#include "sysres/multipliers.hpp"
#include "sysres/polynomial.hpp"
#include "sysres/random.hpp"
#include "sysres/resultant.hpp"

namespace sysres {

struct BVariable {
  std::size_t block;
  std::size_t tuple;
};

/// Polynomial in the plan coordinates b, blocks laid out consecutively.
struct BPolynomial {
  std::vector<BVariable> variables;
  /// prod_{l != i} m_l for each block.
  std::vector<unsigned> block_degrees;
  /// Blocks with a pinned part are only bounded by, not homogeneous of, their degree.
  std::vector<bool> block_affine;
  std::map<std::vector<unsigned>, mpq_class> terms;

  bool is_zero() const { return terms.empty(); }

  mpq_class evaluate(std::span<const mpq_class> point) const {
    if (point.size() != variables.size()) throw Error(ErrorKind::dimension_mismatch, "b-point has wrong length");
    mpq_class acc = 0;
    for (const auto& [e, c] : terms) {
      mpq_class t = c;
      for (std::size_t v = 0; v < e.size(); ++v)
        for (unsigned k = 0; k < e[v]; ++k) t *= point[v];
      acc += t;
    }
    return acc;
  }

  /// Degree of the exponent vector restricted to one block.
  unsigned block_degree_of(const std::vector<unsigned>& e, std::size_t block) const {
    unsigned d = 0;
    for (std::size_t v = 0; v < variables.size(); ++v)
      if (variables[v].block == block) d += e[v];
    return d;
  }

  bool multihomogeneous() const {
    for (const auto& [e, c] : terms)
      for (std::size_t i = 0; i < block_degrees.size(); ++i) {
        const unsigned d = block_degree_of(e, i);
        if (block_affine[i] ? d > block_degrees[i] : d != block_degrees[i]) return false;
      }
    return true;
  }
};

struct InterpolationCaps {
  std::size_t max_b_vars = 12;
  unsigned max_total_degree = 8;
  std::size_t max_basis = 500;
};

namespace detail {

inline std::vector<unsigned> resultant_block_degrees(const MultiplierPlan& plan) {
  std::vector<unsigned> out;
  for (std::size_t i = 0; i < plan.target_degrees.size(); ++i) {
    unsigned prod = 1;
    for (std::size_t l = 0; l < plan.target_degrees.size(); ++l)
      if (l != i) prod *= plan.target_degrees[l];
    out.push_back(prod);
  }
  return out;
}

/// Exponent vectors of length `vars` with sum == degree (or <= degree).
inline std::vector<std::vector<unsigned>> compositions(std::size_t vars, unsigned degree, bool up_to) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> e(vars, 0);
  auto rec = [&](auto&& self, std::size_t v, unsigned remaining) -> void {
    if (v == vars) {
      if (up_to || remaining == 0) out.push_back(e);
      return;
    }
    for (unsigned k = 0; k <= remaining; ++k) {
      e[v] = k;
      self(self, v + 1, remaining - k);
    }
    e[v] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

inline BPolynomial empty_bpolynomial(const MultiplierPlan& plan) {
  BPolynomial p;
  for (std::size_t i = 0; i < plan.num_blocks(); ++i)
    for (std::size_t r = 0; r < plan.basis[i].size(); ++r) p.variables.push_back({i, r});
  p.block_degrees = resultant_block_degrees(plan);
  for (std::size_t i = 0; i < plan.num_blocks(); ++i) p.block_affine.push_back(plan.pinned[i].has_value());
  return p;
}

}  // namespace detail

/**
 * Support of the resultant in the b-coordinates: per block, all monomials of
 * degree prod_{l != i} m_l in that block's coordinates (at most that degree
 * for pinned blocks); the full basis is their product.
 */
inline std::vector<std::vector<unsigned>> b_monomial_basis(const MultiplierPlan& plan,
                                                           const InterpolationCaps& caps = {}) {
  const auto skeleton = detail::empty_bpolynomial(plan);
  const auto& degrees = skeleton.block_degrees;
  unsigned total_degree = 0;
  std::size_t estimate = 1;
  for (std::size_t i = 0; i < plan.num_blocks(); ++i) {
    const std::size_t r = plan.basis[i].size();
    if (r == 0) continue;
    total_degree += degrees[i];
    const std::size_t count =
        skeleton.block_affine[i] ? binomial(r + degrees[i], degrees[i]) : binomial(r + degrees[i] - 1, degrees[i]);
    estimate = estimate > caps.max_basis * 16 ? estimate : estimate * count;
  }
  const std::string size_note = " (" + std::to_string(skeleton.variables.size()) + " b-variables, total degree " +
                                std::to_string(total_degree) + ", about " + std::to_string(estimate) +
                                " basis monomials)";
  if (skeleton.variables.size() > caps.max_b_vars)
    throw Error(ErrorKind::cap_exceeded, "too many b-variables for interpolation" + size_note);
  if (total_degree > caps.max_total_degree)
    throw Error(ErrorKind::cap_exceeded, "resultant degree in b exceeds the cap" + size_note);
  if (estimate > caps.max_basis) throw Error(ErrorKind::cap_exceeded, "interpolation basis too large" + size_note);

  std::vector<std::vector<unsigned>> basis{{}};
  for (std::size_t i = 0; i < plan.num_blocks(); ++i) {
    const std::size_t r = plan.basis[i].size();
    if (r == 0) continue;
    const auto block = detail::compositions(r, degrees[i], skeleton.block_affine[i]);
    std::vector<std::vector<unsigned>> next;
    next.reserve(basis.size() * block.size());
    for (const auto& prefix : basis)
      for (const auto& tail : block) {
        auto e = prefix;
        e.insert(e.end(), tail.begin(), tail.end());
        next.push_back(std::move(e));
      }
    basis = std::move(next);
  }
  return basis;
}

/// Exact resultant of the combined forms at explicit rational coordinates.
inline mpq_class resultant_at(const PolySystem<RationalField>& system, const MultiplierPlan& plan,
                              std::span<const mpq_class> point, Rng& rng) {
  std::vector<std::vector<mpq_class>> coords(plan.num_blocks());
  std::size_t v = 0;
  for (std::size_t i = 0; i < plan.num_blocks(); ++i)
    for (std::size_t r = 0; r < plan.basis[i].size(); ++r) coords[i].push_back(point[v++]);
  if (v != point.size()) throw Error(ErrorKind::dimension_mismatch, "b-point has wrong length");
  const auto gs = combine(system, plan, realize(plan, RationalField{}, std::move(coords)));
  for (const auto& g : gs)
    if (g.is_zero()) return 0;  // a zero form shares every zero
  return macaulay_resultant(gs, rng).value;
}

/**
 * Fits the resultant as a polynomial in the b-coordinates: evaluates it at
 * |basis| random integer points, solves the interpolation system exactly,
 * and confirms the fit at three further points.
 */
inline BPolynomial interpolate(const PolySystem<RationalField>& system, const MultiplierPlan& plan,
                               const InterpolationCaps& caps, Rng& rng) {
  const auto basis = b_monomial_basis(plan, caps);
  auto result = detail::empty_bpolynomial(plan);
  const std::size_t vars = result.variables.size();
  const std::size_t size = basis.size();
  constexpr std::size_t kHeldOut = 3;
  constexpr std::int64_t kRange = 1000;
  const RationalField field;

  auto monomial_value = [&](const std::vector<unsigned>& e, const std::vector<mpq_class>& point) {
    mpq_class t = 1;
    for (std::size_t k = 0; k < vars; ++k)
      for (unsigned p = 0; p < e[k]; ++p) t *= point[k];
    return t;
  };

  std::string last_points;
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<std::vector<mpq_class>> points(size + kHeldOut);
    std::vector<mpq_class> values;
    for (auto& pt : points) {
      for (std::size_t k = 0; k < vars; ++k) pt.push_back(field.from_int(rng.between(-kRange, kRange)));
      values.push_back(resultant_at(system, plan, pt, rng));
    }
    Matrix<mpq_class> design(size, size, mpq_class(0));
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t c = 0; c < size; ++c) design(r, c) = monomial_value(basis[c], points[r]);
    auto coeffs = solve(field, design, std::vector<mpq_class>(values.begin(), values.begin() + size));
    if (!coeffs) {
      last_points.clear();
      for (const auto& pt : points) {
        last_points += "(";
        for (std::size_t k = 0; k < pt.size(); ++k) last_points += (k ? "," : "") + pt[k].get_str();
        last_points += ")";
      }
      continue;
    }
    result.terms.clear();
    for (std::size_t c = 0; c < size; ++c)
      if (sgn((*coeffs)[c]) != 0) result.terms.emplace(basis[c], (*coeffs)[c]);
    for (std::size_t h = size; h < size + kHeldOut; ++h)
      if (result.evaluate(points[h]) != values[h])
        throw Error(ErrorKind::singular_design, "interpolated resultant disagrees at a held-out point");
    if (!result.multihomogeneous())
      throw Error(ErrorKind::singular_design, "interpolated resultant violates its block degrees");
    return result;
  }
  throw Error(ErrorKind::singular_design, "interpolation matrix singular on three point sets; last: " + last_points);
}

/**
 * The resultant-system values for the numeric input: nonzero coefficients of
 * `rp` in basis order, each kept once up to sign. Empty iff rp is zero.
 */
inline std::vector<mpq_class> extract_system(const BPolynomial& rp) {
  std::vector<mpq_class> out;
  for (const auto& [e, c] : rp.terms) {
    const mpq_class mag = abs(c);
    bool seen = false;
    for (const auto& v : out) seen = seen || abs(v) == mag;
    if (!seen) out.push_back(c);
  }
  return out;
}

/// All r×r minors of an r×c matrix, column subsets in lexicographic order.
template <Field F>
std::vector<typename F::value_type> maximal_minors(const F& field, const Matrix<typename F::value_type>& m) {
  const std::size_t r = m.rows(), c = m.cols();
  if (r > c) throw Error(ErrorKind::dimension_mismatch, "maximal minors need rows <= cols");
  std::vector<std::size_t> rows(r), cols(r);
  for (std::size_t i = 0; i < r; ++i) rows[i] = cols[i] = i;
  std::vector<typename F::value_type> out;
  for (;;) {
    out.push_back(determinant(field, m.select(rows, cols)));
    std::size_t k = r;
    while (k > 0 && cols[k - 1] == c - r + k - 1) --k;
    if (k == 0) break;
    ++cols[k - 1];
    for (std::size_t i = k; i < r; ++i) cols[i] = cols[i - 1] + 1;
  }
  return out;
}

}  // namespace sysres
