#pragma once

// Classical resultant of n+1 homogeneous forms in n+1 variables, computed as
// the Macaulay quotient det(M) / det(M'), normalized so that
// R(x_0^{d_0}, ..., x_n^{d_n}) = 1.

#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sysres/error.hpp"
#include "sysres/field.hpp"
#include "sysres/matrix.hpp"
#include "sysres/monomial.hpp"
#include "sysres/polynomial.hpp"
#include "sysres/random.hpp"

namespace sysres {

/// 1 + sum (d_i - 1): the least degree at which every monomial is divisible
/// by some x_i^{d_i}.
inline unsigned critical_degree(std::span<const unsigned> degrees) {
  unsigned d = 1;
  for (auto di : degrees) {
    if (di == 0) throw Error(ErrorKind::degenerate_input, "resultant degrees must be positive");
    d += di - 1;
  }
  return d;
}

/// Row/column bookkeeping of the Macaulay matrix. Row r is paired with
/// column r: it holds (columns[r] / x_i^{d_i}) * f_i for the least i with
/// x_i^{d_i} dividing columns[r].
struct MacaulayStructure {
  struct RowLabel {
    std::size_t poly;
    Monomial multiplier;
  };

  std::vector<unsigned> degrees;
  unsigned critical_degree = 0;
  std::vector<Monomial> columns;
  std::vector<RowLabel> rows;
  /// Column divisible by x_i^{d_i} for at least two distinct i.
  std::vector<bool> non_reduced;

  std::vector<std::size_t> non_reduced_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < non_reduced.size(); ++c)
      if (non_reduced[c]) out.push_back(c);
    return out;
  }
};

inline MacaulayStructure macaulay_structure(std::span<const unsigned> degrees) {
  MacaulayStructure s;
  s.degrees.assign(degrees.begin(), degrees.end());
  s.critical_degree = critical_degree(degrees);
  const std::size_t num_vars = degrees.size();
  s.columns = monomials_of_degree(num_vars, s.critical_degree);
  s.rows.reserve(s.columns.size());
  s.non_reduced.reserve(s.columns.size());
  for (const auto& nu : s.columns) {
    std::optional<std::size_t> owner;
    int hits = 0;
    for (std::size_t i = 0; i < num_vars; ++i) {
      if (nu[i] >= degrees[i]) {
        if (!owner) owner = i;
        ++hits;
      }
    }
    // Pigeonhole at the critical degree guarantees an owner.
    if (!owner) throw Error(ErrorKind::invalid_argument, "monomial below critical degree coverage");
    s.rows.push_back({*owner, nu / Monomial::power(num_vars, *owner, degrees[*owner])});
    s.non_reduced.push_back(hits >= 2);
  }
  return s;
}

template <Field F>
struct MacaulayMatrices {
  Matrix<typename F::value_type> full;
  Matrix<typename F::value_type> extraneous;
  MacaulayStructure structure;
};

namespace detail {

/// Degrees of a square system, validating shape and homogeneity.
template <Field F>
std::vector<unsigned> square_system_degrees(std::span<const Polynomial<F>> fs) {
  if (fs.empty()) throw Error(ErrorKind::dimension_mismatch, "empty system");
  const std::size_t num_vars = fs.front().num_vars();
  if (fs.size() != num_vars)
    throw Error(ErrorKind::dimension_mismatch,
                "resultant needs as many forms as variables (got " + std::to_string(fs.size()) + " forms in " +
                    std::to_string(num_vars) + " variables)");
  std::vector<unsigned> degrees;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const auto& f = fs[i];
    if (f.num_vars() != num_vars || !(f.field() == fs.front().field()))
      throw Error(ErrorKind::dimension_mismatch, "forms differ in variable count or scalar domain");
    if (f.is_zero()) throw Error(ErrorKind::degenerate_input, "form " + std::to_string(i) + " is zero");
    auto d = is_homogeneous(f);
    if (!d) throw Error(ErrorKind::degenerate_input, "form " + std::to_string(i) + " is not homogeneous");
    if (*d == 0) throw Error(ErrorKind::degenerate_input, "form " + std::to_string(i) + " is constant");
    degrees.push_back(*d);
  }
  return degrees;
}

/// Dense univariate polynomial helpers, coefficients low to high.
template <Field F>
std::vector<typename F::value_type> newton_interpolate(const F& field, std::span<const typename F::value_type> xs,
                                                       std::span<const typename F::value_type> ys) {
  const std::size_t n = xs.size();
  std::vector<typename F::value_type> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = field.mul(field.sub(dd[i], dd[i - 1]), field.inv(field.sub(xs[i], xs[i - level])));
  // Horner expansion of the Newton form.
  std::vector<typename F::value_type> coeffs(1, n ? dd[n - 1] : field.zero());
  for (std::size_t i = n - 1; i-- > 0;) {
    std::vector<typename F::value_type> next(coeffs.size() + 1, field.zero());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      next[k + 1] = field.add(next[k + 1], coeffs[k]);
      next[k] = field.sub(next[k], field.mul(xs[i], coeffs[k]));
    }
    next[0] = field.add(next[0], dd[i]);
    coeffs = std::move(next);
  }
  return coeffs;
}

template <Field F>
void trim(const F& field, std::vector<typename F::value_type>& p) {
  while (!p.empty() && field.is_zero(p.back())) p.pop_back();
}

/// Quotient of exact division; nullopt when the remainder is nonzero.
template <Field F>
std::optional<std::vector<typename F::value_type>> exact_divide(const F& field, std::vector<typename F::value_type> num,
                                                                std::vector<typename F::value_type> den) {
  trim(field, num);
  trim(field, den);
  if (den.empty()) return std::nullopt;
  if (num.size() < den.size()) {
    if (num.empty()) return std::vector<typename F::value_type>{};
    return std::nullopt;
  }
  std::vector<typename F::value_type> quotient(num.size() - den.size() + 1, field.zero());
  const auto inv_lead = field.inv(den.back());
  for (std::size_t k = quotient.size(); k-- > 0;) {
    const auto q = field.mul(num[k + den.size() - 1], inv_lead);
    quotient[k] = q;
    for (std::size_t j = 0; j < den.size(); ++j) num[k + j] = field.sub(num[k + j], field.mul(q, den[j]));
  }
  trim(field, num);
  if (!num.empty()) return std::nullopt;
  return quotient;
}

template <Field F>
typename F::value_type det_shifted(const F& field, Matrix<typename F::value_type> a, const typename F::value_type& eps) {
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, i) = field.add(a(i, i), eps);
  return determinant(field, a);
}

}  // namespace detail

template <Field F>
MacaulayMatrices<F> build_macaulay(std::span<const Polynomial<F>> fs) {
  const auto degrees = detail::square_system_degrees(fs);
  const F& field = fs.front().field();
  MacaulayMatrices<F> out{.full = {}, .extraneous = {}, .structure = macaulay_structure(degrees)};
  const auto& s = out.structure;
  const std::size_t size = s.columns.size();
  std::map<Monomial, std::size_t, GrevlexDescending> column_of;
  for (std::size_t c = 0; c < size; ++c) column_of.emplace(s.columns[c], c);
  out.full = Matrix<typename F::value_type>(size, size, field.zero());
  for (std::size_t r = 0; r < size; ++r) {
    const auto& label = s.rows[r];
    for (const auto& [m, c] : fs[label.poly].terms()) out.full(r, column_of.at(label.multiplier * m)) = c;
  }
  const auto idx = s.non_reduced_indices();
  out.extraneous = out.full.select(idx, idx);
  return out;
}

template <Field F>
MacaulayMatrices<F> build_macaulay(const std::vector<Polynomial<F>>& fs) {
  return build_macaulay(std::span<const Polynomial<F>>(fs));
}

enum class ResultantPath { direct, coordinate_change, perturbation };

inline const char* to_string(ResultantPath p) {
  switch (p) {
    case ResultantPath::direct:
      return "direct";
    case ResultantPath::coordinate_change:
      return "coordinate_change";
    case ResultantPath::perturbation:
      return "perturbation";
  }
  return "?";
}

template <Field F>
struct ResultantValue {
  /// Normalized so that R(x_0^{d_0}, ..., x_n^{d_n}) = 1.
  typename F::value_type value;
  ResultantPath path = ResultantPath::direct;
  /// Factor det(U)^{-d_0...d_n} already applied on the coordinate-change path; 1 otherwise.
  typename F::value_type correction;
  unsigned coordinate_attempts = 0;
};

struct ResultantOptions {
  unsigned coordinate_retries = 5;
  /// Entries of the random coordinate change over Q lie in [-bound, bound].
  std::int64_t rational_entry_bound = 1000;
  bool allow_perturbation = true;
};

/// det(M)/det(M') on the forms as given; nullopt when det(M') vanishes.
template <Field F>
std::optional<typename F::value_type> macaulay_quotient(std::span<const Polynomial<F>> fs) {
  const auto mats = build_macaulay(fs);
  const F& field = fs.front().field();
  const auto den = determinant(field, mats.extraneous);
  if (field.is_zero(den)) return std::nullopt;
  return field.mul(determinant(field, mats.full), field.inv(den));
}

/**
 * Resultant through a random invertible change of coordinates x -> U·x.
 * R(f∘U) = det(U)^{d_0...d_n} R(f), so the raw quotient is multiplied by
 * det(U)^{-d_0...d_n}. Returns nullopt when `attempts` draws all leave det(M')
 * singular.
 */
template <Field F>
std::optional<ResultantValue<F>> resultant_by_coordinate_change(std::span<const Polynomial<F>> fs, Rng& rng,
                                                                unsigned attempts,
                                                                const ResultantOptions& options = {}) {
  const auto degrees = detail::square_system_degrees(fs);
  const F& field = fs.front().field();
  const std::size_t n = fs.size();
  std::uint64_t degree_product = 1;
  for (auto d : degrees) degree_product *= d;
  auto entry = [&] {
    if constexpr (std::is_same_v<F, RationalField>) {
      return field.from_int(rng.between(-options.rational_entry_bound, options.rational_entry_bound));
    } else {
      return field.random(rng);
    }
  };
  for (unsigned attempt = 1; attempt <= attempts; ++attempt) {
    Matrix<typename F::value_type> u(n, n, field.zero());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) u(i, j) = entry();
    const auto det_u = determinant(field, u);
    if (field.is_zero(det_u)) continue;
    std::vector<Polynomial<F>> moved;
    moved.reserve(n);
    for (const auto& f : fs) moved.push_back(substitute_linear(f, u));
    auto raw = macaulay_quotient(std::span<const Polynomial<F>>(moved));
    if (!raw) continue;
    const auto correction = field.inv(field_pow(field, det_u, degree_product));
    return ResultantValue<F>{field.mul(*raw, correction), ResultantPath::coordinate_change, correction, attempt};
  }
  return std::nullopt;
}

/**
 * Resultant through the perturbation f_i + ε·x_i^{d_i}. With the row/column
 * pairing of the Macaulay matrix the perturbed matrices are M + εI and
 * M' + εI, both monic in ε, so det(M + εI) / det(M' + εI) is an exact
 * polynomial division whose value at ε = 0 is R(f).
 */
template <Field F>
ResultantValue<F> resultant_by_perturbation(std::span<const Polynomial<F>> fs) {
  const auto mats = build_macaulay(fs);
  const F& field = fs.front().field();
  const std::size_t big = mats.full.rows();
  const std::size_t small = mats.extraneous.rows();
  if constexpr (!std::is_same_v<F, RationalField>) {
    if (field.modulus() <= big + 1)
      throw Error(ErrorKind::unlucky_prime, "field too small for perturbation interpolation");
  }
  std::vector<typename F::value_type> xs, num_values, den_values;
  for (std::size_t k = 0; k <= big; ++k) {
    xs.push_back(field.from_int(static_cast<std::int64_t>(k) + 1));
    num_values.push_back(detail::det_shifted(field, mats.full, xs.back()));
    if (k <= small) den_values.push_back(detail::det_shifted(field, mats.extraneous, xs.back()));
  }
  auto num = detail::newton_interpolate<F>(field, xs, num_values);
  auto den = detail::newton_interpolate<F>(field, std::span(xs).first(small + 1), den_values);
  auto quotient = detail::exact_divide(field, std::move(num), std::move(den));
  if (!quotient) throw Error(ErrorKind::degeneracy_exhausted, "perturbed Macaulay quotient is not exact");
  const auto value = quotient->empty() ? field.zero() : quotient->front();
  return ResultantValue<F>{value, ResultantPath::perturbation, field.one(), 0};
}

/// Normalized resultant of n+1 homogeneous forms in n+1 variables.
template <Field F>
ResultantValue<F> macaulay_resultant(std::span<const Polynomial<F>> fs, Rng& rng, const ResultantOptions& options = {}) {
  detail::square_system_degrees(fs);
  const F& field = fs.front().field();
  if (auto direct = macaulay_quotient(fs)) return ResultantValue<F>{*direct, ResultantPath::direct, field.one(), 0};
  if (auto moved = resultant_by_coordinate_change(fs, rng, options.coordinate_retries, options)) return *moved;
  if (!options.allow_perturbation)
    throw Error(ErrorKind::degeneracy_exhausted, "extraneous minor singular under every coordinate change");
  return resultant_by_perturbation(fs);
}

template <Field F>
ResultantValue<F> macaulay_resultant(const std::vector<Polynomial<F>>& fs, Rng& rng,
                                     const ResultantOptions& options = {}) {
  return macaulay_resultant(std::span<const Polynomial<F>>(fs), rng, options);
}

/// Coefficients of a binary form of degree d, ordered by descending x_0 power.
template <Field F>
std::vector<typename F::value_type> binary_coefficients(const Polynomial<F>& f, unsigned degree) {
  std::vector<typename F::value_type> c;
  for (unsigned k = 0; k <= degree; ++k) c.push_back(f.coefficient(Monomial({degree - k, k})));
  return c;
}

/// (m+n)×(m+n) band matrix: n shifted rows of f's coefficients, then m of g's.
template <Field F>
Matrix<typename F::value_type> sylvester_matrix(const Polynomial<F>& f, const Polynomial<F>& g) {
  if (f.num_vars() != 2 || g.num_vars() != 2)
    throw Error(ErrorKind::dimension_mismatch, "Sylvester resultant needs binary forms");
  const std::vector<Polynomial<F>> pair{f, g};
  const auto degrees = detail::square_system_degrees(std::span<const Polynomial<F>>(pair));
  const unsigned m = degrees[0], n = degrees[1];
  const F& field = f.field();
  Matrix<typename F::value_type> s(m + n, m + n, field.zero());
  const auto a = binary_coefficients(f, m);
  const auto b = binary_coefficients(g, n);
  for (unsigned r = 0; r < n; ++r)
    for (unsigned k = 0; k <= m; ++k) s(r, r + k) = a[k];
  for (unsigned r = 0; r < m; ++r)
    for (unsigned k = 0; k <= n; ++k) s(n + r, r + k) = b[k];
  return s;
}

template <Field F>
typename F::value_type sylvester_resultant(const Polynomial<F>& f, const Polynomial<F>& g) {
  return determinant(f.field(), sylvester_matrix(f, g));
}

/// Coefficient matrix of linear forms: entry (i, j) is the x_j coefficient of f_i.
template <Field F>
Matrix<typename F::value_type> linear_coefficient_matrix(std::span<const Polynomial<F>> fs, std::size_t num_vars) {
  const F& field = fs.front().field();
  Matrix<typename F::value_type> a(fs.size(), num_vars, field.zero());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].num_vars() != num_vars) throw Error(ErrorKind::dimension_mismatch, "variable count mismatch");
    auto d = is_homogeneous(fs[i]);
    if (!fs[i].is_zero() && (!d || *d != 1))
      throw Error(ErrorKind::invalid_argument, "form " + std::to_string(i) + " is not linear");
    for (std::size_t j = 0; j < num_vars; ++j) a(i, j) = fs[i].coefficient(Monomial::power(num_vars, j, 1));
  }
  return a;
}

template <Field F>
typename F::value_type linear_resultant(std::span<const Polynomial<F>> fs) {
  if (fs.empty() || fs.size() != fs.front().num_vars())
    throw Error(ErrorKind::dimension_mismatch, "linear resultant needs n+1 forms in n+1 variables");
  return determinant(fs.front().field(), linear_coefficient_matrix(fs, fs.front().num_vars()));
}

template <Field F>
typename F::value_type linear_resultant(const std::vector<Polynomial<F>>& fs) {
  return linear_resultant(std::span<const Polynomial<F>>(fs));
}

}  // namespace sysres
