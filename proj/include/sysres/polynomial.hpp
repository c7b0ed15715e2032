#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sysres/error.hpp"
#include "sysres/field.hpp"
#include "sysres/matrix.hpp"
#include "sysres/monomial.hpp"
#include "sysres/random.hpp"

namespace sysres {

/**
 * Sparse multivariate polynomial over an exact field.
 *
 * Terms are kept leading-first in grevlex order and no stored coefficient is
 * zero, so structural equality is mathematical equality.
 */
template <Field F>
class Polynomial {
 public:
  using field_type = F;
  using value_type = typename F::value_type;
  using term_map = std::map<Monomial, value_type, GrevlexDescending>;

  Polynomial(F field, std::size_t num_vars) : field_(std::move(field)), num_vars_(num_vars) {}

  static Polynomial constant(F field, std::size_t num_vars, const value_type& c) {
    Polynomial p(std::move(field), num_vars);
    p.add_term(Monomial::one(num_vars), c);
    return p;
  }
  static Polynomial term(F field, const Monomial& m, const value_type& c) {
    Polynomial p(std::move(field), m.num_vars());
    p.add_term(m, c);
    return p;
  }
  static Polynomial variable(F field, std::size_t num_vars, std::size_t var) {
    auto one = field.one();
    return term(std::move(field), Monomial::power(num_vars, var, 1), one);
  }

  const F& field() const { return field_; }
  std::size_t num_vars() const { return num_vars_; }
  const term_map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Accumulates c·m into the polynomial, dropping the term if it cancels.
  void add_term(const Monomial& m, const value_type& c) {
    if (m.num_vars() != num_vars_) throw Error(ErrorKind::dimension_mismatch, "monomial has wrong variable count");
    if (field_.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second = field_.add(it->second, c);
    if (field_.is_zero(it->second)) terms_.erase(it);
  }

  value_type coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  /// Highest term degree; 0 for the zero polynomial.
  unsigned total_degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
  }

  Polynomial operator-() const {
    Polynomial out(field_, num_vars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, field_.neg(c));
    return out;
  }

  Polynomial scaled(const value_type& s) const {
    Polynomial out(field_, num_vars_);
    if (field_.is_zero(s)) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, field_.mul(s, c));
    return out;
  }

  Polynomial& operator+=(const Polynomial& other) {
    check_compatible(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& other) {
    check_compatible(other);
    for (const auto& [m, c] : other.terms_) add_term(m, field_.neg(c));
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial out(a.field_, a.num_vars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, a.field_.mul(ca, cb));
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!(a.field_ == b.field_) || a.num_vars_ != b.num_vars_ || a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (const auto& [m, c] : a.terms_) {
      if (!(m == ib->first) || !a.field_.equal(c, ib->second)) return false;
      ++ib;
    }
    return true;
  }

  value_type evaluate(std::span<const value_type> point) const {
    if (point.size() != num_vars_) throw Error(ErrorKind::dimension_mismatch, "evaluation point has wrong length");
    auto acc = field_.zero();
    for (const auto& [m, c] : terms_) {
      auto t = c;
      for (std::size_t i = 0; i < num_vars_; ++i)
        if (m[i]) t = field_.mul(t, field_pow(field_, point[i], m[i]));
      acc = field_.add(acc, t);
    }
    return acc;
  }

  /// Coefficient-wise image in another field.
  template <Field G, class Fn>
  Polynomial<G> map_coefficients(G target, Fn&& fn) const {
    Polynomial<G> out(std::move(target), num_vars_);
    for (const auto& [m, c] : terms_) out.add_term(m, fn(c));
    return out;
  }

 private:
  void check_compatible(const Polynomial& other) const {
    if (num_vars_ != other.num_vars_ || !(field_ == other.field_))
      throw Error(ErrorKind::dimension_mismatch, "polynomials differ in variable count or scalar domain");
  }

  F field_;
  std::size_t num_vars_;
  term_map terms_;
};

/// Common term degree, or nullopt if the terms disagree. The zero polynomial
/// reports degree 0; callers distinguish it with is_zero().
template <Field F>
std::optional<unsigned> is_homogeneous(const Polynomial<F>& p) {
  if (p.is_zero()) return 0u;
  const unsigned d = p.terms().begin()->first.degree();
  for (const auto& [m, c] : p.terms())
    if (m.degree() != d) return std::nullopt;
  return d;
}

/// p(U·x): each x_i is replaced by the linear form sum_j U(i,j)·x_j.
template <Field F>
Polynomial<F> substitute_linear(const Polynomial<F>& p, const Matrix<typename F::value_type>& u) {
  const std::size_t n = p.num_vars();
  if (u.rows() != n || u.cols() != n) throw Error(ErrorKind::dimension_mismatch, "substitution matrix has wrong size");
  const F& field = p.field();
  std::vector<std::vector<Polynomial<F>>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial<F> form(field, n);
    for (std::size_t j = 0; j < n; ++j) form.add_term(Monomial::power(n, j, 1), u(i, j));
    powers[i].push_back(Polynomial<F>::constant(field, n, field.one()));
    powers[i].push_back(std::move(form));
  }
  auto power_of = [&](std::size_t i, unsigned e) -> const Polynomial<F>& {
    while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * powers[i][1]);
    return powers[i][e];
  };
  Polynomial<F> out(field, n);
  for (const auto& [m, c] : p.terms()) {
    auto t = Polynomial<F>::constant(field, n, c);
    for (std::size_t i = 0; i < n; ++i)
      if (m[i]) t = t * power_of(i, m[i]);
    out += t;
  }
  return out;
}

/// Coefficient-wise reduction; throws bad_prime if a denominator vanishes mod p.
inline Polynomial<PrimeField> reduce_mod_p(const Polynomial<RationalField>& p, const PrimeField& field) {
  return p.map_coefficients(field, [&](const mpq_class& c) { return field.from_rational(c); });
}

/// Image of a rational polynomial in the field F (identity over Q).
template <Field F>
Polynomial<F> to_field(const Polynomial<RationalField>& p, const F& field) {
  if constexpr (std::is_same_v<F, RationalField>) {
    return p;
  } else {
    return reduce_mod_p(p, field);
  }
}

/// Homogeneous polynomial of the given degree with coefficients from
/// `sampler()`, one draw per monomial of that degree in grevlex order.
template <Field F, class Sampler>
Polynomial<F> random_homogeneous(const F& field, std::size_t num_vars, unsigned degree, Sampler&& sampler) {
  Polynomial<F> out(field, num_vars);
  for (const auto& m : monomials_of_degree(num_vars, degree)) out.add_term(m, sampler());
  return out;
}

template <Field F>
Polynomial<F> random_homogeneous(const F& field, std::size_t num_vars, unsigned degree, Rng& rng) {
  return random_homogeneous(field, num_vars, degree, [&] { return field.random(rng); });
}

/**
 * The input system f_0..f_m in n+1 variables. Nonzero members are
 * homogeneous of positive degree; zero members carry degree 0.
 */
template <Field F>
class PolySystem {
 public:
  PolySystem(std::size_t num_vars, std::vector<Polynomial<F>> polys) : num_vars_(num_vars), polys_(std::move(polys)) {
    if (num_vars_ == 0) throw Error(ErrorKind::invalid_argument, "a system needs at least one variable");
    degrees_.reserve(polys_.size());
    for (std::size_t j = 0; j < polys_.size(); ++j) {
      const auto& p = polys_[j];
      if (p.num_vars() != num_vars_)
        throw Error(ErrorKind::dimension_mismatch, "polynomial " + std::to_string(j) + " has the wrong variable count");
      auto d = is_homogeneous(p);
      if (!d) throw Error(ErrorKind::invalid_argument, "polynomial " + std::to_string(j) + " is not homogeneous");
      if (!p.is_zero() && *d == 0)
        throw Error(ErrorKind::invalid_argument, "polynomial " + std::to_string(j) + " is a nonzero constant");
      degrees_.push_back(*d);
    }
  }

  std::size_t num_vars() const { return num_vars_; }
  /// Projective dimension n.
  std::size_t dimension() const { return num_vars_ - 1; }
  std::size_t size() const { return polys_.size(); }
  const std::vector<Polynomial<F>>& polys() const { return polys_; }
  const Polynomial<F>& operator[](std::size_t j) const { return polys_[j]; }
  const std::vector<unsigned>& degrees() const { return degrees_; }

  /// The subsystem of nonzero members, in order.
  PolySystem without_zeros() const {
    std::vector<Polynomial<F>> kept;
    for (const auto& p : polys_)
      if (!p.is_zero()) kept.push_back(p);
    return PolySystem(num_vars_, std::move(kept));
  }

  template <Field G>
  PolySystem<G> to(const G& field) const {
    static_assert(std::is_same_v<F, RationalField>, "only rational systems are converted");
    std::vector<Polynomial<G>> out;
    out.reserve(polys_.size());
    for (const auto& p : polys_) out.push_back(to_field(p, field));
    return PolySystem<G>(num_vars_, std::move(out));
  }

 private:
  std::size_t num_vars_;
  std::vector<Polynomial<F>> polys_;
  std::vector<unsigned> degrees_;
};

}  // namespace sysres
