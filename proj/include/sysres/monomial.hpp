#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstddef>
#include <numeric>
#include <vector>

#include "sysres/error.hpp"

namespace sysres {

/// x_0^{s_0} ... x_n^{s_n} with a cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exponents)
      : exponents_(std::move(exponents)),
        degree_(std::accumulate(exponents_.begin(), exponents_.end(), 0u)) {}

  static Monomial one(std::size_t num_vars) { return Monomial(std::vector<unsigned>(num_vars, 0)); }
  static Monomial power(std::size_t num_vars, std::size_t var, unsigned exponent) {
    std::vector<unsigned> e(num_vars, 0);
    e.at(var) = exponent;
    return Monomial(std::move(e));
  }

  std::size_t num_vars() const { return exponents_.size(); }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return exponents_[i]; }
  const std::vector<unsigned>& exponents() const { return exponents_; }

  bool divides(const Monomial& other) const {
    assert(num_vars() == other.num_vars());
    for (std::size_t i = 0; i < exponents_.size(); ++i)
      if (exponents_[i] > other.exponents_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.num_vars() != b.num_vars()) throw Error(ErrorKind::dimension_mismatch, "monomial variable count mismatch");
    std::vector<unsigned> e(a.exponents_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.exponents_[i];
    return Monomial(std::move(e));
  }

  /// Exact quotient; `divisor` must divide `a`.
  friend Monomial operator/(const Monomial& a, const Monomial& divisor) {
    if (!divisor.divides(a)) throw Error(ErrorKind::invalid_argument, "monomial division is not exact");
    std::vector<unsigned> e(a.exponents_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= divisor.exponents_[i];
    return Monomial(std::move(e));
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exponents_ == b.exponents_; }

 private:
  std::vector<unsigned> exponents_;
  unsigned degree_ = 0;
};

/// Graded reverse-lexicographic comparison: higher degree is larger; on a
/// tie, the monomial whose last differing exponent is smaller is larger.
inline std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b) {
  assert(a.num_vars() == b.num_vars());
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = a.num_vars(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

/// Leading-term-first ordering for sparse containers.
struct GrevlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

/// All monomials of the given degree, in descending grevlex order.
inline std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned degree) {
  std::vector<Monomial> out;
  if (num_vars == 0) {
    if (degree == 0) out.emplace_back(std::vector<unsigned>{});
    return out;
  }
  std::vector<unsigned> e(num_vars, 0);
  auto fill = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
    if (var + 1 == num_vars) {
      e[var] = remaining;
      out.emplace_back(e);
      return;
    }
    for (unsigned k = 0; k <= remaining; ++k) {
      e[var] = k;
      self(self, var + 1, remaining - k);
    }
  };
  fill(fill, 0, degree);
  std::sort(out.begin(), out.end(), GrevlexDescending{});
  return out;
}

/// binomial(n, k) in 64 bits; saturates instead of overflowing.
inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > static_cast<unsigned __int128>(~std::size_t{0} >> 1)) return ~std::size_t{0} >> 1;
  }
  return static_cast<std::size_t>(r);
}

}  // namespace sysres
