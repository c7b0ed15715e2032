#pragma once

// Exact solvability oracles on restricted domains, and instance generators
// with known ground truth. Used to validate the randomized pipeline.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sysres/error.hpp"
#include "sysres/field.hpp"
#include "sysres/matrix.hpp"
#include "sysres/monomial.hpp"
#include "sysres/polynomial.hpp"
#include "sysres/random.hpp"
#include "sysres/resultant.hpp"

namespace sysres {

using RationalSystem = PolySystem<RationalField>;

namespace detail {

using DenseQ = std::vector<mpq_class>;

inline void trim_q(DenseQ& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

/// Remainder of a by b in Q[z]; b nonzero.
inline DenseQ remainder_q(DenseQ a, const DenseQ& b) {
  trim_q(a);
  while (a.size() >= b.size() && !a.empty()) {
    const mpq_class q = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= q * b[k];
    trim_q(a);
  }
  return a;
}

inline DenseQ gcd_q(DenseQ a, DenseQ b) {
  trim_q(a);
  trim_q(b);
  while (!b.empty()) {
    auto r = remainder_q(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace detail

/**
 * Exact common-zero test for binary forms: dehomogenize at x1 = 1 and take
 * the gcd over Q, then check the point (1:0) separately.
 */
inline bool gcd_solvable_binary(const RationalSystem& system) {
  if (system.num_vars() != 2) throw Error(ErrorKind::dimension_mismatch, "gcd oracle needs binary forms");
  bool all_vanish_at_infinity = true;
  bool any_nonzero = false;
  detail::DenseQ g;
  for (std::size_t j = 0; j < system.size(); ++j) {
    const auto& f = system[j];
    if (f.is_zero()) continue;
    any_nonzero = true;
    const unsigned d = system.degrees()[j];
    detail::DenseQ dehom(d + 1);
    for (const auto& [m, c] : f.terms()) dehom[m[0]] = c;  // f(z, 1)
    if (sgn(dehom[d]) != 0) all_vanish_at_infinity = false;
    g = g.empty() ? dehom : detail::gcd_q(std::move(g), std::move(dehom));
    detail::trim_q(g);
  }
  if (!any_nonzero) return true;
  return g.size() >= 2 || all_vanish_at_infinity;
}

/// Linear forms: a nonzero common zero exists iff the coefficient matrix has rank <= n.
inline bool rank_solvable_linear(const RationalSystem& system) {
  for (std::size_t j = 0; j < system.size(); ++j)
    if (!system[j].is_zero() && system.degrees()[j] != 1)
      throw Error(ErrorKind::invalid_argument, "rank oracle needs linear forms");
  if (system.size() == 0) return true;
  const auto a = linear_coefficient_matrix(std::span<const Polynomial<RationalField>>(system.polys()), system.num_vars());
  return rank(RationalField{}, a) <= system.dimension();
}

struct PlantedInstance {
  RationalSystem system;
  std::vector<std::int64_t> root;
};

/// Random integer form with coefficients uniform in [-bound, bound].
inline Polynomial<RationalField> random_integer_form(std::size_t num_vars, unsigned degree, std::int64_t bound, Rng& rng) {
  const RationalField q;
  return random_homogeneous(q, num_vars, degree, [&] { return q.from_int(rng.between(-bound, bound)); });
}

/**
 * Forms vanishing at `root`: f_j = r_j - (r_j(root) / root_k^{n_j}) x_k^{n_j}
 * for random r_j and the first k with root_k != 0, scaled to integer
 * coefficients. Zero draws are redrawn.
 */
inline PlantedInstance planted_instance(std::size_t n, std::span<const unsigned> degrees,
                                        std::span<const std::int64_t> root, Rng& rng, std::int64_t coeff_bound = 10) {
  if (root.size() != n + 1) throw Error(ErrorKind::dimension_mismatch, "root must have n+1 coordinates");
  std::size_t k = 0;
  while (k < root.size() && root[k] == 0) ++k;
  if (k == root.size()) throw Error(ErrorKind::invalid_argument, "planted root must be nonzero");
  const RationalField q;
  std::vector<mpq_class> point;
  for (auto r : root) point.push_back(q.from_int(r));
  std::vector<Polynomial<RationalField>> polys;
  for (auto d : degrees) {
    if (d == 0) throw Error(ErrorKind::invalid_argument, "planted degrees must be positive");
    for (;;) {
      auto r = random_integer_form(n + 1, d, coeff_bound, rng);
      const mpq_class at_root = r.evaluate(point);
      mpq_class scale = field_pow(q, point[k], d);
      r.add_term(Monomial::power(n + 1, k, d), -at_root / scale);
      if (r.is_zero()) continue;
      mpz_class lcm = 1;
      for (const auto& [m, c] : r.terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
      polys.push_back(r.scaled(mpq_class(lcm)));
      break;
    }
  }
  return PlantedInstance{RationalSystem(n + 1, std::move(polys)), std::vector<std::int64_t>(root.begin(), root.end())};
}

/// Dense random integer system; zero members are redrawn.
inline RationalSystem generic_instance(std::size_t n, std::size_t m, std::span<const unsigned> degrees,
                                       std::int64_t coeff_bound, Rng& rng) {
  if (coeff_bound < 1) throw Error(ErrorKind::invalid_argument, "coefficient bound must be at least 1");
  if (degrees.size() != m + 1) throw Error(ErrorKind::dimension_mismatch, "need m+1 degrees");
  std::vector<Polynomial<RationalField>> polys;
  for (auto d : degrees) {
    if (d == 0) throw Error(ErrorKind::invalid_argument, "degrees must be positive");
    auto f = random_integer_form(n + 1, d, coeff_bound, rng);
    while (f.is_zero()) f = random_integer_form(n + 1, d, coeff_bound, rng);
    polys.push_back(std::move(f));
  }
  return RationalSystem(n + 1, std::move(polys));
}

}  // namespace sysres
