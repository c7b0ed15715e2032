#pragma once

// Exact scalar domains. Each domain is a small descriptor object that owns
// the arithmetic; elements are plain values. Generic code only talks to the
// descriptor, so the same algorithm runs over Q and over GF(p).

#include <gmpxx.h>

#include <array>
#include <concepts>
#include <cstdint>
#include <string>

#include "sysres/error.hpp"
#include "sysres/random.hpp"

namespace sysres {

template <class F>
concept Field = requires(const F& f, const typename F::value_type& a, Rng& rng) {
  typename F::value_type;
  { f.zero() } -> std::convertible_to<typename F::value_type>;
  { f.one() } -> std::convertible_to<typename F::value_type>;
  { f.from_int(std::int64_t{}) } -> std::convertible_to<typename F::value_type>;
  { f.add(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.sub(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.mul(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.neg(a) } -> std::convertible_to<typename F::value_type>;
  { f.inv(a) } -> std::convertible_to<typename F::value_type>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.equal(a, a) } -> std::same_as<bool>;
  { f.random(rng) } -> std::convertible_to<typename F::value_type>;
  { f.to_string(a) } -> std::convertible_to<std::string>;
  { f == f } -> std::same_as<bool>;
};

/// The rationals, backed by GMP. Values are kept canonical (reduced, positive
/// denominator); every gmpxx arithmetic result already is.
struct RationalField {
  using value_type = mpq_class;

  /// Random elements are integers drawn uniformly from [-kSampleHalfWidth, kSampleHalfWidth).
  static constexpr std::int64_t kSampleHalfWidth = std::int64_t{1} << 19;
  static constexpr std::uint64_t kSampleGridSize = std::uint64_t{1} << 20;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t v) const {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), v);
    return value_type(z);
  }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) throw Error(ErrorKind::invalid_argument, "inverse of zero");
    return 1 / a;
  }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  value_type random(Rng& rng) const {
    return from_int(rng.between(-kSampleHalfWidth, kSampleHalfWidth - 1));
  }
  std::string to_string(const value_type& a) const { return a.get_str(); }
  std::string name() const { return "QQ"; }

  bool operator==(const RationalField&) const = default;
};

/// GF(p) for an odd prime p < 2^63. Residues live in [0, p).
class PrimeField {
 public:
  using value_type = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p < 3 || p % 2 == 0 || p >= (std::uint64_t{1} << 63))
      throw Error(ErrorKind::invalid_argument, "modulus must be an odd prime below 2^63");
  }

  std::uint64_t modulus() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t v) const {
    if (v >= 0) return static_cast<std::uint64_t>(v) % p_;
    const std::uint64_t r = (~static_cast<std::uint64_t>(v) + 1) % p_;
    return r == 0 ? 0 : p_ - r;
  }
  value_type from_mpz(const mpz_class& z) const {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(p_));
    return r.get_ui();
  }
  /// Throws bad_prime when the denominator vanishes mod p.
  value_type from_rational(const mpq_class& q) const {
    const value_type den = from_mpz(q.get_den());
    if (den == 0)
      throw Error(ErrorKind::bad_prime, "denominator divisible by " + std::to_string(p_));
    return mul(from_mpz(q.get_num()), inv(den));
  }
  value_type add(value_type a, value_type b) const {
    const value_type s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (p_ - b); }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<unsigned __int128>(a) * b % p_);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type pow(value_type a, std::uint64_t e) const {
    value_type r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  value_type inv(value_type a) const {
    if (a == 0) throw Error(ErrorKind::invalid_argument, "inverse of zero");
    return pow(a, p_ - 2);
  }
  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }
  value_type random(Rng& rng) const { return rng.below(p_); }
  std::string to_string(value_type a) const { return std::to_string(a); }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint64_t p_;
};

template <Field F>
typename F::value_type field_pow(const F& field, typename F::value_type base, std::uint64_t e) {
  auto result = field.one();
  while (e) {
    if (e & 1) result = field.mul(result, base);
    base = field.mul(base, base);
    e >>= 1;
  }
  return result;
}

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin; the first twelve prime bases suffice below 2^64.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto b : bases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : bases) {
    std::uint64_t x = detail::powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Uniformly chosen odd prime with exactly `bits` bits, bits in [3, 63].
inline std::uint64_t random_prime(unsigned bits, Rng& rng) {
  if (bits < 3 || bits > 63) throw Error(ErrorKind::invalid_argument, "prime bit size out of range");
  const std::uint64_t low = std::uint64_t{1} << (bits - 1);
  for (;;) {
    const std::uint64_t candidate = (low | rng.below(low)) | 1;
    if (is_prime(candidate)) return candidate;
  }
}

}  // namespace sysres
