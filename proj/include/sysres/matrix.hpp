#pragma once

#include <gmpxx.h>

#include <cassert>
#include <cstddef>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "sysres/error.hpp"
#include "sysres/field.hpp"

namespace sysres {

/// Dense row-major matrix. Only the determinant and solve kernels use dense
/// storage; everything upstream is sparse.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  const T& operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  /// Submatrix on the given row and column index lists.
  Matrix select(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const {
    Matrix out;
    out.rows_ = row_idx.size();
    out.cols_ = col_idx.size();
    out.data_.reserve(out.rows_ * out.cols_);
    for (auto r : row_idx)
      for (auto c : col_idx) out.data_.push_back((*this)(r, c));
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <Field F>
Matrix<typename F::value_type> identity_matrix(const F& field, std::size_t n) {
  Matrix<typename F::value_type> m(n, n, field.zero());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

template <Field F>
Matrix<typename F::value_type> multiply(const F& field, const Matrix<typename F::value_type>& a,
                                        const Matrix<typename F::value_type>& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::dimension_mismatch, "matrix product shape mismatch");
  Matrix<typename F::value_type> out(a.rows(), b.cols(), field.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (field.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = field.add(out(i, j), field.mul(a(i, k), b(k, j)));
    }
  return out;
}

/// Determinant by Gaussian elimination with a nonzero-pivot search. Suitable
/// for fields with constant-cost arithmetic (prime fields).
template <Field F>
typename F::value_type elimination_determinant(const F& field, Matrix<typename F::value_type> a) {
  if (!a.is_square()) throw Error(ErrorKind::dimension_mismatch, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  auto det = field.one();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && field.is_zero(a(pivot, k))) ++pivot;
    if (pivot == n) return field.zero();
    if (pivot != k) {
      a.swap_rows(pivot, k);
      det = field.neg(det);
    }
    det = field.mul(det, a(k, k));
    const auto inv_pivot = field.inv(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (field.is_zero(a(i, k))) continue;
      const auto factor = field.mul(a(i, k), inv_pivot);
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = field.sub(a(i, j), field.mul(factor, a(k, j)));
    }
  }
  return det;
}

/// Fraction-free (Bareiss) determinant of an integer matrix. Every
/// intermediate entry is itself a minor, so all divisions are exact.
inline mpz_class bareiss_determinant(Matrix<mpz_class> a) {
  if (!a.is_square()) throw Error(ErrorKind::dimension_mismatch, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  mpz_class previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      a.swap_rows(pivot, k);
      sign = -sign;
    }
    const bool unit_step = a(k, k) == previous;
    mpz_class t;
    for (std::size_t i = k + 1; i < n; ++i) {
      // Rows already cleared in column k only pick up the factor a(k,k)/previous.
      const bool cleared = a(i, k) == 0;
      if (cleared && unit_step) continue;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (cleared && a(i, j) == 0) continue;
        mpz_mul(t.get_mpz_t(), a(i, j).get_mpz_t(), a(k, k).get_mpz_t());
        if (!cleared && a(k, j) != 0) mpz_submul(t.get_mpz_t(), a(i, k).get_mpz_t(), a(k, j).get_mpz_t());
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      a(i, k) = 0;
    }
    previous = a(k, k);
  }
  mpz_class det = a(n - 1, n - 1);
  return sign < 0 ? mpz_class(-det) : det;
}

/// Rational determinant: clear each row's denominators, run Bareiss on the
/// integer matrix, divide the scaling back out.
inline mpq_class fraction_free_determinant(const Matrix<mpq_class>& a) {
  if (!a.is_square()) throw Error(ErrorKind::dimension_mismatch, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix<mpz_class> integral(n, n, mpz_class(0));
  mpz_class scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    mpz_class row_lcm = 1;
    for (std::size_t c = 0; c < n; ++c) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), a(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < n; ++c) integral(r, c) = a(r, c).get_num() * (row_lcm / a(r, c).get_den());
    scale *= row_lcm;
  }
  mpq_class det(bareiss_determinant(std::move(integral)), scale);
  det.canonicalize();
  return det;
}

template <Field F>
typename F::value_type determinant(const F& field, const Matrix<typename F::value_type>& a) {
  if constexpr (std::is_same_v<F, RationalField>) {
    (void)field;
    return fraction_free_determinant(a);
  } else {
    return elimination_determinant(field, a);
  }
}

/// Row-echelon rank.
template <Field F>
std::size_t rank(const F& field, Matrix<typename F::value_type> a) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.rows() && field.is_zero(a(pivot, c))) ++pivot;
    if (pivot == a.rows()) continue;
    a.swap_rows(pivot, r);
    const auto inv_pivot = field.inv(a(r, c));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (field.is_zero(a(i, c))) continue;
      const auto factor = field.mul(a(i, c), inv_pivot);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = field.sub(a(i, j), field.mul(factor, a(r, j)));
    }
    ++r;
  }
  return r;
}

/// Solves a·x = b for square nonsingular a; nullopt when a is singular.
template <Field F>
std::optional<std::vector<typename F::value_type>> solve(const F& field, Matrix<typename F::value_type> a,
                                                         std::vector<typename F::value_type> b) {
  const std::size_t n = a.rows();
  if (!a.is_square() || b.size() != n) throw Error(ErrorKind::dimension_mismatch, "solve shape mismatch");
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && field.is_zero(a(pivot, k))) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != k) {
      a.swap_rows(pivot, k);
      std::swap(b[pivot], b[k]);
    }
    const auto inv_pivot = field.inv(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (field.is_zero(a(i, k))) continue;
      const auto factor = field.mul(a(i, k), inv_pivot);
      for (std::size_t j = k; j < n; ++j) a(i, j) = field.sub(a(i, j), field.mul(factor, a(k, j)));
      b[i] = field.sub(b[i], field.mul(factor, b[k]));
    }
  }
  std::vector<typename F::value_type> x(n, field.zero());
  for (std::size_t k = n; k-- > 0;) {
    auto acc = b[k];
    for (std::size_t j = k + 1; j < n; ++j) acc = field.sub(acc, field.mul(a(k, j), x[j]));
    x[k] = field.mul(acc, field.inv(a(k, k)));
  }
  return x;
}

}  // namespace sysres
