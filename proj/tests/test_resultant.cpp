#include "test_support.hpp"

namespace sysres {
namespace {

using testing::kQ;
using testing::poly;

std::vector<Polynomial<RationalField>> forms(std::initializer_list<const char*> texts, std::size_t num_vars) {
  std::vector<Polynomial<RationalField>> out;
  for (auto t : texts) out.push_back(poly(t, num_vars));
  return out;
}

TEST(Macaulay, CriticalDegree) {
  EXPECT_EQ(critical_degree(std::vector<unsigned>{1, 1, 1}), 1u);
  EXPECT_EQ(critical_degree(std::vector<unsigned>{2, 2, 3}), 5u);
  EXPECT_EQ(critical_degree(std::vector<unsigned>{3, 4}), 6u);
}

TEST(Macaulay, StructureRowsPairWithColumns) {
  for (const auto& degrees : std::vector<std::vector<unsigned>>{{1, 1, 1}, {2, 3}, {2, 2, 2}, {3, 2, 1, 2}}) {
    const auto s = macaulay_structure(degrees);
    EXPECT_EQ(s.columns.size(), binomial(s.critical_degree + degrees.size() - 1, degrees.size() - 1));
    for (std::size_t r = 0; r < s.columns.size(); ++r) {
      const auto& label = s.rows[r];
      EXPECT_EQ(label.multiplier * Monomial::power(degrees.size(), label.poly, degrees[label.poly]), s.columns[r]);
      for (std::size_t i = 0; i < label.poly; ++i) EXPECT_LT(s.columns[r][i], degrees[i]);
      int hits = 0;
      for (std::size_t i = 0; i < degrees.size(); ++i) hits += s.columns[r][i] >= degrees[i];
      EXPECT_EQ(s.non_reduced[r], hits >= 2);
    }
  }
}

TEST(Macaulay, LinearCaseIsCoefficientMatrix) {
  const auto fs = forms({"2*x0 + x1 - x2", "x1 + 4*x2", "x0 - x2"}, 3);
  const auto mats = build_macaulay(fs);
  EXPECT_EQ(mats.full, linear_coefficient_matrix(std::span<const Polynomial<RationalField>>(fs), 3));
  EXPECT_EQ(mats.extraneous.rows(), 0u);
}

TEST(Macaulay, BinaryCaseIsSylvesterUpToRowOrder) {
  Rng rng(4);
  for (unsigned m = 1; m <= 4; ++m)
    for (unsigned n = 1; n <= 4; ++n) {
      const auto f = random_integer_form(2, m, 9, rng), g = random_integer_form(2, n, 9, rng);
      const auto mats = build_macaulay(std::vector{f, g});
      const auto syl = sylvester_matrix(f, g);
      ASSERT_EQ(mats.full.rows(), syl.rows());
      std::vector<std::vector<mpq_class>> a, b;
      for (std::size_t r = 0; r < syl.rows(); ++r) {
        std::vector<mpq_class> ra, rb;
        for (std::size_t c = 0; c < syl.cols(); ++c) {
          ra.push_back(mats.full(r, c));
          rb.push_back(syl(r, c));
        }
        a.push_back(ra);
        b.push_back(rb);
      }
      auto less = [](const auto& x, const auto& y) {
        for (std::size_t k = 0; k < x.size(); ++k)
          if (x[k] != y[k]) return x[k] < y[k];
        return false;
      };
      std::sort(a.begin(), a.end(), less);
      std::sort(b.begin(), b.end(), less);
      EXPECT_EQ(a, b);
    }
}

TEST(Macaulay, PurePowersGiveIdentity) {
  const auto fs = forms({"x0^2", "x1^2", "x2^2"}, 3);
  const auto mats = build_macaulay(fs);
  EXPECT_EQ(mats.full, identity_matrix(kQ, mats.full.rows()));
  Rng rng(1);
  EXPECT_EQ(macaulay_resultant(fs, rng).value, 1);
}

TEST(Macaulay, RejectsNonSquareInput) {
  try {
    (void)build_macaulay(forms({"x0", "x1"}, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::dimension_mismatch);
  }
  EXPECT_THROW((void)build_macaulay(forms({"x0", "x1 + x0^2"}, 2)), Error);
}

TEST(Resultant, Examples) {
  Rng rng(2);
  EXPECT_EQ(macaulay_resultant(forms({"x0^2 - 2*x1^2", "x0 - 3*x1"}, 2), rng).value, 7);
  EXPECT_EQ(sylvester_resultant(poly("x0^2 - 2*x1^2", 2), poly("x0 - 3*x1", 2)), 7);
  EXPECT_EQ(macaulay_resultant(forms({"x0^2", "x1^3", "x2^2"}, 3), rng).value, 1);
  // Common zero (1:1:1).
  EXPECT_EQ(macaulay_resultant(forms({"x0^2 - x1*x2", "x0*x1 - x2^2", "x0 + x1 - 2*x2"}, 3), rng).value, 0);
  const auto lin = forms({"2*x0 + x1 - x2", "x1 + 4*x2", "x0 - x2"}, 3);
  const Matrix<mpq_class> a = linear_coefficient_matrix(std::span<const Polynomial<RationalField>>(lin), 3);
  EXPECT_EQ(macaulay_resultant(lin, rng).value, testing::leibniz_determinant(kQ, a));
}

TEST(Resultant, Normalization) {
  Rng rng(3);
  for (const auto& degrees : std::vector<std::vector<unsigned>>{{1, 1}, {3, 2}, {1, 2, 3}, {2, 2, 2, 1}}) {
    std::vector<Polynomial<RationalField>> fs;
    for (std::size_t i = 0; i < degrees.size(); ++i)
      fs.push_back(Polynomial<RationalField>::term(kQ, Monomial::power(degrees.size(), i, degrees[i]), 1));
    EXPECT_EQ(macaulay_resultant(fs, rng).value, 1);
  }
}

TEST(Resultant, HomogeneousInEachArgument) {
  Rng rng(6);
  const PrimeField f(random_prime(61, rng));
  for (int trial = 0; trial < 10; ++trial) {
    const std::vector<unsigned> degrees{2, 1, 3};
    std::vector<Polynomial<PrimeField>> fs;
    for (auto d : degrees) fs.push_back(random_homogeneous(f, 3, d, rng));
    const auto base = macaulay_resultant(fs, rng).value;
    const auto lambda = f.random(rng);
    for (std::size_t i = 0; i < 3; ++i) {
      auto scaled = fs;
      scaled[i] = scaled[i].scaled(lambda);
      unsigned power = 1;
      for (std::size_t l = 0; l < 3; ++l)
        if (l != i) power *= degrees[l];
      EXPECT_EQ(macaulay_resultant(scaled, rng).value, f.mul(f.pow(lambda, power), base));
    }
  }
}

TEST(Resultant, FallbackPathsAgreeWithDirect) {
  Rng rng(9);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Polynomial<RationalField>> fs;
    for (unsigned d : {2u, 2u, 1u}) fs.push_back(random_integer_form(3, d, 5, rng));
    const auto span = std::span<const Polynomial<RationalField>>(fs);
    const auto direct = macaulay_quotient(span);
    ASSERT_TRUE(direct.has_value());
    const auto moved = resultant_by_coordinate_change(span, rng, 5);
    ASSERT_TRUE(moved.has_value());
    EXPECT_EQ(moved->value, *direct);
    EXPECT_EQ(resultant_by_perturbation(span).value, *direct);
  }
}

TEST(Resultant, SingularExtraneousMinorFallsBack) {
  // f0 lacks x0^2, so det M' = a0 (a0 b1 - a1 b0) vanishes.
  const auto fs = forms({"x1^2 + 2*x2^2 + x0*x1 - x1*x2", "3*x0^2 - x1^2 + x2^2 + x0*x2", "x0^2 + x1^2 + 5*x2^2 + x0*x1"}, 3);
  const auto span = std::span<const Polynomial<RationalField>>(fs);
  EXPECT_FALSE(macaulay_quotient(span).has_value());
  Rng rng(10);
  const auto r = macaulay_resultant(fs, rng);
  EXPECT_EQ(r.path, ResultantPath::coordinate_change);
  EXPECT_EQ(r.value, resultant_by_perturbation(span).value);
  ResultantOptions no_moves;
  no_moves.coordinate_retries = 0;
  const auto p = macaulay_resultant(fs, rng, no_moves);
  EXPECT_EQ(p.path, ResultantPath::perturbation);
  EXPECT_EQ(p.value, r.value);
  no_moves.allow_perturbation = false;
  try {
    (void)macaulay_resultant(fs, rng, no_moves);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::degeneracy_exhausted);
  }
}

TEST(Resultant, SylvesterHandlesVanishingLeadingCoefficient) {
  // x1*(x0 - x1) and x1^2 share the zero (1:0).
  EXPECT_EQ(sylvester_resultant(poly("x0*x1 - x1^2", 2), poly("x1^2", 2)), 0);
  Rng rng(1);
  EXPECT_EQ(macaulay_resultant(forms({"x0*x1 - x1^2", "x1^2"}, 2), rng).value, 0);
}

}  // namespace
}  // namespace sysres
