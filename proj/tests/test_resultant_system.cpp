#include "test_support.hpp"

namespace sysres {
namespace {

using testing::kQ;

std::vector<unsigned> exponent(std::size_t vars, std::initializer_list<std::size_t> ones) {
  std::vector<unsigned> e(vars, 0);
  for (auto v : ones) ++e[v];
  return e;
}

TEST(ResultantSystem, BasisSizes) {
  EXPECT_EQ(b_monomial_basis(plan_full(2, std::vector<unsigned>{1, 1, 1})).size(), 9u);
  EXPECT_EQ(b_monomial_basis(plan_full(3, std::vector<unsigned>{1, 1, 1})).size(), 27u);
  EXPECT_EQ(b_monomial_basis(plan_theorem2(2, std::vector<unsigned>{1, 1, 1})).size(), 4u);
}

TEST(ResultantSystem, CapsAreEnforced) {
  try {
    (void)b_monomial_basis(plan_full(3, std::vector<unsigned>{2, 2, 2, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::cap_exceeded);
    EXPECT_NE(std::string(e.what()).find("b-variables"), std::string::npos);
  }
  InterpolationCaps tight;
  tight.max_b_vars = 5;
  EXPECT_THROW((void)b_monomial_basis(plan_full(2, std::vector<unsigned>{1, 1, 1}), tight), Error);
}

TEST(ResultantSystem, LinearCaseIsCauchyBinet) {
  Rng rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    const auto a = testing::random_int_matrix(3, 2, 9, rng);
    const auto system = testing::linear_system(a);
    const auto plan = plan_full(2, system.degrees());
    const auto rp = interpolate(system, plan, {}, rng);
    EXPECT_TRUE(rp.multihomogeneous());
    // det(B A) = sum over row pairs of det(B cols) det(A rows).
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        const auto e = exponent(6, {j, 3 + k});
        mpq_class expected = 0;
        if (j != k) {
          const std::size_t lo = std::min(j, k), hi = std::max(j, k);
          expected = a(lo, 0) * a(hi, 1) - a(lo, 1) * a(hi, 0);
          if (j > k) expected = -expected;
        }
        auto it = rp.terms.find(e);
        EXPECT_EQ(it == rp.terms.end() ? mpq_class(0) : it->second, expected);
      }
    const auto values = extract_system(rp);
    const auto minors = maximal_minors(kQ, [&] {
      Matrix<mpq_class> t(2, 3, mpq_class(0));
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 2; ++c) t(c, r) = a(r, c);
      return t;
    }());
    std::vector<mpq_class> lhs, rhs;
    for (const auto& v : values) lhs.push_back(abs(v));
    for (const auto& v : minors)
      if (sgn(v) != 0) rhs.push_back(abs(v));
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    rhs.erase(std::unique(rhs.begin(), rhs.end()), rhs.end());
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(ResultantSystem, SquareLinearCaseFactors) {
  Rng rng(4);
  const auto a = testing::random_int_matrix(3, 3, 9, rng);
  const auto system = testing::linear_system(a);
  const auto rp = interpolate(system, plan_full(3, system.degrees()), {}, rng);
  const mpq_class det_a = determinant(kQ, a);
  // det(B) det(A): six permutation monomials of B.
  EXPECT_EQ(rp.terms.size(), sgn(det_a) == 0 ? 0u : 6u);
  EXPECT_EQ(rp.terms.at(exponent(9, {0, 4, 8})), det_a);
  EXPECT_EQ(rp.terms.at(exponent(9, {1, 3, 8})), -det_a);
}

TEST(ResultantSystem, ScalingTheSystemScalesEveryValue) {
  Rng rng(5);
  const auto a = testing::random_int_matrix(3, 2, 9, rng);
  Matrix<mpq_class> doubled = a;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 2; ++c) doubled(r, c) *= 2;
  const auto plan = plan_full(2, std::vector<unsigned>{1, 1, 1});
  const auto base = interpolate(testing::linear_system(a), plan, {}, rng);
  const auto scaled = interpolate(testing::linear_system(doubled), plan, {}, rng);
  ASSERT_EQ(base.terms.size(), scaled.terms.size());
  const std::uint64_t d = degree_bound_in_b(plan);
  for (const auto& [e, c] : base.terms) EXPECT_EQ(scaled.terms.at(e), c * (1 << d));
}

TEST(ResultantSystem, VanishesExactlyOnSolvableSystems) {
  Rng rng(6);
  const auto solvable = testing::sys("vars: 2\nx0 - x1\n3*x0 - 3*x1\n-2*x0 + 2*x1\n");
  const auto unsolvable = testing::sys("vars: 2\nx0 - x1\nx0 + x1\nx0\n");
  for (auto s : {Scheme::full, Scheme::theorem2, Scheme::powersum, Scheme::coupled}) {
    EXPECT_TRUE(interpolate(solvable, make_plan(s, 2, solvable.degrees()), {}, rng).is_zero()) << to_string(s);
    EXPECT_FALSE(extract_system(interpolate(unsolvable, make_plan(s, 2, unsolvable.degrees()), {}, rng)).empty());
  }
  const auto quad = testing::sys("vars: 2\nx0^2 - x1^2\nx0*x1 - x1^2\nx0^2 - x0*x1\n");
  EXPECT_TRUE(interpolate(quad, plan_theorem2(2, quad.degrees()), {}, rng).is_zero());
}

TEST(ResultantSystem, ExtractDeduplicatesUpToSign) {
  BPolynomial rp;
  rp.variables = {{0, 0}, {1, 0}};
  rp.block_degrees = {1, 1};
  rp.block_affine = {false, false};
  rp.terms[{1, 1}] = 3;
  rp.terms[{2, 0}] = -3;
  rp.terms[{0, 2}] = 5;
  const auto values = extract_system(rp);
  ASSERT_EQ(values.size(), 2u);
  EXPECT_EQ(values[0], 5);
  EXPECT_EQ(abs(values[1]), 3);
}

}  // namespace
}  // namespace sysres
