#include "test_support.hpp"

namespace sysres {
namespace {

using testing::kQ;
using testing::poly;

TEST(PolyCore, RingOperations) {
  EXPECT_EQ(poly("x0 + x1", 2) + poly("-x1", 2), poly("x0", 2));
  EXPECT_EQ(poly("x0 + x1", 2) * poly("x0 - x1", 2), poly("x0^2 - x1^2", 2));
  Rng rng(3);
  const auto p = random_homogeneous(kQ, 3, 4, rng);
  EXPECT_TRUE((Polynomial<RationalField>(kQ, 3) * p).is_zero());
  EXPECT_TRUE(p.scaled(0).is_zero());
  EXPECT_EQ(-(-p), p);
}

TEST(PolyCore, MismatchedOperandsAreRejected) {
  try {
    (void)(poly("x0", 2) + poly("x0", 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::dimension_mismatch);
  }
  const Polynomial<PrimeField> a = Polynomial<PrimeField>::variable(PrimeField(7), 2, 0);
  const Polynomial<PrimeField> b = Polynomial<PrimeField>::variable(PrimeField(11), 2, 0);
  EXPECT_THROW((void)(a * b), Error);
}

TEST(PolyCore, Homogeneity) {
  EXPECT_EQ(is_homogeneous(poly("x0^2*x1 + x2^3", 3)), 3u);
  EXPECT_FALSE(is_homogeneous(poly("x0 + x1^2", 2)).has_value());
  const Polynomial<RationalField> zero(kQ, 2);
  EXPECT_EQ(is_homogeneous(zero), 0u);
  EXPECT_TRUE(zero.is_zero());
}

TEST(PolyCore, Evaluate) {
  const std::vector<mpq_class> ones{1, 1};
  EXPECT_EQ(poly("x0^2 - x1^2", 2).evaluate(ones), 0);
  const std::vector<mpq_class> pt{1, 2, 3};
  EXPECT_EQ(poly("x0*x1*x2", 3).evaluate(pt), 6);
}

TEST(PolyCore, EvaluateHomogeneityIdentity) {
  Rng rng(11);
  const PrimeField f(1000003);
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned d = 1 + rng.below(4);
    const auto p = random_homogeneous(f, 3, d, rng);
    std::vector<std::uint64_t> x{f.random(rng), f.random(rng), f.random(rng)};
    const auto lambda = f.random(rng);
    std::vector<std::uint64_t> lx;
    for (auto v : x) lx.push_back(f.mul(lambda, v));
    EXPECT_EQ(p.evaluate(lx), f.mul(f.pow(lambda, d), p.evaluate(x)));
  }
}

TEST(PolyCore, EvaluateIsRingHomomorphism) {
  Rng rng(5);
  const PrimeField f(998244353);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = random_homogeneous(f, 3, 2, rng);
    const auto q = random_homogeneous(f, 3, 3, rng);
    std::vector<std::uint64_t> x{f.random(rng), f.random(rng), f.random(rng)};
    EXPECT_EQ((p * q).evaluate(x), f.mul(p.evaluate(x), q.evaluate(x)));
    EXPECT_EQ((p + p).evaluate(x), f.add(p.evaluate(x), p.evaluate(x)));
  }
}

TEST(PolyCore, SubstituteLinear) {
  const auto p = poly("x0^2*x1 - 3*x1^3 + x0*x1*x2", 3);
  EXPECT_EQ(substitute_linear(p, identity_matrix(kQ, 3)), p);
  Matrix<mpq_class> swap(2, 2, mpq_class(0));
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  EXPECT_EQ(substitute_linear(poly("x0", 2), swap), poly("x1", 2));
}

TEST(PolyCore, SubstituteLinearComposesAndPreservesDegree) {
  Rng rng(17);
  const PrimeField f(1000000007);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = random_homogeneous(f, 3, 3, rng);
    Matrix<std::uint64_t> u(3, 3, 0), v(3, 3, 0);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        u(i, j) = f.random(rng);
        v(i, j) = f.random(rng);
      }
    const auto pu = substitute_linear(p, u);
    EXPECT_EQ(is_homogeneous(pu), 3u);
    // p(U x) then x -> V x gives p(U V x).
    EXPECT_EQ(substitute_linear(pu, v), substitute_linear(p, multiply(f, u, v)));
  }
}

TEST(PolyCore, ReduceModP) {
  EXPECT_EQ(reduce_mod_p(poly("3*x0 + 7*x1", 2), PrimeField(7)), Polynomial<PrimeField>::variable(PrimeField(7), 2, 0).scaled(3));
  EXPECT_EQ(reduce_mod_p(poly("1/2*x0", 2), PrimeField(5)), Polynomial<PrimeField>::variable(PrimeField(5), 2, 0).scaled(3));
  try {
    (void)reduce_mod_p(poly("1/5*x0", 2), PrimeField(5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::bad_prime);
  }
}

TEST(PolyCore, ReductionCommutesWithRingOps) {
  Rng rng(23);
  const PrimeField f(1000003);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = random_homogeneous(kQ, 3, 2, rng);
    const auto q = random_homogeneous(kQ, 3, 2, rng);
    EXPECT_EQ(reduce_mod_p(p * q, f), reduce_mod_p(p, f) * reduce_mod_p(q, f));
    EXPECT_EQ(reduce_mod_p(p - q, f), reduce_mod_p(p, f) - reduce_mod_p(q, f));
  }
}

TEST(PolyCore, RandomHomogeneousSupport) {
  Rng rng(2);
  EXPECT_EQ(random_homogeneous(kQ, 3, 0, rng).total_degree(), 0u);
  const auto q = random_homogeneous(kQ, 2, 2, rng);
  for (const auto& [m, c] : q.terms()) EXPECT_EQ(m.degree(), 2u);
  EXPECT_LE(q.size(), 3u);
  for (int i = 0; i < 100; ++i) EXPECT_TRUE(is_homogeneous(random_homogeneous(kQ, 3, 3, rng)).has_value());
}

TEST(PolyCore, RingLawsOverBothDomains) {
  Rng rng(31);
  const PrimeField f(2305843009213693951ULL);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_homogeneous(kQ, 2, 1, rng), b = random_homogeneous(kQ, 2, 2, rng),
               c = random_homogeneous(kQ, 2, 1, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + b), a * b + a * b);
    const auto ap = reduce_mod_p(a, f), bp = reduce_mod_p(b, f), cp = reduce_mod_p(c, f);
    EXPECT_EQ((ap * bp) * cp, ap * (bp * cp));
    EXPECT_EQ(ap * (bp + cp * cp), ap * bp + ap * cp * cp);
  }
}

TEST(Scalars, FieldAxiomsOnSamples) {
  Rng rng(41);
  const PrimeField f(random_prime(62, rng));
  for (int i = 0; i < 200; ++i) {
    const auto a = f.random(rng), b = f.random(rng), c = f.random(rng);
    EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
    EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
    if (a != 0) {
      EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
    }
    EXPECT_LT(f.add(a, b), f.modulus());
  }
  const mpq_class half = kQ.from_int(2) / 4;
  EXPECT_EQ(half.get_den(), 2);
  EXPECT_EQ(kQ.inv(kQ.from_int(-3)).get_den(), 3);
  EXPECT_EQ(PrimeField(7).from_int(-1), 6u);
}

TEST(Scalars, PrimeGeneration) {
  Rng rng(5);
  for (unsigned bits : {31u, 40u, 62u}) {
    const auto p = random_prime(bits, rng);
    EXPECT_TRUE(is_prime(p));
    EXPECT_EQ(64 - __builtin_clzll(p), static_cast<int>(bits));
  }
  EXPECT_TRUE(is_prime(2305843009213693951ULL));
  EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(Monomials, GrevlexIsStrictTotalOrder) {
  const auto ms = monomials_of_degree(3, 3);
  EXPECT_EQ(ms.size(), 10u);
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = 0; j < ms.size(); ++j) EXPECT_EQ(grevlex_compare(ms[i], ms[j]) > 0, i < j);
  // x0^2 > x0x1 > x1^2 > x0x2 > x1x2 > x2^2 among degree-2 monomials in 3 variables.
  const auto q = monomials_of_degree(3, 2);
  EXPECT_EQ(q[0], Monomial({2, 0, 0}));
  EXPECT_EQ(q[3], Monomial({1, 0, 1}));
  EXPECT_EQ(q[5], Monomial({0, 0, 2}));
}

}  // namespace
}  // namespace sysres
