#include "test_support.hpp"

namespace sysres {
namespace {

using testing::kQ;

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::invalid_argument;
}

TEST(Io, ParsesTermsAndComments) {
  const auto s = parse_system("# header comment\nvars: 3\n  -x0^2 + 3/2*x1*x2  # trailing\n\n2*x0*x1 - x2^2\n0\n");
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s.degrees(), (std::vector<unsigned>{2, 2, 0}));
  EXPECT_EQ(s[0].coefficient(Monomial({0, 1, 1})), mpq_class(3, 2));
  EXPECT_TRUE(s[2].is_zero());
}

TEST(Io, FormatsCanonically) {
  EXPECT_EQ(format_polynomial(testing::poly("x1 - x0", 2)), "-x0 + x1");
  EXPECT_EQ(format_polynomial(testing::poly("3/2*x1*x0^2", 2)), "3/2*x0^2*x1");
  EXPECT_EQ(format_polynomial(Polynomial<RationalField>(kQ, 2)), "0");
}

TEST(Io, ErrorsCarryLocation) {
  try {
    (void)parse_system("vars: 2\nx0 + x1\nx0 + x1^2\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::parse);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  try {
    (void)parse_system("vars: 2\nx0 + x5\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("column 6"), std::string::npos) << e.what();
  }
  EXPECT_EQ(kind_of([] { (void)parse_system(""); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { (void)parse_system("vars: x\nx0\n"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { (void)parse_system("vars: 2\nx0 +\n"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { (void)parse_system("vars: 2\n3\n"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { (void)parse_system("vars: 2\nx0^9999999999\n"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { (void)parse_system("vars: 2\n1/0*x0\n"); }), ErrorKind::parse);
}

TEST(Io, RoundTripsRandomSystems) {
  Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t vars = 1 + rng.below(4);
    std::vector<Polynomial<RationalField>> polys;
    const std::size_t count = 1 + rng.below(4);
    for (std::size_t j = 0; j < count; ++j) {
      const unsigned d = 1 + rng.below(3);
      polys.push_back(random_homogeneous(kQ, vars, d, [&] {
        if (rng.below(3) == 0) return mpq_class(0);
        mpq_class c(rng.between(-50, 50), 1 + rng.below(7));
        c.canonicalize();
        return c;
      }));
    }
    const PolySystem<RationalField> system(vars, polys);
    const auto text = format_system(system);
    const auto back = parse_system(text);
    ASSERT_EQ(back.size(), system.size());
    for (std::size_t j = 0; j < count; ++j) EXPECT_EQ(back[j], system[j]) << text;
    EXPECT_EQ(format_system(back), text);
  }
}

TEST(Io, PlanRoundTrip) {
  const auto plan = plan_coupled(3, std::vector<unsigned>{2, 1, 1, 1});
  const auto back = parse_plan(format_plan(plan));
  ASSERT_EQ(back.num_blocks(), plan.num_blocks());
  for (std::size_t i = 0; i < plan.num_blocks(); ++i) {
    ASSERT_EQ(back.basis[i].size(), plan.basis[i].size());
    for (std::size_t r = 0; r < plan.basis[i].size(); ++r)
      for (std::size_t j = 0; j < plan.num_slots; ++j) EXPECT_EQ(back.basis[i][r].slots[j], plan.basis[i][r].slots[j]);
  }
  EXPECT_EQ(bind_custom_plan(back, std::vector<unsigned>{2, 1, 1, 1}).target_degrees, plan.target_degrees);
}

TEST(Io, PlanErrors) {
  EXPECT_EQ(kind_of([] { (void)parse_plan("scheme: full\nvars: 2\nslots: 1\n"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { (void)parse_plan("scheme: custom\nvars: 2\nslots: 2\nblock 0\nx0\n"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { (void)parse_plan("scheme: custom\nvars: 2\nslots: 1\nx0\n"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { (void)parse_plan("scheme: custom\nvars: 2\nslots: 1\nblock 0\nx0\n"); }),
            ErrorKind::dimension_mismatch);
}

TEST(Io, ExitCodes) {
  EXPECT_EQ(exit_code(ErrorKind::parse), 2);
  EXPECT_EQ(exit_code(ErrorKind::dimension_mismatch), 3);
  EXPECT_EQ(exit_code(ErrorKind::cap_exceeded), 4);
  EXPECT_EQ(exit_code(ErrorKind::degeneracy_exhausted), 5);
}

}  // namespace
}  // namespace sysres
