#include <gtest/gtest.h>

#include "nilclean/constructions.hpp"
#include "nilclean/decompose.hpp"
#include "nilclean/ringspec.hpp"

namespace nilclean {
namespace {

using Cls = NilCleanClass;

void expect_cert(const std::optional<Certificate>& c, int se,
                 std::optional<int> sf, Elem e, std::optional<Elem> f, Elem n) {
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->sign_e, se);
  EXPECT_EQ(c->sign_f, sf);
  EXPECT_EQ(c->e, e);
  EXPECT_EQ(c->f, f);
  EXPECT_EQ(c->n, n);
}

TEST(Wsnc, Examples) {
  expect_cert(find_wsnc_certificate(zn(5), 3), -1, -1, 1, 1, 0);
  expect_cert(find_wsnc_certificate(zn(5), 0), 1, 1, 0, 0, 0);
  expect_cert(find_wsnc_certificate(zn(4), 3), 1, 1, 1, 0, 2);
  expect_cert(find_wsnc_certificate(zn(2), 0), 1, 1, 0, 0, 0);
  auto p = product(zn(5), zn(5));
  EXPECT_FALSE(find_wsnc_certificate(p, ProductCoding{5}.pair(3, 2)));
}

TEST(S2nc, Examples) {
  EXPECT_FALSE(find_s2nc_certificate(zn(5), 3));
  expect_cert(find_s2nc_certificate(zn(6), 5), 1, 1, 1, 4, 0);
  for (const char* text : {"Z7", "M2(Z2)", "TrivExt(Z3)"}) {
    expect_cert(find_s2nc_certificate(eval(parse(text)), 0), 1, 1, 0, 0, 0);
  }
}

TEST(Swnc, Examples) {
  EXPECT_FALSE(find_swnc_certificate(zn(5), 3));
  expect_cert(find_swnc_certificate(zn(3), 2), -1, std::nullopt, 1,
              std::nullopt, 0);
  expect_cert(find_swnc_certificate(zn(4), 3), 1, std::nullopt, 1,
              std::nullopt, 2);
}

TEST(Snc, Examples) {
  expect_cert(find_snc_certificate(zn(4), 3), 1, std::nullopt, 1,
              std::nullopt, 2);
  EXPECT_FALSE(find_snc_certificate(zn(5), 2));
  auto m = matrix_ring(zn(2), 2);
  expect_cert(find_snc_certificate(m, m.one()), 1, std::nullopt, m.one(),
              std::nullopt, 0);
}

TEST(Certificate, CarriesNilIndexAndClass) {
  auto c = find_wsnc_certificate(zn(4), 3);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->nil_index, 2u);
  EXPECT_EQ(c->element, 3u);
  EXPECT_EQ(c->cls, Cls::weakly_strongly_2_nil_clean);
}

TEST(Certificate, VerifyRejectsTampering) {
  auto r = zn(12);
  auto c = find_wsnc_certificate(r, 7);
  ASSERT_TRUE(c);
  EXPECT_TRUE(verify_certificate(r, 7, *c));
  auto bad = *c;
  bad.n = r.add(bad.n, 6);
  EXPECT_FALSE(verify_certificate(r, 7, bad));
  bad = *c;
  bad.nil_index += 1;
  EXPECT_FALSE(verify_certificate(r, 7, bad));
  bad = *c;
  bad.e = 2;  // not idempotent
  EXPECT_FALSE(verify_certificate(r, 7, bad));
  EXPECT_FALSE(verify_certificate(r, 8, *c));
}

TEST(Certificate, NoncommutingPartsAreRejected) {
  auto m = matrix_ring(zn(2), 2);
  // E11 + E12 is idempotent; E21 is nilpotent; they do not commute.
  Certificate c;
  c.cls = Cls::strongly_nil_clean;
  c.e = 1 + 2;
  c.n = 4;
  c.nil_index = 2;
  c.element = m.add(c.e, c.n);
  EXPECT_FALSE(verify_certificate(m, c.element, c));
}

class EveryCertificate : public ::testing::TestWithParam<const char*> {};

TEST_P(EveryCertificate, Reverifies) {
  auto r = eval(parse(GetParam()));
  auto census = take_census(r);
  for (auto cls : kAllClasses) {
    auto certs = certify_all(r, census, cls);
    ASSERT_EQ(certs.size(), r.size());
    auto entry = is_class(r, census, cls);
    for (Elem a = 0; a < r.size(); ++a) {
      if (certs[a]) {
        EXPECT_TRUE(verify_certificate(r, a, *certs[a]))
            << GetParam() << " " << short_name(cls) << " " << a;
        EXPECT_EQ(certs[a]->cls, cls);
      }
    }
    const bool all = std::all_of(certs.begin(), certs.end(),
                                 [](const auto& c) { return c.has_value(); });
    EXPECT_EQ(entry.verdict == Verdict::holds, all);
  }
}

INSTANTIATE_TEST_SUITE_P(Rings, EveryCertificate,
                         ::testing::Values("Z1", "Z12", "Z30", "Z25", "M2(Z2)",
                                           "T2(Z4)", "T3(Z2)", "TrivExt(Z5)",
                                           "T2(Z2 x Z2; swap)", "Poly(Z2, 3)",
                                           "Z5 x Z5"));

TEST(Search, ParallelMatchesSequential) {
  auto r = eval(parse("T2(Z4)"));
  auto census = take_census(r);
  for (auto cls : kAllClasses) {
    auto one = certify_all(r, census, cls, SearchOptions{10'000'000, 1});
    auto many = certify_all(r, census, cls, SearchOptions{10'000'000, 4});
    EXPECT_EQ(one, many);
  }
}

TEST(Search, BudgetIsCheckedUpFront) {
  auto r = zn(6);
  auto census = take_census(r);
  // 4 sign patterns * |Id|^2 * |nil| = 4 * 16 * 1
  EXPECT_EQ(search_space(census, Cls::weakly_strongly_2_nil_clean), 64u);
  EXPECT_EQ(search_space(census, Cls::strongly_2_nil_clean), 16u);
  EXPECT_EQ(search_space(census, Cls::strongly_weakly_nil_clean), 8u);
  EXPECT_EQ(search_space(census, Cls::strongly_nil_clean), 4u);
  EXPECT_THROW(find_wsnc_certificate(r, 5, SearchOptions{63, 1}), BudgetExceeded);
  EXPECT_NO_THROW(find_wsnc_certificate(r, 5, SearchOptions{64, 1}));
  auto entry = is_class(r, Cls::weakly_strongly_2_nil_clean, SearchOptions{10, 1});
  EXPECT_EQ(entry.verdict, Verdict::unresolved);
}

TEST(IsClass, Examples) {
  EXPECT_EQ(is_class(zn(5), Cls::weakly_strongly_2_nil_clean).verdict,
            Verdict::holds);
  auto s2 = is_class(zn(5), Cls::strongly_2_nil_clean);
  EXPECT_EQ(s2.verdict, Verdict::fails);
  EXPECT_EQ(s2.witness, Elem{3});
  auto sw = is_class(zn(5), Cls::strongly_weakly_nil_clean);
  EXPECT_EQ(sw.verdict, Verdict::fails);
  EXPECT_NE(std::find(sw.failing.begin(), sw.failing.end(), 3u), sw.failing.end());

  auto m = is_class(matrix_ring(zn(2), 2), Cls::weakly_strongly_2_nil_clean);
  EXPECT_EQ(m.verdict, Verdict::fails);
  // [[0,1],[1,1]] in row-major digits.
  EXPECT_NE(std::find(m.failing.begin(), m.failing.end(), 14u), m.failing.end());
  for (auto cls : kAllClasses) {
    EXPECT_EQ(is_class(zn(1), cls).verdict, Verdict::holds);
  }
}

TEST(Criteria, WsncExamples) {
  auto z5 = criterion_wsnc(zn(5));
  EXPECT_TRUE(z5.holds);
  EXPECT_TRUE(z5.thirty_nilpotent);
  EXPECT_TRUE(z5.branches[3] & kShiftedUp);
  EXPECT_FALSE(z5.branches[3] & kCubeMinusSelf);
  EXPECT_FALSE(z5.uniform_branch);

  auto z7 = criterion_wsnc(zn(7));
  EXPECT_FALSE(z7.holds);
  EXPECT_FALSE(z7.thirty_nilpotent);

  auto z25 = criterion_wsnc(zn(25));
  EXPECT_TRUE(z25.holds);
  EXPECT_TRUE(z25.branches[8] & kShiftedUp);

  auto z6 = criterion_wsnc(zn(6));
  EXPECT_EQ(z6.uniform_branch, kCubeMinusSelf);

  auto m = criterion_wsnc(matrix_ring(zn(2), 2));
  EXPECT_FALSE(m.holds);
  ASSERT_FALSE(m.failing.empty());
  for (Elem a : m.failing) EXPECT_EQ(m.branches[a], 0);
}

TEST(Criteria, S2ncExamples) {
  EXPECT_TRUE(criterion_s2nc(zn(6)).holds);
  auto z5 = criterion_s2nc(zn(5));
  EXPECT_FALSE(z5.holds);
  EXPECT_NE(std::find(z5.failing.begin(), z5.failing.end(), 2u), z5.failing.end());
  EXPECT_TRUE(criterion_s2nc(zn(1)).holds);
}

TEST(Criteria, AgreeWithSearchOnSmallCyclicRings) {
  for (std::uint64_t n = 1; n <= 80; ++n) {
    auto r = zn(n);
    EXPECT_EQ(is_class(r, Cls::weakly_strongly_2_nil_clean).verdict == Verdict::holds,
              criterion_wsnc(r).holds) << n;
    EXPECT_EQ(is_class(r, Cls::strongly_2_nil_clean).verdict == Verdict::holds,
              criterion_s2nc(r).holds) << n;
  }
}

TEST(SignVariants, ThreeElementRing) {
  auto v = sign_variant_certificates(zn(3), 1);
  expect_cert(v.plus_plus, 1, 1, 1, 0, 0);
  expect_cert(v.plus_minus, 1, -1, 1, 0, 0);
  expect_cert(v.minus_minus, -1, -1, 1, 1, 0);
  for (const char* text : {"Z7", "M2(Z2)", "Z9"}) {
    auto z = sign_variant_certificates(eval(parse(text)), 0);
    EXPECT_TRUE(z.plus_plus && z.plus_minus && z.minus_minus) << text;
  }
}

TEST(SignVariants, AgreeRingwideWhenThreeIsNilpotent) {
  for (const char* text : {"Z9", "Z3", "Z27", "T2(Z3)", "Z3 x Z9"}) {
    auto r = eval(parse(text));
    bool pp = true, pm = true, mm = true;
    for (Elem a = 0; a < r.size(); ++a) {
      auto v = sign_variant_certificates(r, a);
      pp = pp && v.plus_plus;
      pm = pm && v.plus_minus;
      mm = mm && v.minus_minus;
    }
    EXPECT_EQ(pp, pm) << text;
    EXPECT_EQ(pm, mm) << text;
  }
}

TEST(Classify, ReportZ5) {
  auto report = classify_ring(zn(5));
  EXPECT_EQ(report.label, "Z5");
  EXPECT_EQ(report.idempotent_count, 2u);
  EXPECT_EQ(report.nilpotent_count, 1u);
  EXPECT_EQ(report.unit_count, 4u);
  EXPECT_EQ(report.radical_count, 1u);
  EXPECT_EQ(report.entry(Cls::weakly_strongly_2_nil_clean).verdict, Verdict::holds);
  EXPECT_EQ(report.entry(Cls::strongly_2_nil_clean).witness, Elem{3});
  EXPECT_TRUE(report.oracles_agree());
}

TEST(Classes, Names) {
  for (auto cls : kAllClasses) {
    EXPECT_EQ(parse_class(short_name(cls)), cls);
    EXPECT_EQ(parse_class(long_name(cls)), cls);
  }
  EXPECT_FALSE(parse_class("clean"));
  EXPECT_TRUE(uses_two_idempotents(Cls::strongly_2_nil_clean));
  EXPECT_FALSE(uses_two_idempotents(Cls::strongly_weakly_nil_clean));
}

}  // namespace
}  // namespace nilclean
