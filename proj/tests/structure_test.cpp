#include <gtest/gtest.h>

#include "nilclean/classify.hpp"
#include "nilclean/constructions.hpp"
#include "nilclean/decompose.hpp"
#include "nilclean/ringspec.hpp"
#include "nilclean/structure.hpp"

namespace nilclean {
namespace {

using List = std::vector<Elem>;

TEST(Ideals, Generated) {
  EXPECT_EQ(ideal_generated(zn(12), {6}).members, (List{0, 6}));
  EXPECT_EQ(ideal_generated(zn(12), {4}).members, (List{0, 4, 8}));
  EXPECT_EQ(ideal_generated(zn(12), {4, 6}).members, (List{0, 2, 4, 6, 8, 10}));
  auto m = matrix_ring(zn(2), 2);
  EXPECT_EQ(ideal_generated(m, {2}).size(), 16u);  // E12
  EXPECT_EQ(ideal_generated(m, {}).members, List{0});
}

TEST(Ideals, Nil) {
  auto z = zn(12);
  EXPECT_TRUE(is_nil_ideal(z, make_ideal(z, {0, 6})));
  EXPECT_FALSE(is_nil_ideal(z, make_ideal(z, {0, 4, 8})));
  EXPECT_TRUE(is_nil_ideal(z, make_ideal(z, {0})));
}

TEST(Ideals, MakeValidates) {
  auto z = zn(12);
  EXPECT_THROW(make_ideal(z, {0, 4}), NotAnIdeal);
  EXPECT_THROW(make_ideal(z, {4, 8}), NotAnIdeal);
  auto m = matrix_ring(zn(2), 2);
  EXPECT_THROW(make_ideal(m, {0, 2}), NotAnIdeal);  // not two-sided
  EXPECT_EQ(make_ideal(z, {6, 0, 6}).members, (List{0, 6}));
}

TEST(Ideals, Product) {
  auto z = zn(8);
  auto two = ideal_generated(z, {2});
  EXPECT_EQ(ideal_product(two, two).members, (List{0, 4}));
  auto t = eval(parse("T3(Z2; id)"));
  std::vector<Elem> strict;
  for (Elem a = 0; a < t.size(); a += 2) strict.push_back(a);
  auto i = make_ideal(t, strict);
  auto i3 = ideal_product(ideal_product(i, i), i);
  EXPECT_EQ(i3.members, List{0});
}

TEST(Quotients, Examples) {
  auto z = zn(12);
  auto q = quotient_ring(z, make_ideal(z, {0, 6}));
  EXPECT_EQ(q.ring.size(), 6u);
  EXPECT_EQ(characteristic(q.ring), 6u);
  EXPECT_EQ(q.representatives, (List{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(q.projection[7], 1u);

  auto m = matrix_ring(zn(2), 2);
  auto same = quotient_ring(m, make_ideal(m, {0}));
  ASSERT_EQ(same.ring.size(), 16u);
  for (Elem a = 0; a < 16; ++a) {
    for (Elem b = 0; b < 16; ++b) EXPECT_EQ(same.ring.mul(a, b), m.mul(a, b));
  }

  auto t = trivial_extension(zn(5));
  auto square_zero = make_ideal(t, {0, 5, 10, 15, 20});
  auto tq = quotient_ring(t, square_zero);
  EXPECT_EQ(tq.ring.size(), 5u);
  EXPECT_EQ(iso_to_zm(tq.ring), 5u);
}

TEST(Quotients, ProjectionIsAHomomorphism) {
  auto r = eval(parse("T2(Z4)"));
  for (const auto& gen : {List{2}, List{1 + 2 * 4 * 0 + 4}, List{}}) {
    auto ideal = ideal_generated(r, gen);
    auto q = quotient_ring(r, ideal);
    EXPECT_EQ(q.ring.size() * ideal.size(), r.size());
    for (Elem a = 0; a < r.size(); ++a) {
      for (Elem b = 0; b < r.size(); b += 3) {
        EXPECT_EQ(q.projection[r.mul(a, b)],
                  q.ring.mul(q.projection[a], q.projection[b]));
        EXPECT_EQ(q.projection[r.add(a, b)],
                  q.ring.add(q.projection[a], q.projection[b]));
      }
    }
  }
}

TEST(Quotients, RejectsNonIdeals) {
  auto z = zn(12);
  EXPECT_THROW(quotient_ring(z, IdealSet{z, {0, 4}}), NotAnIdeal);
}

TEST(Corners, Examples) {
  auto m = matrix_ring(zn(2), 2);
  EXPECT_EQ(corner_ring(m, m.one()).ring.size(), 16u);
  auto c = corner_ring(zn(6), 3);
  EXPECT_EQ(c.embedding, (List{0, 3}));
  EXPECT_EQ(c.ring.size(), 2u);
  EXPECT_EQ(c.embedding[c.ring.one()], 3u);
  auto e11 = corner_ring(m, 1);
  EXPECT_EQ(e11.ring.size(), 2u);
  EXPECT_EQ(iso_to_zm(e11.ring), 2u);
  EXPECT_EQ(corner_ring(zn(6), 0).ring.size(), 1u);
  EXPECT_THROW(corner_ring(zn(6), 2), NotIdempotent);
}

TEST(Central, Idempotents) {
  EXPECT_EQ(central_idempotents(zn(30)), (List{0, 1, 6, 10, 15, 16, 21, 25}));
  EXPECT_EQ(central_idempotents(zn(8)), (List{0, 1}));
  auto m = matrix_ring(zn(2), 2);
  EXPECT_EQ(central_idempotents(m), (List{m.zero(), m.one()}));
}

TEST(Central, Splits) {
  auto s = split_by_central_idempotent(zn(30), 6);
  EXPECT_EQ(s.first.embedding, (List{0, 6, 12, 18, 24}));
  EXPECT_EQ(s.second.embedding, (List{0, 5, 10, 15, 20, 25}));
  auto t = split_by_central_idempotent(zn(9), 0);
  EXPECT_EQ(t.first.ring.size(), 1u);
  EXPECT_EQ(t.second.ring.size(), 9u);
  auto p = product(zn(5), zn(5));
  auto u = split_by_central_idempotent(p, ProductCoding{5}.pair(1, 0));
  EXPECT_EQ(u.first.ring.size(), 5u);
  EXPECT_EQ(u.second.ring.size(), 5u);
  EXPECT_THROW(split_by_central_idempotent(matrix_ring(zn(2), 2), 1),
               NotCentralIdempotent);
  EXPECT_THROW(split_by_central_idempotent(zn(6), 2), NotCentralIdempotent);
}

TEST(Central, EverySplitPassesOnCatalogRings) {
  for (const char* text : {"Z60", "Z2 x Z2 x Z3", "T2(Z2 x Z2; swap)",
                           "M2(Z2)", "T3(Z2)", "Z5 x Z9"}) {
    auto r = eval(parse(text));
    for (Elem c : central_idempotents(r)) {
      EXPECT_NO_THROW(split_by_central_idempotent(r, c)) << text << " " << c;
    }
  }
}

TEST(Cyclic, Recognition) {
  EXPECT_EQ(iso_to_zm(zn(25)), 25u);
  EXPECT_FALSE(iso_to_zm(product(zn(5), zn(5))));
  EXPECT_EQ(iso_to_zm(corner_ring(zn(30), 6).ring), 5u);
  EXPECT_EQ(power_of_five(125), 3u);
  EXPECT_EQ(power_of_five(5), 1u);
  EXPECT_FALSE(power_of_five(1));
  EXPECT_FALSE(power_of_five(50));
}

TEST(Maj, Examples) {
  auto z30 = maj_decomposition(zn(30));
  ASSERT_TRUE(z30);
  EXPECT_EQ(z30->central_idempotent, 6u);
  EXPECT_EQ(z30->k, 1u);
  EXPECT_EQ(z30->s2nc_corner_size, 6u);

  auto z5 = maj_decomposition(zn(5));
  ASSERT_TRUE(z5);
  EXPECT_EQ(z5->central_idempotent, 1u);
  EXPECT_EQ(z5->k, 1u);
  EXPECT_EQ(z5->s2nc_corner_size, 1u);

  EXPECT_FALSE(maj_decomposition(zn(7)));

  auto z2 = maj_decomposition(zn(2));
  ASSERT_TRUE(z2);
  EXPECT_EQ(z2->central_idempotent, 0u);
  EXPECT_EQ(z2->k, 0u);

  for (unsigned k = 1; k <= 3; ++k) {
    std::uint64_t m = 1;
    for (unsigned i = 0; i < k; ++i) m *= 5;
    auto w = maj_decomposition(zn(m));
    ASSERT_TRUE(w) << m;
    EXPECT_EQ(w->central_idempotent, 1u);
    EXPECT_EQ(w->k, k);
  }
}

// Z5[e]/(e^2): every element is +-e +-f + n, yet characteristic 5 < size 25
// and the only central idempotents are 0 and 1.
TEST(Maj, DualNumbersOverZ5HaveNoCyclicFactor) {
  for (const char* text : {"TrivExt(Z5)", "Poly(Z5, 2)"}) {
    auto r = eval(parse(text));
    EXPECT_EQ(is_class(r, NilCleanClass::weakly_strongly_2_nil_clean).verdict,
              Verdict::holds) << text;
    EXPECT_TRUE(criterion_wsnc(r).holds) << text;
    EXPECT_TRUE(is_nilpotent(r, int_image(r, 5))) << text;
    EXPECT_EQ(characteristic(r), 5u) << text;
    EXPECT_EQ(central_idempotents(r), (List{0, 1})) << text;
    EXPECT_FALSE(criterion_s2nc(r).holds) << text;
    EXPECT_FALSE(maj_decomposition(r)) << text;
  }
}

}  // namespace
}  // namespace nilclean
