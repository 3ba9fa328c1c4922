#include <gtest/gtest.h>

#include "witt/errors.hpp"
#include "witt/poly.hpp"
#include "witt/rings.hpp"

using namespace witt;

TEST(Rings, BasicArithmetic) {
  const Ring Z = integers();
  EXPECT_EQ(RingValue::from_integer(Z, 2) + RingValue::from_integer(Z, 3), RingValue::from_integer(Z, 5));
  const Ring Z4 = integers_mod(4);
  EXPECT_EQ(RingValue::from_integer(Z4, 3) * RingValue::from_integer(Z4, 3), RingValue::one(Z4));
  const Ring L2 = local_integers_at(2);
  EXPECT_EQ(RingValue::from_rational(L2, mpq_class(1, 3)) + RingValue::from_rational(L2, mpq_class(1, 3)),
            RingValue::from_rational(L2, mpq_class(2, 3)));
}

TEST(Rings, LocalRingRejectsPInDenominator) {
  EXPECT_THROW(RingValue::from_rational(local_integers_at(2), mpq_class(1, 2)), Error);
}

TEST(Rings, DivExact) {
  const Ring Z = integers();
  EXPECT_EQ(div_exact_by_int(RingValue::from_integer(Z, 6), 3), RingValue::from_integer(Z, 2));
  try {
    div_exact_by_int(RingValue::from_integer(Z, 1), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotDivisible);
  }
  const Ring L3 = local_integers_at(3);
  EXPECT_EQ(div_exact_by_int(RingValue::one(L3), 2), RingValue::from_rational(L3, mpq_class(1, 2)));
  try {
    div_exact_by_int(RingValue::one(integers_mod(4)), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidRing);
  }
}

TEST(Rings, Enumerate) {
  EXPECT_EQ(enumerate(integers_mod(2)).size(), 2u);
  const auto z4 = enumerate(integers_mod(4));
  ASSERT_EQ(z4.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(element_index(z4[i]), i);
  try {
    enumerate(rationals());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotFinite);
  }
}

TEST(Rings, MismatchedRingsAreRejected) {
  EXPECT_THROW(RingValue::one(integers()) + RingValue::one(integers_mod(3)), Error);
  EXPECT_THROW(integers_mod(1), Error);
}

TEST(Rings, QuotientRingReducesModuloRelation) {
  const Poly x = Poly::var(0);
  const Ring R = quotient_polynomial("t", x * x - Poly(2), 0, true);  // Z[sqrt 2]
  const RingValue t = RingValue::from_poly(R, x);
  EXPECT_EQ(t * t, RingValue::from_integer(R, 2));
  EXPECT_TRUE(R->torsion_free());
  const Ring F = quotient_polynomial("t", x * x + x + Poly(1), 2, false);  // F_4
  EXPECT_TRUE(F->finite());
  EXPECT_EQ(F->cardinality(), 4);
  const RingValue u = RingValue::from_poly(F, x);
  EXPECT_EQ(u.pow(3), RingValue::one(F));
}

TEST(Poly, ArithmeticAndDivision) {
  const Poly x = Poly::var(0), y = Poly::var(1);
  const Poly p = (x + y).pow(3);
  EXPECT_EQ(p.size(), 4u);
  Poly q;
  EXPECT_TRUE((p.scaled(6)).try_divexact(3, &q));
  EXPECT_EQ(q, p.scaled(2));
  EXPECT_FALSE(p.try_divexact(3, &q));
  EXPECT_EQ((x - x), Poly());
  EXPECT_EQ((x * y - y * x), Poly());
}

TEST(Poly, ProductMatchesRepeatedAddition) {
  const Poly x = Poly::var(0), y = Poly::var(1), z = Poly::var(2);
  const Poly a = x * x + y.scaled(3) - z, b = x - y * z + Poly(5);
  Poly sum;
  for (int i = 0; i < 4; ++i) sum = sum + a;
  EXPECT_EQ(a * Poly(4), sum);
  EXPECT_EQ(a * b, b * a);
  EXPECT_EQ((a + b) * (a - b), a * a - b * b);
}
