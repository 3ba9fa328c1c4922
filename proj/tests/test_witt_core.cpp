#include <gtest/gtest.h>

#include <random>

#include "witt/errors.hpp"
#include "witt/universal_table.hpp"
#include "witt/witt_core.hpp"

using namespace witt;

namespace {

TruncationSet ts(std::vector<std::uint64_t> v) { return TruncationSet::validate(v); }

WittVector wz(const TruncationSet& S, std::vector<long> c, const Ring& R = integers()) {
  std::vector<RingValue> v;
  for (long x : c) v.push_back(RingValue::from_integer(R, x));
  return WittVector(S, R, v);
}

std::vector<long> ghost_longs(const WittVector& w) {
  std::vector<long> out;
  const GhostVector g = ghost(w);
  for (const auto& c : g.components()) out.push_back(c.as_integer().get_si());
  return out;
}

WittVector random_w(const TruncationSet& S, const Ring& R, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-6, 6);
  std::vector<RingValue> v;
  for (std::size_t i = 0; i < S.size(); ++i) v.push_back(RingValue::from_integer(R, d(rng)));
  return WittVector(S, R, v);
}

}  // namespace

TEST(Ghost, SpecExamples) {
  EXPECT_EQ(ghost_longs(teichmuller(RingValue::from_integer(integers(), 2), ts({1, 2, 3}))),
            (std::vector<long>{2, 4, 8}));
  EXPECT_EQ(ghost_longs(wz(ts({1, 2, 4}), {0, 1, 0})), (std::vector<long>{0, 2, 2}));
  EXPECT_EQ(ghost_longs(WittVector::zero(ts({1, 2, 3, 6}), integers())), (std::vector<long>{0, 0, 0, 0}));
}

TEST(Ghost, FromGhostExamples) {
  const Ring Z = integers();
  auto g = [&](const TruncationSet& S, std::vector<long> c) {
    std::vector<RingValue> v;
    for (long x : c) v.push_back(RingValue::from_integer(Z, x));
    return GhostVector(S, Z, v);
  };
  EXPECT_EQ(from_ghost(g(ts({1, 2, 3}), {2, 4, 8})), wz(ts({1, 2, 3}), {2, 0, 0}));
  EXPECT_EQ(from_ghost(g(ts({1, 2}), {1, 1})), wz(ts({1, 2}), {1, 0}));
  try {
    from_ghost(g(ts({1, 2}), {0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotGhostIntegral);
  }
  std::vector<RingValue> c4{RingValue::one(integers_mod(4)), RingValue::one(integers_mod(4))};
  try {
    from_ghost(GhostVector(ts({1, 2}), integers_mod(4), c4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidRing);
  }
}

TEST(Arithmetic, SpecExamples) {
  const TruncationSet S12 = ts({1, 2});
  const WittVector one = teichmuller(RingValue::one(integers()), S12);
  for (auto path : {ArithPath::Ghost, ArithPath::Tables}) EXPECT_EQ(add(one, one, path), wz(S12, {2, -1}));
  const TruncationSet S6 = ts({1, 2, 3, 6});
  const WittVector v2 = verschiebung(2, WittVector::one(S6.quotient(2), integers()), S6);
  const WittVector v3 = verschiebung(3, WittVector::one(S6.quotient(3), integers()), S6);
  for (auto path : {ArithPath::Ghost, ArithPath::Tables}) EXPECT_EQ(mul(v2, v3, path), wz(S6, {0, 0, 0, 1}));
  const Ring Z4 = integers_mod(4);
  EXPECT_EQ(add(wz(S12, {1, 0}, Z4), wz(S12, {1, 0}, Z4)), wz(S12, {2, 3}, Z4));
}

TEST(Arithmetic, GhostPathRejectsTorsion) {
  const Ring Z4 = integers_mod(4);
  EXPECT_THROW(add(wz(ts({1, 2}), {1, 0}, Z4), wz(ts({1, 2}), {1, 0}, Z4), ArithPath::Ghost), Error);
}

TEST(Arithmetic, MismatchedOperands) {
  EXPECT_THROW(add(wz(ts({1, 2}), {1, 0}), wz(ts({1}), {1})), Error);
  EXPECT_THROW(add(wz(ts({1}), {1}), wz(ts({1}), {1}, integers_mod(3))), Error);
}

TEST(Operators, VerschiebungFrobeniusRestriction) {
  const TruncationSet S12 = ts({1, 2});
  EXPECT_EQ(verschiebung(2, WittVector::one(ts({1}), integers()), S12), wz(S12, {0, 1}));
  const WittVector v = verschiebung(2, teichmuller(RingValue::from_integer(integers(), 3), ts({1})), S12);
  EXPECT_EQ(frobenius(2, v), wz(ts({1}), {6}));
  EXPECT_EQ(frobenius(2, v, ArithPath::Tables), wz(ts({1}), {6}));
  EXPECT_EQ(restriction(wz(S12, {2, -1}), ts({1})), wz(ts({1}), {2}));
  EXPECT_EQ(restriction(wz(S12, {2, -1}), S12), wz(S12, {2, -1}));
  try {
    restriction(wz(S12, {2, -1}), ts({1, 3}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotSubset);
  }
  try {
    verschiebung(2, wz(S12, {1, 1}), S12);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ShapeMismatch);
  }
}

TEST(UniversalTable, LowDegreeOracle) {
  // Hand-derived from gh_2 = x_1^2 + 2 x_2.
  const Poly x1 = Poly::var(UniversalPolyTable::x_var(1)), y1 = Poly::var(UniversalPolyTable::y_var(1));
  const Poly x2 = Poly::var(UniversalPolyTable::x_var(2)), y2 = Poly::var(UniversalPolyTable::y_var(2));
  auto& t = UniversalPolyTable::global();
  EXPECT_EQ(t.sum(1), x1 + y1);
  EXPECT_EQ(t.product(1), x1 * y1);
  EXPECT_EQ(t.sum(2), x2 + y2 - x1 * y1);
  EXPECT_EQ(t.product(2), x2 * y1 * y1 + x1 * x1 * y2 + (x2 * y2).scaled(2));
  EXPECT_EQ(t.frobenius(2, 1), x1 * x1 + x2.scaled(2));
}

TEST(UniversalTable, GhostIdentityHoldsSymbolically) {
  auto& t = UniversalPolyTable::global();
  for (std::uint64_t n : {4, 6, 9, 12}) {
    Poly lhs_sum, lhs_prod;
    for (auto d : divisors_of(n)) {
      lhs_sum = lhs_sum + t.sum(d).pow(n / d).scaled(d);
      lhs_prod = lhs_prod + t.product(d).pow(n / d).scaled(d);
    }
    const Poly gx = UniversalPolyTable::generic_ghost(n, false), gy = UniversalPolyTable::generic_ghost(n, true);
    EXPECT_EQ(lhs_sum, gx + gy) << n;
    EXPECT_EQ(lhs_prod, gx * gy) << n;
  }
}

TEST(UniversalTable, LimitIsEnforced) {
  UniversalPolyTable small(4);
  EXPECT_NO_THROW(small.sum(4));
  EXPECT_THROW(small.sum(5), Error);
}

TEST(Properties, PathsAgreeAndRingLaws) {
  std::mt19937_64 rng(11);
  const TruncationSet S = TruncationSet::range(10);
  for (int k = 0; k < 30; ++k) {
    const WittVector a = random_w(S, integers(), rng), b = random_w(S, integers(), rng),
                     c = random_w(S, integers(), rng);
    EXPECT_EQ(neg(a, ArithPath::Tables), neg(a, ArithPath::Ghost));
    EXPECT_EQ(sub(a, a), WittVector::zero(S, integers()));
    EXPECT_EQ(mul(a, add(b, c)), add(mul(a, b), mul(a, c)));
    EXPECT_EQ(expansion_sum(a), a);
    EXPECT_EQ(pow(a, 3, ArithPath::Tables), mul(a, mul(a, a)));
    for (std::uint64_t n = 2; n <= 5; ++n)
      EXPECT_EQ(frobenius(n, a, ArithPath::Tables), frobenius(n, a, ArithPath::Ghost));
  }
}

TEST(Properties, ReductionAndLocalizationCommuteWithOperations) {
  std::mt19937_64 rng(12);
  const TruncationSet S = TruncationSet::range(8);
  const Ring Z6 = integers_mod(6), L3 = local_integers_at(3);
  for (int k = 0; k < 20; ++k) {
    const WittVector a = random_w(S, integers(), rng), b = random_w(S, integers(), rng);
    EXPECT_EQ(change_ring(mul(a, b), Z6), mul(change_ring(a, Z6), change_ring(b, Z6)));
    EXPECT_EQ(change_ring(add(a, b), Z6), add(change_ring(a, Z6), change_ring(b, Z6)));
    EXPECT_EQ(change_ring(mul(a, b), L3), mul(change_ring(a, L3), change_ring(b, L3)));
    EXPECT_EQ(change_ring(add(a, b), L3), add(change_ring(a, L3), change_ring(b, L3), ArithPath::Tables));
  }
}

TEST(Properties, IntegerImage) {
  const TruncationSet S = TruncationSet::range(6);
  for (int k = -4; k <= 4; ++k) {
    WittVector acc = WittVector::zero(S, integers());
    for (int i = 0; i < std::abs(k); ++i) acc = add(acc, WittVector::one(S, integers()));
    if (k < 0) acc = neg(acc);
    EXPECT_EQ(integer_image(k, S, integers()), acc);
    EXPECT_EQ(change_ring(integer_image(k, S, integers()), integers_mod(4)), integer_image(k, S, integers_mod(4)));
  }
}

TEST(Enumeration, IndicesRoundTrip) {
  const auto all = enumerate_witt(integers_mod(3), ts({1, 2}));
  ASSERT_EQ(all.size(), 9u);
  for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(witt_index(all[i]), i);
  EXPECT_THROW(enumerate_witt(integers(), ts({1})), Error);
}

TEST(ExactSequence, SpecExamples) {
  const auto r = exact_sequence_check(integers_mod(2), ts({1, 2}), 2);
  EXPECT_TRUE(r.exact());
  EXPECT_EQ(r.card_middle, 4u);
  EXPECT_EQ(r.card_image, 2u);
  const auto r1 = exact_sequence_check(integers_mod(2), ts({1}), 2);
  EXPECT_TRUE(r1.exact());
  EXPECT_TRUE(r1.source.empty());
  EXPECT_EQ(r1.target, ts({1}));
  const auto r4 = exact_sequence_check(integers_mod(4), ts({1, 2, 4}), 2);
  EXPECT_TRUE(r4.exact());
  EXPECT_EQ(r4.card_middle, 64u);
}

TEST(Properties, WordSizedModularPathMatchesGenericEvaluation) {
  // Z/m arithmetic uses machine words; reducing the Z computation is the reference.
  std::mt19937_64 rng(13);
  const TruncationSet S = TruncationSet::range(12);
  for (long m : {2L, 4L, 9L, 4294967291L}) {
    const Ring Zm = integers_mod(m);
    for (int k = 0; k < 10; ++k) {
      const WittVector a = random_w(S, integers(), rng), b = random_w(S, integers(), rng);
      EXPECT_EQ(mul(change_ring(a, Zm), change_ring(b, Zm)), change_ring(mul(a, b), Zm)) << m;
      EXPECT_EQ(add(change_ring(a, Zm), change_ring(b, Zm)), change_ring(add(a, b), Zm)) << m;
      EXPECT_EQ(frobenius(3, change_ring(a, Zm)), change_ring(frobenius(3, a), Zm)) << m;
    }
  }
}
