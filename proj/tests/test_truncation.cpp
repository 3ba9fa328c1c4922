#include <gtest/gtest.h>

#include <random>

#include "witt/errors.hpp"
#include "witt/truncation.hpp"

using namespace witt;

namespace {
TruncationSet ts(std::vector<std::uint64_t> v) { return TruncationSet::validate(v); }
std::vector<std::uint64_t> el(const TruncationSet& S) { return S.elements(); }
}  // namespace

TEST(Truncation, ValidateAcceptsClosedSets) {
  EXPECT_EQ(el(ts({1, 2, 3, 6})), (std::vector<std::uint64_t>{1, 2, 3, 6}));
  EXPECT_EQ(el(ts({6, 3, 1, 2, 2})), (std::vector<std::uint64_t>{1, 2, 3, 6}));
  EXPECT_TRUE(ts({}).empty());
}

TEST(Truncation, ValidateNamesWitnessAndMissingDivisor) {
  try {
    ts({2});
    FAIL();
  } catch (const NotDivisorClosedError& e) {
    EXPECT_EQ(e.code(), Errc::NotDivisorClosed);
    EXPECT_EQ(e.witness(), 2u);
    EXPECT_EQ(e.missing(), 1u);
  }
  try {
    ts({1, 4});
    FAIL();
  } catch (const NotDivisorClosedError& e) {
    EXPECT_EQ(e.witness(), 4u);
    EXPECT_EQ(e.missing(), 2u);
  }
  EXPECT_THROW(ts({0}), Error);
}

TEST(Truncation, Quotient) {
  EXPECT_EQ(el(ts({1, 2, 3, 6}).quotient(2)), (std::vector<std::uint64_t>{1, 3}));
  EXPECT_EQ(ts({1, 2, 3, 6}).quotient(1), ts({1, 2, 3, 6}));
  EXPECT_TRUE(ts({1, 2}).quotient(4).empty());
}

TEST(Truncation, PPart) {
  EXPECT_EQ(el(ts({1, 2, 3, 6}).p_part(2)), (std::vector<std::uint64_t>{1, 2}));
  EXPECT_EQ(el(ts({1}).p_part(7)), (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(el(ts({1, 2, 4, 8}).p_part(2)), (std::vector<std::uint64_t>{1, 2, 4, 8}));
  EXPECT_THROW(ts({1, 2}).p_part(4), Error);
}

TEST(Truncation, DivisorClosure) {
  std::vector<std::uint64_t> six{6}, none{}, four_nine{4, 9};
  EXPECT_EQ(el(TruncationSet::divisor_closure(six)), (std::vector<std::uint64_t>{1, 2, 3, 6}));
  EXPECT_TRUE(TruncationSet::divisor_closure(none).empty());
  EXPECT_EQ(el(TruncationSet::divisor_closure(four_nine)), (std::vector<std::uint64_t>{1, 2, 3, 4, 9}));
}

TEST(Truncation, WithoutMultiples) {
  EXPECT_EQ(el(ts({1, 2, 3, 4, 6}).without_multiples_of(2)), (std::vector<std::uint64_t>{1, 3}));
  EXPECT_TRUE(ts({1, 2}).without_multiples_of(1).empty());
}

TEST(Truncation, SubTruncationSetsAreClosedAndDistinct) {
  const auto subs = sub_truncation_sets(TruncationSet::range(6));
  EXPECT_EQ(subs.size(), 16u);
  for (const auto& S : subs) {
    EXPECT_FALSE(S.empty());
    EXPECT_NO_THROW(TruncationSet::validate(S.elements()));
  }
}

TEST(Truncation, PropertyQuotientAndPartsStayClosed) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> d(1, 40);
  for (int k = 0; k < 200; ++k) {
    std::vector<std::uint64_t> seed{d(rng), d(rng), d(rng)};
    const TruncationSet S = TruncationSet::divisor_closure(seed);
    for (std::uint64_t n = 1; n <= 12; ++n) {
      const TruncationSet q = S.quotient(n);
      EXPECT_NO_THROW(TruncationSet::validate(q.elements()));
      for (auto s : q.elements()) EXPECT_TRUE(S.contains(n * s));
      EXPECT_TRUE(S.without_multiples_of(n).is_subset_of(S));
    }
    for (std::uint64_t p : {2, 3, 5}) EXPECT_TRUE(S.p_part(p).is_p_typical(p));
  }
}
