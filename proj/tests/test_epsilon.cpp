#include <gtest/gtest.h>

#include <random>

#include "witt/epsilon.hpp"
#include "witt/errors.hpp"
#include "witt/witt_core.hpp"

using namespace witt;

namespace {
TruncationSet ts(std::vector<std::uint64_t> v) { return TruncationSet::validate(v); }
}  // namespace

TEST(Epsilon, GhostComponentsOfEps1) {
  const TruncationSet S = TruncationSet::range(12);
  for (std::uint64_t p : {2, 3, 5}) {
    const Ring R = local_integers_at(p);
    const GhostVector g = ghost(epsilon(1, S, p, R));
    for (auto s : S.elements()) {
      const bool ppow = is_power_of(s, p);
      EXPECT_EQ(g.component(s), RingValue::from_integer(R, ppow ? 1 : 0)) << p << " " << s;
    }
  }
}

TEST(Epsilon, OnTwoElementSet) {
  const Ring R = local_integers_at(2);
  const TruncationSet S = ts({1, 2});
  EXPECT_EQ(epsilon(1, S, 2, R), WittVector::one(S, R));
  const Ring R3 = local_integers_at(3);
  const auto fam = epsilon_family(S, 3, R3);
  EXPECT_EQ(fam.idempotents.size(), 2u);
  EXPECT_TRUE(check_epsilon_laws(fam).ok());
}

TEST(Epsilon, LawsHold) {
  for (std::uint64_t p : {2, 3, 5})
    for (std::uint64_t N : {6, 10, 12}) {
      const auto fam = epsilon_family(TruncationSet::range(N), p, local_integers_at(p));
      EXPECT_TRUE(check_epsilon_laws(fam).ok()) << p << " " << N;
    }
}

TEST(Epsilon, FrobeniusCaseRule) {
  const TruncationSet S = TruncationSet::range(12);
  const Ring R = local_integers_at(2);
  EXPECT_TRUE(frobenius_of_epsilon(3, 3, S, 2, R).matches);
  EXPECT_TRUE(frobenius_of_epsilon(3, 9, S, 2, R).matches);
  EXPECT_TRUE(frobenius_of_epsilon(3, 5, S, 2, R).matches);
  EXPECT_TRUE(frobenius_of_epsilon(3, 5, S, 2, R).value.is_zero());
  try {
    frobenius_of_epsilon(2, 1, S, 2, R);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotCoprime);
  }
}

TEST(Epsilon, RejectsWrongRing) {
  EXPECT_THROW(epsilon(1, ts({1, 2}), 2, integers()), Error);
  EXPECT_THROW(epsilon(1, ts({1, 2}), 2, local_integers_at(3)), Error);
  EXPECT_NO_THROW(epsilon(1, ts({1, 2}), 2, rationals()));
}

TEST(Epsilon, DecomposeRoundTrip) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-9, 9);
  for (std::uint64_t p : {2, 3}) {
    const Ring R = local_integers_at(p);
    const TruncationSet S = TruncationSet::range(12);
    for (int k = 0; k < 20; ++k) {
      std::vector<RingValue> c;
      for (std::size_t i = 0; i < S.size(); ++i) c.push_back(RingValue::from_integer(R, d(rng)));
      const WittVector w(S, R, c);
      const auto parts = decompose(w, p);
      EXPECT_EQ(parts.size(), predicted_component_count(S, p));
      EXPECT_EQ(reassemble(parts, S, p, R), w);
    }
  }
}
