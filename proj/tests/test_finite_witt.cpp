#include <gtest/gtest.h>

#include "witt/epsilon.hpp"
#include "witt/errors.hpp"
#include "witt/finite_witt.hpp"

using namespace witt;

namespace {
TruncationSet ts(std::vector<std::uint64_t> v) { return TruncationSet::validate(v); }
}  // namespace

TEST(Materialize, SizesAndErrors) {
  EXPECT_EQ(materialize(integers_mod(2), ts({1, 2})).size(), 4u);
  EXPECT_EQ(materialize(integers_mod(3), ts({1, 2, 3})).size(), 27u);
  try {
    materialize(integers(), ts({1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotFinite);
  }
  try {
    materialize(integers_mod(4), TruncationSet::range(7));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TooLarge);
  }
}

TEST(Materialize, SerialMatchesParallel) {
  const auto a = materialize(integers_mod(4), ts({1, 2, 4}), 4096, Execution::Serial);
  const auto b = materialize(integers_mod(4), ts({1, 2, 4}), 4096, Execution::Parallel);
  EXPECT_EQ(a.add_table, b.add_table);
  EXPECT_EQ(a.mul_table, b.mul_table);
  EXPECT_TRUE(check_ring_axioms(a, 256, Execution::Serial).ok());
  EXPECT_TRUE(check_ring_axioms(b).ok());
}

TEST(MaximalIdeals, SmallRings) {
  // W_{1,2}(F_2) is Z/4: one maximal ideal.
  const auto t2 = materialize(integers_mod(2), ts({1, 2}));
  const auto m2 = maximal_ideals(t2);
  ASSERT_EQ(m2.size(), 1u);
  EXPECT_EQ(m2[0].members.size(), 2u);
  EXPECT_EQ(m2[0].quotient_size, 2u);
  // W_{1,2}(F_3) is F_3 x F_3.
  const auto m3 = maximal_ideals(materialize(integers_mod(3), ts({1, 2})));
  EXPECT_EQ(m3.size(), 2u);
  EXPECT_EQ(m3.size(), predicted_component_count(ts({1, 2}), 3));
}

TEST(MaximalIdeals, LemmaCases) {
  EXPECT_TRUE(verify_maximal_ideal_lemma(2, ts({1, 2}), 1).pass());
  EXPECT_TRUE(verify_maximal_ideal_lemma(2, ts({1, 2, 4}), 1).pass());
  EXPECT_TRUE(verify_maximal_ideal_lemma(3, ts({1, 3}), 1).pass());
  const auto r = verify_maximal_ideal_lemma(3, ts({1, 3}), 2);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.ring_size, 81u);
}
