#include <gtest/gtest.h>

#include <random>

#include "witt/errors.hpp"
#include "witt/witt_core.hpp"
#include "witt/witt_z.hpp"

using namespace witt;

namespace {
TruncationSet ts(std::vector<std::uint64_t> v) { return TruncationSet::validate(v); }
std::vector<long> coeffs(const VBasisExpansion& e) {
  std::vector<long> out;
  for (const auto& c : e.coeffs) out.push_back(c.get_si());
  return out;
}
}  // namespace

TEST(VBasis, ToVBasisExamples) {
  EXPECT_EQ(coeffs(to_vbasis(WittVector::one(ts({1, 2}), integers()))), (std::vector<long>{1, 0}));
  EXPECT_EQ(coeffs(to_vbasis(teichmuller(RingValue::from_integer(integers(), 2), ts({1, 2})))),
            (std::vector<long>{2, 1}));
  EXPECT_EQ(coeffs(to_vbasis(v_basis_element(6, ts({1, 2, 3, 6})))), (std::vector<long>{0, 0, 0, 1}));
  try {
    to_vbasis(WittVector::one(ts({1}), integers_mod(2)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::WrongRing);
  }
}

TEST(VBasis, FromVBasisExamples) {
  const TruncationSet S = ts({1, 2});
  const WittVector w = from_vbasis({S, {2, 1}});
  EXPECT_EQ(w.coord(1).as_integer(), 2);
  EXPECT_EQ(w.coord(2).as_integer(), 0);
  EXPECT_EQ(w, teichmuller(RingValue::from_integer(integers(), 2), S));
  EXPECT_TRUE(from_vbasis({S, {0, 0}}).is_zero());
  const TruncationSet S6 = ts({1, 2, 3, 6});
  EXPECT_EQ(from_vbasis({S6, {0, 0, 1, 0}}), v_basis_element(3, S6));
}

TEST(VBasis, StructureConstants) {
  const TruncationSet S = ts({1, 2, 3, 4, 6});
  auto sc = vbasis_product(2, 3, S);
  EXPECT_EQ(sc.c, 1);
  EXPECT_EQ(sc.index, 6u);
  sc = vbasis_product(2, 2, S);
  EXPECT_EQ(sc.c, 2);
  EXPECT_EQ(sc.index, 2u);
  sc = vbasis_product(1, 4, S);
  EXPECT_EQ(sc.c, 1);
  EXPECT_EQ(sc.index, 4u);
  try {
    vbasis_product(4, 3, S);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::IndexOutsideS);
  }
}

TEST(VBasis, RoundTripAndLinearity) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-20, 20);
  const TruncationSet S = TruncationSet::range(12);
  for (int k = 0; k < 100; ++k) {
    std::vector<RingValue> c;
    for (std::size_t i = 0; i < S.size(); ++i) c.push_back(RingValue::from_integer(integers(), d(rng)));
    const WittVector w(S, integers(), c);
    const auto e = to_vbasis(w);
    EXPECT_EQ(from_vbasis(e), w);
    const auto e2 = to_vbasis(add(w, w));
    for (std::size_t i = 0; i < S.size(); ++i) EXPECT_EQ(e2.coeffs[i], 2 * e.coeffs[i]);
  }
}
