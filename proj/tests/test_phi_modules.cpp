#include <gtest/gtest.h>

#include "witt/errors.hpp"
#include "witt/phi_modules.hpp"
#include "witt/verify.hpp"
#include "witt/witt_core.hpp"

using namespace witt;

namespace {
const TruncationSet Q6 = TruncationSet::range(6);
const Ring Z = integers();

std::string failures(const ValidationReport& r) {
  std::string s;
  for (const auto& f : r.failures) s += f.axiom + " S=" + f.S.to_string() + " n=" + std::to_string(f.n) + " " + f.witness + "\n";
  return s;
}
}  // namespace

TEST(PhiObjects, UnitAndTateValidate) {
  const auto u = validate(unit(Q6, Z));
  EXPECT_TRUE(u.ok()) << failures(u);
  EXPECT_GT(u.checks, 0u);
  for (std::int64_t b = 1; b <= 3; ++b) {
    const auto r = validate(tate(-b, Q6, Z));
    EXPECT_TRUE(r.ok()) << failures(r);
  }
}

TEST(PhiObjects, TateData) {
  const PhiObject t = tate(-1, Q6, Z);
  EXPECT_EQ(t.rank(), 1u);
  const TruncationSet S = Q6;
  EXPECT_EQ(t.phi_at(S, 2), GhostMatrix::scalar(S.quotient(2), 1, 2));
  // phi_2 beta_2 = 2^a on the rank-one Tate object.
  const GhostMatrix prod = t.phi_at(S, 3).scaled(3) * t.beta_at(S, 3);
  mpz_class pa = 1;
  for (std::uint64_t i = 0; i < t.a; ++i) pa *= 3;
  EXPECT_EQ(prod, GhostMatrix::scalar(S.quotient(3), 1, pa));
}

TEST(PhiObjects, CorruptedPhiFails) {
  PhiObject u = unit(Q6, Z);
  const auto key = PhiObject::SN{Q6, 2};
  u.phi[key] = GhostMatrix::scalar(Q6.quotient(2), 1, 3);
  const auto r = validate(u);
  EXPECT_FALSE(r.ok());
}

TEST(PhiObjects, ConstructionsValidate) {
  const PhiObject u = unit(Q6, Z), t1 = tate(-1, Q6, Z), t2 = tate(-2, Q6, Z);
  for (const auto& M : {direct_sum(u, t1), tensor(t1, t2), internal_hom(t1, u), dual(t2),
                        internal_hom(direct_sum(u, t1), t2)}) {
    const auto r = validate(M);
    EXPECT_TRUE(r.ok()) << failures(r);
  }
}

TEST(PhiObjects, Isomorphisms) {
  const PhiObject u = unit(Q6, Z), t1 = tate(-1, Q6, Z), t2 = tate(-2, Q6, Z), t3 = tate(-3, Q6, Z);
  EXPECT_TRUE(isomorphic(tensor(t1, t2), t3));
  EXPECT_TRUE(isomorphic(tensor(u, t2), t2));
  EXPECT_TRUE(isomorphic(dual(dual(t1)), t1));
  EXPECT_TRUE(isomorphic(tensor(t1, dual(t1)), u));
  EXPECT_FALSE(isomorphic(t1, t2));
  EXPECT_FALSE(isomorphic(u, direct_sum(u, u)));
}

TEST(Morphisms, ScalarAndDiagonal) {
  const PhiObject M = direct_sum(unit(Q6, Z), tate(-1, Q6, Z));
  const auto r = hom_set_check(scalar_endomorphism(M, 5));
  EXPECT_TRUE(r.is_morphism());
  EXPECT_TRUE(r.consistent());
  const auto d = hom_set_check(diagonal_endomorphism(M, {2, -3}));
  EXPECT_TRUE(d.is_morphism());
  EXPECT_TRUE(d.consistent());
}

TEST(Morphisms, TeichmullerScalarIsNotAMorphism) {
  // Multiplication by [2] does not commute with phi on the unit.
  const PhiObject u = unit(Q6, Z);
  std::map<TruncationSet, GhostMatrix> mats;
  for (const auto& S : u.levels())
    mats.emplace(S, GhostMatrix::of(teichmuller(RingValue::from_integer(Z, 2), S)));
  const auto r = hom_set_check(u, u, mats);
  EXPECT_FALSE(r.is_morphism());
  EXPECT_TRUE(r.consistent());
}

TEST(Morphisms, Triangular) {
  const auto f = triangular_endomorphism(Q6, Z, 1, 1, 1);
  const auto r = hom_set_check(f);
  EXPECT_TRUE(r.is_morphism());
  EXPECT_TRUE(r.consistent());
  EXPECT_TRUE(conservativity_harness(f).ok());
}

TEST(Tangent, Harness) {
  const PhiObject M = direct_sum(unit(Q6, Z), tate(-2, Q6, Z));
  const auto zero = diagonal_endomorphism(M, {0, 0});
  EXPECT_TRUE(tangent(zero).is_zero());
  EXPECT_TRUE(conservativity_harness(zero).ok());
  const auto inv = diagonal_endomorphism(M, {1, -1});
  const auto h = conservativity_harness(inv);
  EXPECT_EQ(h.conservative, "pass");
  EXPECT_EQ(h.faithful, "not applicable");
  const auto two = scalar_endomorphism(M, 2);
  EXPECT_EQ(conservativity_harness(two).conservative, "not applicable");
  EXPECT_EQ(tangent(M).rank, 2u);
}

TEST(PTypical, Reduction) {
  const PhiObject M = direct_sum(unit(Q6, local_integers_at(2)), tate(-1, Q6, local_integers_at(2)));
  EXPECT_TRUE(p_typical_reduction_check(M, 2).ok());
  const PhiObject N = tensor(tate(-1, Q6, rationals()), tate(-2, Q6, rationals()));
  EXPECT_TRUE(p_typical_reduction_check(N, 3).ok());
}

TEST(PTypical, CorruptedBetaFails) {
  PhiObject M = unit(Q6, local_integers_at(2));
  const auto key = PhiObject::SN{Q6, 3};
  M.beta[key] = GhostMatrix::scalar(Q6.quotient(3), 1, 2);
  EXPECT_FALSE(p_typical_reduction_check(M, 2).ok());
}

TEST(PhiObjects, RejectsTorsionRing) {
  EXPECT_THROW(unit(Q6, integers_mod(4)), Error);
}
