#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "witt/rings.hpp"
#include "witt/truncation.hpp"
#include "witt/witt_vector.hpp"

namespace witt {

/// Orthogonal idempotents eps_n of W_S(R), R a Z_(p)-algebra, indexed by the
/// n in S prime to p (eps_n vanishes for n outside S).
struct EpsilonFamily {
  TruncationSet S;
  std::uint64_t p = 0;
  Ring ring;
  std::map<std::uint64_t, WittVector> idempotents;
};

/// Throws WrongRing unless R is LocalIntegersAtP(p) or Rationals.
void require_local_algebra(const Ring& R, std::uint64_t p);

/// w / k in W_S(R), i.e. multiplication by the inverse of the integer k.
/// Throws NotGhostIntegral when k is not invertible on w.
WittVector divide_by_integer(const WittVector& w, const mpz_class& k);

/// eps_{n,S} = (1/n) V_n(eps_{1,S/n}), where eps_{1,S} is the product over
/// primes l != p in S of (1 - (1/l) V_l(1)). Zero when S/n is empty.
WittVector epsilon(std::uint64_t n, const TruncationSet& S, std::uint64_t p, const Ring& R);
EpsilonFamily epsilon_family(const TruncationSet& S, std::uint64_t p, const Ring& R);

struct EpsilonLawReport {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// eps_n^2 = eps_n, eps_n eps_n' = 0 for n != n', and the family sums to 1.
EpsilonLawReport check_epsilon_laws(const EpsilonFamily& family);

struct FrobeniusEpsilon {
  WittVector value;     // F_m(eps_{n,S}) over S/m
  WittVector expected;  // eps_{n/m, S/m} if m | n, else 0
  bool matches = false;
};

FrobeniusEpsilon frobenius_of_epsilon(std::uint64_t m, std::uint64_t n, const TruncationSet& S, std::uint64_t p,
                                      const Ring& R);

/// Component n (n in S, p does not divide n) is R^{S/n}_{(S/n)_p}(F_n(w)).
std::map<std::uint64_t, WittVector> decompose(const WittVector& w, std::uint64_t p);

/// Inverse of decompose: the sum over n of (1/n) V_n(eps_{1,S/n} * lift(c_n)),
/// where lift extends c_n from (S/n)_p to S/n by zero coordinates.
WittVector reassemble(const std::map<std::uint64_t, WittVector>& components, const TruncationSet& S,
                      std::uint64_t p, const Ring& R);

/// Number of maximal ideals of W_S(F_p) predicted by the decomposition: one per
/// n in S prime to p, since each factor W_{(S/n)_p}(F_p) is local.
std::size_t predicted_component_count(const TruncationSet& S, std::uint64_t p);

}  // namespace witt
