#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "witt/ghost_matrix.hpp"
#include "witt/rings.hpp"
#include "witt/truncation.hpp"

namespace witt {

/// A system S -> M_S of free W_S(R)-modules for every nonempty truncation set
/// S inside a finite ambient set Q, with Frobenius-semilinear maps phi_n and
/// their partners beta_n. R must be Integers, Rationals or LocalIntegersAtP.
///
/// Conventions, with x = sum c_i e_i in M_S and n in S:
///   phi_n(x) = Phi(S, n) * F_n(c), a matrix over W_{S/n}(R);
///   beta_n(y) = V_n(B(S, n) * y) for y in M_{S/n}, with B over W_{S/n}(R);
///   the transition M_S -> M_T is x -> Res(S, T) * R_T(c) for T strictly inside S.
/// `twist` tags the object as M(twist); (Phi, b) and (n^k Phi, b + k) describe
/// the same object.
struct PhiObject {
  using SN = std::pair<TruncationSet, std::uint64_t>;
  using ST = std::pair<TruncationSet, TruncationSet>;

  TruncationSet Q;
  Ring R;
  std::map<TruncationSet, std::size_t> ranks;
  std::map<ST, GhostMatrix> res;
  std::map<SN, GhostMatrix> phi;
  std::map<SN, GhostMatrix> beta;
  std::uint64_t a = 1;
  std::int64_t twist = 0;

  std::size_t rank() const;
  /// Res(S, T); the identity when T equals S.
  GhostMatrix res_at(const TruncationSet& S, const TruncationSet& T) const;
  const GhostMatrix& phi_at(const TruncationSet& S, std::uint64_t n) const;
  const GhostMatrix& beta_at(const TruncationSet& S, std::uint64_t n) const;
  std::vector<TruncationSet> levels() const;
};

/// 1: M_S = W_S(R), phi_n = F_n, beta_n = V_n, a = 1.
PhiObject unit(const TruncationSet& Q, const Ring& R);
/// 1(b). For b <= 0: phi_n = n^{-b} F_n, beta_n = V_n, a = 1 - b. For b > 0 the
/// unit data carries the twist tag b.
PhiObject tate(std::int64_t b, const TruncationSet& Q, const Ring& R);
/// A rank-one object with phi_n = n^e F_n and beta_n = n^f V_n (a = e + f + 1).
PhiObject rank_one(const TruncationSet& Q, const Ring& R, std::uint64_t e, std::uint64_t f,
                   std::int64_t twist = 0);

/// Same object written as (n^k Phi, twist + k); a grows by k.
PhiObject retwist(const PhiObject& M, std::uint64_t k);
/// Replaces beta_n by n^k beta_n; a grows by k.
PhiObject renormalize(const PhiObject& M, std::uint64_t k);

PhiObject direct_sum(const PhiObject& M, const PhiObject& N);
PhiObject tensor(const PhiObject& M, const PhiObject& N);
/// Basis E_{kl} (e^M_l -> e^N_k) at index k * rank(M) + l.
PhiObject internal_hom(const PhiObject& M, const PhiObject& N);
PhiObject dual(const PhiObject& M);

struct AxiomFailure {
  std::string axiom;
  TruncationSet S;
  std::uint64_t n = 0;
  std::string witness;
};

struct ValidationReport {
  std::uint64_t checks = 0;
  std::vector<AxiomFailure> failures;
  bool ok() const { return failures.empty(); }
};

struct ValidateOptions {
  std::size_t samples = 20;  // random lambda per (S, n)
  std::uint64_t seed = 1;
};

ValidationReport validate(const PhiObject& M, const ValidateOptions& opts = {});

/// Same object after relabelling M's basis (index i becomes perm[i]), allowing
/// the twist and beta normalizations to differ.
bool isomorphic_via(const PhiObject& M, const PhiObject& N, const std::vector<std::size_t>& perm);
/// Tries every basis permutation (rank at most 6).
bool isomorphic(const PhiObject& M, const PhiObject& N);

struct PhiMorphism {
  PhiObject source;
  PhiObject target;
  std::map<TruncationSet, GhostMatrix> mats;  // rank(target) x rank(source) over W_S(R)
};

/// f_S = k * identity for every S.
PhiMorphism scalar_endomorphism(const PhiObject& M, const mpz_class& k);
/// f_S = diag(ks) for every S.
PhiMorphism diagonal_endomorphism(const PhiObject& M, const std::vector<mpz_class>& ks);
PhiMorphism tensor(const PhiMorphism& f, const PhiMorphism& g);

struct MorphismReport {
  bool integral = true;
  bool commutes_with_restriction = true;
  bool commutes_with_phi = true;
  bool hom_condition = true;   // n Phi_N F_n(f_S) B_M = n^{a_M} f_{S/n}
  bool beta_lemma = true;      // n^{a_N} F_n(f_S) B_M = n^{a_M} B_N f_{S/n}
  bool divergence = false;     // the two phi conditions disagreed somewhere
  std::uint64_t checks = 0;
  std::vector<std::string> witnesses;
  bool is_morphism() const { return integral && commutes_with_restriction && commutes_with_phi; }
  /// No library inconsistency: the equivalent conditions agree and the beta
  /// lemma holds whenever f is a morphism.
  bool consistent() const { return !divergence && (!is_morphism() || beta_lemma); }
};

MorphismReport hom_set_check(const PhiObject& M, const PhiObject& N,
                             const std::map<TruncationSet, GhostMatrix>& mats);
inline MorphismReport hom_set_check(const PhiMorphism& f) { return hom_set_check(f.source, f.target, f.mats); }

struct TangentModule {
  Ring R;
  std::size_t rank = 0;
  std::int64_t twist = 0;
};

/// A matrix over R, row-major.
struct RMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<mpq_class> entries;
  bool is_zero() const;
  friend bool operator==(const RMatrix&, const RMatrix&) = default;
};

TangentModule tangent(const PhiObject& M);
RMatrix tangent(const PhiMorphism& f);
RMatrix kronecker(const RMatrix& a, const RMatrix& b);

struct ConservativityReport {
  std::string faithful;      // "pass", "fail" or "not applicable"
  std::string conservative;  // "pass", "fail" or "not applicable"
  std::vector<std::string> witnesses;
  bool ok() const { return faithful != "fail" && conservative != "fail"; }
};

ConservativityReport conservativity_harness(const PhiMorphism& f);

struct PTypicalReport {
  std::uint64_t p = 0;
  std::uint64_t checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Over R = LocalIntegersAtP(p) or Rationals: eps_1 M_S -> M_{S_p} and
/// phi_n : eps_n M_S -> eps_1 M_{S/n} are bijections, the latter inverted by
/// (eps_n / n^a) beta_n. Over Rationals also checks that x -> (R_{1} phi_n x)_n
/// is bijective. Throws WrongRing for other rings.
PTypicalReport p_typical_reduction_check(const PhiObject& M, std::uint64_t p, const ValidateOptions& opts = {});

}  // namespace witt
