#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "witt/rings.hpp"
#include "witt/truncation.hpp"
#include "witt/witt_vector.hpp"

namespace witt {

/// Which arithmetic route to use. Auto picks Ghost on torsion-free rings and
/// Tables otherwise; the two agree wherever both apply.
enum class ArithPath { Auto, Ghost, Tables };

WittVector add(const WittVector& a, const WittVector& b, ArithPath path = ArithPath::Auto);
WittVector mul(const WittVector& a, const WittVector& b, ArithPath path = ArithPath::Auto);
WittVector neg(const WittVector& a, ArithPath path = ArithPath::Auto);
WittVector sub(const WittVector& a, const WittVector& b, ArithPath path = ArithPath::Auto);
WittVector pow(const WittVector& a, std::uint64_t e, ArithPath path = ArithPath::Auto);

/// Image of the integer k under Z -> W_S(Z) -> W_S(ring).
WittVector integer_image(const mpz_class& k, const TruncationSet& S, const Ring& ring);
/// k * w in W_S(A).
WittVector scale(const mpz_class& k, const WittVector& w, ArithPath path = ArithPath::Auto);

/// [a] = (a, 0, 0, ...).
WittVector teichmuller(const RingValue& a, const TruncationSet& S);

/// V_n : W_{S/n}(A) -> W_S(A). Index n*s of the result receives a_s, all other
/// indices are zero. Throws ShapeMismatch unless w lives over S/n.
WittVector verschiebung(std::uint64_t n, const WittVector& w, const TruncationSet& S);

/// F_n : W_S(A) -> W_{S/n}(A), characterized by gh_m(F_n w) = gh_{nm}(w).
WittVector frobenius(std::uint64_t n, const WittVector& w, ArithPath path = ArithPath::Auto);

/// R^S_T: drops coordinates outside T. Throws NotSubset unless T is contained in S.
WittVector restriction(const WittVector& w, const TruncationSet& T);

/// Extends w over T to S (T contained in S) by zero coordinates. Not a ring map;
/// used to pick lifts along the surjection R^S_T.
WittVector zero_extend(const WittVector& w, const TruncationSet& S);

/// Applies the canonical coefficient map coordinatewise.
WittVector change_ring(const WittVector& w, const Ring& target);

/// Sum over s in S of V_s([a_s]); equals w for every w (unique expansion).
WittVector expansion_sum(const WittVector& w, ArithPath path = ArithPath::Auto);

/// Every element of W_S(A) for finite A, ordered by witt_index.
std::vector<WittVector> enumerate_witt(const Ring& A, const TruncationSet& S);
/// Mixed-radix index of w among enumerate_witt(w.ring(), w.S()); coordinate at S[0] is least significant.
std::uint64_t witt_index(const WittVector& w);

struct ExactSequenceReport {
  std::string ring;
  TruncationSet S;
  std::uint64_t n = 1;
  TruncationSet source;  // S/n
  TruncationSet target;  // S \ { s : n | s }
  std::uint64_t card_source = 0;
  std::uint64_t card_middle = 0;
  std::uint64_t card_target = 0;
  std::uint64_t card_image = 0;
  std::uint64_t card_kernel = 0;
  bool injective = false;
  bool surjective = false;
  bool image_equals_kernel = false;
  bool homomorphisms = false;  // V_n additive, restriction a ring map (sampled when large)
  std::vector<std::string> counterexamples;

  bool exact() const { return injective && surjective && image_equals_kernel && homomorphisms; }
};

/// Verifies 0 -> W_{S/n}(A) -> W_S(A) -> W_T(A) -> 0 by enumeration over a finite A.
ExactSequenceReport exact_sequence_check(const Ring& A, const TruncationSet& S, std::uint64_t n,
                                         std::uint64_t max_elements = 1u << 16);

}  // namespace witt
