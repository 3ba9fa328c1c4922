#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "witt/rings.hpp"
#include "witt/truncation.hpp"
#include "witt/witt_vector.hpp"

namespace witt {

enum class Execution { Serial, Parallel };

/// W_S(A) for a finite ring A with explicit operation tables. Element i is
/// enumerate_witt(A, S)[i]; tables are row-major N x N.
struct FiniteRingTable {
  Ring A;
  TruncationSet S;
  std::vector<WittVector> elements;
  std::vector<std::uint32_t> add_table;
  std::vector<std::uint32_t> mul_table;
  std::uint32_t zero = 0;
  std::uint32_t one = 0;

  std::size_t size() const { return elements.size(); }
  std::uint32_t add(std::uint32_t i, std::uint32_t j) const { return add_table[i * size() + j]; }
  std::uint32_t mul(std::uint32_t i, std::uint32_t j) const { return mul_table[i * size() + j]; }
};

/// Builds the tables with the universal polynomials. Throws NotFinite for
/// infinite A and TooLarge when |A|^|S| exceeds `cap`.
FiniteRingTable materialize(const Ring& A, const TruncationSet& S, std::uint64_t cap = 4096,
                            Execution exec = Execution::Parallel);

struct AxiomReport {
  bool exhaustive = false;
  std::uint64_t checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Commutativity, associativity, distributivity and identities. Exhaustive
/// when size() <= exhaustive_limit, otherwise on a fixed pseudo-random sample.
AxiomReport check_ring_axioms(const FiniteRingTable& t, std::size_t exhaustive_limit = 256,
                              Execution exec = Execution::Parallel);

struct Ideal {
  std::vector<std::uint32_t> members;  // sorted element indices
  std::uint64_t quotient_size = 0;
};

/// All maximal ideals, obtained by closing the principal ideals under sums.
std::vector<Ideal> maximal_ideals(const FiniteRingTable& t);

struct MaximalIdealLemmaReport {
  std::uint64_t p = 0;
  TruncationSet S;
  unsigned j = 1;
  std::string ring;
  std::size_t ring_size = 0;
  std::size_t maximal_count = 0;
  bool unique = false;             // exactly one maximal ideal
  bool matches_kernel = false;     // each equals ker(W_S(R) -> R -> R/p)
  bool vp_square_identity = false; // V_p(x)^2 = p V_p(x^2) for every x in W_{S/p}(R)
  std::vector<std::string> witnesses;
  bool pass() const { return unique && matches_kernel && vp_square_identity; }
};

/// Brute-force check over R = Z/p^j and a p-typical S.
MaximalIdealLemmaReport verify_maximal_ideal_lemma(std::uint64_t p, const TruncationSet& S, unsigned j,
                                                   std::uint64_t cap = 4096);

}  // namespace witt
