#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "witt/truncation.hpp"
#include "witt/witt_vector.hpp"

namespace witt {

/// w = sum over n in S of coeffs[i] * V_n(1), with n = S[i]. Every element of
/// W_S(Z) has exactly one such expansion with integer coefficients.
struct VBasisExpansion {
  TruncationSet S;
  std::vector<mpz_class> coeffs;

  friend bool operator==(const VBasisExpansion&, const VBasisExpansion&) = default;
};

/// Solves gh_m(w) = sum_{n | m} n * c_n for the c_n. Requires ring Integers.
VBasisExpansion to_vbasis(const WittVector& w);
WittVector from_vbasis(const VBasisExpansion& e);

/// V_n(1) in W_S(Z).
WittVector v_basis_element(std::uint64_t n, const TruncationSet& S);

struct StructureConstant {
  mpz_class c;
  std::uint64_t index;
};

/// V_m(1) * V_n(1) = c * V_{mn/c}(1) with c = gcd(m, n). Throws IndexOutsideS
/// when mn/c is not in S.
StructureConstant vbasis_product(std::uint64_t m, std::uint64_t n, const TruncationSet& S);

}  // namespace witt
