#include "witt/witt_z.hpp"

#include "witt/errors.hpp"
#include "witt/witt_core.hpp"

namespace witt {

VBasisExpansion to_vbasis(const WittVector& w) {
  if (w.ring()->kind != RingKind::Integers)
    throw Error(Errc::WrongRing, "the V-basis expansion is defined over Z, got " + w.ring()->to_string());
  const TruncationSet& S = w.S();
  const GhostVector g = ghost(w);
  VBasisExpansion e{S, {}};
  e.coeffs.reserve(S.size());
  for (std::size_t i = 0; i < S.size(); ++i) {
    mpz_class rest = g.components()[i].as_integer();
    const auto divs = S.divisor_indices(i);
    for (std::size_t k = 0; k + 1 < divs.size(); ++k) rest -= e.coeffs[divs[k]] * S[divs[k]];
    WITT_ASSERT(mpz_divisible_ui_p(rest.get_mpz_t(), S[i]), "V-basis coefficient is not an integer");
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), S[i]);
    e.coeffs.push_back(std::move(rest));
  }
  return e;
}

WittVector from_vbasis(const VBasisExpansion& e) {
  const TruncationSet& S = e.S;
  if (e.coeffs.size() != S.size()) throw Error(Errc::ShapeMismatch, "one V-basis coefficient per element of S");
  const Ring& z = integers();
  std::vector<RingValue> g;
  g.reserve(S.size());
  for (std::size_t i = 0; i < S.size(); ++i) {
    mpz_class acc = 0;
    for (std::size_t j : S.divisor_indices(i)) acc += e.coeffs[j] * S[j];
    g.push_back(RingValue::from_integer(z, acc));
  }
  return from_ghost(GhostVector(S, z, std::move(g)));
}

WittVector v_basis_element(std::uint64_t n, const TruncationSet& S) {
  if (!S.contains(n)) throw Error(Errc::IndexOutsideS, std::to_string(n) + " is not in " + S.to_string());
  return verschiebung(n, WittVector::one(S.quotient(n), integers()), S);
}

StructureConstant vbasis_product(std::uint64_t m, std::uint64_t n, const TruncationSet& S) {
  if (m == 0 || n == 0) throw Error(Errc::InvalidArgument, "V-basis indices must be positive");
  const std::uint64_t c = gcd_u64(m, n);
  const std::uint64_t idx = m / c * n;
  if (!S.contains(idx))
    throw Error(Errc::IndexOutsideS, "V_" + std::to_string(m) + "(1)*V_" + std::to_string(n) + "(1) lands on index " +
                                         std::to_string(idx) + ", which is not in " + S.to_string());
  return {mpz_class(c), idx};
}

}  // namespace witt
