#include "witt/epsilon.hpp"

#include "witt/errors.hpp"
#include "witt/witt_core.hpp"

namespace witt {

void require_local_algebra(const Ring& R, std::uint64_t p) {
  if (!is_prime(p)) throw Error(Errc::InvalidArgument, std::to_string(p) + " is not prime");
  const bool ok = R->kind == RingKind::Rationals || (R->kind == RingKind::LocalIntegersAtP && R->prime == p);
  if (!ok)
    throw Error(Errc::WrongRing, "the idempotent decomposition at p=" + std::to_string(p) +
                                     " needs a Z_(p)-algebra (Z_(p) or Q), got " + R->to_string());
}

WittVector divide_by_integer(const WittVector& w, const mpz_class& k) {
  const GhostVector g = ghost(w);
  std::vector<RingValue> c;
  c.reserve(g.components().size());
  for (const auto& v : g.components()) {
    auto q = try_div_exact_by_int(v, k);
    if (!q) throw Error(Errc::NotGhostIntegral, "cannot divide by " + k.get_str() + " in " + w.ring()->to_string());
    c.push_back(std::move(*q));
  }
  return from_ghost(GhostVector(w.S(), w.ring(), std::move(c)));
}

namespace {

WittVector epsilon_one(const TruncationSet& S, std::uint64_t p, const Ring& R) {
  WittVector acc = WittVector::one(S, R);
  for (std::uint64_t l : S.elements()) {
    if (l == p || !is_prime(l)) continue;
    const WittVector v = verschiebung(l, WittVector::one(S.quotient(l), R), S);
    acc = mul(acc, sub(WittVector::one(S, R), divide_by_integer(v, l)));
  }
  return acc;
}

}  // namespace

WittVector epsilon(std::uint64_t n, const TruncationSet& S, std::uint64_t p, const Ring& R) {
  require_local_algebra(R, p);
  if (n == 0) throw Error(Errc::InvalidArgument, "idempotent index must be positive");
  if (n % p == 0) throw Error(Errc::NotCoprime, std::to_string(n) + " is not prime to " + std::to_string(p));
  const TruncationSet Sn = S.quotient(n);
  if (Sn.empty()) return WittVector::zero(S, R);
  if (n == 1) return epsilon_one(S, p, R);
  return divide_by_integer(verschiebung(n, epsilon_one(Sn, p, R), S), n);
}

EpsilonFamily epsilon_family(const TruncationSet& S, std::uint64_t p, const Ring& R) {
  require_local_algebra(R, p);
  EpsilonFamily fam{S, p, R, {}};
  for (std::uint64_t n : S.elements())
    if (n % p != 0) fam.idempotents.emplace(n, epsilon(n, S, p, R));
  return fam;
}

EpsilonLawReport check_epsilon_laws(const EpsilonFamily& fam) {
  EpsilonLawReport rep;
  const WittVector zero = WittVector::zero(fam.S, fam.ring);
  WittVector total = zero;
  for (auto it = fam.idempotents.begin(); it != fam.idempotents.end(); ++it) {
    const auto& [n, e] = *it;
    ++rep.checks;
    if (!(mul(e, e) == e)) rep.failures.push_back("eps_" + std::to_string(n) + " is not idempotent");
    for (auto jt = std::next(it); jt != fam.idempotents.end(); ++jt) {
      ++rep.checks;
      if (!(mul(e, jt->second) == zero))
        rep.failures.push_back("eps_" + std::to_string(n) + " * eps_" + std::to_string(jt->first) + " != 0");
    }
    total = add(total, e);
  }
  ++rep.checks;
  if (!(total == WittVector::one(fam.S, fam.ring))) rep.failures.push_back("idempotents do not sum to 1");
  return rep;
}

FrobeniusEpsilon frobenius_of_epsilon(std::uint64_t m, std::uint64_t n, const TruncationSet& S, std::uint64_t p,
                                      const Ring& R) {
  require_local_algebra(R, p);
  if (m == 0 || m % p == 0) throw Error(Errc::NotCoprime, std::to_string(m) + " is not prime to " + std::to_string(p));
  FrobeniusEpsilon out;
  out.value = frobenius(m, epsilon(n, S, p, R));
  const TruncationSet Sm = S.quotient(m);
  out.expected = n % m == 0 ? epsilon(n / m, Sm, p, R) : WittVector::zero(Sm, R);
  out.matches = out.value == out.expected;
  return out;
}

std::map<std::uint64_t, WittVector> decompose(const WittVector& w, std::uint64_t p) {
  require_local_algebra(w.ring(), p);
  std::map<std::uint64_t, WittVector> out;
  for (std::uint64_t n : w.S().elements()) {
    if (n % p == 0) continue;
    const TruncationSet Sn = w.S().quotient(n);
    out.emplace(n, restriction(frobenius(n, w), Sn.p_part(p)));
  }
  return out;
}

WittVector reassemble(const std::map<std::uint64_t, WittVector>& components, const TruncationSet& S,
                      std::uint64_t p, const Ring& R) {
  require_local_algebra(R, p);
  std::size_t expected = 0;
  WittVector acc = WittVector::zero(S, R);
  for (std::uint64_t n : S.elements()) {
    if (n % p != 0) ++expected;
  }
  if (components.size() != expected)
    throw Error(Errc::ShapeMismatch, "expected " + std::to_string(expected) + " components, got " +
                                         std::to_string(components.size()));
  for (const auto& [n, c] : components) {
    if (n % p == 0 || !S.contains(n))
      throw Error(Errc::ShapeMismatch, "unexpected component index " + std::to_string(n));
    const TruncationSet Sn = S.quotient(n);
    if (!(c.S() == Sn.p_part(p)) || !same_ring(c.ring(), R))
      throw Error(Errc::ShapeMismatch, "component " + std::to_string(n) + " must live over " +
                                           Sn.p_part(p).to_string() + " and " + R->to_string());
    const WittVector piece = mul(epsilon(1, Sn, p, R), zero_extend(c, Sn));
    acc = add(acc, divide_by_integer(verschiebung(n, piece, S), n));
  }
  return acc;
}

std::size_t predicted_component_count(const TruncationSet& S, std::uint64_t p) {
  std::size_t k = 0;
  for (std::uint64_t n : S.elements())
    if (n % p != 0) ++k;
  return k;
}

}  // namespace witt
