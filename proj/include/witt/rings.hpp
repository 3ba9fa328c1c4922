#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "witt/poly.hpp"

namespace witt {

enum class RingKind {
  Integers,
  Rationals,
  IntegersModM,
  LocalIntegersAtP,
  PolynomialOverZ,
  QuotientPolynomial,
};

/// Describes one of the supported exact coefficient rings.
///
/// QuotientPolynomial is Base[x]/(f) for a single variable and a single monic
/// relation f, with Base either Z or Z/m (`modulus` nonzero). Its
/// torsion-freeness is declared by the caller, not proven.
struct RingDescriptor {
  RingKind kind = RingKind::Integers;
  mpz_class modulus = 0;       // IntegersModM, or QuotientPolynomial base Z/m (0 means base Z)
  std::uint64_t prime = 0;     // LocalIntegersAtP
  std::vector<std::string> variables;
  std::vector<Poly> relations;  // QuotientPolynomial: exactly one monic relation in variable 0
  bool declared_torsion_free = false;

  bool torsion_free() const;
  bool finite() const;
  /// Number of elements; only meaningful when finite().
  mpz_class cardinality() const;
  std::string to_string() const;

  friend bool operator==(const RingDescriptor& a, const RingDescriptor& b);
};

using Ring = std::shared_ptr<const RingDescriptor>;

Ring integers();
Ring rationals();
Ring integers_mod(const mpz_class& m);
Ring local_integers_at(std::uint64_t p);
Ring polynomials_over_z(std::vector<std::string> variables);
/// (Z or Z/modulus)[var]/(relation). `relation` must be monic in variable 0.
Ring quotient_polynomial(std::string var, const Poly& relation, const mpz_class& modulus,
                         bool declared_torsion_free);

bool same_ring(const Ring& a, const Ring& b);

/// An element of a coefficient ring, always in canonical form.
class RingValue {
 public:
  using Payload = std::variant<mpz_class, mpq_class, Poly>;

  RingValue() = default;
  static RingValue zero(const Ring& r);
  static RingValue one(const Ring& r);
  static RingValue from_integer(const Ring& r, const mpz_class& n);
  /// Rationals and LocalIntegersAtP only; the latter rejects denominators divisible by p.
  static RingValue from_rational(const Ring& r, const mpq_class& q);
  static RingValue from_poly(const Ring& r, const Poly& p);

  const Ring& ring() const { return ring_; }
  const Payload& payload() const { return payload_; }
  const mpz_class& as_integer() const { return std::get<mpz_class>(payload_); }
  const mpq_class& as_rational() const { return std::get<mpq_class>(payload_); }
  const Poly& as_poly() const { return std::get<Poly>(payload_); }

  bool is_zero() const;
  bool is_one() const;

  friend RingValue operator+(const RingValue& a, const RingValue& b);
  friend RingValue operator-(const RingValue& a, const RingValue& b);
  friend RingValue operator*(const RingValue& a, const RingValue& b);
  RingValue operator-() const;
  RingValue& operator+=(const RingValue& b) { return *this = *this + b; }
  RingValue& operator-=(const RingValue& b) { return *this = *this - b; }
  RingValue& operator*=(const RingValue& b) { return *this = *this * b; }
  RingValue times_integer(const mpz_class& n) const;
  RingValue pow(std::uint64_t e) const;
  friend bool operator==(const RingValue& a, const RingValue& b);

  std::string to_string() const;

 private:
  RingValue(Ring r, Payload p) : ring_(std::move(r)), payload_(std::move(p)) {}
  static RingValue make(const Ring& r, Payload p);  // canonicalizes
  Ring ring_;
  Payload payload_;
};

/// Returns y with n*y = x. Requires a torsion-free ring (InvalidRing otherwise);
/// throws NotDivisible when no such y exists.
RingValue div_exact_by_int(const RingValue& x, const mpz_class& n);
/// Non-throwing variant of div_exact_by_int for torsion-free rings.
std::optional<RingValue> try_div_exact_by_int(const RingValue& x, const mpz_class& n);

/// Image of x under the canonical ring map into `target`. Supported: Z to any
/// ring, Z/m to Z/d for d | m, Z_(p) to Q, and Q or Z_(p) to Z_(p) when the value lies there.
RingValue map_to(const RingValue& x, const Ring& target);

/// Every element of a finite ring, in a fixed order (index order of `element_index`).
std::vector<RingValue> enumerate(const Ring& r);
/// Position of x in enumerate(x.ring()).
std::uint64_t element_index(const RingValue& x);

}  // namespace witt
