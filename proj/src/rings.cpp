#include "witt/rings.hpp"

#include "witt/errors.hpp"
#include "witt/truncation.hpp"

namespace witt {

bool RingDescriptor::torsion_free() const {
  switch (kind) {
    case RingKind::Integers:
    case RingKind::Rationals:
    case RingKind::LocalIntegersAtP:
    case RingKind::PolynomialOverZ:
      return true;
    case RingKind::IntegersModM:
      return false;
    case RingKind::QuotientPolynomial:
      return declared_torsion_free;
  }
  return false;
}

bool RingDescriptor::finite() const {
  return kind == RingKind::IntegersModM || (kind == RingKind::QuotientPolynomial && modulus != 0);
}

mpz_class RingDescriptor::cardinality() const {
  if (kind == RingKind::IntegersModM) return modulus;
  if (kind == RingKind::QuotientPolynomial && modulus != 0) {
    mpz_class c;
    mpz_pow_ui(c.get_mpz_t(), modulus.get_mpz_t(), relations.at(0).degree_in(0));
    return c;
  }
  throw Error(Errc::NotFinite, to_string() + " is not finite");
}

std::string RingDescriptor::to_string() const {
  switch (kind) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::IntegersModM: return "Z/" + modulus.get_str();
    case RingKind::LocalIntegersAtP: return "Z_(" + std::to_string(prime) + ")";
    case RingKind::PolynomialOverZ: {
      std::string s = "Z[";
      for (std::size_t i = 0; i < variables.size(); ++i) s += (i ? "," : "") + variables[i];
      return s + "]";
    }
    case RingKind::QuotientPolynomial: {
      std::string base = modulus == 0 ? "Z" : "Z/" + modulus.get_str();
      return base + "[" + variables.at(0) + "]/(" + relations.at(0).to_string(variables) + ")";
    }
  }
  return "?";
}

bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
  return a.kind == b.kind && a.modulus == b.modulus && a.prime == b.prime && a.variables == b.variables &&
         a.relations == b.relations && a.declared_torsion_free == b.declared_torsion_free;
}

Ring integers() {
  static const Ring r = [] {
    RingDescriptor d;
    d.kind = RingKind::Integers;
    return std::make_shared<const RingDescriptor>(d);
  }();
  return r;
}

Ring rationals() {
  static const Ring r = [] {
    RingDescriptor d;
    d.kind = RingKind::Rationals;
    return std::make_shared<const RingDescriptor>(d);
  }();
  return r;
}

Ring integers_mod(const mpz_class& m) {
  if (m < 2) throw Error(Errc::InvalidRing, "IntegersModM requires m >= 2, got " + m.get_str());
  RingDescriptor d;
  d.kind = RingKind::IntegersModM;
  d.modulus = m;
  return std::make_shared<RingDescriptor>(std::move(d));
}

Ring local_integers_at(std::uint64_t p) {
  if (!is_prime(p)) throw Error(Errc::InvalidRing, "LocalIntegersAtP requires a prime, got " + std::to_string(p));
  RingDescriptor d;
  d.kind = RingKind::LocalIntegersAtP;
  d.prime = p;
  return std::make_shared<RingDescriptor>(std::move(d));
}

Ring polynomials_over_z(std::vector<std::string> variables) {
  RingDescriptor d;
  d.kind = RingKind::PolynomialOverZ;
  d.variables = std::move(variables);
  return std::make_shared<RingDescriptor>(std::move(d));
}

Ring quotient_polynomial(std::string var, const Poly& relation, const mpz_class& modulus,
                         bool declared_torsion_free) {
  if (modulus != 0 && modulus < 2) throw Error(Errc::InvalidRing, "quotient base modulus must be >= 2");
  if (modulus != 0 && declared_torsion_free)
    throw Error(Errc::InvalidRing, "a quotient of Z/m cannot be torsion-free");
  if (relation.max_var_plus_one() > 1 || relation.degree_in(0) == 0)
    throw Error(Errc::InvalidRing, "quotient relation must be a univariate polynomial of positive degree");
  const std::uint32_t deg = relation.degree_in(0);
  if (relation.terms().back().mono.exponent_of(0) != deg || relation.terms().back().coeff != 1)
    throw Error(Errc::InvalidRing, "quotient relation must be monic");
  RingDescriptor d;
  d.kind = RingKind::QuotientPolynomial;
  d.variables = {std::move(var)};
  d.relations = {relation};
  d.modulus = modulus;
  d.declared_torsion_free = declared_torsion_free;
  return std::make_shared<RingDescriptor>(std::move(d));
}

bool same_ring(const Ring& a, const Ring& b) { return a == b || (a && b && *a == *b); }

namespace {

void require_same(const RingValue& a, const RingValue& b) {
  if (!same_ring(a.ring(), b.ring()))
    throw Error(Errc::DescriptorMismatch,
                "ring mismatch: " + a.ring()->to_string() + " vs " + b.ring()->to_string());
}

bool in_local_ring(const mpq_class& q, std::uint64_t p) {
  return mpz_fdiv_ui(q.get_den_mpz_t(), p) != 0;
}

}  // namespace

RingValue RingValue::make(const Ring& r, Payload p) {
  switch (r->kind) {
    case RingKind::Integers:
      return RingValue(r, std::move(p));
    case RingKind::IntegersModM: {
      mpz_class& v = std::get<mpz_class>(p);
      mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), r->modulus.get_mpz_t());
      return RingValue(r, std::move(p));
    }
    case RingKind::Rationals:
    case RingKind::LocalIntegersAtP:
      std::get<mpq_class>(p).canonicalize();
      return RingValue(r, std::move(p));
    case RingKind::PolynomialOverZ:
      return RingValue(r, std::move(p));
    case RingKind::QuotientPolynomial: {
      Poly q = std::get<Poly>(p).reduce_monic(r->relations[0], 0);
      if (r->modulus != 0) q = q.mod_coefficients(r->modulus);
      return RingValue(r, std::move(q));
    }
  }
  throw InternalError("unknown ring kind");
}

RingValue RingValue::zero(const Ring& r) { return from_integer(r, 0); }
RingValue RingValue::one(const Ring& r) { return from_integer(r, 1); }

RingValue RingValue::from_integer(const Ring& r, const mpz_class& n) {
  switch (r->kind) {
    case RingKind::Integers:
    case RingKind::IntegersModM:
      return make(r, n);
    case RingKind::Rationals:
    case RingKind::LocalIntegersAtP:
      return make(r, mpq_class(n));
    case RingKind::PolynomialOverZ:
    case RingKind::QuotientPolynomial:
      return make(r, Poly(n));
  }
  throw InternalError("unknown ring kind");
}

RingValue RingValue::from_rational(const Ring& r, const mpq_class& q0) {
  mpq_class q = q0;
  q.canonicalize();
  if (r->kind == RingKind::Rationals) return make(r, q);
  if (r->kind == RingKind::LocalIntegersAtP) {
    if (!in_local_ring(q, r->prime))
      throw Error(Errc::InvalidArgument, q.get_str() + " is not in " + r->to_string());
    return make(r, q);
  }
  if (q.get_den() == 1) return from_integer(r, q.get_num());
  throw Error(Errc::InvalidArgument, q.get_str() + " is not in " + r->to_string());
}

RingValue RingValue::from_poly(const Ring& r, const Poly& p) {
  if (r->kind != RingKind::PolynomialOverZ && r->kind != RingKind::QuotientPolynomial) {
    if (p.is_constant()) return from_integer(r, p.constant_term());
    throw Error(Errc::InvalidArgument, "polynomial payload for " + r->to_string());
  }
  if (p.max_var_plus_one() > r->variables.size())
    throw Error(Errc::InvalidArgument, "polynomial uses more variables than " + r->to_string());
  return make(r, p);
}

bool RingValue::is_zero() const {
  return std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Poly>) return v.is_zero();
        else return v == 0;
      },
      payload_);
}

bool RingValue::is_one() const { return *this == one(ring_); }

RingValue operator+(const RingValue& a, const RingValue& b) {
  require_same(a, b);
  return std::visit(
      [&](const auto& x) -> RingValue {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.payload_);
        if constexpr (std::is_same_v<T, Poly>) return RingValue::make(a.ring_, x + y);
        else return RingValue::make(a.ring_, T(x + y));
      },
      a.payload_);
}

RingValue operator-(const RingValue& a, const RingValue& b) {
  require_same(a, b);
  return std::visit(
      [&](const auto& x) -> RingValue {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.payload_);
        if constexpr (std::is_same_v<T, Poly>) return RingValue::make(a.ring_, x - y);
        else return RingValue::make(a.ring_, T(x - y));
      },
      a.payload_);
}

RingValue operator*(const RingValue& a, const RingValue& b) {
  require_same(a, b);
  return std::visit(
      [&](const auto& x) -> RingValue {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.payload_);
        if constexpr (std::is_same_v<T, Poly>) return RingValue::make(a.ring_, x * y);
        else return RingValue::make(a.ring_, T(x * y));
      },
      a.payload_);
}

RingValue RingValue::operator-() const {
  return std::visit(
      [&](const auto& x) -> RingValue {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Poly>) return RingValue::make(ring_, -x);
        else return RingValue::make(ring_, T(-x));
      },
      payload_);
}

RingValue RingValue::times_integer(const mpz_class& n) const {
  return std::visit(
      [&](const auto& x) -> RingValue {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Poly>) return RingValue::make(ring_, x.scaled(n));
        else if constexpr (std::is_same_v<T, mpq_class>) return RingValue::make(ring_, mpq_class(x * mpq_class(n)));
        else return RingValue::make(ring_, mpz_class(x * n));
      },
      payload_);
}

RingValue RingValue::pow(std::uint64_t e) const {
  if (ring_->kind == RingKind::Integers) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), as_integer().get_mpz_t(), e);
    return RingValue(ring_, std::move(r));
  }
  if (ring_->kind == RingKind::IntegersModM) {
    mpz_class r;
    mpz_powm_ui(r.get_mpz_t(), as_integer().get_mpz_t(), e, ring_->modulus.get_mpz_t());
    return RingValue(ring_, std::move(r));
  }
  if (ring_->kind == RingKind::Rationals || ring_->kind == RingKind::LocalIntegersAtP) {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), as_rational().get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), as_rational().get_den_mpz_t(), e);
    return RingValue(ring_, std::move(r));
  }
  RingValue result = one(ring_);
  RingValue base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool operator==(const RingValue& a, const RingValue& b) {
  return same_ring(a.ring_, b.ring_) && a.payload_ == b.payload_;
}

std::string RingValue::to_string() const {
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Poly>) return x.to_string(ring_->variables);
        else return x.get_str();
      },
      payload_);
}

std::optional<RingValue> try_div_exact_by_int(const RingValue& x, const mpz_class& n) {
  if (!x.ring()->torsion_free())
    throw Error(Errc::InvalidRing, "division by an integer requires a torsion-free ring, got " +
                                       x.ring()->to_string());
  if (n == 0) throw Error(Errc::InvalidArgument, "division by zero");
  const Ring& r = x.ring();
  switch (r->kind) {
    case RingKind::Integers: {
      if (!mpz_divisible_p(x.as_integer().get_mpz_t(), n.get_mpz_t())) return std::nullopt;
      mpz_class q;
      mpz_divexact(q.get_mpz_t(), x.as_integer().get_mpz_t(), n.get_mpz_t());
      return RingValue::from_integer(r, q);
    }
    case RingKind::Rationals:
      return RingValue::from_rational(r, x.as_rational() / mpq_class(n));
    case RingKind::LocalIntegersAtP: {
      mpq_class q = x.as_rational() / mpq_class(n);
      q.canonicalize();
      if (!in_local_ring(q, r->prime)) return std::nullopt;
      return RingValue::from_rational(r, q);
    }
    case RingKind::PolynomialOverZ:
    case RingKind::QuotientPolynomial: {
      Poly q;
      if (!x.as_poly().try_divexact(n, &q)) return std::nullopt;
      return RingValue::from_poly(r, q);
    }
    case RingKind::IntegersModM:
      break;
  }
  throw InternalError("unreachable in try_div_exact_by_int");
}

RingValue div_exact_by_int(const RingValue& x, const mpz_class& n) {
  auto y = try_div_exact_by_int(x, n);
  if (!y)
    throw Error(Errc::NotDivisible, x.to_string() + " is not divisible by " + n.get_str() + " in " +
                                        x.ring()->to_string());
  return *y;
}

RingValue map_to(const RingValue& x, const Ring& target) {
  const Ring& src = x.ring();
  if (same_ring(src, target)) return x;
  switch (src->kind) {
    case RingKind::Integers:
      return RingValue::from_integer(target, x.as_integer());
    case RingKind::IntegersModM:
      if (target->kind == RingKind::IntegersModM &&
          mpz_divisible_p(src->modulus.get_mpz_t(), target->modulus.get_mpz_t()))
        return RingValue::from_integer(target, x.as_integer());
      break;
    case RingKind::Rationals:
    case RingKind::LocalIntegersAtP:
      if (target->kind == RingKind::Rationals || target->kind == RingKind::LocalIntegersAtP ||
          target->kind == RingKind::Integers)
        return RingValue::from_rational(target, x.as_rational());
      break;
    default:
      break;
  }
  throw Error(Errc::WrongRing, "no canonical map " + src->to_string() + " -> " + target->to_string());
}

std::vector<RingValue> enumerate(const Ring& r) {
  if (!r->finite()) throw Error(Errc::NotFinite, r->to_string() + " is not finite");
  const mpz_class card = r->cardinality();
  if (card > (1u << 24)) throw Error(Errc::TooLarge, r->to_string() + " has too many elements to enumerate");
  const unsigned long n = card.get_ui();
  std::vector<RingValue> out;
  out.reserve(n);
  if (r->kind == RingKind::IntegersModM) {
    for (unsigned long i = 0; i < n; ++i) out.push_back(RingValue::from_integer(r, i));
    return out;
  }
  const unsigned long m = r->modulus.get_ui();
  const std::uint32_t deg = r->relations[0].degree_in(0);
  for (unsigned long i = 0; i < n; ++i) {
    std::vector<Poly::Term> terms;
    unsigned long rest = i;
    for (std::uint32_t k = 0; k < deg; ++k, rest /= m)
      if (rest % m) terms.push_back({Monomial::var(0, k), mpz_class(rest % m)});
    out.push_back(RingValue::from_poly(r, Poly::from_terms(std::move(terms))));
  }
  return out;
}

std::uint64_t element_index(const RingValue& x) {
  const Ring& r = x.ring();
  if (!r->finite()) throw Error(Errc::NotFinite, r->to_string() + " is not finite");
  if (r->kind == RingKind::IntegersModM) return x.as_integer().get_ui();
  const std::uint64_t m = r->modulus.get_ui();
  std::uint64_t idx = 0, scale = 1;
  const std::uint32_t deg = r->relations[0].degree_in(0);
  std::vector<std::uint64_t> digits(deg, 0);
  for (const auto& t : x.as_poly().terms()) digits[t.mono.exponent_of(0)] = t.coeff.get_ui();
  for (std::uint32_t k = 0; k < deg; ++k, scale *= m) idx += digits[k] * scale;
  return idx;
}

}  // namespace witt
