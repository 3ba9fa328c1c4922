#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace witt {

/// Sparse monomial: sorted (variable, exponent) pairs packed as var << 16 | exp.
/// Ordering is lexicographic on the dense exponent vector (variable 0 most
/// significant), which is a monomial order, so multiplication preserves it.
class Monomial {
 public:
  Monomial() = default;
  static Monomial var(std::uint32_t v, std::uint32_t exp = 1);

  std::size_t num_factors() const { return packed_.size(); }
  std::uint32_t var_at(std::size_t i) const { return packed_[i] >> 16; }
  std::uint32_t exp_at(std::size_t i) const { return packed_[i] & 0xFFFFu; }
  std::uint32_t exponent_of(std::uint32_t v) const;
  std::uint32_t total_degree() const;
  bool is_one() const { return packed_.empty(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Negative when a < b, 0 when equal, positive when a > b.
  friend int compare(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.packed_ == b.packed_; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return compare(a, b) < 0; }

  const std::vector<std::uint32_t>& packed() const { return packed_; }
  static Monomial from_pairs(std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs);

 private:
  std::vector<std::uint32_t> packed_;
};

/// Multivariate polynomial with arbitrary-precision integer coefficients.
/// Canonical form: terms sorted ascending by monomial, no zero coefficients.
class Poly {
 public:
  struct Term {
    Monomial mono;
    mpz_class coeff;
  };

  Poly() = default;
  explicit Poly(const mpz_class& c);
  static Poly var(std::uint32_t v);
  static Poly from_terms(std::vector<Term> terms);  // canonicalizes

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Constant term's coefficient when the polynomial is constant.
  bool is_constant() const;
  mpz_class constant_term() const;
  std::uint32_t degree_in(std::uint32_t v) const;
  std::uint32_t max_var_plus_one() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const mpz_class& c) const;
  Poly pow(std::uint64_t e) const;
  /// Divides every coefficient by d; returns false (leaving *out untouched) if
  /// some coefficient is not divisible.
  bool try_divexact(const mpz_class& d, Poly* out) const;
  Poly mod_coefficients(const mpz_class& m) const;
  /// Remainder modulo a monic polynomial in variable v (univariate reduction).
  Poly reduce_monic(const Poly& monic, std::uint32_t v) const;

  friend bool operator==(const Poly& a, const Poly& b);

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  std::vector<Term> terms_;
};

}  // namespace witt
