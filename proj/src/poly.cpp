#include "witt/poly.hpp"

#include <algorithm>

#include "witt/errors.hpp"

namespace witt {

namespace {
constexpr std::uint32_t kExpMask = 0xFFFFu;
constexpr std::uint32_t pack(std::uint32_t v, std::uint32_t e) { return (v << 16) | e; }
}  // namespace

Monomial Monomial::var(std::uint32_t v, std::uint32_t exp) {
  Monomial m;
  if (exp == 0) return m;
  WITT_ASSERT(exp <= kExpMask && v <= kExpMask, "monomial exponent or variable out of range");
  m.packed_.push_back(pack(v, exp));
  return m;
}

Monomial Monomial::from_pairs(std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  Monomial m;
  for (auto [v, e] : pairs) {
    if (e == 0) continue;
    if (!m.packed_.empty() && m.var_at(m.packed_.size() - 1) == v) {
      std::uint32_t sum = m.exp_at(m.packed_.size() - 1) + e;
      WITT_ASSERT(sum <= kExpMask, "monomial exponent overflow");
      m.packed_.back() = pack(v, sum);
    } else {
      WITT_ASSERT(e <= kExpMask && v <= kExpMask, "monomial exponent or variable out of range");
      m.packed_.push_back(pack(v, e));
    }
  }
  return m;
}

std::uint32_t Monomial::exponent_of(std::uint32_t v) const {
  for (std::size_t i = 0; i < packed_.size(); ++i)
    if (var_at(i) == v) return exp_at(i);
  return 0;
}

std::uint32_t Monomial::total_degree() const {
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < packed_.size(); ++i) d += exp_at(i);
  return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.packed_.reserve(a.packed_.size() + b.packed_.size());
  std::size_t i = 0, j = 0;
  while (i < a.packed_.size() && j < b.packed_.size()) {
    const std::uint32_t va = a.var_at(i), vb = b.var_at(j);
    if (va == vb) {
      const std::uint32_t e = a.exp_at(i) + b.exp_at(j);
      WITT_ASSERT(e <= kExpMask, "monomial exponent overflow");
      r.packed_.push_back(pack(va, e));
      ++i;
      ++j;
    } else if (va < vb) {
      r.packed_.push_back(a.packed_[i++]);
    } else {
      r.packed_.push_back(b.packed_[j++]);
    }
  }
  while (i < a.packed_.size()) r.packed_.push_back(a.packed_[i++]);
  while (j < b.packed_.size()) r.packed_.push_back(b.packed_[j++]);
  return r;
}

int compare(const Monomial& a, const Monomial& b) {
  std::size_t i = 0, j = 0;
  const std::size_t na = a.packed_.size(), nb = b.packed_.size();
  while (true) {
    if (i == na && j == nb) return 0;
    if (i == na) return -1;
    if (j == nb) return 1;
    const std::uint32_t va = a.var_at(i), vb = b.var_at(j);
    if (va == vb) {
      const std::uint32_t ea = a.exp_at(i), eb = b.exp_at(j);
      if (ea != eb) return ea < eb ? -1 : 1;
      ++i;
      ++j;
    } else {
      // The side with the smaller variable index has a positive exponent where
      // the other has zero.
      return va < vb ? 1 : -1;
    }
  }
}

Poly::Poly(const mpz_class& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

Poly Poly::var(std::uint32_t v) {
  Poly p;
  p.terms_.push_back({Monomial::var(v), mpz_class(1)});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.mono < y.mono; });
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

mpz_class Poly::constant_term() const {
  if (!terms_.empty() && terms_.front().mono.is_one()) return terms_.front().coeff;
  return 0;
}

std::uint32_t Poly::degree_in(std::uint32_t v) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent_of(v));
  return d;
}

std::uint32_t Poly::max_var_plus_one() const {
  std::uint32_t m = 0;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < t.mono.num_factors(); ++i) m = std::max(m, t.mono.var_at(i) + 1);
  return m;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// Merges two canonical term lists, combining equal monomials.
std::vector<Poly::Term> merge_terms(std::vector<Poly::Term> a, std::vector<Poly::Term> b, bool negate_b) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) c = 1;
    else if (j == b.size()) c = -1;
    else c = compare(a[i].mono, b[j].mono);
    if (c < 0) {
      out.push_back(std::move(a[i++]));
    } else if (c > 0) {
      out.push_back(std::move(b[j++]));
      if (negate_b) out.back().coeff = -out.back().coeff;
    } else {
      Poly::Term t = std::move(a[i++]);
      if (negate_b) t.coeff -= b[j++].coeff;
      else t.coeff += b[j++].coeff;
      if (t.coeff != 0) out.push_back(std::move(t));
    }
  }
  return out;
}

std::vector<Poly::Term> mul_range(const std::vector<Poly::Term>& a, std::size_t lo, std::size_t hi,
                                  const std::vector<Poly::Term>& b) {
  if (hi - lo == 1) {
    std::vector<Poly::Term> out;
    out.reserve(b.size());
    for (const auto& t : b) out.push_back({a[lo].mono * t.mono, a[lo].coeff * t.coeff});
    return out;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return merge_terms(mul_range(a, lo, mid, b), mul_range(a, mid, hi, b), false);
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.terms_ = merge_terms(a.terms_, b.terms_, false);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r;
  r.terms_ = merge_terms(a.terms_, b.terms_, true);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  const Poly& big = a.size() >= b.size() ? a : b;
  const Poly& small = a.size() >= b.size() ? b : a;
  r.terms_ = mul_range(small.terms_, 0, small.terms_.size(), big.terms_);
  return r;
}

Poly Poly::scaled(const mpz_class& c) const {
  if (c == 0) return Poly{};
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Poly Poly::pow(std::uint64_t e) const {
  Poly result(mpz_class(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool Poly::try_divexact(const mpz_class& d, Poly* out) const {
  for (const auto& t : terms_)
    if (!mpz_divisible_p(t.coeff.get_mpz_t(), d.get_mpz_t())) return false;
  Poly r = *this;
  for (auto& t : r.terms_) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), d.get_mpz_t());
  *out = std::move(r);
  return true;
}

Poly Poly::mod_coefficients(const mpz_class& m) const {
  Poly r;
  for (const auto& t : terms_) {
    mpz_class c;
    mpz_fdiv_r(c.get_mpz_t(), t.coeff.get_mpz_t(), m.get_mpz_t());
    if (c != 0) r.terms_.push_back({t.mono, c});
  }
  return r;
}

Poly Poly::reduce_monic(const Poly& monic, std::uint32_t v) const {
  const std::uint32_t deg = monic.degree_in(v);
  WITT_ASSERT(deg > 0, "reduction modulus must have positive degree");
  auto dense = [v](const Poly& p) {
    std::vector<mpz_class> c(p.degree_in(v) + 1);
    for (const auto& t : p.terms_) {
      WITT_ASSERT(t.mono.num_factors() == 0 || (t.mono.num_factors() == 1 && t.mono.var_at(0) == v),
                  "univariate reduction applied to a multivariate polynomial");
      c[t.mono.exponent_of(v)] += t.coeff;
    }
    return c;
  };
  std::vector<mpz_class> f = dense(monic);
  WITT_ASSERT(f.back() == 1, "reduction modulus must be monic");
  std::vector<mpz_class> c = dense(*this);
  for (std::size_t k = c.size(); k-- > deg;) {
    if (c[k] == 0) continue;
    const mpz_class lead = c[k];
    for (std::size_t i = 0; i <= deg; ++i) c[k - deg + i] -= lead * f[i];
  }
  std::vector<Term> terms;
  for (std::size_t k = 0; k < std::min<std::size_t>(c.size(), deg); ++k)
    if (c[k] != 0) terms.push_back({Monomial::var(v, static_cast<std::uint32_t>(k)), c[k]});
  return from_terms(std::move(terms));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  // Print the largest monomial first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& t = *it;
    std::string c = t.coeff.get_str();
    if (!out.empty()) {
      if (c[0] == '-') {
        out += " - ";
        c = c.substr(1);
      } else {
        out += " + ";
      }
    }
    std::string m;
    for (std::size_t i = 0; i < t.mono.num_factors(); ++i) {
      const auto v = t.mono.var_at(i);
      if (!m.empty()) m += "*";
      m += v < names.size() ? names[v] : "v" + std::to_string(v);
      if (t.mono.exp_at(i) > 1) m += "^" + std::to_string(t.mono.exp_at(i));
    }
    if (m.empty()) out += c;
    else if (c == "1") out += m;
    else if (c == "-1") out += "-" + m;
    else out += c + "*" + m;
  }
  return out;
}

}  // namespace witt
