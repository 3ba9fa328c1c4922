#include "witt/universal_table.hpp"

#include <cstdlib>
#include <string>

#include "witt/errors.hpp"
#include "witt/truncation.hpp"

namespace witt {

namespace {

std::uint64_t max_n_from_env() {
  if (const char* v = std::getenv("WITT_MAX_N")) {
    try {
      const long long n = std::stoll(v);
      if (n > 0) return static_cast<std::uint64_t>(n);
    } catch (const std::exception&) {
    }
  }
  return 30;
}

}  // namespace

UniversalPolyTable& UniversalPolyTable::global() {
  static UniversalPolyTable table(max_n_from_env());
  return table;
}

UniversalPolyTable::UniversalPolyTable(std::uint64_t max_n) : max_n_(max_n) {}

void UniversalPolyTable::check_limit(std::uint64_t n) const {
  if (n == 0) throw Error(Errc::InvalidArgument, "table index must be positive");
  if (n > max_n_)
    throw Error(Errc::TableLimit, "universal polynomial index " + std::to_string(n) + " exceeds the limit " +
                                      std::to_string(max_n_) + " (raise WITT_MAX_N to allow it)");
}

std::size_t UniversalPolyTable::cached_entries() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

UniversalPolyTable::Entry& UniversalPolyTable::entry(Kind kind, std::uint64_t r, std::uint64_t n) {
  const Key key{kind, r, n};
  {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(key);
    if (it != entries_.end()) return *it->second;
  }
  std::unique_lock lock(mutex_);
  auto& slot = entries_[key];
  if (!slot) slot = std::make_unique<Entry>();
  return *slot;
}

Poly UniversalPolyTable::generic_ghost(std::uint64_t n, bool y) {
  Poly g;
  for (std::uint64_t d : divisors_of(n)) {
    const std::uint32_t v = y ? y_var(d) : x_var(d);
    Poly term = Poly::from_terms({{Monomial::var(v, static_cast<std::uint32_t>(n / d)), mpz_class(d)}});
    g = g + term;
  }
  return g;
}

Poly UniversalPolyTable::build(Kind kind, std::uint64_t r, std::uint64_t n) {
  Poly target;
  switch (kind) {
    case Kind::Sum: target = generic_ghost(n, false) + generic_ghost(n, true); break;
    case Kind::Product: target = generic_ghost(n, false) * generic_ghost(n, true); break;
    case Kind::Frobenius: target = generic_ghost(r * n, false); break;
  }
  const auto divs = divisors_of(n);
  for (std::size_t k = 0; k + 1 < divs.size(); ++k) {
    const std::uint64_t d = divs[k];
    const Poly& lower = kind == Kind::Sum ? sum(d) : kind == Kind::Product ? product(d) : frobenius(r, d);
    target = target - lower.pow(n / d).scaled(mpz_class(d));
  }
  Poly result;
  if (!target.try_divexact(mpz_class(n), &result))
    throw InternalError("universal polynomial for index " + std::to_string(n) + " has a non-integral coefficient");
  return result;
}

const Poly& UniversalPolyTable::sum(std::uint64_t n) {
  check_limit(n);
  Entry& e = entry(Kind::Sum, 0, n);
  std::call_once(e.once, [&] { e.poly = build(Kind::Sum, 0, n); });
  return e.poly;
}

const Poly& UniversalPolyTable::product(std::uint64_t n) {
  check_limit(n);
  Entry& e = entry(Kind::Product, 0, n);
  std::call_once(e.once, [&] { e.poly = build(Kind::Product, 0, n); });
  return e.poly;
}

const Poly& UniversalPolyTable::frobenius(std::uint64_t r, std::uint64_t n) {
  if (r == 0) throw Error(Errc::InvalidArgument, "Frobenius index must be positive");
  check_limit(r * n);
  Entry& e = entry(Kind::Frobenius, r, n);
  std::call_once(e.once, [&] { e.poly = build(Kind::Frobenius, r, n); });
  return e.poly;
}

void PowerCache::bind(std::uint32_t var, const RingValue& value) {
  if (powers_.size() <= var) powers_.resize(var + 1);
  powers_[var].clear();
  powers_[var].push_back(RingValue::one(ring_));
  powers_[var].push_back(value);
}

const RingValue& PowerCache::power(std::uint32_t var, std::uint32_t exp) {
  WITT_ASSERT(var < powers_.size() && !powers_[var].empty(), "polynomial variable has no bound value");
  auto& p = powers_[var];
  while (p.size() <= exp) p.push_back(p.back() * p[1]);
  return p[exp];
}

RingValue evaluate(const Poly& poly, PowerCache& cache) {
  RingValue acc = RingValue::zero(cache.ring());
  for (const auto& t : poly.terms()) {
    RingValue m = RingValue::from_integer(cache.ring(), t.coeff);
    if (m.is_zero()) continue;
    for (std::size_t i = 0; i < t.mono.num_factors() && !m.is_zero(); ++i)
      m *= cache.power(t.mono.var_at(i), t.mono.exp_at(i));
    acc += m;
  }
  return acc;
}

}  // namespace witt
