#include "witt/truncation.hpp"

#include <algorithm>
#include <numeric>

#include "witt/errors.hpp"

namespace witt {

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

TruncationSet::TruncationSet() : TruncationSet(std::vector<std::uint64_t>{}) {}

TruncationSet::TruncationSet(std::vector<std::uint64_t> sorted_closed) {
  auto data = std::make_shared<Data>();
  data->elements = std::move(sorted_closed);
  data->divisors.resize(data->elements.size());
  const auto& el = data->elements;
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::uint64_t d : divisors_of(el[i])) {
      auto it = std::lower_bound(el.begin(), el.end(), d);
      data->divisors[i].push_back(static_cast<std::size_t>(it - el.begin()));
    }
  }
  data_ = std::move(data);
}

TruncationSet TruncationSet::validate(std::span<const std::uint64_t> raw) {
  std::vector<std::uint64_t> v(raw.begin(), raw.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (!v.empty() && v.front() == 0)
    throw Error(Errc::InvalidArgument, "truncation sets contain positive integers only");
  for (std::uint64_t n : v) {
    for (std::uint64_t d : divisors_of(n)) {
      if (!std::binary_search(v.begin(), v.end(), d)) throw NotDivisorClosedError(n, d);
    }
  }
  return TruncationSet(std::move(v));
}

TruncationSet TruncationSet::divisor_closure(std::span<const std::uint64_t> seed) {
  std::vector<std::uint64_t> v;
  for (std::uint64_t n : seed) {
    if (n == 0) throw Error(Errc::InvalidArgument, "truncation sets contain positive integers only");
    for (std::uint64_t d : divisors_of(n)) v.push_back(d);
  }
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return TruncationSet(std::move(v));
}

TruncationSet TruncationSet::range(std::uint64_t n) {
  std::vector<std::uint64_t> v(n);
  std::iota(v.begin(), v.end(), 1);
  return TruncationSet(std::move(v));
}

std::uint64_t TruncationSet::max() const {
  if (empty()) throw Error(Errc::InvalidArgument, "empty truncation set has no maximum");
  return data_->elements.back();
}

std::optional<std::size_t> TruncationSet::index_of(std::uint64_t n) const {
  const auto& el = data_->elements;
  auto it = std::lower_bound(el.begin(), el.end(), n);
  if (it == el.end() || *it != n) return std::nullopt;
  return static_cast<std::size_t>(it - el.begin());
}

TruncationSet TruncationSet::quotient(std::uint64_t n) const {
  if (n == 0) throw Error(Errc::InvalidArgument, "quotient by zero");
  if (n == 1) return *this;
  std::vector<std::uint64_t> v;
  for (std::uint64_t s : elements())
    if (contains(s * n)) v.push_back(s);
  return TruncationSet(std::move(v));
}

TruncationSet TruncationSet::p_part(std::uint64_t p) const {
  if (!is_prime(p)) throw Error(Errc::InvalidArgument, std::to_string(p) + " is not prime");
  std::vector<std::uint64_t> v;
  for (std::uint64_t s : elements())
    if (is_power_of(s, p)) v.push_back(s);
  return TruncationSet(std::move(v));
}

TruncationSet TruncationSet::without_multiples_of(std::uint64_t n) const {
  if (n == 0) throw Error(Errc::InvalidArgument, "multiples of zero");
  std::vector<std::uint64_t> v;
  for (std::uint64_t s : elements())
    if (s % n != 0) v.push_back(s);
  return TruncationSet(std::move(v));
}

bool TruncationSet::is_subset_of(const TruncationSet& other) const {
  return std::includes(other.elements().begin(), other.elements().end(), elements().begin(),
                       elements().end());
}

bool TruncationSet::is_p_typical(std::uint64_t p) const {
  return std::all_of(elements().begin(), elements().end(),
                     [p](std::uint64_t s) { return is_power_of(s, p); });
}

std::string TruncationSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out += ",";
    out += std::to_string(elements()[i]);
  }
  return out + "}";
}

std::vector<TruncationSet> sub_truncation_sets(const TruncationSet& Q) {
  // Grow closed sets element by element in increasing order; a divisor-closed
  // subset is determined by which elements it keeps, and an element can be
  // kept only if all its proper divisors were kept.
  std::vector<std::vector<std::uint64_t>> acc{{}};
  for (std::size_t i = 0; i < Q.size(); ++i) {
    const std::uint64_t s = Q[i];
    const auto divs = divisors_of(s);
    std::vector<std::vector<std::uint64_t>> next;
    next.reserve(acc.size() * 2);
    for (auto& cur : acc) {
      bool ok = true;
      for (std::size_t k = 0; k + 1 < divs.size(); ++k)
        if (!std::binary_search(cur.begin(), cur.end(), divs[k])) ok = false;
      if (ok) {
        auto with = cur;
        with.push_back(s);
        next.push_back(std::move(with));
      }
      next.push_back(std::move(cur));
    }
    acc = std::move(next);
  }
  std::vector<TruncationSet> out;
  for (auto& v : acc)
    if (!v.empty()) out.push_back(TruncationSet::validate(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace witt
