#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace witt {

/// Returns the positive divisors of n in increasing order.
std::vector<std::uint64_t> divisors_of(std::uint64_t n);
bool is_prime(std::uint64_t n);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
/// Distinct prime factors of n in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/// True when n is a power p^i, i >= 0.
bool is_power_of(std::uint64_t n, std::uint64_t p);

/// A finite set of positive integers closed under taking divisors.
///
/// Elements are kept sorted and deduplicated so equality is structural. The
/// representation is shared, which makes copies cheap; the value is immutable.
class TruncationSet {
 public:
  TruncationSet();

  /// Checks divisor-closedness. Throws NotDivisorClosedError naming the
  /// smallest witness and its smallest missing divisor.
  static TruncationSet validate(std::span<const std::uint64_t> raw);
  static TruncationSet divisor_closure(std::span<const std::uint64_t> seed);
  /// divisor_closure({1, ..., n}).
  static TruncationSet range(std::uint64_t n);

  const std::vector<std::uint64_t>& elements() const { return data_->elements; }
  std::size_t size() const { return data_->elements.size(); }
  bool empty() const { return data_->elements.empty(); }
  std::uint64_t max() const;
  std::uint64_t operator[](std::size_t i) const { return data_->elements[i]; }

  bool contains(std::uint64_t n) const { return index_of(n).has_value(); }
  std::optional<std::size_t> index_of(std::uint64_t n) const;
  /// Indices of the divisors of elements()[i], in increasing order (the last is i).
  std::span<const std::size_t> divisor_indices(std::size_t i) const { return data_->divisors[i]; }

  /// S/n = { s : n*s in S }.
  TruncationSet quotient(std::uint64_t n) const;
  /// S_p = elements that are powers of p (including 1).
  TruncationSet p_part(std::uint64_t p) const;
  /// S \ { s : n | s }.
  TruncationSet without_multiples_of(std::uint64_t n) const;
  bool is_subset_of(const TruncationSet& other) const;
  bool is_p_typical(std::uint64_t p) const;

  std::string to_string() const;

  friend bool operator==(const TruncationSet& a, const TruncationSet& b) {
    return a.data_ == b.data_ || a.data_->elements == b.data_->elements;
  }
  friend std::strong_ordering operator<=>(const TruncationSet& a, const TruncationSet& b) {
    return a.data_->elements <=> b.data_->elements;
  }

 private:
  struct Data {
    std::vector<std::uint64_t> elements;
    std::vector<std::vector<std::size_t>> divisors;
  };
  explicit TruncationSet(std::vector<std::uint64_t> sorted_closed);
  std::shared_ptr<const Data> data_;
};

/// All nonempty truncation sets contained in Q.
std::vector<TruncationSet> sub_truncation_sets(const TruncationSet& Q);

}  // namespace witt
