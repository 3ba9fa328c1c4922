#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <vector>

#include "witt/poly.hpp"
#include "witt/rings.hpp"

namespace witt {

/// Integer polynomials giving Witt sum, product and Frobenius coordinatewise.
///
/// Variables: x_d is variable 2(d-1), y_d is variable 2(d-1)+1. The sum and
/// product polynomials for index n involve only x_d, y_d with d | n; the
/// Frobenius polynomial for (r, n) involves x_d with d | rn.
///
/// Entries are built lazily by inverting the ghost map over Z[x, y] and cached
/// forever. Concurrent readers are fine; each entry is initialized exactly once.
class UniversalPolyTable {
 public:
  /// Process-wide table; its index limit comes from WITT_MAX_N (default 30).
  static UniversalPolyTable& global();

  explicit UniversalPolyTable(std::uint64_t max_n);
  UniversalPolyTable(const UniversalPolyTable&) = delete;
  UniversalPolyTable& operator=(const UniversalPolyTable&) = delete;

  std::uint64_t max_n() const { return max_n_; }

  const Poly& sum(std::uint64_t n);
  const Poly& product(std::uint64_t n);
  /// Coordinate n of F_r(x).
  const Poly& frobenius(std::uint64_t r, std::uint64_t n);

  std::size_t cached_entries() const;

  static std::uint32_t x_var(std::uint64_t d) { return static_cast<std::uint32_t>(2 * (d - 1)); }
  static std::uint32_t y_var(std::uint64_t d) { return static_cast<std::uint32_t>(2 * (d - 1) + 1); }
  /// gh_n of the generic vector (x_d) (or (y_d) when `y` is set).
  static Poly generic_ghost(std::uint64_t n, bool y);

 private:
  enum class Kind { Sum, Product, Frobenius };
  struct Entry {
    std::once_flag once;
    Poly poly;
  };
  using Key = std::tuple<Kind, std::uint64_t, std::uint64_t>;

  Entry& entry(Kind kind, std::uint64_t r, std::uint64_t n);
  void check_limit(std::uint64_t n) const;
  Poly build(Kind kind, std::uint64_t r, std::uint64_t n);

  std::uint64_t max_n_;
  mutable std::shared_mutex mutex_;
  std::map<Key, std::unique_ptr<Entry>> entries_;
};

/// Lazily computed powers of ring values bound to polynomial variables.
class PowerCache {
 public:
  explicit PowerCache(Ring ring) : ring_(std::move(ring)) {}
  void bind(std::uint32_t var, const RingValue& value);
  const RingValue& power(std::uint32_t var, std::uint32_t exp);
  const Ring& ring() const { return ring_; }

 private:
  Ring ring_;
  std::vector<std::vector<RingValue>> powers_;  // powers_[var][e] = value^e, e >= 0
};

/// Evaluates an integer polynomial at the bound values.
RingValue evaluate(const Poly& p, PowerCache& cache);

}  // namespace witt
