#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "witt/rings.hpp"
#include "witt/truncation.hpp"

namespace witt {

/// An element (a_s)_{s in S} of W_S(A). coords()[i] is the coordinate at S[i].
class WittVector {
 public:
  WittVector() = default;
  WittVector(TruncationSet S, Ring ring, std::vector<RingValue> coords);

  static WittVector zero(const TruncationSet& S, const Ring& ring);
  static WittVector one(const TruncationSet& S, const Ring& ring);

  const TruncationSet& S() const { return S_; }
  const Ring& ring() const { return ring_; }
  const std::vector<RingValue>& coords() const { return coords_; }
  /// Coordinate at index n in S (not the position).
  const RingValue& coord(std::uint64_t n) const;

  bool is_zero() const;
  std::string to_string() const;

  friend bool operator==(const WittVector& a, const WittVector& b);

 private:
  TruncationSet S_;
  Ring ring_;
  std::vector<RingValue> coords_;
};

/// Ghost components (gh_n)_{n in S}; components()[i] belongs to S[i].
class GhostVector {
 public:
  GhostVector() = default;
  GhostVector(TruncationSet S, Ring ring, std::vector<RingValue> components);

  const TruncationSet& S() const { return S_; }
  const Ring& ring() const { return ring_; }
  const std::vector<RingValue>& components() const { return components_; }
  const RingValue& component(std::uint64_t n) const;

  friend GhostVector operator+(const GhostVector& a, const GhostVector& b);
  friend GhostVector operator*(const GhostVector& a, const GhostVector& b);
  friend bool operator==(const GhostVector& a, const GhostVector& b);

 private:
  TruncationSet S_;
  Ring ring_;
  std::vector<RingValue> components_;
};

/// gh_n(a) = sum over d | n of d * a_d^(n/d), computed exactly in the coefficient ring.
GhostVector ghost(const WittVector& w);

/// Inverse of the ghost map on a torsion-free ring, by the triangular solve
/// a_n = (g_n - sum_{d | n, d < n} d * a_d^(n/d)) / n in increasing n.
/// Throws NotGhostIntegral when a division fails, InvalidRing for rings with torsion.
WittVector from_ghost(const GhostVector& g);

/// True when g lies in the image of the ghost map (torsion-free rings only).
bool is_ghost_integral(const GhostVector& g);

}  // namespace witt
