#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "witt/rings.hpp"
#include "witt/truncation.hpp"
#include "witt/witt_vector.hpp"

namespace witt {

/// A rows x cols matrix over W_S(R), R a subring of Q, held by its ghost
/// components: one rational matrix per s in S. Products are componentwise and
/// the ghost map is injective, so equalities here are equalities in W_S(R).
class GhostMatrix {
 public:
  GhostMatrix() = default;
  GhostMatrix(TruncationSet S, std::size_t rows, std::size_t cols);

  static GhostMatrix identity(const TruncationSet& S, std::size_t r);
  /// Integer k times the identity.
  static GhostMatrix scalar(const TruncationSet& S, std::size_t r, const mpz_class& k);
  /// Entries given as Witt vectors over S (row-major).
  static GhostMatrix from_witt(const TruncationSet& S, std::size_t rows, std::size_t cols,
                               const std::vector<WittVector>& entries);
  /// 1 x 1 matrix holding w.
  static GhostMatrix of(const WittVector& w);

  const TruncationSet& S() const { return S_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  /// Entry (i, j) of the ghost component at position k of S.
  mpq_class& at(std::size_t k, std::size_t i, std::size_t j) { return comps_[k][i * cols_ + j]; }
  const mpq_class& at(std::size_t k, std::size_t i, std::size_t j) const { return comps_[k][i * cols_ + j]; }

  /// Witt coordinates of every entry over R, or nullopt when some entry is not
  /// in W_S(R).
  std::optional<std::vector<WittVector>> to_witt(const Ring& R) const;
  bool integral_over(const Ring& R) const { return to_witt(R).has_value(); }

  friend GhostMatrix operator*(const GhostMatrix& a, const GhostMatrix& b);
  friend GhostMatrix operator+(const GhostMatrix& a, const GhostMatrix& b);
  friend GhostMatrix operator-(const GhostMatrix& a, const GhostMatrix& b);
  friend bool operator==(const GhostMatrix& a, const GhostMatrix& b);

  GhostMatrix scaled(const mpq_class& k) const;
  /// Entrywise product by a Witt scalar given as a 1 x 1 matrix.
  GhostMatrix times_scalar(const GhostMatrix& lambda) const;
  GhostMatrix transpose() const;
  /// F_n applied entrywise: component m of the result is component nm.
  GhostMatrix frobenius(std::uint64_t n) const;
  /// V_n applied entrywise into W_S: component m is n * component m/n when n | m, else 0.
  GhostMatrix verschiebung(std::uint64_t n, const TruncationSet& S) const;
  GhostMatrix restrict_to(const TruncationSet& T) const;
  /// Inverse over W_S(Q); nullopt when some ghost component is singular.
  std::optional<GhostMatrix> inverse() const;
  bool is_zero() const;
  /// Rank of the ghost component at s.
  std::size_t component_rank(std::uint64_t s) const;

  /// Rows of a placed at rows of the result according to the permutation
  /// (row i of a becomes row perm[i]); same for columns.
  GhostMatrix permuted(const std::vector<std::size_t>& perm) const;

  std::string to_string() const;

 private:
  TruncationSet S_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<mpq_class>> comps_;
};

GhostMatrix kronecker(const GhostMatrix& a, const GhostMatrix& b);
GhostMatrix block_diagonal(const GhostMatrix& a, const GhostMatrix& b);

/// The Witt vector over R with the given ghost components, if there is one.
std::optional<WittVector> witt_from_ghost(const TruncationSet& S, const Ring& R, const std::vector<mpq_class>& g);

/// Ghost components of w as rationals. R must be a subring of Q.
std::vector<mpq_class> rational_ghost(const WittVector& w);

}  // namespace witt
