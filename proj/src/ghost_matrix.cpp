#include "witt/ghost_matrix.hpp"

#include <sstream>

#include "witt/errors.hpp"

namespace witt {

namespace {

void require_same_shape(const GhostMatrix& a, const GhostMatrix& b) {
  if (!(a.S() == b.S()) || a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(Errc::ShapeMismatch, "matrix shapes differ: " + std::to_string(a.rows()) + "x" +
                                         std::to_string(a.cols()) + " over " + a.S().to_string() + " vs " +
                                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + " over " +
                                         b.S().to_string());
}

mpq_class as_rational(const RingValue& v) {
  switch (v.ring()->kind) {
    case RingKind::Integers:
      return mpq_class(v.as_integer());
    case RingKind::Rationals:
    case RingKind::LocalIntegersAtP:
      return v.as_rational();
    default:
      throw Error(Errc::WrongRing, "expected a subring of Q, got " + v.ring()->to_string());
  }
}

}  // namespace

std::vector<mpq_class> rational_ghost(const WittVector& w) {
  const GhostVector g = ghost(w);
  std::vector<mpq_class> out;
  out.reserve(g.components().size());
  for (const auto& c : g.components()) out.push_back(as_rational(c));
  return out;
}

std::optional<WittVector> witt_from_ghost(const TruncationSet& S, const Ring& R, const std::vector<mpq_class>& g) {
  std::vector<RingValue> comps;
  comps.reserve(g.size());
  for (const auto& q : g) {
    switch (R->kind) {
      case RingKind::Integers:
        if (q.get_den() != 1) return std::nullopt;
        comps.push_back(RingValue::from_integer(R, q.get_num()));
        break;
      case RingKind::Rationals:
        comps.push_back(RingValue::from_rational(R, q));
        break;
      case RingKind::LocalIntegersAtP:
        if (mpz_divisible_ui_p(q.get_den_mpz_t(), R->prime)) return std::nullopt;
        comps.push_back(RingValue::from_rational(R, q));
        break;
      default:
        throw Error(Errc::WrongRing, "expected a subring of Q, got " + R->to_string());
    }
  }
  try {
    return from_ghost(GhostVector(S, R, std::move(comps)));
  } catch (const Error& e) {
    if (e.code() == Errc::NotGhostIntegral) return std::nullopt;
    throw;
  }
}

GhostMatrix::GhostMatrix(TruncationSet S, std::size_t rows, std::size_t cols)
    : S_(std::move(S)), rows_(rows), cols_(cols), comps_(S_.size(), std::vector<mpq_class>(rows * cols)) {}

GhostMatrix GhostMatrix::identity(const TruncationSet& S, std::size_t r) { return scalar(S, r, 1); }

GhostMatrix GhostMatrix::scalar(const TruncationSet& S, std::size_t r, const mpz_class& k) {
  GhostMatrix m(S, r, r);
  for (std::size_t c = 0; c < S.size(); ++c)
    for (std::size_t i = 0; i < r; ++i) m.at(c, i, i) = k;
  return m;
}

GhostMatrix GhostMatrix::from_witt(const TruncationSet& S, std::size_t rows, std::size_t cols,
                                   const std::vector<WittVector>& entries) {
  if (entries.size() != rows * cols)
    throw Error(Errc::ShapeMismatch, "expected " + std::to_string(rows * cols) + " entries, got " +
                                         std::to_string(entries.size()));
  GhostMatrix m(S, rows, cols);
  for (std::size_t e = 0; e < entries.size(); ++e) {
    if (!(entries[e].S() == S))
      throw Error(Errc::ShapeMismatch, "entry over " + entries[e].S().to_string() + ", expected " + S.to_string());
    const auto g = rational_ghost(entries[e]);
    for (std::size_t c = 0; c < S.size(); ++c) m.comps_[c][e] = g[c];
  }
  return m;
}

GhostMatrix GhostMatrix::of(const WittVector& w) { return from_witt(w.S(), 1, 1, {w}); }

std::optional<std::vector<WittVector>> GhostMatrix::to_witt(const Ring& R) const {
  std::vector<WittVector> out;
  out.reserve(rows_ * cols_);
  std::vector<mpq_class> g(S_.size());
  for (std::size_t e = 0; e < rows_ * cols_; ++e) {
    for (std::size_t c = 0; c < S_.size(); ++c) g[c] = comps_[c][e];
    auto w = witt_from_ghost(S_, R, g);
    if (!w) return std::nullopt;
    out.push_back(std::move(*w));
  }
  return out;
}

GhostMatrix operator*(const GhostMatrix& a, const GhostMatrix& b) {
  if (!(a.S_ == b.S_) || a.cols_ != b.rows_)
    throw Error(Errc::ShapeMismatch, "cannot multiply " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                                         " by " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  GhostMatrix m(a.S_, a.rows_, b.cols_);
  mpq_class t;
  for (std::size_t c = 0; c < a.S_.size(); ++c)
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const mpq_class& x = a.at(c, i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          t = x * b.at(c, k, j);
          m.at(c, i, j) += t;
        }
      }
  return m;
}

GhostMatrix operator+(const GhostMatrix& a, const GhostMatrix& b) {
  require_same_shape(a, b);
  GhostMatrix m = a;
  for (std::size_t c = 0; c < m.comps_.size(); ++c)
    for (std::size_t e = 0; e < m.comps_[c].size(); ++e) m.comps_[c][e] += b.comps_[c][e];
  return m;
}

GhostMatrix operator-(const GhostMatrix& a, const GhostMatrix& b) {
  require_same_shape(a, b);
  GhostMatrix m = a;
  for (std::size_t c = 0; c < m.comps_.size(); ++c)
    for (std::size_t e = 0; e < m.comps_[c].size(); ++e) m.comps_[c][e] -= b.comps_[c][e];
  return m;
}

bool operator==(const GhostMatrix& a, const GhostMatrix& b) {
  return a.S_ == b.S_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.comps_ == b.comps_;
}

GhostMatrix GhostMatrix::scaled(const mpq_class& k) const {
  GhostMatrix m = *this;
  for (auto& comp : m.comps_)
    for (auto& x : comp) x *= k;
  return m;
}

GhostMatrix GhostMatrix::times_scalar(const GhostMatrix& lambda) const {
  if (!(lambda.S_ == S_) || lambda.rows_ != 1 || lambda.cols_ != 1)
    throw Error(Errc::ShapeMismatch, "scalar must be 1x1 over " + S_.to_string());
  GhostMatrix m = *this;
  for (std::size_t c = 0; c < comps_.size(); ++c)
    for (auto& x : m.comps_[c]) x *= lambda.comps_[c][0];
  return m;
}

GhostMatrix GhostMatrix::transpose() const {
  GhostMatrix m(S_, cols_, rows_);
  for (std::size_t c = 0; c < comps_.size(); ++c)
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m.at(c, j, i) = at(c, i, j);
  return m;
}

GhostMatrix GhostMatrix::frobenius(std::uint64_t n) const {
  const TruncationSet Sn = S_.quotient(n);
  GhostMatrix m(Sn, rows_, cols_);
  for (std::size_t c = 0; c < Sn.size(); ++c) m.comps_[c] = comps_[*S_.index_of(n * Sn[c])];
  return m;
}

GhostMatrix GhostMatrix::verschiebung(std::uint64_t n, const TruncationSet& S) const {
  if (!(S.quotient(n) == S_))
    throw Error(Errc::ShapeMismatch, "V_" + std::to_string(n) + " expects entries over " +
                                         S.quotient(n).to_string() + ", got " + S_.to_string());
  GhostMatrix m(S, rows_, cols_);
  for (std::size_t c = 0; c < S.size(); ++c) {
    if (S[c] % n != 0) continue;
    const auto& src = comps_[*S_.index_of(S[c] / n)];
    for (std::size_t e = 0; e < src.size(); ++e) m.comps_[c][e] = src[e] * n;
  }
  return m;
}

GhostMatrix GhostMatrix::restrict_to(const TruncationSet& T) const {
  if (!T.is_subset_of(S_)) throw Error(Errc::NotSubset, T.to_string() + " is not contained in " + S_.to_string());
  GhostMatrix m(T, rows_, cols_);
  for (std::size_t c = 0; c < T.size(); ++c) m.comps_[c] = comps_[*S_.index_of(T[c])];
  return m;
}

std::optional<GhostMatrix> GhostMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const std::size_t n = rows_;
  GhostMatrix inv = identity(S_, n);
  for (std::size_t c = 0; c < comps_.size(); ++c) {
    std::vector<mpq_class> a = comps_[c];
    auto& b = inv.comps_[c];
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && a[piv * n + col] == 0) ++piv;
      if (piv == n) return std::nullopt;
      if (piv != col)
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(a[piv * n + j], a[col * n + j]);
          std::swap(b[piv * n + j], b[col * n + j]);
        }
      const mpq_class d = a[col * n + col];
      for (std::size_t j = 0; j < n; ++j) {
        a[col * n + j] /= d;
        b[col * n + j] /= d;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i == col || a[i * n + col] == 0) continue;
        const mpq_class f = a[i * n + col];
        for (std::size_t j = 0; j < n; ++j) {
          a[i * n + j] -= f * a[col * n + j];
          b[i * n + j] -= f * b[col * n + j];
        }
      }
    }
  }
  return inv;
}

bool GhostMatrix::is_zero() const {
  for (const auto& comp : comps_)
    for (const auto& x : comp)
      if (x != 0) return false;
  return true;
}

std::size_t GhostMatrix::component_rank(std::uint64_t s) const {
  const auto k = S_.index_of(s);
  if (!k) throw Error(Errc::IndexOutsideS, std::to_string(s) + " is not in " + S_.to_string());
  std::vector<mpq_class> a = comps_[*k];
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t piv = rank;
    while (piv < rows_ && a[piv * cols_ + col] == 0) ++piv;
    if (piv == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(a[piv * cols_ + j], a[rank * cols_ + j]);
    for (std::size_t i = rank + 1; i < rows_; ++i) {
      if (a[i * cols_ + col] == 0) continue;
      const mpq_class f = a[i * cols_ + col] / a[rank * cols_ + col];
      for (std::size_t j = col; j < cols_; ++j) a[i * cols_ + j] -= f * a[rank * cols_ + j];
    }
    ++rank;
  }
  return rank;
}

GhostMatrix GhostMatrix::permuted(const std::vector<std::size_t>& perm) const {
  if (rows_ != cols_ || perm.size() != rows_) throw Error(Errc::ShapeMismatch, "permutation size mismatch");
  GhostMatrix m(S_, rows_, cols_);
  for (std::size_t c = 0; c < comps_.size(); ++c)
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m.at(c, perm[i], perm[j]) = at(c, i, j);
  return m;
}

std::string GhostMatrix::to_string() const {
  std::ostringstream os;
  os << rows_ << "x" << cols_ << " over " << S_.to_string() << " ghost";
  for (std::size_t c = 0; c < comps_.size(); ++c) {
    os << " " << S_[c] << ":[";
    for (std::size_t e = 0; e < comps_[c].size(); ++e) os << (e ? "," : "") << comps_[c][e].get_str();
    os << "]";
  }
  return os.str();
}

GhostMatrix kronecker(const GhostMatrix& a, const GhostMatrix& b) {
  if (!(a.S() == b.S())) throw Error(Errc::ShapeMismatch, "Kronecker factors over different sets");
  GhostMatrix m(a.S(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t c = 0; c < a.S().size(); ++c)
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t k = 0; k < b.rows(); ++k)
          for (std::size_t l = 0; l < b.cols(); ++l)
            m.at(c, i * b.rows() + k, j * b.cols() + l) = a.at(c, i, j) * b.at(c, k, l);
  return m;
}

GhostMatrix block_diagonal(const GhostMatrix& a, const GhostMatrix& b) {
  if (!(a.S() == b.S())) throw Error(Errc::ShapeMismatch, "blocks over different sets");
  GhostMatrix m(a.S(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t c = 0; c < a.S().size(); ++c) {
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) m.at(c, i, j) = a.at(c, i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m.at(c, a.rows() + i, a.cols() + j) = b.at(c, i, j);
  }
  return m;
}

}  // namespace witt
