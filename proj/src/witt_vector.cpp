#include "witt/witt_vector.hpp"

#include "witt/errors.hpp"

namespace witt {

namespace {

void check_components(const TruncationSet& S, const Ring& ring, const std::vector<RingValue>& values,
                      const char* what) {
  if (values.size() != S.size())
    throw Error(Errc::ShapeMismatch, std::string(what) + " needs one entry per element of " + S.to_string());
  for (const auto& v : values)
    if (!same_ring(v.ring(), ring))
      throw Error(Errc::DescriptorMismatch, std::string(what) + " entry over " + v.ring()->to_string() +
                                                " in a vector over " + ring->to_string());
}

}  // namespace

WittVector::WittVector(TruncationSet S, Ring ring, std::vector<RingValue> coords)
    : S_(std::move(S)), ring_(std::move(ring)), coords_(std::move(coords)) {
  check_components(S_, ring_, coords_, "Witt vector");
}

WittVector WittVector::zero(const TruncationSet& S, const Ring& ring) {
  return WittVector(S, ring, std::vector<RingValue>(S.size(), RingValue::zero(ring)));
}

WittVector WittVector::one(const TruncationSet& S, const Ring& ring) {
  std::vector<RingValue> c(S.size(), RingValue::zero(ring));
  if (!S.empty()) c[0] = RingValue::one(ring);
  return WittVector(S, ring, std::move(c));
}

const RingValue& WittVector::coord(std::uint64_t n) const {
  auto i = S_.index_of(n);
  if (!i) throw Error(Errc::IndexOutsideS, std::to_string(n) + " is not in " + S_.to_string());
  return coords_[*i];
}

bool WittVector::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

std::string WittVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) out += (i ? ", " : "") + coords_[i].to_string();
  return out + ")";
}

bool operator==(const WittVector& a, const WittVector& b) {
  return a.S_ == b.S_ && same_ring(a.ring_, b.ring_) && a.coords_ == b.coords_;
}

GhostVector::GhostVector(TruncationSet S, Ring ring, std::vector<RingValue> components)
    : S_(std::move(S)), ring_(std::move(ring)), components_(std::move(components)) {
  check_components(S_, ring_, components_, "ghost vector");
}

const RingValue& GhostVector::component(std::uint64_t n) const {
  auto i = S_.index_of(n);
  if (!i) throw Error(Errc::IndexOutsideS, std::to_string(n) + " is not in " + S_.to_string());
  return components_[*i];
}

GhostVector operator+(const GhostVector& a, const GhostVector& b) {
  if (!(a.S_ == b.S_)) throw Error(Errc::ShapeMismatch, "ghost vectors over different truncation sets");
  std::vector<RingValue> c;
  c.reserve(a.components_.size());
  for (std::size_t i = 0; i < a.components_.size(); ++i) c.push_back(a.components_[i] + b.components_[i]);
  return GhostVector(a.S_, a.ring_, std::move(c));
}

GhostVector operator*(const GhostVector& a, const GhostVector& b) {
  if (!(a.S_ == b.S_)) throw Error(Errc::ShapeMismatch, "ghost vectors over different truncation sets");
  std::vector<RingValue> c;
  c.reserve(a.components_.size());
  for (std::size_t i = 0; i < a.components_.size(); ++i) c.push_back(a.components_[i] * b.components_[i]);
  return GhostVector(a.S_, a.ring_, std::move(c));
}

bool operator==(const GhostVector& a, const GhostVector& b) {
  return a.S_ == b.S_ && same_ring(a.ring_, b.ring_) && a.components_ == b.components_;
}

GhostVector ghost(const WittVector& w) {
  const TruncationSet& S = w.S();
  std::vector<RingValue> g;
  g.reserve(S.size());
  for (std::size_t i = 0; i < S.size(); ++i) {
    const std::uint64_t n = S[i];
    RingValue acc = RingValue::zero(w.ring());
    for (std::size_t j : S.divisor_indices(i)) {
      const std::uint64_t d = S[j];
      const RingValue& a = w.coords()[j];
      if (a.is_zero()) continue;
      acc += a.pow(n / d).times_integer(d);
    }
    g.push_back(std::move(acc));
  }
  return GhostVector(S, w.ring(), std::move(g));
}

namespace {

// Returns the first failing index, or S.size() on success.
std::size_t solve_from_ghost(const GhostVector& g, std::vector<RingValue>& a) {
  const TruncationSet& S = g.S();
  if (!g.ring()->torsion_free())
    throw Error(Errc::InvalidRing, "inverting the ghost map needs a torsion-free ring, got " + g.ring()->to_string());
  a.clear();
  a.reserve(S.size());
  for (std::size_t i = 0; i < S.size(); ++i) {
    const std::uint64_t n = S[i];
    RingValue rest = g.components()[i];
    const auto divs = S.divisor_indices(i);
    for (std::size_t k = 0; k + 1 < divs.size(); ++k) {
      const std::size_t j = divs[k];
      if (a[j].is_zero()) continue;
      rest -= a[j].pow(n / S[j]).times_integer(S[j]);
    }
    auto q = try_div_exact_by_int(rest, n);
    if (!q) return i;
    a.push_back(std::move(*q));
  }
  return S.size();
}

}  // namespace

WittVector from_ghost(const GhostVector& g) {
  std::vector<RingValue> a;
  const std::size_t fail = solve_from_ghost(g, a);
  if (fail != g.S().size())
    throw Error(Errc::NotGhostIntegral, "ghost vector is not integral: the coordinate at " +
                                            std::to_string(g.S()[fail]) + " is not in " + g.ring()->to_string());
  return WittVector(g.S(), g.ring(), std::move(a));
}

bool is_ghost_integral(const GhostVector& g) {
  std::vector<RingValue> a;
  return solve_from_ghost(g, a) == g.S().size();
}

}  // namespace witt
