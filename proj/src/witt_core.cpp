#include "witt/witt_core.hpp"

#include <random>

#include "witt/errors.hpp"
#include "witt/universal_table.hpp"

namespace witt {

namespace {

void require_same_shape(const WittVector& a, const WittVector& b) {
  if (!(a.S() == b.S()))
    throw Error(Errc::ShapeMismatch, "Witt vectors over " + a.S().to_string() + " and " + b.S().to_string());
  if (!same_ring(a.ring(), b.ring()))
    throw Error(Errc::ShapeMismatch,
                "Witt vectors over " + a.ring()->to_string() + " and " + b.ring()->to_string());
}

ArithPath resolve(ArithPath path, const Ring& ring) {
  if (path == ArithPath::Auto) return ring->torsion_free() ? ArithPath::Ghost : ArithPath::Tables;
  if (path == ArithPath::Ghost && !ring->torsion_free())
    throw Error(Errc::InvalidRing, "the ghost path needs a torsion-free ring, got " + ring->to_string());
  return path;
}

// Z/m with m below 2^32: evaluate the universal polynomials in machine words.
std::uint64_t small_modulus(const Ring& ring) {
  if (ring->kind != RingKind::IntegersModM || !ring->modulus.fits_ulong_p()) return 0;
  const unsigned long m = ring->modulus.get_ui();
  return m < (1ULL << 32) ? m : 0;
}

class ModPowers {
 public:
  explicit ModPowers(std::uint64_t m) : m_(m) {}
  void bind(std::uint32_t var, const RingValue& v) {
    if (powers_.size() <= var) powers_.resize(var + 1);
    powers_[var].assign(1, 1 % m_);
    powers_[var].push_back(mpz_fdiv_ui(v.as_integer().get_mpz_t(), m_));
  }
  std::uint64_t power(std::uint32_t var, std::uint32_t e) {
    auto& p = powers_[var];
    while (p.size() <= e) p.push_back(p.back() * p[1] % m_);
    return p[e];
  }
  std::uint64_t evaluate(const Poly& poly) {
    std::uint64_t acc = 0;
    for (const auto& t : poly.terms()) {
      std::uint64_t v = mpz_fdiv_ui(t.coeff.get_mpz_t(), m_);
      for (std::size_t i = 0; i < t.mono.num_factors() && v != 0; ++i)
        v = v * power(t.mono.var_at(i), t.mono.exp_at(i)) % m_;
      acc = (acc + v) % m_;
    }
    return acc;
  }

 private:
  std::uint64_t m_;
  std::vector<std::vector<std::uint64_t>> powers_;
};

enum class BinOp { Add, Mul };

WittVector binary_via_tables(const WittVector& a, const WittVector& b, BinOp op) {
  auto& table = UniversalPolyTable::global();
  const TruncationSet& S = a.S();
  if (const std::uint64_t m = small_modulus(a.ring())) {
    ModPowers mp(m);
    for (std::size_t i = 0; i < S.size(); ++i) {
      mp.bind(UniversalPolyTable::x_var(S[i]), a.coords()[i]);
      mp.bind(UniversalPolyTable::y_var(S[i]), b.coords()[i]);
    }
    std::vector<RingValue> out;
    out.reserve(S.size());
    for (std::uint64_t n : S.elements())
      out.push_back(RingValue::from_integer(a.ring(), mp.evaluate(op == BinOp::Add ? table.sum(n) : table.product(n))));
    return WittVector(S, a.ring(), std::move(out));
  }
  PowerCache cache(a.ring());
  for (std::size_t i = 0; i < S.size(); ++i) {
    cache.bind(UniversalPolyTable::x_var(S[i]), a.coords()[i]);
    cache.bind(UniversalPolyTable::y_var(S[i]), b.coords()[i]);
  }
  std::vector<RingValue> out;
  out.reserve(S.size());
  for (std::uint64_t n : S.elements())
    out.push_back(evaluate(op == BinOp::Add ? table.sum(n) : table.product(n), cache));
  return WittVector(S, a.ring(), std::move(out));
}

WittVector binary(const WittVector& a, const WittVector& b, BinOp op, ArithPath path) {
  require_same_shape(a, b);
  if (resolve(path, a.ring()) == ArithPath::Ghost) {
    const GhostVector ga = ghost(a), gb = ghost(b);
    return from_ghost(op == BinOp::Add ? ga + gb : ga * gb);
  }
  return binary_via_tables(a, b, op);
}

}  // namespace

WittVector add(const WittVector& a, const WittVector& b, ArithPath path) { return binary(a, b, BinOp::Add, path); }
WittVector mul(const WittVector& a, const WittVector& b, ArithPath path) { return binary(a, b, BinOp::Mul, path); }

WittVector integer_image(const mpz_class& k, const TruncationSet& S, const Ring& ring) {
  const Ring& z = integers();
  std::vector<RingValue> g(S.size(), RingValue::from_integer(z, k));
  return change_ring(from_ghost(GhostVector(S, z, std::move(g))), ring);
}

WittVector neg(const WittVector& a, ArithPath path) {
  if (resolve(path, a.ring()) == ArithPath::Ghost) {
    const GhostVector g = ghost(a);
    std::vector<RingValue> c;
    for (const auto& v : g.components()) c.push_back(-v);
    return from_ghost(GhostVector(a.S(), a.ring(), std::move(c)));
  }
  return binary_via_tables(a, integer_image(-1, a.S(), a.ring()), BinOp::Mul);
}

WittVector sub(const WittVector& a, const WittVector& b, ArithPath path) { return add(a, neg(b, path), path); }

WittVector pow(const WittVector& a, std::uint64_t e, ArithPath path) {
  WittVector result = WittVector::one(a.S(), a.ring());
  WittVector base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base, path);
    e >>= 1;
    if (e) base = mul(base, base, path);
  }
  return result;
}

WittVector scale(const mpz_class& k, const WittVector& w, ArithPath path) {
  if (resolve(path, w.ring()) == ArithPath::Ghost) {
    const GhostVector g = ghost(w);
    std::vector<RingValue> c;
    for (const auto& v : g.components()) c.push_back(v.times_integer(k));
    return from_ghost(GhostVector(w.S(), w.ring(), std::move(c)));
  }
  return mul(integer_image(k, w.S(), w.ring()), w, path);
}

WittVector teichmuller(const RingValue& a, const TruncationSet& S) {
  std::vector<RingValue> c(S.size(), RingValue::zero(a.ring()));
  if (!S.empty()) c[0] = a;
  return WittVector(S, a.ring(), std::move(c));
}

WittVector verschiebung(std::uint64_t n, const WittVector& w, const TruncationSet& S) {
  if (n == 0) throw Error(Errc::InvalidArgument, "Verschiebung index must be positive");
  const TruncationSet source = S.quotient(n);
  if (!(w.S() == source))
    throw Error(Errc::ShapeMismatch, "V_" + std::to_string(n) + " into " + S.to_string() + " expects a vector over " +
                                         source.to_string() + ", got " + w.S().to_string());
  std::vector<RingValue> c(S.size(), RingValue::zero(w.ring()));
  for (std::size_t i = 0; i < source.size(); ++i) c[*S.index_of(source[i] * n)] = w.coords()[i];
  return WittVector(S, w.ring(), std::move(c));
}

WittVector frobenius(std::uint64_t n, const WittVector& w, ArithPath path) {
  if (n == 0) throw Error(Errc::InvalidArgument, "Frobenius index must be positive");
  const TruncationSet target = w.S().quotient(n);
  if (n == 1) return w;
  if (resolve(path, w.ring()) == ArithPath::Ghost) {
    const GhostVector g = ghost(w);
    std::vector<RingValue> c;
    c.reserve(target.size());
    for (std::uint64_t m : target.elements()) c.push_back(g.component(n * m));
    return from_ghost(GhostVector(target, w.ring(), std::move(c)));
  }
  auto& table = UniversalPolyTable::global();
  std::vector<RingValue> c;
  c.reserve(target.size());
  if (const std::uint64_t mod = small_modulus(w.ring())) {
    ModPowers mp(mod);
    for (std::size_t i = 0; i < w.S().size(); ++i) mp.bind(UniversalPolyTable::x_var(w.S()[i]), w.coords()[i]);
    for (std::uint64_t m : target.elements())
      c.push_back(RingValue::from_integer(w.ring(), mp.evaluate(table.frobenius(n, m))));
    return WittVector(target, w.ring(), std::move(c));
  }
  PowerCache cache(w.ring());
  for (std::size_t i = 0; i < w.S().size(); ++i) cache.bind(UniversalPolyTable::x_var(w.S()[i]), w.coords()[i]);
  for (std::uint64_t m : target.elements()) c.push_back(evaluate(table.frobenius(n, m), cache));
  return WittVector(target, w.ring(), std::move(c));
}

WittVector restriction(const WittVector& w, const TruncationSet& T) {
  if (!T.is_subset_of(w.S()))
    throw Error(Errc::NotSubset, T.to_string() + " is not contained in " + w.S().to_string());
  std::vector<RingValue> c;
  c.reserve(T.size());
  for (std::uint64_t t : T.elements()) c.push_back(w.coord(t));
  return WittVector(T, w.ring(), std::move(c));
}

WittVector zero_extend(const WittVector& w, const TruncationSet& S) {
  if (!w.S().is_subset_of(S))
    throw Error(Errc::NotSubset, w.S().to_string() + " is not contained in " + S.to_string());
  std::vector<RingValue> c(S.size(), RingValue::zero(w.ring()));
  for (std::size_t i = 0; i < w.S().size(); ++i) c[*S.index_of(w.S()[i])] = w.coords()[i];
  return WittVector(S, w.ring(), std::move(c));
}

WittVector change_ring(const WittVector& w, const Ring& target) {
  std::vector<RingValue> c;
  c.reserve(w.coords().size());
  for (const auto& v : w.coords()) c.push_back(map_to(v, target));
  return WittVector(w.S(), target, std::move(c));
}

WittVector expansion_sum(const WittVector& w, ArithPath path) {
  const TruncationSet& S = w.S();
  WittVector acc = WittVector::zero(S, w.ring());
  for (std::size_t i = 0; i < S.size(); ++i) {
    const TruncationSet source = S.quotient(S[i]);
    acc = add(acc, verschiebung(S[i], teichmuller(w.coords()[i], source), S), path);
  }
  return acc;
}

std::vector<WittVector> enumerate_witt(const Ring& A, const TruncationSet& S) {
  const std::vector<RingValue> elems = enumerate(A);
  const std::uint64_t q = elems.size();
  mpz_class total;
  mpz_ui_pow_ui(total.get_mpz_t(), q, S.size());
  if (total > (1u << 24)) throw Error(Errc::TooLarge, "W_S(A) has " + total.get_str() + " elements");
  const std::uint64_t count = total.get_ui();
  std::vector<WittVector> out;
  out.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<RingValue> c;
    c.reserve(S.size());
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < S.size(); ++i, rest /= q) c.push_back(elems[rest % q]);
    out.emplace_back(S, A, std::move(c));
  }
  return out;
}

std::uint64_t witt_index(const WittVector& w) {
  const std::uint64_t q = w.ring()->cardinality().get_ui();
  std::uint64_t idx = 0, scale_factor = 1;
  for (const auto& c : w.coords()) {
    idx += element_index(c) * scale_factor;
    scale_factor *= q;
  }
  return idx;
}

ExactSequenceReport exact_sequence_check(const Ring& A, const TruncationSet& S, std::uint64_t n,
                                         std::uint64_t max_elements) {
  if (!A->finite()) throw Error(Errc::NotFinite, A->to_string() + " is not finite");
  if (n == 0) throw Error(Errc::InvalidArgument, "n must be positive");
  ExactSequenceReport rep;
  rep.ring = A->to_string();
  rep.S = S;
  rep.n = n;
  rep.source = S.quotient(n);
  rep.target = S.without_multiples_of(n);
  mpz_class middle;
  mpz_pow_ui(middle.get_mpz_t(), A->cardinality().get_mpz_t(), S.size());
  if (middle > max_elements)
    throw Error(Errc::TooLarge, "W_S(A) has " + middle.get_str() + " elements, above the cap " +
                                    std::to_string(max_elements));

  const auto source = enumerate_witt(A, rep.source);
  const auto mid = enumerate_witt(A, S);
  const auto tgt = enumerate_witt(A, rep.target);
  rep.card_source = source.size();
  rep.card_middle = mid.size();
  rep.card_target = tgt.size();

  std::vector<char> in_image(mid.size(), 0);
  rep.injective = true;
  for (const auto& x : source) {
    const std::uint64_t j = witt_index(verschiebung(n, x, S));
    if (in_image[j]) {
      rep.injective = false;
      if (rep.counterexamples.size() < 8) rep.counterexamples.push_back("V_n not injective at " + x.to_string());
    }
    in_image[j] = 1;
  }
  std::vector<char> hit(tgt.size(), 0);
  std::vector<char> in_kernel(mid.size(), 0);
  for (std::size_t i = 0; i < mid.size(); ++i) {
    const WittVector r = restriction(mid[i], rep.target);
    hit[witt_index(r)] = 1;
    in_kernel[i] = r.is_zero();
  }
  rep.surjective = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  if (!rep.surjective) rep.counterexamples.push_back("restriction is not surjective");
  rep.image_equals_kernel = true;
  for (std::size_t i = 0; i < mid.size(); ++i) {
    rep.card_image += in_image[i];
    rep.card_kernel += in_kernel[i];
    if (in_image[i] != in_kernel[i]) {
      rep.image_equals_kernel = false;
      if (rep.counterexamples.size() < 8)
        rep.counterexamples.push_back("image and kernel differ at " + mid[i].to_string());
    }
  }

  // Homomorphism checks: every pair when small, a fixed pseudo-random sample otherwise.
  rep.homomorphisms = true;
  std::mt19937_64 rng(0x5eedULL ^ n ^ (S.size() << 8));
  auto pairs = [&](std::size_t count, auto&& fn) {
    if (count * count <= 4096) {
      for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j) fn(i, j);
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, count - 1);
      for (int k = 0; k < 256; ++k) fn(pick(rng), pick(rng));
    }
  };
  pairs(source.size(), [&](std::size_t i, std::size_t j) {
    const WittVector lhs = verschiebung(n, add(source[i], source[j]), S);
    const WittVector rhs = add(verschiebung(n, source[i], S), verschiebung(n, source[j], S));
    if (!(lhs == rhs)) {
      rep.homomorphisms = false;
      if (rep.counterexamples.size() < 8) rep.counterexamples.push_back("V_n not additive");
    }
  });
  pairs(mid.size(), [&](std::size_t i, std::size_t j) {
    const bool ok =
        restriction(add(mid[i], mid[j]), rep.target) ==
            add(restriction(mid[i], rep.target), restriction(mid[j], rep.target)) &&
        restriction(mul(mid[i], mid[j]), rep.target) ==
            mul(restriction(mid[i], rep.target), restriction(mid[j], rep.target));
    if (!ok) {
      rep.homomorphisms = false;
      if (rep.counterexamples.size() < 8) rep.counterexamples.push_back("restriction is not a ring map");
    }
  });
  return rep;
}

}  // namespace witt
