#include "witt/finite_witt.hpp"

#include <algorithm>
#include <exception>
#include <random>
#include <set>

#include "witt/errors.hpp"
#include "witt/witt_core.hpp"

namespace witt {

namespace {

using Bits = std::vector<std::uint64_t>;

void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
bool get_bit(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1u; }

std::size_t popcount(const Bits& b) {
  std::size_t n = 0;
  for (auto w : b) n += static_cast<std::size_t>(__builtin_popcountll(w));
  return n;
}

bool subset(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

std::vector<std::uint32_t> members_of(const Bits& b, std::size_t n) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (get_bit(b, i)) out.push_back(static_cast<std::uint32_t>(i));
  return out;
}

// Runs body(i) for i in [0, n), serially or with OpenMP, rethrowing the first exception.
template <class Body>
void for_each_index(std::size_t n, Execution exec, Body&& body) {
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(witt_finite_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

FiniteRingTable materialize(const Ring& A, const TruncationSet& S, std::uint64_t cap, Execution exec) {
  if (!A->finite()) throw Error(Errc::NotFinite, A->to_string() + " is not finite");
  mpz_class total;
  mpz_pow_ui(total.get_mpz_t(), A->cardinality().get_mpz_t(), S.size());
  if (total > cap)
    throw Error(Errc::TooLarge, "W_S(A) has " + total.get_str() + " elements, above the cap " + std::to_string(cap));
  FiniteRingTable t;
  t.A = A;
  t.S = S;
  t.elements = enumerate_witt(A, S);
  const std::size_t n = t.elements.size();
  t.add_table.assign(n * n, 0);
  t.mul_table.assign(n * n, 0);
  for_each_index(n, exec, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j < i) continue;
      const auto s = static_cast<std::uint32_t>(witt_index(add(t.elements[i], t.elements[j], ArithPath::Tables)));
      const auto p = static_cast<std::uint32_t>(witt_index(mul(t.elements[i], t.elements[j], ArithPath::Tables)));
      t.add_table[i * n + j] = s;
      t.mul_table[i * n + j] = p;
    }
  });
  // Operations are commutative; fill the lower triangle from the upper one.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      t.add_table[i * n + j] = t.add_table[j * n + i];
      t.mul_table[i * n + j] = t.mul_table[j * n + i];
    }
  t.zero = static_cast<std::uint32_t>(witt_index(WittVector::zero(S, A)));
  t.one = static_cast<std::uint32_t>(witt_index(WittVector::one(S, A)));
  return t;
}

AxiomReport check_ring_axioms(const FiniteRingTable& t, std::size_t exhaustive_limit, Execution exec) {
  AxiomReport rep;
  const std::size_t n = t.size();
  rep.exhaustive = n <= exhaustive_limit;
  // Commutativity is checked by recomputing one off-diagonal product per pair
  // with swapped arguments; the table stores only the upper triangle's results.
  std::vector<std::vector<std::string>> fails(n);
  std::vector<std::uint64_t> counts(n, 0);
  const std::size_t samples = 64;
  for_each_index(n, exec, [&](std::size_t a) {
    std::mt19937_64 rng(0xabcdefULL + a);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    auto check = [&](std::size_t b, std::size_t c) {
      ++counts[a];
      const auto A = static_cast<std::uint32_t>(a), B = static_cast<std::uint32_t>(b), C = static_cast<std::uint32_t>(c);
      bool ok = t.add(t.add(A, B), C) == t.add(A, t.add(B, C)) && t.mul(t.mul(A, B), C) == t.mul(A, t.mul(B, C)) &&
                t.mul(A, t.add(B, C)) == t.add(t.mul(A, B), t.mul(A, C));
      if (!ok && fails[a].size() < 4)
        fails[a].push_back("axiom failure at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                           std::to_string(c) + ")");
    };
    if (rep.exhaustive) {
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) check(b, c);
    } else {
      for (std::size_t k = 0; k < samples; ++k) check(pick(rng), pick(rng));
    }
    const auto A = static_cast<std::uint32_t>(a);
    if (t.add(A, t.zero) != A || t.mul(A, t.one) != A)
      fails[a].push_back("identity failure at " + std::to_string(a));
    // Additive inverse exists.
    bool has_neg = false;
    for (std::uint32_t b = 0; b < n && !has_neg; ++b) has_neg = t.add(A, b) == t.zero;
    if (!has_neg) fails[a].push_back("no additive inverse for " + std::to_string(a));
  });
  for (std::size_t a = 0; a < n; ++a) {
    rep.checks += counts[a];
    for (auto& f : fails[a]) rep.failures.push_back(std::move(f));
  }
  // Spot-check the mirrored triangle against a direct computation.
  for (std::size_t a = 0; a < std::min<std::size_t>(n, 16); ++a)
    for (std::size_t b = 0; b < a; ++b) {
      ++rep.checks;
      if (witt_index(mul(t.elements[a], t.elements[b], ArithPath::Tables)) != t.mul(a, b))
        rep.failures.push_back("multiplication is not commutative at (" + std::to_string(a) + "," +
                               std::to_string(b) + ")");
    }
  return rep;
}

std::vector<Ideal> maximal_ideals(const FiniteRingTable& t) {
  const std::size_t n = t.size();
  const std::size_t words = (n + 63) / 64;
  std::vector<Bits> principal;
  for (std::size_t a = 0; a < n; ++a) {
    Bits b(words, 0);
    for (std::size_t r = 0; r < n; ++r) set_bit(b, t.mul(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(a)));
    principal.push_back(std::move(b));
  }
  std::set<Bits> seen(principal.begin(), principal.end());
  std::vector<Bits> ideals(seen.begin(), seen.end());
  const std::vector<Bits> generators = ideals;
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    for (const Bits& g : generators) {
      if (subset(g, ideals[k])) continue;
      Bits sum(words, 0);
      const auto xs = members_of(ideals[k], n);
      const auto ys = members_of(g, n);
      for (auto x : xs)
        for (auto y : ys) set_bit(sum, t.add(x, y));
      if (seen.insert(sum).second) ideals.push_back(std::move(sum));
    }
  }
  std::vector<const Bits*> proper;
  for (const auto& I : ideals)
    if (!get_bit(I, t.one)) proper.push_back(&I);
  std::vector<Ideal> out;
  for (const Bits* I : proper) {
    bool maximal = true;
    for (const Bits* J : proper)
      if (J != I && subset(*I, *J) && *I != *J) maximal = false;
    if (maximal) out.push_back({members_of(*I, n), n / popcount(*I)});
  }
  std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) { return a.members < b.members; });
  return out;
}

MaximalIdealLemmaReport verify_maximal_ideal_lemma(std::uint64_t p, const TruncationSet& S, unsigned j,
                                                   std::uint64_t cap) {
  if (!is_prime(p)) throw Error(Errc::InvalidArgument, std::to_string(p) + " is not prime");
  if (j == 0) throw Error(Errc::InvalidArgument, "exponent j must be positive");
  if (S.empty() || !S.is_p_typical(p))
    throw Error(Errc::InvalidArgument, S.to_string() + " is not a nonempty " + std::to_string(p) + "-typical set");
  mpz_class m;
  mpz_ui_pow_ui(m.get_mpz_t(), p, j);
  const Ring R = integers_mod(m);
  const FiniteRingTable t = materialize(R, S, cap);

  MaximalIdealLemmaReport rep;
  rep.p = p;
  rep.S = S;
  rep.j = j;
  rep.ring = R->to_string();
  rep.ring_size = t.size();

  std::vector<std::uint32_t> kernel;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (mpz_divisible_ui_p(t.elements[i].coord(1).as_integer().get_mpz_t(), p))
      kernel.push_back(static_cast<std::uint32_t>(i));

  const auto maxes = maximal_ideals(t);
  rep.maximal_count = maxes.size();
  rep.unique = maxes.size() == 1;
  if (!rep.unique) rep.witnesses.push_back(std::to_string(maxes.size()) + " maximal ideals found");
  rep.matches_kernel = !maxes.empty();
  for (const auto& I : maxes) {
    if (I.members != kernel) {
      rep.matches_kernel = false;
      rep.witnesses.push_back("maximal ideal of size " + std::to_string(I.members.size()) +
                              " differs from the kernel of size " + std::to_string(kernel.size()));
    }
  }

  rep.vp_square_identity = true;
  const TruncationSet Sp = S.quotient(p);
  for (const auto& x : enumerate_witt(R, Sp)) {
    const WittVector v = verschiebung(p, x, S);
    const WittVector lhs = mul(v, v);
    const WittVector rhs = scale(mpz_class(p), verschiebung(p, mul(x, x), S));
    if (!(lhs == rhs)) {
      rep.vp_square_identity = false;
      if (rep.witnesses.size() < 8) rep.witnesses.push_back("V_p(x)^2 != p V_p(x^2) at x = " + x.to_string());
    }
  }
  return rep;
}

}  // namespace witt
