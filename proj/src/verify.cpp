#include "witt/verify.hpp"

#include <chrono>
#include <exception>
#include <functional>
#include <random>

#include "witt/epsilon.hpp"
#include "witt/errors.hpp"
#include "witt/universal_table.hpp"
#include "witt/witt_core.hpp"
#include "witt/witt_z.hpp"

namespace witt {

namespace {

constexpr std::size_t kKeptFailures = 20;

struct CaseResult {
  std::uint64_t checks = 0;
  std::uint64_t failure_count = 0;
  std::vector<std::string> failures;

  template <class Msg>
  void expect(bool ok, Msg&& msg) {
    ++checks;
    if (ok) return;
    ++failure_count;
    if (failures.size() < kKeptFailures) failures.push_back(msg());
  }
};

// Runs fn(i, result) for each case, serially or with OpenMP, and merges the
// results in case order so reports do not depend on scheduling.
void run_cases(std::size_t n, Execution exec, SuiteReport& rep,
               const std::function<void(std::size_t, CaseResult&)>& fn) {
  std::vector<CaseResult> results(n);
  auto one = [&](std::size_t i) {
    try {
      fn(i, results[i]);
    } catch (const Error& e) {
      results[i].expect(false, [&] { return "case raised " + std::string(errc_name(e.code())) + ": " + e.what(); });
    }
  };
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < n; ++i) one(i);
  } else {
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < n; ++i) {
      try {
        one(i);
      } catch (...) {
#pragma omp critical(witt_verify_error)
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
  }
  rep.cases += n;
  for (auto& r : results) {
    rep.checks += r.checks;
    rep.failure_count += r.failure_count;
    for (auto& f : r.failures)
      if (rep.failures.size() < kKeptFailures) rep.failures.push_back(std::move(f));
  }
}

std::mt19937_64 case_rng(const SuiteOptions& opts, std::uint64_t salt) {
  std::seed_seq seq{opts.seed, salt, std::uint64_t{0x77697474}};
  return std::mt19937_64(seq);
}

WittVector random_witt(const TruncationSet& S, const Ring& R, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  std::vector<RingValue> c;
  c.reserve(S.size());
  for (std::size_t i = 0; i < S.size(); ++i) c.push_back(RingValue::from_integer(R, d(rng)));
  return WittVector(S, R, std::move(c));
}

std::size_t pick(std::size_t given, std::size_t fallback) { return given ? given : fallback; }

std::string at(const TruncationSet& S) { return " on " + S.to_string(); }

void suite_ghost_hom(const SuiteOptions& opts, SuiteReport& rep) {
  const std::size_t samples = pick(opts.samples, 1000);
  const std::size_t chunks = 10;
  run_cases(rep.max * chunks, opts.exec, rep, [&](std::size_t i, CaseResult& out) {
    const TruncationSet S = TruncationSet::range(i / chunks + 1);
    auto rng = case_rng(opts, i);
    const std::size_t count = samples / chunks + (i % chunks < samples % chunks ? 1 : 0);
    for (std::size_t k = 0; k < count; ++k) {
      const WittVector a = random_witt(S, integers(), rng, 9);
      const WittVector b = random_witt(S, integers(), rng, 9);
      const GhostVector ga = ghost(a), gb = ghost(b);
      out.expect(ghost(add(a, b, ArithPath::Tables)) == ga + gb, [&] { return "ghost(a+b) != gh(a)+gh(b) for a=" + a.to_string() + ", b=" + b.to_string(); });
      out.expect(ghost(mul(a, b, ArithPath::Tables)) == ga * gb, [&] { return "ghost(ab) != gh(a)gh(b) for a=" + a.to_string() + ", b=" + b.to_string(); });
    }
  });
}

void suite_ghost_roundtrip(const SuiteOptions& opts, SuiteReport& rep) {
  const std::size_t samples = pick(opts.samples, 1000);
  run_cases(rep.max, opts.exec, rep, [&](std::size_t i, CaseResult& out) {
    const TruncationSet S = TruncationSet::range(i + 1);
    auto rng = case_rng(opts, i);
    for (std::size_t k = 0; k < samples; ++k) {
      const WittVector w = random_witt(S, integers(), rng, 50);
      out.expect(from_ghost(ghost(w)) == w, [&] { return "round trip failed for " + w.to_string(); });
    }
    if (S.size() < 2) return;
    // Perturbing gh_n by 1 shifts a_n by 1/n, so the result cannot be integral.
    std::uniform_int_distribution<std::size_t> pos(1, S.size() - 1);
    const std::size_t bad = rep.max > 1 ? (100 + rep.max - 2) / (rep.max - 1) : 100;
    for (std::size_t k = 0; k < bad; ++k) {
      auto comps = ghost(random_witt(S, integers(), rng, 50)).components();
      const std::size_t j = k == 0 ? 1 : pos(rng);
      if (k == 0) {
        for (auto& c : comps) c = RingValue::zero(integers());
      }
      comps[j] += RingValue::one(integers());
      const GhostVector g(S, integers(), comps);
      bool raised = false;
      try {
        from_ghost(g);
      } catch (const Error& e) {
        raised = e.code() == Errc::NotGhostIntegral;
      }
      out.expect(raised, [&] { return "no NotGhostIntegral for a perturbed ghost vector at index " + std::to_string(S[j]) + at(S); });
      out.expect(!is_ghost_integral(g), [&] { return "is_ghost_integral accepted a perturbed vector" + at(S); });
    }
  });
}

void suite_tables(const SuiteOptions& opts, SuiteReport& rep) {
  auto& table = UniversalPolyTable::global();
  {
    CaseResult build;
    for (std::uint64_t n = 1; n <= rep.max; ++n) {
      try {
        table.sum(n);
        table.product(n);
        build.expect(true, [] { return std::string(); });
      } catch (const InternalError& e) {
        build.expect(false, [&] { return "building sigma/pi " + std::to_string(n) + ": " + e.what(); });
      }
    }
    rep.checks += build.checks;
    rep.failure_count += build.failure_count;
    rep.failures.insert(rep.failures.end(), build.failures.begin(), build.failures.end());
  }
  const std::size_t samples = pick(opts.samples, 200);
  run_cases(rep.max, opts.exec, rep, [&](std::size_t i, CaseResult& out) {
    const TruncationSet S = TruncationSet::range(i + 1);
    auto rng = case_rng(opts, i);
    for (std::size_t k = 0; k < samples; ++k) {
      const WittVector a = random_witt(S, integers(), rng, 9);
      const WittVector b = random_witt(S, integers(), rng, 9);
      out.expect(add(a, b, ArithPath::Tables) == add(a, b, ArithPath::Ghost), [&] { return "sum paths differ for " + a.to_string() + ", " + b.to_string(); });
      out.expect(mul(a, b, ArithPath::Tables) == mul(a, b, ArithPath::Ghost), [&] { return "product paths differ for " + a.to_string() + ", " + b.to_string(); });
    }
  });
}

void suite_fv(const SuiteOptions& opts, SuiteReport& rep) {
  const std::size_t samples = pick(opts.samples, 5);
  const TruncationSet S = TruncationSet::range(rep.max);
  const std::vector<Ring> rings{integers(), integers_mod(4)};
  struct Case {
    int kind;
    std::uint64_t n, m;
  };
  std::vector<Case> cases;
  for (std::uint64_t n = 1; n <= rep.max; ++n) {
    cases.push_back({0, n, 0});
    if (is_prime(n)) cases.push_back({4, n, 0});
    for (std::uint64_t m = 2; n >= 2 && n * m <= rep.max; ++m) {
      if (gcd_u64(n, m) == 1) cases.push_back({1, n, m});
      cases.push_back({2, n, m});
      cases.push_back({3, n, m});
    }
  }
  run_cases(cases.size() * rings.size(), opts.exec, rep, [&](std::size_t i, CaseResult& out) {
    const Case c = cases[i / rings.size()];
    const Ring& R = rings[i % rings.size()];
    auto rng = case_rng(opts, i);
    const std::uint64_t n = c.n, m = c.m;
    const std::string tag = " over " + R->to_string() + " with n=" + std::to_string(n) + ", m=" + std::to_string(m);
    for (std::size_t k = 0; k < samples; ++k) {
      switch (c.kind) {
        case 0: {
          const WittVector x = random_witt(S.quotient(n), R, rng, 9);
          out.expect(frobenius(n, verschiebung(n, x, S)) == scale(n, x), [&] { return "F_n V_n != n" + tag + " at " + x.to_string(); });
          break;
        }
        case 1: {
          const WittVector x = random_witt(S.quotient(m), R, rng, 9);
          out.expect(frobenius(n, verschiebung(m, x, S)) == verschiebung(m, frobenius(n, x), S.quotient(n)),
                     [&] { return "F_n V_m != V_m F_n" + tag + " at " + x.to_string(); });
          break;
        }
        case 2: {
          const WittVector x = random_witt(S, R, rng, 9);
          out.expect(frobenius(n, frobenius(m, x)) == frobenius(n * m, x), [&] { return "F_n F_m != F_nm" + tag; });
          break;
        }
        case 3: {
          const TruncationSet Snm = S.quotient(n * m);
          const WittVector x = random_witt(Snm, R, rng, 9);
          out.expect(verschiebung(n, verschiebung(m, x, S.quotient(n)), S) == verschiebung(n * m, x, S),
                     [&] { return "V_n V_m != V_nm" + tag; });
          break;
        }
        case 4: {
          const WittVector a = random_witt(S.quotient(n), R, rng, 9);
          const WittVector v = verschiebung(n, a, S);
          out.expect(mul(v, v) == scale(n, verschiebung(n, mul(a, a), S)),
                     [&] { return "V_p(a)^2 != p V_p(a^2)" + tag + " at " + a.to_string(); });
          break;
        }
      }
    }
  });
}

void suite_zbasis(const SuiteOptions& opts, SuiteReport& rep) {
  const TruncationSet S = TruncationSet::range(rep.max);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (std::uint64_t m = 1; m <= rep.max; ++m)
    for (std::uint64_t n = m; n <= rep.max; ++n)
      if (m / gcd_u64(m, n) * n <= rep.max) pairs.emplace_back(m, n);
  run_cases(pairs.size(), opts.exec, rep, [&](std::size_t i, CaseResult& out) {
    const auto [m, n] = pairs[i];
    const StructureConstant sc = vbasis_product(m, n, S);
    const std::uint64_t g = gcd_u64(m, n);
    const std::string tag = " for m=" + std::to_string(m) + ", n=" + std::to_string(n);
    out.expect(sc.c == g && sc.index == m * n / g, [&] { return "structure constant mismatch" + tag; });
    const WittVector expected = scale(sc.c, v_basis_element(sc.index, S));
    const WittVector vm = v_basis_element(m, S), vn = v_basis_element(n, S);
    out.expect(mul(vm, vn, ArithPath::Ghost) == expected, [&] { return "ghost-path product differs" + tag; });
    out.expect(mul(vm, vn, ArithPath::Tables) == expected, [&] { return "table-path product differs" + tag; });
  });
  const std::size_t samples = pick(opts.samples, 1000);
  const std::size_t chunks = 10;
  run_cases(chunks, opts.exec, rep, [&](std::size_t c, CaseResult& out) {
    auto rng = case_rng(opts, 1000 + c);
    for (std::size_t k = c; k < samples; k += chunks) {
      const TruncationSet T = TruncationSet::range(k % rep.max + 1);
      const WittVector w = random_witt(T, integers(), rng, 20);
      const VBasisExpansion e = to_vbasis(w);
      out.expect(from_vbasis(e) == w, [&] { return "V-basis round trip failed for " + w.to_string(); });
      WittVector sum = WittVector::zero(T, integers());
      for (std::size_t j = 0; j < T.size(); ++j) sum = add(sum, scale(e.coeffs[j], v_basis_element(T[j], T)), ArithPath::Tables);
      out.expect(sum == w, [&] { return "sum of c_n V_n(1) differs from " + w.to_string(); });
    }
  });
}

void suite_eps(const SuiteOptions& opts, SuiteReport& rep) {
  const std::vector<std::uint64_t> primes{2, 3, 5};
  const std::size_t samples = pick(opts.samples, 200);
  run_cases(primes.size() * rep.max, opts.exec, rep, [&](std::size_t i, CaseResult& out) {
    const std::uint64_t p = primes[i / rep.max];
    const TruncationSet S = TruncationSet::range(i % rep.max + 1);
    const Ring R = local_integers_at(p);
    const std::string tag = " for p=" + std::to_string(p) + at(S);
    const EpsilonFamily fam = epsilon_family(S, p, R);
    const EpsilonLawReport laws = check_epsilon_laws(fam);
    out.checks += laws.checks;
    for (const auto& f : laws.failures) out.expect(false, [&] { return f + tag; });
    out.expect(fam.idempotents.size() == predicted_component_count(S, p), [&] { return "family size" + tag; });
    // Ghost oracle: eps_1 has ghost 1 exactly at the powers of p.
    const GhostVector g1 = ghost(fam.idempotents.at(1));
    for (std::size_t k = 0; k < S.size(); ++k)
      out.expect(g1.components()[k] == RingValue::from_integer(R, is_power_of(S[k], p) ? 1 : 0),
                 [&] { return "ghost of eps_1 at " + std::to_string(S[k]) + tag; });
    for (std::uint64_t m : S.elements()) {
      if (m % p == 0) continue;
      for (const auto& [n, e] : fam.idempotents) {
        const FrobeniusEpsilon fe = frobenius_of_epsilon(m, n, S, p, R);
        out.expect(fe.matches, [&] { return "F_" + std::to_string(m) + "(eps_" + std::to_string(n) + ") case rule" + tag; });
      }
    }
    auto rng = case_rng(opts, i);
    for (std::size_t k = 0; k < samples; ++k) {
      const WittVector w = random_witt(S, R, rng, 9);
      const auto parts = decompose(w, p);
      out.expect(reassemble(parts, S, p, R) == w, [&] { return "decompose/reassemble failed for " + w.to_string() + tag; });
      const GhostVector gw = ghost(w);
      for (const auto& [n, c] : parts) {
        const GhostVector gc = ghost(c);
        for (std::size_t j = 0; j < c.S().size(); ++j)
          out.expect(gc.components()[j] == gw.component(n * c.S()[j]),
                     [&] { return "component " + std::to_string(n) + " disagrees with the ghost reindexing" + tag; });
      }
    }
  });
}

void suite_exactseq(const SuiteOptions& opts, SuiteReport& rep) {
  struct Case {
    Ring A;
    TruncationSet S;
    std::uint64_t n;
  };
  std::vector<Case> cases;
  const auto subsets = sub_truncation_sets(TruncationSet::range(rep.max));
  for (const Ring& A : {integers_mod(2), integers_mod(3), integers_mod(4)}) {
    const auto q = A->cardinality().get_ui();
    for (const auto& S : subsets) {
      std::uint64_t size = 1;
      for (std::size_t k = 0; k < S.size() && size <= 4096; ++k) size *= q;
      if (size > 4096) continue;
      for (std::uint64_t n = 1; n <= S.max() + 1; ++n) cases.push_back({A, S, n});
    }
  }
  run_cases(cases.size(), opts.exec, rep, [&](std::size_t i, CaseResult& out) {
    const Case& c = cases[i];
    const ExactSequenceReport r = exact_sequence_check(c.A, c.S, c.n, 4096);
    out.expect(r.exact(), [&] {
      std::string s = "not exact over " + r.ring + at(c.S) + " with n=" + std::to_string(c.n);
      for (const auto& ce : r.counterexamples) s += "; " + ce;
      return s;
    });
    std::uint64_t q = c.A->cardinality().get_ui(), src = 1, mid = 1, tgt = 1;
    for (std::size_t k = 0; k < r.source.size(); ++k) src *= q;
    for (std::size_t k = 0; k < c.S.size(); ++k) mid *= q;
    for (std::size_t k = 0; k < r.target.size(); ++k) tgt *= q;
    out.expect(r.card_source == src && r.card_middle == mid && r.card_target == tgt && src * tgt == mid,
               [&] { return "cardinalities do not multiply" + at(c.S); });
  });
}

void suite_maximal(const SuiteOptions& opts, SuiteReport& rep) {
  struct LemmaCase {
    std::uint64_t p;
    std::vector<std::uint64_t> S;
    unsigned j;
  };
  const std::vector<LemmaCase> lemma{{2, {1, 2}, 1}, {2, {1, 2, 4}, 1}, {3, {1, 3}, 1}, {3, {1, 3}, 2},
                                     {2, {1, 2, 4, 8}, 1}, {2, {1, 2}, 2}, {5, {1, 5}, 1}};
  struct MixedCase {
    std::uint64_t p;
    std::vector<std::uint64_t> S;
  };
  const std::vector<MixedCase> mixed{{3, {1, 2}}, {2, {1, 3}}, {2, {1, 2, 3}}, {3, {1, 2, 3}},
                                     {5, {1, 2}}, {2, {1, 3, 9}}, {3, {1, 2, 4}}, {2, {1, 2, 3, 6}}};
  run_cases(lemma.size() + mixed.size(), opts.exec, rep, [&](std::size_t i, CaseResult& out) {
    if (i < lemma.size()) {
      const auto& c = lemma[i];
      const auto r = verify_maximal_ideal_lemma(c.p, TruncationSet::validate(c.S), c.j);
      out.expect(r.pass(), [&] {
        std::string s = "lemma fails for " + r.ring + at(r.S);
        for (const auto& w : r.witnesses) s += "; " + w;
        return s;
      });
      return;
    }
    const auto& c = mixed[i - lemma.size()];
    const TruncationSet S = TruncationSet::validate(c.S);
    const FiniteRingTable t = materialize(integers_mod(c.p), S, 4096, Execution::Serial);
    const AxiomReport ax = check_ring_axioms(t, 256, Execution::Serial);
    out.expect(ax.ok(), [&] { return "ring axioms fail" + at(S) + ": " + ax.failures.front(); });
    const auto maxes = maximal_ideals(t);
    const std::size_t predicted = predicted_component_count(S, c.p);
    out.expect(maxes.size() == predicted, [&] {
      return "W(F_" + std::to_string(c.p) + ")" + at(S) + " has " + std::to_string(maxes.size()) +
             " maximal ideals, predicted " + std::to_string(predicted);
    });
    for (const auto& I : maxes)
      out.expect(I.quotient_size == c.p, [&] { return "residue field of size " + std::to_string(I.quotient_size) + at(S); });
  });
}

void suite_phimod(const SuiteOptions& opts, SuiteReport& rep) {
  const TruncationSet Q = TruncationSet::range(rep.max);
  const Ring Z = integers();
  const auto family = phi_family(Q, Z);
  const std::size_t samples = pick(opts.samples, 20);
  run_cases(family.size(), opts.exec, rep, [&](std::size_t i, CaseResult& out) {
    const auto& [name, M] = family[i];
    const ValidationReport v = validate(M, {samples, opts.seed + i});
    out.checks += v.checks;
    for (const auto& f : v.failures)
      out.expect(false, [&] { return name + ": " + f.axiom + at(f.S) + " n=" + std::to_string(f.n) + ": " + f.witness; });
    // Hom-condition chain on morphisms that are and are not morphisms.
    const std::size_t r = M.rank();
    std::mt19937_64 rng = case_rng(opts, i);
    std::uniform_int_distribution<int> k(-3, 3);
    std::vector<std::pair<PhiMorphism, bool>> candidates;
    candidates.emplace_back(scalar_endomorphism(M, 0), true);
    candidates.emplace_back(scalar_endomorphism(M, k(rng)), true);
    std::vector<mpz_class> diag;
    for (std::size_t j = 0; j < r; ++j) diag.push_back(k(rng));
    candidates.emplace_back(diagonal_endomorphism(M, diag), true);
    // Teichmuller [2] scalar: F_n[2] = [2^n] differs from [2].
    PhiMorphism teich{M, M, {}};
    for (const auto& S : M.levels())
      teich.mats[S] = kronecker(GhostMatrix::of(teichmuller(RingValue::from_integer(Z, 2), S)), GhostMatrix::identity(S, r));
    candidates.emplace_back(std::move(teich), false);
    for (const auto& [f, expected] : candidates) {
      const MorphismReport mr = hom_set_check(f);
      out.checks += mr.checks;
      out.expect(mr.is_morphism() == expected, [&] { return name + ": morphism test gave the wrong answer"; });
      out.expect(mr.consistent(), [&] {
        std::string s = name + ": equivalent hom conditions disagree";
        for (const auto& w : mr.witnesses) s += "; " + w;
        return s;
      });
    }
  });

  // Identities between constructions, under the canonical basis identifications.
  const auto base = phi_base_objects(Q, Z);
  CaseResult ids;
  auto iso = [&](const PhiObject& a, const PhiObject& b, const std::vector<std::size_t>& perm, const std::string& what) {
    ids.expect(isomorphic_via(a, b, perm), [&] { return "expected " + what; });
  };
  auto ident = [](std::size_t r) {
    std::vector<std::size_t> p(r);
    for (std::size_t i = 0; i < r; ++i) p[i] = i;
    return p;
  };
  const PhiObject one = unit(Q, Z);
  iso(tensor(tate(-1, Q, Z), tate(-1, Q, Z)), tate(-2, Q, Z), {0}, "1(-1) x 1(-1) = 1(-2)");
  iso(dual(one), one, {0}, "dual of 1 = 1");
  iso(dual(tate(-1, Q, Z)), tate(1, Q, Z), {0}, "dual of 1(-1) = 1(1)");
  for (const auto& [nm, M] : base) {
    const std::size_t r = M.rank();
    iso(tensor(one, M), M, ident(r), "1 x " + nm + " = " + nm);
    iso(internal_hom(one, M), M, ident(r), "Hom(1, " + nm + ") = " + nm);
    for (const auto& [nn, N] : base) {
      const std::size_t rn = N.rank();
      // Hom(M,N) basis (k,l) at k*r + l; dual(M) x N basis (l,k) at l*rn + k.
      std::vector<std::size_t> perm(r * rn);
      for (std::size_t kk = 0; kk < rn; ++kk)
        for (std::size_t l = 0; l < r; ++l) perm[kk * r + l] = l * rn + kk;
      iso(internal_hom(M, N), tensor(dual(M), N), perm, "Hom(" + nm + ", " + nn + ") = dual(" + nm + ") x " + nn);
      iso(tensor(tensor(M, N), one), tensor(M, tensor(N, one)), ident(r * rn), "associativity for " + nm + ", " + nn);
    }
  }
  // Hom(M x N, P) = Hom(M, Hom(N, P)) on a few triples.
  for (std::size_t a = 0; a < base.size(); a += 2)
    for (std::size_t b = 1; b < base.size(); b += 2)
      for (std::size_t c = 0; c < base.size(); c += 3) {
        const PhiObject &M = base[a].second, &N = base[b].second, &P = base[c].second;
        const std::size_t rm = M.rank(), rn = N.rank(), rp = P.rank();
        // left basis (k, (i, j)) at k*rm*rn + i*rn + j; right basis ((k, j), i) at (k*rn + j)*rm + i.
        std::vector<std::size_t> perm(rm * rn * rp);
        for (std::size_t k = 0; k < rp; ++k)
          for (std::size_t i = 0; i < rm; ++i)
            for (std::size_t j = 0; j < rn; ++j) perm[k * rm * rn + i * rn + j] = (k * rn + j) * rm + i;
        iso(internal_hom(tensor(M, N), P), internal_hom(M, internal_hom(N, P)), perm,
            "Hom(M x N, P) = Hom(M, Hom(N, P)) for " + base[a].first + ", " + base[b].first + ", " + base[c].first);
      }
  // Tangent is a tensor functor.
  for (const auto& [nm, M] : base)
    for (const auto& [nn, N] : base) {
      const PhiMorphism f = diagonal_endomorphism(M, std::vector<mpz_class>(M.rank(), 2));
      const PhiMorphism g = scalar_endomorphism(N, -3);
      ids.expect(tangent(tensor(M, N)).rank == tangent(M).rank * tangent(N).rank, [&] { return "tangent rank of " + nm + " x " + nn; });
      ids.expect(tangent(tensor(f, g)) == kronecker(tangent(f), tangent(g)), [&] { return "tangent of f x g for " + nm + ", " + nn; });
    }
  rep.checks += ids.checks;
  rep.failure_count += ids.failure_count;
  for (auto& f : ids.failures)
    if (rep.failures.size() < kKeptFailures) rep.failures.push_back(std::move(f));
}

void suite_tangent(const SuiteOptions& opts, SuiteReport& rep) {
  const TruncationSet Q = TruncationSet::range(rep.max);
  const Ring Z = integers();
  const auto family = phi_family(Q, Z);
  const std::size_t count = pick(opts.samples, 100);
  run_cases(count, opts.exec, rep, [&](std::size_t i, CaseResult& out) {
    auto rng = case_rng(opts, i);
    std::uniform_int_distribution<int> k(-2, 2);
    std::uniform_int_distribution<std::size_t> obj(0, family.size() - 1);
    PhiMorphism f;
    std::string what;
    switch (i % 3) {
      case 0: {
        const auto& [name, M] = family[obj(rng)];
        const int s = k(rng);
        f = scalar_endomorphism(M, s);
        what = "scalar " + std::to_string(s) + " on " + name;
        break;
      }
      case 1: {
        const auto& [name, M] = family[obj(rng)];
        std::vector<mpz_class> d;
        for (std::size_t j = 0; j < M.rank(); ++j) d.push_back(k(rng));
        f = diagonal_endomorphism(M, d);
        what = "diagonal on " + name;
        break;
      }
      default: {
        const int a = k(rng), b = k(rng), c = k(rng);
        f = triangular_endomorphism(Q, Z, a, b, c);
        what = "triangular (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
      }
    }
    const MorphismReport mr = hom_set_check(f);
    out.checks += mr.checks;
    out.expect(mr.is_morphism() && mr.consistent(), [&] { return what + " is not a valid endomorphism"; });
    const ConservativityReport cr = conservativity_harness(f);
    out.expect(cr.ok(), [&] {
      std::string s = what + ": faithful " + cr.faithful + ", conservative " + cr.conservative;
      for (const auto& w : cr.witnesses) s += "; " + w;
      return s;
    });
  });

  struct PCase {
    Ring R;
    std::uint64_t p;
    TruncationSet Q;
  };
  const std::vector<PCase> pcases{{local_integers_at(2), 2, Q},
                                  {rationals(), 2, Q},
                                  {local_integers_at(3), 3, Q},
                                  {rationals(), 2, TruncationSet::validate(std::vector<std::uint64_t>{1, 2})},
                                  {local_integers_at(2), 2, TruncationSet::validate(std::vector<std::uint64_t>{1, 2, 3, 6})}};
  std::vector<std::pair<std::size_t, PhiObject>> objs;
  std::vector<std::string> names;
  for (std::size_t c = 0; c < pcases.size(); ++c) {
    const auto base = phi_base_objects(pcases[c].Q, pcases[c].R);
    for (const auto& [nm, M] : base) {
      objs.emplace_back(c, M);
      names.push_back(nm);
    }
    objs.emplace_back(c, tensor(base[4].second, base[5].second));
    names.push_back("tensor(" + base[4].first + ", " + base[5].first + ")");
    objs.emplace_back(c, internal_hom(base[4].second, base[1].second));
    names.push_back("hom(" + base[4].first + ", " + base[1].first + ")");
  }
  run_cases(objs.size(), opts.exec, rep, [&](std::size_t i, CaseResult& out) {
    const auto& [c, M] = objs[i];
    const PTypicalReport r = p_typical_reduction_check(M, pcases[c].p, {pick(opts.samples, 100) / 10 + 2, opts.seed + i});
    out.checks += r.checks;
    for (const auto& f : r.failures)
      out.expect(false, [&] { return names[i] + " over " + pcases[c].R->to_string() + ": " + f; });
  });
}

struct Suite {
  const char* name;
  std::uint64_t default_max;
  void (*run)(const SuiteOptions&, SuiteReport&);
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all{
      {"ghost-hom", 12, suite_ghost_hom}, {"ghost-roundtrip", 12, suite_ghost_roundtrip},
      {"tables", 24, suite_tables},       {"fv", 24, suite_fv},
      {"zbasis", 24, suite_zbasis},       {"eps", 12, suite_eps},
      {"exactseq", 12, suite_exactseq},   {"maximal", 0, suite_maximal},
      {"phimod", 6, suite_phimod},        {"tangent", 6, suite_tangent},
  };
  return all;
}

const Suite& find_suite(const std::string& name) {
  for (const auto& s : suites())
    if (name == s.name) return s;
  throw Error(Errc::InvalidArgument, "unknown suite '" + name + "'");
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& s : suites()) out.emplace_back(s.name);
  return out;
}

std::uint64_t suite_default_max(const std::string& name) { return find_suite(name).default_max; }

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  const Suite& s = find_suite(name);
  SuiteReport rep;
  rep.name = s.name;
  rep.max = opts.max ? opts.max : s.default_max;
  const auto t0 = std::chrono::steady_clock::now();
  s.run(opts, rep);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<std::pair<std::string, PhiObject>> phi_base_objects(const TruncationSet& Q, const Ring& R) {
  std::vector<std::pair<std::string, PhiObject>> out;
  out.emplace_back("1", unit(Q, R));
  for (int b = 1; b <= 3; ++b) out.emplace_back("1(-" + std::to_string(b) + ")", tate(-b, Q, R));
  out.emplace_back("1+1(-1)", direct_sum(out[0].second, out[1].second));
  out.emplace_back("1(-1)+1(-2)", direct_sum(out[1].second, out[2].second));
  return out;
}

std::vector<std::pair<std::string, PhiObject>> phi_family(const TruncationSet& Q, const Ring& R) {
  const auto base = phi_base_objects(Q, R);
  auto out = base;
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i; j < base.size(); ++j)
      out.emplace_back("tensor(" + base[i].first + ", " + base[j].first + ")", tensor(base[i].second, base[j].second));
  for (const auto& [a, M] : base)
    for (const auto& [b, N] : base) out.emplace_back("hom(" + a + ", " + b + ")", internal_hom(M, N));
  for (const auto& [a, M] : base) out.emplace_back("dual(" + a + ")", dual(M));
  return out;
}

mpz_class linear_ghost_multiplier(const TruncationSet& Q) {
  for (mpz_class c = 1;; ++c) {
    std::vector<mpq_class> g;
    for (auto m : Q.elements()) g.emplace_back(c * m);
    if (witt_from_ghost(Q, integers(), g)) return c;
    if (c > 1000000) throw InternalError("no integral multiple of the linear ghost vector found");
  }
}

PhiMorphism triangular_endomorphism(const TruncationSet& Q, const Ring& R, const mpz_class& k1, const mpz_class& k2,
                                    const mpz_class& c) {
  const PhiObject M = direct_sum(unit(Q, R), tate(-1, Q, R));
  const mpz_class L = linear_ghost_multiplier(Q);
  PhiMorphism f{M, M, {}};
  for (const auto& S : M.levels()) {
    GhostMatrix m(S, 2, 2);
    for (std::size_t i = 0; i < S.size(); ++i) {
      m.at(i, 0, 0) = k1;
      m.at(i, 1, 1) = k2;
      m.at(i, 0, 1) = c * L * S[i];
    }
    f.mats[S] = std::move(m);
  }
  return f;
}

}  // namespace witt
