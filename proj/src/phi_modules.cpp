#include "witt/phi_modules.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <random>

#include "witt/epsilon.hpp"
#include "witt/errors.hpp"
#include "witt/witt_core.hpp"

namespace witt {

namespace {

void require_rational_subring(const Ring& R) {
  switch (R->kind) {
    case RingKind::Integers:
    case RingKind::Rationals:
    case RingKind::LocalIntegersAtP:
      return;
    default:
      throw Error(Errc::WrongRing, "phi-modules need a subring of Q, got " + R->to_string());
  }
}

void require_same_ambient(const PhiObject& M, const PhiObject& N) {
  if (!(M.Q == N.Q) || !same_ring(M.R, N.R))
    throw Error(Errc::AmbientMismatch, "objects over (" + M.Q.to_string() + ", " + M.R->to_string() + ") and (" +
                                           N.Q.to_string() + ", " + N.R->to_string() + ")");
}

mpz_class power(std::uint64_t n, std::uint64_t k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), n, k);
  return r;
}

bool strictly_inside(const TruncationSet& T, const TruncationSet& S) { return T.is_subset_of(S) && !(T == S); }

template <class PhiFn, class BetaFn>
PhiObject build(const TruncationSet& Q, const Ring& R, std::size_t r, std::uint64_t a, std::int64_t twist,
                PhiFn phi_fn, BetaFn beta_fn) {
  require_rational_subring(R);
  PhiObject M;
  M.Q = Q;
  M.R = R;
  M.a = a;
  M.twist = twist;
  const auto levels = sub_truncation_sets(Q);
  for (const auto& S : levels) {
    M.ranks[S] = r;
    for (const auto& T : levels)
      if (strictly_inside(T, S)) M.res[{S, T}] = GhostMatrix::identity(T, r);
    for (std::uint64_t n : S.elements()) {
      const TruncationSet Sn = S.quotient(n);
      M.phi[{S, n}] = phi_fn(Sn, n);
      M.beta[{S, n}] = beta_fn(Sn, n);
    }
  }
  return M;
}

// Applies fn(S, n, matrix) to every phi (or beta) entry.
template <class Fn>
void transform(std::map<PhiObject::SN, GhostMatrix>& data, Fn fn) {
  for (auto& [key, m] : data) m = fn(key.first, key.second, m);
}

GhostMatrix apply_phi(const GhostMatrix& Phi, std::uint64_t n, const GhostMatrix& x) { return Phi * x.frobenius(n); }

GhostMatrix apply_beta(const GhostMatrix& B, std::uint64_t n, const GhostMatrix& y, const TruncationSet& S) {
  return (B * y).verschiebung(n, S);
}

GhostMatrix random_vector(const TruncationSet& S, const Ring& R, std::size_t r, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coord(-3, 3);
  std::vector<WittVector> entries;
  entries.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<RingValue> c;
    c.reserve(S.size());
    for (std::size_t k = 0; k < S.size(); ++k) c.push_back(RingValue::from_integer(R, coord(rng)));
    entries.emplace_back(S, R, std::move(c));
  }
  return GhostMatrix::from_witt(S, r, 1, entries);
}

GhostMatrix basis_vector(const TruncationSet& S, std::size_t r, std::size_t i) {
  GhostMatrix e(S, r, 1);
  for (std::size_t c = 0; c < S.size(); ++c) e.at(c, i, 0) = 1;
  return e;
}

// V_d(1) over S, as a 1 x 1 matrix.
GhostMatrix v_one(std::uint64_t d, const TruncationSet& S) {
  GhostMatrix m(S, 1, 1);
  for (std::size_t c = 0; c < S.size(); ++c)
    if (S[c] % d == 0) m.at(c, 0, 0) = d;
  return m;
}

std::string brief(const GhostMatrix& m) {
  std::string s = m.to_string();
  if (s.size() > 240) s = s.substr(0, 237) + "...";
  return s;
}

struct Collector {
  std::uint64_t checks = 0;
  std::vector<AxiomFailure> failures;
  void expect(bool ok, const char* axiom, const TruncationSet& S, std::uint64_t n, const std::string& witness) {
    ++checks;
    if (!ok && failures.size() < 16) failures.push_back({axiom, S, n, witness});
  }
  void expect_eq(const GhostMatrix& got, const GhostMatrix& want, const char* axiom, const TruncationSet& S,
                 std::uint64_t n) {
    ++checks;
    if (!(got == want) && failures.size() < 16)
      failures.push_back({axiom, S, n, "got " + brief(got) + "; expected " + brief(want)});
  }
};

void validate_level(const PhiObject& M, const TruncationSet& S, const std::vector<TruncationSet>& levels,
                    const ValidateOptions& opts, std::size_t level_index, Collector& out) {
  const std::size_t r = M.rank();
  const auto rank_it = M.ranks.find(S);
  out.expect(rank_it != M.ranks.end() && rank_it->second == r, "rank", S, 0,
             "rank at " + S.to_string() + " differs from rank " + std::to_string(r));

  std::mt19937_64 rng(opts.seed * 0x9E3779B97F4A7C15ULL + level_index);

  // Transition maps: invertible over W_T(R), integral, transitive.
  for (const auto& T : levels) {
    if (!strictly_inside(T, S)) continue;
    const GhostMatrix Rst = M.res_at(S, T);
    out.expect(Rst.S() == T && Rst.rows() == r && Rst.cols() == r, "res-shape", S, 0, "Res to " + T.to_string());
    out.expect(Rst.integral_over(M.R), "integrality", S, 0, "Res to " + T.to_string() + ": " + brief(Rst));
    const auto inv = Rst.inverse();
    out.expect(inv && inv->integral_over(M.R), "base-change", S, 0,
               "Res to " + T.to_string() + " is not invertible over W_T(R)");
    for (const auto& U : levels)
      if (strictly_inside(U, T))
        out.expect_eq(M.res_at(T, U) * Rst.restrict_to(U), M.res_at(S, U), "restriction-transitivity", S, 0);
  }

  for (std::uint64_t n : S.elements()) {
    const TruncationSet Sn = S.quotient(n);
    const GhostMatrix& Phi = M.phi_at(S, n);
    const GhostMatrix& B = M.beta_at(S, n);
    out.expect(Phi.S() == Sn && Phi.rows() == r && Phi.cols() == r, "phi-shape", S, n, brief(Phi));
    out.expect(B.S() == Sn && B.rows() == r && B.cols() == r, "beta-shape", S, n, brief(B));
    out.expect(Phi.integral_over(M.R), "integrality", S, n, "phi: " + brief(Phi));
    out.expect(B.integral_over(M.R), "integrality", S, n, "beta: " + brief(B));

    const mpz_class na = power(n, M.a);
    const mpz_class na1 = power(n, M.a - 1);
    if (n == 1) {
      out.expect_eq(Phi, GhostMatrix::identity(Sn, r), "phi-identity", S, n);
      out.expect_eq(B, GhostMatrix::identity(Sn, r), "beta-identity", S, n);
    }
    out.expect_eq((Phi * B).scaled(mpq_class(n)), GhostMatrix::scalar(Sn, r, na), "phi-beta", S, n);
    out.expect_eq(B * Phi, GhostMatrix::scalar(Sn, r, na1), "lambda-law", S, n);

    // The lambda law evaluated on vectors: beta(lambda phi(x)) = n^{a-1} V_n(lambda) x.
    std::vector<GhostMatrix> lambdas{GhostMatrix(Sn, 1, 1), GhostMatrix::scalar(Sn, 1, 1)};
    for (std::uint64_t d : Sn.elements()) lambdas.push_back(v_one(d, Sn));
    for (std::size_t k = 0; k < opts.samples; ++k) lambdas.push_back(random_vector(Sn, M.R, 1, rng));
    for (const auto& lambda : lambdas) {
      const GhostMatrix x = random_vector(S, M.R, r, rng);
      const GhostMatrix lhs = apply_beta(B, n, apply_phi(Phi, n, x).times_scalar(lambda), S);
      const GhostMatrix rhs = x.times_scalar(lambda.verschiebung(n, S)).scaled(mpq_class(na1));
      out.expect_eq(lhs, rhs, "lambda-law", S, n);
      const GhostMatrix y = random_vector(Sn, M.R, r, rng).times_scalar(lambda);
      out.expect_eq(apply_phi(Phi, n, apply_beta(B, n, y, S)), y.scaled(mpq_class(na)), "phi-beta", S, n);
    }

    for (std::uint64_t m : S.elements()) {
      if (n == 1 || m == 1 || !S.contains(n * m)) continue;
      const TruncationSet Sm = S.quotient(m);
      const TruncationSet Snm = S.quotient(n * m);
      out.expect_eq(M.phi_at(Sm, n) * M.phi_at(S, m).frobenius(n), M.phi_at(S, n * m), "phi-composition", S, n * m);
      out.expect_eq(M.beta_at(S, m).frobenius(n) * M.beta_at(Sm, n), M.beta_at(S, n * m), "beta-composition", S,
                    n * m);
      for (int k = 0; k < 4; ++k) {
        const GhostMatrix y = random_vector(Snm, M.R, r, rng);
        out.expect_eq(apply_beta(M.beta_at(S, m), m, apply_beta(M.beta_at(Sm, n), n, y, Sm), S),
                      apply_beta(M.beta_at(S, n * m), n * m, y, S), "beta-composition", S, n * m);
        const GhostMatrix x = random_vector(S, M.R, r, rng);
        out.expect_eq(apply_phi(M.phi_at(Sm, n), n, apply_phi(M.phi_at(S, m), m, x)),
                      apply_phi(M.phi_at(S, n * m), n * m, x), "phi-composition", S, n * m);
      }
      if (gcd_u64(n, m) == 1) {
        const TruncationSet Sn_ = S.quotient(n);
        for (int k = 0; k < 4; ++k) {
          const GhostMatrix y = random_vector(Sm, M.R, r, rng);
          const GhostMatrix lhs = apply_phi(Phi, n, apply_beta(M.beta_at(S, m), m, y, S));
          const GhostMatrix rhs = apply_beta(M.beta_at(Sn_, m), m, apply_phi(M.phi_at(Sm, n), n, y), Sn_);
          out.expect_eq(lhs, rhs, "phi-beta-commute", S, n * m);
        }
      }
    }

    // Compatibility with the transition maps.
    for (const auto& T : levels) {
      if (!strictly_inside(T, S) || !T.contains(n)) continue;
      const TruncationSet Tn = T.quotient(n);
      const GhostMatrix Rst = M.res_at(S, T);
      const GhostMatrix Rn = M.res_at(Sn, Tn);
      out.expect_eq(M.phi_at(T, n) * Rst.frobenius(n), Rn * Phi.restrict_to(Tn), "phi-restriction", S, n);
      out.expect_eq(Rst.frobenius(n) * B.restrict_to(Tn), M.beta_at(T, n) * Rn, "beta-restriction", S, n);
    }
  }
}

std::vector<std::size_t> identity_perm(std::size_t r) {
  std::vector<std::size_t> p(r);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

std::size_t PhiObject::rank() const {
  const auto it = ranks.find(Q);
  if (it == ranks.end()) throw Error(Errc::ShapeMismatch, "no rank recorded at " + Q.to_string());
  return it->second;
}

GhostMatrix PhiObject::res_at(const TruncationSet& S, const TruncationSet& T) const {
  if (S == T) return GhostMatrix::identity(S, rank());
  const auto it = res.find({S, T});
  if (it == res.end())
    throw Error(Errc::ShapeMismatch, "no transition map " + S.to_string() + " -> " + T.to_string());
  return it->second;
}

const GhostMatrix& PhiObject::phi_at(const TruncationSet& S, std::uint64_t n) const {
  const auto it = phi.find({S, n});
  if (it == phi.end()) throw Error(Errc::ShapeMismatch, "no phi_" + std::to_string(n) + " at " + S.to_string());
  return it->second;
}

const GhostMatrix& PhiObject::beta_at(const TruncationSet& S, std::uint64_t n) const {
  const auto it = beta.find({S, n});
  if (it == beta.end()) throw Error(Errc::ShapeMismatch, "no beta_" + std::to_string(n) + " at " + S.to_string());
  return it->second;
}

std::vector<TruncationSet> PhiObject::levels() const { return sub_truncation_sets(Q); }

PhiObject rank_one(const TruncationSet& Q, const Ring& R, std::uint64_t e, std::uint64_t f, std::int64_t twist) {
  return build(
      Q, R, 1, e + f + 1, twist,
      [&](const TruncationSet& Sn, std::uint64_t n) { return GhostMatrix::scalar(Sn, 1, power(n, e)); },
      [&](const TruncationSet& Sn, std::uint64_t n) { return GhostMatrix::scalar(Sn, 1, power(n, f)); });
}

PhiObject unit(const TruncationSet& Q, const Ring& R) { return rank_one(Q, R, 0, 0); }

PhiObject tate(std::int64_t b, const TruncationSet& Q, const Ring& R) {
  if (b > 0) return rank_one(Q, R, 0, 0, b);
  return rank_one(Q, R, static_cast<std::uint64_t>(-b), 0);
}

PhiObject retwist(const PhiObject& M, std::uint64_t k) {
  PhiObject N = M;
  transform(N.phi, [&](const TruncationSet&, std::uint64_t n, const GhostMatrix& m) {
    return m.scaled(mpq_class(power(n, k)));
  });
  N.a += k;
  N.twist += static_cast<std::int64_t>(k);
  return N;
}

PhiObject renormalize(const PhiObject& M, std::uint64_t k) {
  PhiObject N = M;
  transform(N.beta, [&](const TruncationSet&, std::uint64_t n, const GhostMatrix& m) {
    return m.scaled(mpq_class(power(n, k)));
  });
  N.a += k;
  return N;
}

PhiObject direct_sum(const PhiObject& M0, const PhiObject& N0) {
  require_same_ambient(M0, N0);
  const std::int64_t c = std::max(M0.twist, N0.twist);
  PhiObject M = retwist(M0, static_cast<std::uint64_t>(c - M0.twist));
  PhiObject N = retwist(N0, static_cast<std::uint64_t>(c - N0.twist));
  const std::uint64_t a = std::max(M.a, N.a);
  M = renormalize(M, a - M.a);
  N = renormalize(N, a - N.a);
  PhiObject D;
  D.Q = M.Q;
  D.R = M.R;
  D.a = a;
  D.twist = c;
  for (const auto& [S, r] : M.ranks) D.ranks[S] = r + N.ranks.at(S);
  for (const auto& [key, m] : M.res) D.res[key] = block_diagonal(m, N.res.at(key));
  for (const auto& [key, m] : M.phi) D.phi[key] = block_diagonal(m, N.phi.at(key));
  for (const auto& [key, m] : M.beta) D.beta[key] = block_diagonal(m, N.beta.at(key));
  return D;
}

PhiObject tensor(const PhiObject& M, const PhiObject& N) {
  require_same_ambient(M, N);
  PhiObject P;
  P.Q = M.Q;
  P.R = M.R;
  P.a = M.a + N.a;
  P.twist = M.twist + N.twist;
  for (const auto& [S, r] : M.ranks) P.ranks[S] = r * N.ranks.at(S);
  for (const auto& [key, m] : M.res) P.res[key] = kronecker(m, N.res.at(key));
  for (const auto& [key, m] : M.phi) P.phi[key] = kronecker(m, N.phi.at(key));
  for (const auto& [key, m] : M.beta)
    P.beta[key] = kronecker(m, N.beta.at(key)).scaled(mpq_class(key.second));
  return P;
}

PhiObject internal_hom(const PhiObject& M, const PhiObject& N) {
  require_same_ambient(M, N);
  PhiObject H;
  H.Q = M.Q;
  H.R = M.R;
  H.a = M.a + N.a;
  H.twist = static_cast<std::int64_t>(M.a) + N.twist - M.twist;
  for (const auto& [S, r] : M.ranks) H.ranks[S] = r * N.ranks.at(S);
  for (const auto& [key, m] : M.res) {
    const auto inv = m.inverse();
    if (!inv) throw Error(Errc::InvalidArgument, "transition map of the source is not invertible");
    H.res[key] = kronecker(N.res.at(key), inv->transpose());
  }
  for (const auto& [key, m] : M.phi) {
    const std::uint64_t n = key.second;
    H.phi[key] = kronecker(N.phi.at(key), M.beta.at(key).transpose()).scaled(mpq_class(n));
    H.beta[key] = kronecker(N.beta.at(key), m.transpose());
  }
  return H;
}

PhiObject dual(const PhiObject& M) { return internal_hom(M, unit(M.Q, M.R)); }

ValidationReport validate(const PhiObject& M, const ValidateOptions& opts) {
  ValidationReport rep;
  const auto levels = M.levels();
  std::vector<Collector> per(levels.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < levels.size(); ++i) {
    try {
      validate_level(M, levels[i], levels, opts, i, per[i]);
    } catch (const Error& e) {
      per[i].expect(false, "shape", levels[i], 0, e.what());
    } catch (...) {
#pragma omp critical(witt_phi_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  for (auto& c : per) {
    rep.checks += c.checks;
    for (auto& f : c.failures) rep.failures.push_back(std::move(f));
  }
  return rep;
}

bool isomorphic_via(const PhiObject& M, const PhiObject& N, const std::vector<std::size_t>& perm) {
  if (!(M.Q == N.Q) || !same_ring(M.R, N.R) || M.ranks != N.ranks) return false;
  const std::size_t r = M.rank();
  if (perm.size() != r) return false;
  std::vector<bool> seen(r, false);
  for (auto i : perm) {
    if (i >= r || seen[i]) return false;
    seen[i] = true;
  }
  const std::int64_t c = std::max(M.twist, N.twist);
  const auto km = static_cast<std::uint64_t>(c - M.twist);
  const auto kn = static_cast<std::uint64_t>(c - N.twist);
  const std::uint64_t am = M.a + km, an = N.a + kn, a = std::max(am, an);
  for (const auto& [key, m] : M.res)
    if (!(m.permuted(perm) == N.res.at(key))) return false;
  for (const auto& [key, m] : M.phi) {
    const std::uint64_t n = key.second;
    if (!(m.permuted(perm).scaled(mpq_class(power(n, km))) == N.phi.at(key).scaled(mpq_class(power(n, kn)))))
      return false;
    if (!(M.beta.at(key).permuted(perm).scaled(mpq_class(power(n, a - am))) ==
          N.beta.at(key).scaled(mpq_class(power(n, a - an)))))
      return false;
  }
  return true;
}

bool isomorphic(const PhiObject& M, const PhiObject& N) {
  if (M.ranks != N.ranks) return false;
  const std::size_t r = M.rank();
  if (r > 6) throw Error(Errc::TooLarge, "permutation search is limited to rank 6");
  auto perm = identity_perm(r);
  do {
    if (isomorphic_via(M, N, perm)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

PhiMorphism scalar_endomorphism(const PhiObject& M, const mpz_class& k) {
  PhiMorphism f{M, M, {}};
  for (const auto& [S, r] : M.ranks) f.mats[S] = GhostMatrix::scalar(S, r, k);
  return f;
}

PhiMorphism diagonal_endomorphism(const PhiObject& M, const std::vector<mpz_class>& ks) {
  if (ks.size() != M.rank()) throw Error(Errc::ShapeMismatch, "diagonal length differs from the rank");
  PhiMorphism f{M, M, {}};
  for (const auto& [S, r] : M.ranks) {
    GhostMatrix d(S, r, r);
    for (std::size_t c = 0; c < S.size(); ++c)
      for (std::size_t i = 0; i < r; ++i) d.at(c, i, i) = ks[i];
    f.mats[S] = std::move(d);
  }
  return f;
}

PhiMorphism tensor(const PhiMorphism& f, const PhiMorphism& g) {
  PhiMorphism h{tensor(f.source, g.source), tensor(f.target, g.target), {}};
  for (const auto& [S, m] : f.mats) h.mats[S] = kronecker(m, g.mats.at(S));
  return h;
}

MorphismReport hom_set_check(const PhiObject& M, const PhiObject& N,
                             const std::map<TruncationSet, GhostMatrix>& mats) {
  require_same_ambient(M, N);
  MorphismReport rep;
  const std::size_t rm = M.rank(), rn = N.rank();
  auto witness = [&](const std::string& s) {
    if (rep.witnesses.size() < 8) rep.witnesses.push_back(s);
  };
  const auto levels = M.levels();
  for (const auto& S : levels) {
    const auto it = mats.find(S);
    if (it == mats.end()) throw Error(Errc::ShapeMismatch, "no matrix at " + S.to_string());
    const GhostMatrix& f = it->second;
    if (!(f.S() == S) || f.rows() != rn || f.cols() != rm)
      throw Error(Errc::ShapeMismatch, "matrix at " + S.to_string() + " must be " + std::to_string(rn) + "x" +
                                           std::to_string(rm) + " over " + S.to_string());
  }
  for (const auto& S : levels) {
    const GhostMatrix& f = mats.at(S);
    ++rep.checks;
    if (!f.integral_over(M.R)) {
      rep.integral = false;
      witness("f at " + S.to_string() + " is not over W_S(R)");
    }
    for (const auto& T : levels) {
      if (!strictly_inside(T, S)) continue;
      ++rep.checks;
      if (!(N.res_at(S, T) * f.restrict_to(T) == mats.at(T) * M.res_at(S, T))) {
        rep.commutes_with_restriction = false;
        witness("restriction " + S.to_string() + " -> " + T.to_string());
      }
    }
    for (std::uint64_t n : S.elements()) {
      const TruncationSet Sn = S.quotient(n);
      const GhostMatrix Ff = f.frobenius(n);
      const GhostMatrix& fn = mats.at(Sn);
      rep.checks += 3;
      const bool a = N.phi_at(S, n) * Ff == fn * M.phi_at(S, n);
      const bool b = (N.phi_at(S, n) * Ff * M.beta_at(S, n)).scaled(mpq_class(n)) ==
                     fn.scaled(mpq_class(power(n, M.a)));
      const bool lemma = (Ff * M.beta_at(S, n)).scaled(mpq_class(power(n, N.a))) ==
                         (N.beta_at(S, n) * fn).scaled(mpq_class(power(n, M.a)));
      if (!a) {
        rep.commutes_with_phi = false;
        witness("phi_" + std::to_string(n) + " at " + S.to_string());
      }
      if (!b) rep.hom_condition = false;
      if (a != b) {
        rep.divergence = true;
        witness("hom conditions disagree for n=" + std::to_string(n) + " at " + S.to_string());
      }
      if (!lemma) {
        rep.beta_lemma = false;
        if (a) witness("beta_" + std::to_string(n) + " does not commute at " + S.to_string());
      }
    }
  }
  return rep;
}

bool RMatrix::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](const mpq_class& x) { return x == 0; });
}

TangentModule tangent(const PhiObject& M) {
  const TruncationSet one = TruncationSet::range(1);
  return {M.R, M.ranks.at(one), M.twist};
}

RMatrix tangent(const PhiMorphism& f) {
  const TruncationSet one = TruncationSet::range(1);
  const GhostMatrix& m = f.mats.at(one);
  RMatrix t{m.rows(), m.cols(), {}};
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t.entries.push_back(m.at(0, i, j));
  return t;
}

RMatrix kronecker(const RMatrix& a, const RMatrix& b) {
  RMatrix m{a.rows * b.rows, a.cols * b.cols, std::vector<mpq_class>(a.rows * b.rows * a.cols * b.cols)};
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j)
      for (std::size_t k = 0; k < b.rows; ++k)
        for (std::size_t l = 0; l < b.cols; ++l)
          m.entries[(i * b.rows + k) * m.cols + j * b.cols + l] = a.entries[i * a.cols + j] * b.entries[k * b.cols + l];
  return m;
}

ConservativityReport conservativity_harness(const PhiMorphism& f) {
  ConservativityReport rep;
  const TruncationSet one = TruncationSet::range(1);
  const GhostMatrix& t = f.mats.at(one);
  if (t.is_zero()) {
    rep.faithful = "pass";
    for (const auto& [S, m] : f.mats)
      if (!m.is_zero()) {
        rep.faithful = "fail";
        rep.witnesses.push_back("tangent is zero but f at " + S.to_string() + " is " + brief(m));
      }
  } else {
    rep.faithful = "not applicable";
  }
  const auto tinv = t.inverse();
  if (tinv && tinv->integral_over(f.source.R)) {
    rep.conservative = "pass";
    for (const auto& [S, m] : f.mats) {
      const auto inv = m.inverse();
      if (!inv || !inv->integral_over(f.source.R)) {
        rep.conservative = "fail";
        rep.witnesses.push_back("tangent is invertible but f at " + S.to_string() + " is not: " + brief(m));
      }
    }
  } else {
    rep.conservative = "not applicable";
  }
  return rep;
}

PTypicalReport p_typical_reduction_check(const PhiObject& M, std::uint64_t p, const ValidateOptions& opts) {
  require_local_algebra(M.R, p);
  PTypicalReport rep;
  rep.p = p;
  const std::size_t r = M.rank();
  std::mt19937_64 rng(opts.seed ^ 0x5DEECE66DULL);
  auto expect = [&](bool ok, const std::string& what) {
    ++rep.checks;
    if (!ok && rep.failures.size() < 16) rep.failures.push_back(what);
  };
  for (const auto& S : M.levels()) {
    const std::string at = " at " + S.to_string();
    const TruncationSet Sp = S.p_part(p);
    const GhostMatrix eps1 = GhostMatrix::of(epsilon(1, S, p, M.R));
    const GhostMatrix Rsp = M.res_at(S, Sp);
    const auto Rinv = Rsp.inverse();
    if (!Rinv || !Rinv->integral_over(M.R)) {
      expect(false, "transition to " + Sp.to_string() + " is not invertible" + at);
      continue;
    }
    auto forward = [&](const GhostMatrix& x) { return Rsp * x.restrict_to(Sp); };
    auto backward = [&](const GhostMatrix& y) -> std::optional<GhostMatrix> {
      const auto coords = ((*Rinv) * y).to_witt(M.R);
      if (!coords) return std::nullopt;
      std::vector<WittVector> lifted;
      for (const auto& w : *coords) lifted.push_back(zero_extend(w, S));
      return GhostMatrix::from_witt(S, r, 1, lifted).times_scalar(eps1);
    };
    std::vector<GhostMatrix> xs, ys;
    for (std::size_t i = 0; i < r; ++i) {
      xs.push_back(basis_vector(S, r, i));
      ys.push_back(basis_vector(Sp, r, i));
    }
    for (std::size_t k = 0; k < opts.samples; ++k) {
      xs.push_back(random_vector(S, M.R, r, rng));
      ys.push_back(random_vector(Sp, M.R, r, rng));
    }
    for (const auto& x : xs) {
      const GhostMatrix ex = x.times_scalar(eps1);
      const auto back = backward(forward(ex));
      expect(back && *back == ex, "eps_1 M_S -> M_{S_p} is not injective" + at);
    }
    for (const auto& y : ys) {
      const auto x = backward(y);
      expect(x.has_value(), "lift of a vector over " + Sp.to_string() + " is not integral" + at);
      if (x) expect(forward(*x) == y, "eps_1 M_S -> M_{S_p} is not surjective" + at);
    }

    for (std::uint64_t n : S.elements()) {
      if (n % p == 0) continue;
      const std::string atn = " for n=" + std::to_string(n) + at;
      const TruncationSet Sn = S.quotient(n);
      const GhostMatrix epsn = GhostMatrix::of(epsilon(n, S, p, M.R));
      const GhostMatrix eps1n = GhostMatrix::of(epsilon(1, Sn, p, M.R));
      const GhostMatrix& Phi = M.phi_at(S, n);
      const GhostMatrix& B = M.beta_at(S, n);
      const mpq_class inv_na(mpz_class(1), power(n, M.a));
      auto psi = [&](const GhostMatrix& y) { return apply_beta(B, n, y, S).times_scalar(epsn).scaled(inv_na); };
      for (const auto& x0 : xs) {
        const GhostMatrix x = x0.times_scalar(epsn);
        const GhostMatrix fx = apply_phi(Phi, n, x);
        expect(fx == fx.times_scalar(eps1n), "phi_n(eps_n x) leaves eps_1 M_{S/n}" + atn);
        expect(psi(fx) == x, "(eps_n/n^a) beta_n is not a left inverse of phi_n" + atn);
      }
      std::vector<GhostMatrix> vs;
      for (std::size_t i = 0; i < r; ++i) vs.push_back(basis_vector(Sn, r, i));
      for (std::size_t k = 0; k < opts.samples; ++k) vs.push_back(random_vector(Sn, M.R, r, rng));
      for (const auto& v0 : vs) {
        const GhostMatrix v = v0.times_scalar(eps1n);
        const GhostMatrix u = psi(v);
        expect(u.integral_over(M.R), "(eps_n/n^a) beta_n(y) is not integral" + atn);
        expect(apply_phi(Phi, n, u) == v, "(eps_n/n^a) beta_n is not a right inverse of phi_n" + atn);
      }
    }

    if (M.R->kind == RingKind::Rationals) {
      std::size_t total = 0;
      for (std::uint64_t n : S.elements()) total += M.phi_at(S, n).component_rank(1);
      expect(total == S.size() * r, "x -> (R_{1} phi_n x)_n has rank " + std::to_string(total) + ", expected " +
                                        std::to_string(S.size() * r) + at);
    }
  }
  return rep;
}

}  // namespace witt
