#include "witt/cli.hpp"

#include <algorithm>
#include <CLI11.hpp>

#include <map>
#include <optional>

#include "witt/epsilon.hpp"
#include "witt/errors.hpp"
#include "witt/finite_witt.hpp"
#include "witt/json_io.hpp"
#include "witt/phi_modules.hpp"
#include "witt/verify.hpp"
#include "witt/witt_core.hpp"
#include "witt/witt_z.hpp"

namespace witt::cli {

namespace {

using io::json;

struct Args {
  std::string ring = "z";
  std::string S;
  std::string coords;
  std::string ghost;
  std::string a, b;
  std::string T;
  std::string path = "auto";
  std::string components;
  std::string Q = "1..6";
  std::string suite;
  std::string action;
  std::string in, in2;
  std::uint64_t n = 1;
  std::uint64_t p = 0;
  std::uint64_t max = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = SuiteOptions{}.seed;
  std::uint64_t cap = 4096;
  unsigned j = 1;
  std::int64_t twist = 0;
  bool maximal = false;
  bool lemma = false;
  bool serial = false;
  std::string product;
};

ArithPath parse_path(const std::string& s) {
  if (s == "auto") return ArithPath::Auto;
  if (s == "ghost") return ArithPath::Ghost;
  if (s == "tables") return ArithPath::Tables;
  throw Error(Errc::InvalidArgument, "unknown arithmetic path '" + s + "'");
}

TruncationSet need_S(const Args& a) {
  if (a.S.empty()) throw Error(Errc::InvalidArgument, "--S is required");
  return io::parse_truncation(a.S);
}

json elements_json(const FiniteRingTable& t, const std::vector<std::uint32_t>& members) {
  json arr = json::array();
  for (auto m : members) arr.push_back(io::coords_to_json(t.elements[m]));
  return arr;
}

Ring eps_ring(const Args& a) {
  if (a.p == 0) throw Error(Errc::InvalidArgument, "-p is required");
  return a.ring == "z" ? local_integers_at(a.p) : io::parse_ring(a.ring);
}

json suite_json(const SuiteReport& r) {
  return json{{"suite", r.name},   {"max", r.max},           {"cases", r.cases},
              {"checks", r.checks}, {"failures", r.failure_count}, {"messages", r.failures},
              {"pass", r.ok()}};
}

PhiObject load_object(const std::string& path) {
  if (path.empty()) throw Error(Errc::InvalidArgument, "--in is required");
  return io::phi_object_from_json(io::read_json_file(path));
}

int phimod(const Args& a, std::ostream& out) {
  const std::string& act = a.action;
  auto object_out = [&](const PhiObject& M) { out << io::phi_object_to_json(M).dump() << "\n"; };
  if (act == "unit" || act == "tate") {
    const TruncationSet Q = io::parse_truncation(a.Q);
    const Ring R = io::parse_ring(a.ring);
    object_out(act == "unit" ? unit(Q, R) : tate(a.twist, Q, R));
    return 0;
  }
  if (act == "validate") {
    const ValidationReport r = validate(load_object(a.in), {a.samples ? a.samples : 20, a.seed});
    out << io::validation_to_json(r).dump() << "\n";
    return 0;
  }
  if (act == "tensor" || act == "hom" || act == "sum") {
    if (a.in2.empty()) throw Error(Errc::InvalidArgument, "--in2 is required");
    const PhiObject M = load_object(a.in), N = load_object(a.in2);
    object_out(act == "tensor" ? tensor(M, N) : act == "hom" ? internal_hom(M, N) : direct_sum(M, N));
    return 0;
  }
  if (act == "dual") {
    object_out(dual(load_object(a.in)));
    return 0;
  }
  if (act == "tangent") {
    const json j = io::read_json_file(a.in);
    if (j.contains("mats")) {
      const RMatrix t = tangent(io::phi_morphism_from_json(j));
      json rows = json::array();
      for (std::size_t i = 0; i < t.rows; ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < t.cols; ++k) {
          const mpq_class& q = t.entries[i * t.cols + k];
          row.push_back(q.get_den() == 1 ? json(q.get_num().get_str())
                                         : json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}});
        }
        rows.push_back(std::move(row));
      }
      out << json{{"tangent", rows}}.dump() << "\n";
    } else {
      const TangentModule t = tangent(io::phi_object_from_json(j));
      out << json{{"ring", io::ring_spec(t.R)}, {"rank", t.rank}, {"twist", t.twist}}.dump() << "\n";
    }
    return 0;
  }
  if (act == "check") {
    const PhiMorphism f = io::phi_morphism_from_json(io::read_json_file(a.in));
    out << io::morphism_report_to_json(hom_set_check(f)).dump() << "\n";
    return 0;
  }
  if (act == "harness") {
    const PhiMorphism f = io::phi_morphism_from_json(io::read_json_file(a.in));
    const ConservativityReport r = conservativity_harness(f);
    out << json{{"faithful", r.faithful}, {"conservative", r.conservative}, {"pass", r.ok()}, {"witnesses", r.witnesses}}.dump()
        << "\n";
    return 0;
  }
  if (act == "ptypical") {
    if (a.p == 0) throw Error(Errc::InvalidArgument, "-p is required");
    const PTypicalReport r = p_typical_reduction_check(load_object(a.in), a.p, {a.samples ? a.samples : 20, a.seed});
    out << json{{"p", r.p}, {"checks", r.checks}, {"pass", r.ok()}, {"failures", r.failures}}.dump() << "\n";
    return 0;
  }
  throw Error(Errc::InvalidArgument, "unknown phimod action '" + act + "'");
}

int dispatch(const std::string& cmd, const Args& a, std::ostream& out) {
  if (cmd == "verify") {
    if (a.suite.empty()) throw Error(Errc::InvalidArgument, "--suite is required");
    SuiteOptions opts;
    opts.max = a.max;
    opts.samples = a.samples;
    opts.seed = a.seed;
    opts.exec = a.serial ? Execution::Serial : Execution::Parallel;
    if (a.suite == "all") {
      json arr = json::array();
      bool pass = true;
      for (const auto& name : suite_names()) {
        // --max caps each suite's own bound.
        SuiteOptions o = opts;
        o.max = a.max ? std::min<std::uint64_t>(a.max, suite_default_max(name)) : 0;
        const SuiteReport r = run_suite(name, o);
        pass = pass && r.ok();
        arr.push_back(suite_json(r));
      }
      out << json{{"suites", arr}, {"pass", pass}}.dump() << "\n";
      return pass ? 0 : 1;
    }
    const SuiteReport r = run_suite(a.suite, opts);
    out << suite_json(r).dump() << "\n";
    return r.ok() ? 0 : 1;
  }
  if (cmd == "phimod") return phimod(a, out);

  const Ring R = io::parse_ring(a.ring);
  if (cmd == "eps" || cmd == "decompose" || cmd == "reassemble") {
    const Ring L = eps_ring(a);
    const TruncationSet S = need_S(a);
    if (cmd == "eps") {
      json arr = json::array();
      for (const auto& [n, e] : epsilon_family(S, a.p, L).idempotents)
        arr.push_back({{"n", n}, {"coords", io::coords_to_json(e)}});
      out << json{{"ring", io::ring_spec(L)}, {"S", io::truncation_to_json(S)}, {"p", a.p}, {"idempotents", arr}}.dump()
          << "\n";
    } else if (cmd == "decompose") {
      json arr = json::array();
      for (const auto& [n, c] : decompose(io::parse_operand(a.a, S, L), a.p))
        arr.push_back({{"n", n}, {"S", io::truncation_to_json(c.S())}, {"coords", io::coords_to_json(c)}});
      out << json{{"ring", io::ring_spec(L)}, {"p", a.p}, {"components", arr}}.dump() << "\n";
    } else {
      if (a.components.empty()) throw Error(Errc::InvalidArgument, "--components is required");
      json j = a.components[0] == '@' ? io::read_json_file(a.components.substr(1)) : json::parse(a.components);
      if (j.is_object() && j.contains("components")) j = j.at("components");
      std::map<std::uint64_t, WittVector> parts;
      for (const auto& e : j) {
        const auto n = e.at("n").get<std::uint64_t>();
        parts.emplace(n, io::witt_from_coords(S.quotient(n).p_part(a.p), L, e.at("coords")));
      }
      out << io::witt_to_json(reassemble(parts, S, a.p, L)).dump() << "\n";
    }
    return 0;
  }
  if (cmd == "finite") {
    const TruncationSet S = need_S(a);
    const FiniteRingTable t = materialize(R, S, a.cap);
    json j{{"ring", io::ring_spec(R)}, {"S", io::truncation_to_json(S)}, {"size", t.size()}};
    if (a.maximal) {
      json arr = json::array();
      for (const auto& I : maximal_ideals(t))
        arr.push_back({{"size", I.members.size()}, {"quotient_size", I.quotient_size}, {"members", elements_json(t, I.members)}});
      j["maximal_ideals"] = arr;
    }
    if (a.lemma) {
      if (R->kind != RingKind::IntegersModM) throw Error(Errc::WrongRing, "--lemma needs zmod:p^j");
      if (a.p == 0) throw Error(Errc::InvalidArgument, "-p is required with --lemma");
      mpz_class m = R->modulus;
      unsigned jj = 0;
      while (m > 1 && mpz_divisible_ui_p(m.get_mpz_t(), a.p)) {
        m /= a.p;
        ++jj;
      }
      if (m != 1) throw Error(Errc::WrongRing, R->to_string() + " is not Z/p^j for p=" + std::to_string(a.p));
      j["lemma"] = io::ideal_lemma_to_json(verify_maximal_ideal_lemma(a.p, S, jj, a.cap));
    }
    out << j.dump() << "\n";
    return 0;
  }
  if (cmd == "zbasis") {
    const TruncationSet S = need_S(a);
    if (!a.product.empty()) {
      const auto comma = a.product.find(',');
      if (comma == std::string::npos) throw Error(Errc::ParseError, "--product expects m,n");
      const std::uint64_t m = std::stoull(a.product.substr(0, comma)), n = std::stoull(a.product.substr(comma + 1));
      const StructureConstant sc = vbasis_product(m, n, S);
      out << json{{"m", m}, {"n", n}, {"c", sc.c.get_str()}, {"index", sc.index}}.dump() << "\n";
      return 0;
    }
    const VBasisExpansion e = to_vbasis(io::parse_operand(a.a, S, R));
    json coeffs = json::array();
    for (const auto& c : e.coeffs) coeffs.push_back(c.get_str());
    out << json{{"S", io::truncation_to_json(S)}, {"coeffs", coeffs}}.dump() << "\n";
    return 0;
  }
  const TruncationSet S = need_S(a);
  if (cmd == "ghost") {
    const WittVector w = io::parse_operand(a.coords.empty() ? a.a : a.coords, S, R);
    out << json{{"ghost", io::ghost_to_json(ghost(w))}}.dump() << "\n";
    return 0;
  }
  if (cmd == "unghost") {
    if (a.ghost.empty()) throw Error(Errc::InvalidArgument, "--ghost is required");
    json comps = json::array();
    if (a.ghost[0] == '@') {
      comps = io::read_json_file(a.ghost.substr(1));
      if (comps.is_object()) comps = comps.at("ghost");
    } else {
      std::string cur;
      for (char ch : a.ghost + ",") {
        if (ch == ',') {
          comps.push_back(cur);
          cur.clear();
        } else {
          cur += ch;
        }
      }
    }
    out << io::witt_to_json(from_ghost(io::ghost_from_json(S, R, comps))).dump() << "\n";
    return 0;
  }
  if (cmd == "add" || cmd == "mul") {
    const WittVector x = io::parse_operand(a.a, S, R), y = io::parse_operand(a.b, S, R);
    const ArithPath path = parse_path(a.path);
    out << io::witt_to_json(cmd == "add" ? add(x, y, path) : mul(x, y, path)).dump() << "\n";
    return 0;
  }
  if (cmd == "frob") {
    out << io::witt_to_json(frobenius(a.n, io::parse_operand(a.a, S, R), parse_path(a.path))).dump() << "\n";
    return 0;
  }
  if (cmd == "ver") {
    out << io::witt_to_json(verschiebung(a.n, io::parse_operand(a.a, S.quotient(a.n), R), S)).dump() << "\n";
    return 0;
  }
  if (cmd == "restrict") {
    out << io::witt_to_json(restriction(io::parse_operand(a.a, S, R), io::parse_truncation(a.T))).dump() << "\n";
    return 0;
  }
  if (cmd == "exactseq") {
    out << io::exact_sequence_to_json(exact_sequence_check(R, S, a.n, a.cap)).dump() << "\n";
    return 0;
  }
  throw Error(Errc::InvalidArgument, "unknown command '" + cmd + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Big Witt vector toolkit", "witt"};
  app.require_subcommand(1);
  Args a;

  auto ring = [&](CLI::App* c) { c->add_option("--ring", a.ring, "coefficient ring: z, q, zmod:M, zp:P, poly:x,y, quot:VAR:REL[:mod=M][:tf]"); };
  auto S = [&](CLI::App* c) { c->add_option("--S", a.S, "truncation set, e.g. 1,2,3,6 or 1..12"); };
  auto opA = [&](CLI::App* c) { c->add_option("--a", a.a, "operand: coordinates, V<n>, [c] or @file"); };

  auto* ghost_c = app.add_subcommand("ghost", "ghost components of a Witt vector");
  ring(ghost_c), S(ghost_c), opA(ghost_c);
  ghost_c->add_option("--coords", a.coords, "coordinates");
  auto* unghost_c = app.add_subcommand("unghost", "Witt vector with the given ghost components");
  ring(unghost_c), S(unghost_c);
  unghost_c->add_option("--ghost", a.ghost, "ghost components or @file")->required();
  for (const char* name : {"add", "mul"}) {
    auto* c = app.add_subcommand(name, std::string(name) + " two Witt vectors");
    ring(c), S(c), opA(c);
    c->add_option("--b", a.b, "second operand")->required();
    c->add_option("--path", a.path, "auto, ghost or tables");
  }
  auto* frob_c = app.add_subcommand("frob", "Frobenius F_n");
  ring(frob_c), S(frob_c), opA(frob_c);
  frob_c->add_option("-n", a.n)->required();
  frob_c->add_option("--path", a.path, "auto, ghost or tables");
  auto* ver_c = app.add_subcommand("ver", "Verschiebung V_n (operand over S/n)");
  ring(ver_c), S(ver_c), opA(ver_c);
  ver_c->add_option("-n", a.n)->required();
  auto* res_c = app.add_subcommand("restrict", "restriction to a smaller truncation set");
  ring(res_c), S(res_c), opA(res_c);
  res_c->add_option("-T", a.T)->required();
  auto* ex_c = app.add_subcommand("exactseq", "check 0 -> W_{S/n} -> W_S -> W_T -> 0 by enumeration");
  ring(ex_c), S(ex_c);
  ex_c->add_option("-n", a.n)->required();
  ex_c->add_option("--cap", a.cap);
  auto* zb_c = app.add_subcommand("zbasis", "expansion in the V_n(1) basis of W_S(Z)");
  ring(zb_c), S(zb_c), opA(zb_c);
  zb_c->add_option("--product", a.product, "m,n: structure constant of V_m(1) V_n(1)");
  for (auto [name, help] : {std::pair{"eps", "idempotents eps_n and their laws"},
                             std::pair{"decompose", "split w into p-typical components"},
                             std::pair{"reassemble", "rebuild w from p-typical components"}}) {
    auto* c = app.add_subcommand(name, help);
    ring(c), S(c), opA(c);
    c->add_option("-p", a.p)->required();
    c->add_option("--components", a.components, "JSON components or @file");
  }
  auto* fin_c = app.add_subcommand("finite", "materialize W_S(A) for finite A");
  ring(fin_c), S(fin_c);
  fin_c->add_flag("--maximal-ideals", a.maximal);
  fin_c->add_flag("--lemma", a.lemma, "check the maximal-ideal lemma (A = Z/p^j)");
  fin_c->add_option("-p", a.p);
  fin_c->add_option("--cap", a.cap);
  auto* phi_c = app.add_subcommand("phimod", "phi-modules");
  phi_c->add_option("action", a.action, "validate|tensor|hom|sum|dual|tangent|check|harness|ptypical|unit|tate")->required();
  ring(phi_c);
  phi_c->add_option("--Q", a.Q, "ambient truncation set");
  phi_c->add_option("--in", a.in, "object or morphism file");
  phi_c->add_option("--in2", a.in2, "second object file");
  phi_c->add_option("-b", a.twist, "Tate twist");
  phi_c->add_option("-p", a.p);
  phi_c->add_option("--samples", a.samples);
  phi_c->add_option("--seed", a.seed);
  auto* ver_s = app.add_subcommand("verify", "run a named identity suite");
  ver_s->add_option("--suite", a.suite, "suite name or all")->required();
  ver_s->add_option("--max", a.max);
  ver_s->add_option("--samples", a.samples);
  ver_s->add_option("--seed", a.seed);
  ver_s->add_flag("--serial", a.serial, "disable OpenMP in the suite runner");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    out << io::error_to_json(Error(Errc::ParseError, e.what())).dump() << "\n";
    return 2;
  }
  try {
    return dispatch(app.get_subcommands().front()->get_name(), a, out);
  } catch (const InternalError& e) {
    out << json{{"error", {{"code", "InternalError"}, {"message", e.what()}}}}.dump() << "\n";
    return 1;
  } catch (const Error& e) {
    out << io::error_to_json(e).dump() << "\n";
    return 2;
  } catch (const json::exception& e) {
    out << io::error_to_json(Error(Errc::ParseError, e.what())).dump() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    out << io::error_to_json(Error(Errc::ParseError, e.what())).dump() << "\n";
    return 2;
  }
}

}  // namespace witt::cli
