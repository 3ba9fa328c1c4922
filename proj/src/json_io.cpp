#include "witt/json_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "witt/epsilon.hpp"

namespace witt::io {

namespace {

[[noreturn]] void parse_error(const std::string& msg) { throw Error(Errc::ParseError, msg); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

mpz_class parse_integer(const std::string& text) {
  const std::string t = trim(text);
  mpz_class z;
  if (t.empty() || z.set_str(t, 10) != 0) parse_error("not an integer: '" + text + "'");
  return z;
}

std::uint64_t parse_u64(const std::string& text) {
  const mpz_class z = parse_integer(text);
  if (z < 0 || !z.fits_ulong_p()) parse_error("not a nonnegative 64-bit integer: '" + text + "'");
  return z.get_ui();
}

mpz_class integer_from_json(const json& j) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<unsigned long long>()));
  parse_error("expected an integer, got " + j.dump());
}

class PolyParser {
 public:
  PolyParser(const std::string& text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    parse_error("polynomial '" + s_ + "' at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Poly expr() {
    Poly p = term();
    for (;;) {
      if (eat('+')) p = p + term();
      else if (eat('-')) p = p - term();
      else return p;
    }
  }
  Poly term() {
    Poly p = factor();
    while (eat('*')) p = p * factor();
    return p;
  }
  Poly factor() {
    if (eat('-')) return -factor();
    Poly base = atom();
    if (eat('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an exponent");
      base = base.pow(std::stoull(s_.substr(start, pos_ - start)));
    }
    return base;
  }
  Poly atom() {
    skip();
    if (eat('(')) {
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    const std::size_t start = pos_;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Poly(mpz_class(s_.substr(start, pos_ - start)));
    }
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a term");
    const std::string name = s_.substr(start, pos_ - start);
    for (std::size_t v = 0; v < vars_.size(); ++v)
      if (vars_[v] == name) return Poly::var(static_cast<std::uint32_t>(v));
    fail("unknown variable '" + name + "'");
  }

  std::string s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

json nonneg(std::uint64_t v) { return std::to_string(v); }

}  // namespace

Ring parse_ring(const std::string& text) {
  const std::string t = trim(text);
  if (t == "z") return integers();
  if (t == "q") return rationals();
  const auto colon = t.find(':');
  if (colon == std::string::npos) parse_error("unknown ring '" + text + "'");
  const std::string kind = t.substr(0, colon);
  const std::string rest = t.substr(colon + 1);
  if (kind == "zmod") return integers_mod(parse_integer(rest));
  if (kind == "zp") return local_integers_at(parse_u64(rest));
  if (kind == "poly") {
    auto vars = split(rest, ',');
    for (auto& v : vars) {
      v = trim(v);
      if (v.empty()) parse_error("empty variable name in '" + text + "'");
    }
    return polynomials_over_z(vars);
  }
  if (kind == "quot") {
    const auto parts = split(rest, ':');
    if (parts.size() < 2) parse_error("expected quot:VAR:RELATION[:mod=M][:tf], got '" + text + "'");
    const std::string var = trim(parts[0]);
    mpz_class modulus = 0;
    bool tf = false;
    for (std::size_t i = 2; i < parts.size(); ++i) {
      const std::string opt = trim(parts[i]);
      if (opt == "tf") tf = true;
      else if (opt.rfind("mod=", 0) == 0) modulus = parse_integer(opt.substr(4));
      else parse_error("unknown quotient option '" + opt + "'");
    }
    return quotient_polynomial(var, parse_poly(parts[1], {var}), modulus, tf);
  }
  parse_error("unknown ring '" + text + "'");
}

std::string ring_spec(const Ring& r) {
  switch (r->kind) {
    case RingKind::Integers: return "z";
    case RingKind::Rationals: return "q";
    case RingKind::IntegersModM: return "zmod:" + r->modulus.get_str();
    case RingKind::LocalIntegersAtP: return "zp:" + std::to_string(r->prime);
    case RingKind::PolynomialOverZ: {
      std::string s = "poly:";
      for (std::size_t i = 0; i < r->variables.size(); ++i) s += (i ? "," : "") + r->variables[i];
      return s;
    }
    case RingKind::QuotientPolynomial: {
      std::string s = "quot:" + r->variables.at(0) + ":" + r->relations.at(0).to_string(r->variables);
      if (r->modulus != 0) s += ":mod=" + r->modulus.get_str();
      if (r->declared_torsion_free) s += ":tf";
      return s;
    }
  }
  return "?";
}

TruncationSet parse_truncation(const std::string& text) {
  const std::string t = trim(text);
  if (t.rfind("1..", 0) == 0) return TruncationSet::range(parse_u64(t.substr(3)));
  std::vector<std::uint64_t> raw;
  if (!t.empty())
    for (const auto& part : split(t, ',')) raw.push_back(parse_u64(part));
  return TruncationSet::validate(raw);
}

json truncation_to_json(const TruncationSet& S) {
  json a = json::array();
  for (auto s : S.elements()) a.push_back(s);
  return a;
}

TruncationSet truncation_from_json(const json& j) {
  if (!j.is_array()) parse_error("truncation set must be an array, got " + j.dump());
  std::vector<std::uint64_t> raw;
  for (const auto& x : j) {
    if (x.is_number_unsigned()) raw.push_back(x.get<std::uint64_t>());
    else if (x.is_string()) raw.push_back(parse_u64(x.get<std::string>()));
    else parse_error("truncation set entries must be positive integers, got " + x.dump());
  }
  return TruncationSet::validate(raw);
}

Poly parse_poly(const std::string& text, const std::vector<std::string>& variables) {
  return PolyParser(text, variables).parse();
}

json value_to_json(const RingValue& v) {
  const Ring& r = v.ring();
  switch (r->kind) {
    case RingKind::Integers:
      return v.as_integer().get_str();
    case RingKind::IntegersModM:
      return json{{"mod", r->modulus.get_str()}, {"val", v.as_integer().get_str()}};
    case RingKind::Rationals:
    case RingKind::LocalIntegersAtP: {
      const mpq_class& q = v.as_rational();
      if (q.get_den() == 1) return q.get_num().get_str();
      return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
    }
    case RingKind::PolynomialOverZ:
    case RingKind::QuotientPolynomial:
      return v.as_poly().to_string(r->variables);
  }
  return nullptr;
}

RingValue parse_value(const Ring& r, const std::string& text) {
  const std::string t = trim(text);
  switch (r->kind) {
    case RingKind::Integers:
    case RingKind::IntegersModM:
      return RingValue::from_integer(r, parse_integer(t));
    case RingKind::Rationals:
    case RingKind::LocalIntegersAtP: {
      mpq_class q;
      if (t.empty() || q.set_str(t, 10) != 0) parse_error("not a rational number: '" + text + "'");
      if (q.get_den() == 0) parse_error("zero denominator in '" + text + "'");
      q.canonicalize();
      return RingValue::from_rational(r, q);
    }
    case RingKind::PolynomialOverZ:
    case RingKind::QuotientPolynomial:
      return RingValue::from_poly(r, parse_poly(t, r->variables));
  }
  parse_error("unsupported ring");
}

RingValue value_from_json(const Ring& r, const json& j) {
  if (j.is_string()) return parse_value(r, j.get<std::string>());
  if (j.is_number_integer()) return RingValue::from_integer(r, integer_from_json(j));
  if (j.is_object() && j.contains("num") && j.contains("den")) {
    mpq_class q(integer_from_json(j.at("num")), integer_from_json(j.at("den")));
    if (q.get_den() == 0) parse_error("zero denominator in " + j.dump());
    q.canonicalize();
    return RingValue::from_rational(r, q);
  }
  if (j.is_object() && j.contains("val")) {
    if (j.contains("mod") && (r->kind != RingKind::IntegersModM || integer_from_json(j.at("mod")) != r->modulus))
      throw Error(Errc::DescriptorMismatch, "residue " + j.dump() + " does not belong to " + r->to_string());
    return RingValue::from_integer(r, integer_from_json(j.at("val")));
  }
  parse_error("cannot read a value of " + r->to_string() + " from " + j.dump());
}

json coords_to_json(const WittVector& w) {
  json a = json::array();
  for (const auto& c : w.coords()) a.push_back(value_to_json(c));
  return a;
}

json witt_to_json(const WittVector& w) {
  return json{{"ring", ring_spec(w.ring())}, {"S", truncation_to_json(w.S())}, {"coords", coords_to_json(w)}};
}

WittVector witt_from_coords(const TruncationSet& S, const Ring& r, const json& coords) {
  if (!coords.is_array()) parse_error("coordinates must be an array, got " + coords.dump());
  std::vector<RingValue> cs;
  for (const auto& c : coords) cs.push_back(value_from_json(r, c));
  return WittVector(S, r, std::move(cs));
}

WittVector parse_operand(const std::string& text, const TruncationSet& S, const Ring& r) {
  const std::string t = trim(text);
  if (t.empty()) parse_error("empty operand");
  if (t[0] == '@') {
    const json j = read_json_file(t.substr(1));
    if (j.is_array()) return witt_from_coords(S, r, j);
    if (j.is_object() && j.contains("coords")) {
      if (j.contains("S") && !(truncation_from_json(j.at("S")) == S))
        throw Error(Errc::ShapeMismatch, "operand file is over " + truncation_from_json(j.at("S")).to_string() +
                                             ", expected " + S.to_string());
      return witt_from_coords(S, r, j.at("coords"));
    }
    parse_error("operand file must hold a coordinate array or an object with \"coords\"");
  }
  if (t[0] == 'V') {
    const std::uint64_t n = parse_u64(t.substr(1));
    if (n == 0 || !S.contains(n)) throw Error(Errc::IndexOutsideS, t + ": " + std::to_string(n) + " is not in " + S.to_string());
    return verschiebung(n, WittVector::one(S.quotient(n), r), S);
  }
  if (t[0] == '[') {
    if (t.back() != ']') parse_error("unterminated Teichmuller operand '" + text + "'");
    return teichmuller(parse_value(r, t.substr(1, t.size() - 2)), S);
  }
  std::vector<RingValue> cs;
  for (const auto& part : split(t, ',')) cs.push_back(parse_value(r, part));
  return WittVector(S, r, std::move(cs));
}

json ghost_to_json(const GhostVector& g) {
  json a = json::array();
  for (const auto& c : g.components()) a.push_back(value_to_json(c));
  return a;
}

GhostVector ghost_from_json(const TruncationSet& S, const Ring& r, const json& comps) {
  if (!comps.is_array()) parse_error("ghost components must be an array, got " + comps.dump());
  std::vector<RingValue> cs;
  for (const auto& c : comps) cs.push_back(value_from_json(r, c));
  return GhostVector(S, r, std::move(cs));
}

json matrix_to_json(const GhostMatrix& m, const Ring& R) {
  const auto entries = m.to_witt(R);
  if (!entries) throw Error(Errc::NotGhostIntegral, "matrix entries are not Witt vectors over " + R->to_string());
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(coords_to_json((*entries)[i * m.cols() + j]));
    rows.push_back(std::move(row));
  }
  return rows;
}

GhostMatrix matrix_from_json(const TruncationSet& S, const Ring& R, const json& j) {
  if (!j.is_array()) parse_error("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j.at(0).size() : 0;
  std::vector<WittVector> entries;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) throw Error(Errc::ShapeMismatch, "ragged matrix rows");
    for (const auto& e : row) entries.push_back(witt_from_coords(S, R, e));
  }
  return GhostMatrix::from_witt(S, rows, cols, entries);
}

json phi_object_to_json(const PhiObject& M) {
  json levels = json::array();
  for (const auto& S : M.levels()) {
    json lv{{"S", truncation_to_json(S)}, {"rank", M.ranks.at(S)}};
    json phi = json::array(), beta = json::array(), res = json::array();
    for (std::uint64_t n : S.elements()) {
      phi.push_back({{"n", n}, {"matrix", matrix_to_json(M.phi_at(S, n), M.R)}});
      beta.push_back({{"n", n}, {"matrix", matrix_to_json(M.beta_at(S, n), M.R)}});
    }
    for (const auto& [key, m] : M.res)
      if (key.first == S) res.push_back({{"T", truncation_to_json(key.second)}, {"matrix", matrix_to_json(m, M.R)}});
    lv["phi"] = std::move(phi);
    lv["beta"] = std::move(beta);
    lv["res"] = std::move(res);
    levels.push_back(std::move(lv));
  }
  return json{{"Q", truncation_to_json(M.Q)}, {"ring", ring_spec(M.R)}, {"a", M.a},
              {"twist", M.twist},           {"levels", std::move(levels)}};
}

PhiObject phi_object_from_json(const json& j) {
  try {
    PhiObject M;
    M.Q = truncation_from_json(j.at("Q"));
    M.R = parse_ring(j.at("ring").get<std::string>());
    M.a = j.at("a").get<std::uint64_t>();
    if (M.a == 0) throw Error(Errc::InvalidArgument, "the exponent a must be positive");
    M.twist = j.at("twist").get<std::int64_t>();
    for (const auto& lv : j.at("levels")) {
      const TruncationSet S = truncation_from_json(lv.at("S"));
      if (!S.is_subset_of(M.Q)) throw Error(Errc::NotSubset, S.to_string() + " is not inside " + M.Q.to_string());
      M.ranks[S] = lv.at("rank").get<std::size_t>();
      for (const auto& e : lv.at("phi")) {
        const auto n = e.at("n").get<std::uint64_t>();
        M.phi[{S, n}] = matrix_from_json(S.quotient(n), M.R, e.at("matrix"));
      }
      for (const auto& e : lv.at("beta")) {
        const auto n = e.at("n").get<std::uint64_t>();
        M.beta[{S, n}] = matrix_from_json(S.quotient(n), M.R, e.at("matrix"));
      }
      for (const auto& e : lv.at("res")) {
        const TruncationSet T = truncation_from_json(e.at("T"));
        M.res[{S, T}] = matrix_from_json(T, M.R, e.at("matrix"));
      }
    }
    return M;
  } catch (const json::exception& e) {
    parse_error(std::string("malformed phi-module: ") + e.what());
  }
}

json phi_morphism_to_json(const PhiMorphism& f) {
  json mats = json::array();
  for (const auto& [S, m] : f.mats) mats.push_back({{"S", truncation_to_json(S)}, {"matrix", matrix_to_json(m, f.source.R)}});
  return json{{"source", phi_object_to_json(f.source)}, {"target", phi_object_to_json(f.target)}, {"mats", mats}};
}

PhiMorphism phi_morphism_from_json(const json& j) {
  try {
    PhiMorphism f{phi_object_from_json(j.at("source")), phi_object_from_json(j.at("target")), {}};
    for (const auto& e : j.at("mats")) {
      const TruncationSet S = truncation_from_json(e.at("S"));
      f.mats[S] = matrix_from_json(S, f.source.R, e.at("matrix"));
    }
    return f;
  } catch (const json::exception& e) {
    parse_error(std::string("malformed phi-morphism: ") + e.what());
  }
}

json validation_to_json(const ValidationReport& r) {
  json fails = json::array();
  for (const auto& f : r.failures)
    fails.push_back({{"axiom", f.axiom}, {"S", truncation_to_json(f.S)}, {"n", f.n}, {"witness", f.witness}});
  return json{{"pass", r.ok()}, {"checks", r.checks}, {"failures", fails}};
}

json morphism_report_to_json(const MorphismReport& r) {
  return json{{"is_morphism", r.is_morphism()},
              {"integral", r.integral},
              {"commutes_with_restriction", r.commutes_with_restriction},
              {"commutes_with_phi", r.commutes_with_phi},
              {"hom_condition", r.hom_condition},
              {"beta_lemma", r.beta_lemma},
              {"consistent", r.consistent()},
              {"checks", r.checks},
              {"witnesses", r.witnesses}};
}

json exact_sequence_to_json(const ExactSequenceReport& r) {
  return json{{"ring", r.ring},
              {"S", truncation_to_json(r.S)},
              {"n", r.n},
              {"source", truncation_to_json(r.source)},
              {"target", truncation_to_json(r.target)},
              {"card_source", nonneg(r.card_source)},
              {"card_middle", nonneg(r.card_middle)},
              {"card_target", nonneg(r.card_target)},
              {"card_image", nonneg(r.card_image)},
              {"card_kernel", nonneg(r.card_kernel)},
              {"injective", r.injective},
              {"surjective", r.surjective},
              {"image_equals_kernel", r.image_equals_kernel},
              {"homomorphisms", r.homomorphisms},
              {"exact", r.exact()},
              {"counterexamples", r.counterexamples}};
}

json ideal_lemma_to_json(const MaximalIdealLemmaReport& r) {
  return json{{"p", r.p},
              {"S", truncation_to_json(r.S)},
              {"j", r.j},
              {"ring", r.ring},
              {"ring_size", r.ring_size},
              {"maximal_ideals", r.maximal_count},
              {"unique", r.unique},
              {"matches_kernel", r.matches_kernel},
              {"vp_square_identity", r.vp_square_identity},
              {"pass", r.pass()},
              {"witnesses", r.witnesses}};
}

json error_to_json(const Error& e) {
  json err{{"code", errc_name(e.code())}, {"message", e.what()}};
  if (const auto* nd = dynamic_cast<const NotDivisorClosedError*>(&e)) {
    err["witness"] = nd->witness();
    err["missing"] = nd->missing();
  }
  return json{{"error", err}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    parse_error(path + ": " + e.what());
  }
}

}  // namespace witt::io
