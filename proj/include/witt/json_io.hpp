#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "witt/errors.hpp"
#include "witt/finite_witt.hpp"
#include "witt/phi_modules.hpp"
#include "witt/rings.hpp"
#include "witt/truncation.hpp"
#include "witt/witt_core.hpp"
#include "witt/witt_vector.hpp"

namespace witt::io {

using json = nlohmann::ordered_json;

/// Ring syntax: z, q, zmod:M, zp:P, poly:x,y,..., quot:VAR:RELATION[:mod=M][:tf].
Ring parse_ring(const std::string& text);
std::string ring_spec(const Ring& r);

/// "1,2,3,6" (validated) or "1..N" for divisor_closure({1, ..., N}).
TruncationSet parse_truncation(const std::string& text);
json truncation_to_json(const TruncationSet& S);
TruncationSet truncation_from_json(const json& j);

/// Integer polynomial in the given variable names, e.g. "x^2*y - 3*x + 1".
Poly parse_poly(const std::string& text, const std::vector<std::string>& variables);

/// Decimal strings for integers, {"num","den"} for fractions, {"mod","val"} for
/// residues, strings for polynomials.
json value_to_json(const RingValue& v);
RingValue value_from_json(const Ring& r, const json& j);
/// Accepts "5", "-2/3", or a polynomial expression.
RingValue parse_value(const Ring& r, const std::string& text);

json witt_to_json(const WittVector& w);
json coords_to_json(const WittVector& w);
WittVector witt_from_coords(const TruncationSet& S, const Ring& r, const json& coords);

/// "V<n>" for V_n(1), "[c]" for a Teichmuller lift, "c1,c2,..." for
/// coordinates, or "@path" for a JSON file holding a coordinate array or an
/// object with a "coords" member.
WittVector parse_operand(const std::string& text, const TruncationSet& S, const Ring& r);

json ghost_to_json(const GhostVector& g);
GhostVector ghost_from_json(const TruncationSet& S, const Ring& r, const json& comps);

json matrix_to_json(const GhostMatrix& m, const Ring& R);
GhostMatrix matrix_from_json(const TruncationSet& S, const Ring& R, const json& j);

json phi_object_to_json(const PhiObject& M);
PhiObject phi_object_from_json(const json& j);
json phi_morphism_to_json(const PhiMorphism& f);
PhiMorphism phi_morphism_from_json(const json& j);

json validation_to_json(const ValidationReport& r);
json morphism_report_to_json(const MorphismReport& r);
json exact_sequence_to_json(const ExactSequenceReport& r);
json ideal_lemma_to_json(const MaximalIdealLemmaReport& r);

json error_to_json(const Error& e);

json read_json_file(const std::string& path);

}  // namespace witt::io
