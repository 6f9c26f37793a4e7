#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "tendo/classes.hpp"
#include "tendo/endoscopy.hpp"
#include "tendo/etale.hpp"
#include "tendo/gsnorm.hpp"
#include "tendo/localfield.hpp"
#include "tendo/params.hpp"
#include "tendo/qform.hpp"
#include "tendo/weil.hpp"

namespace tendo::cli {

using Json = nlohmann::ordered_json;

/// Parses a JSON document; syntax errors become ParseError located at "<source>:byte N".
Json parse_document(const std::string& text, const std::string& source);

/// Decoding. `where` is the JSON pointer of `j` and prefixes every ParseError.
Rational rational_from_json(const Json& j, const std::string& where);
Prime prime_from_json(const Json& j, const std::string& where);
std::int64_t integer_from_json(const Json& j, const std::string& where);
Matrix matrix_from_json(const Json& j, const std::string& where);
/// Form literal {"p", "diag" | "gram", "label"?} as a raw Gram matrix (alternating allowed).
std::pair<Matrix, Prime> gram_from_json(const Json& j, const std::string& where);
QuadForm form_from_json(const Json& j, const std::string& where);
/// Field literal {"p", "poly"?, "cert"?}; a missing poly means Q_p.
LocalField field_from_json(const Json& j, const std::string& where);
FieldElement field_element_from_json(const Json& j, const LocalField& field, const std::string& where);
EtaleAlgebra algebra_from_json(const Json& j, const std::string& where);
AlgebraElement element_from_json(const Json& j, const EtaleAlgebra& algebra, const std::string& where);
ClassParameter class_param_from_json(const Json& j, const std::string& where);
AmbientSpace ambient_from_json(const Json& j, const std::string& where);
GSConfiguration config_from_json(const Json& j, const std::string& where);
QuadraticAlgebra quadratic_algebra_from_json(const Json& j, const Prime& p, const std::string& where);
/// {"p", "constituents": [...]} or a bare constituent list when `default_prime` is given.
FormalParameter formal_param_from_json(const Json& j, const std::optional<Prime>& default_prime,
                                       const std::string& where);
Mu8 mu8_from_json(const Json& j, const std::string& where);

/// Encoding; every literal re-parses to an equal value.
Json to_json(const Rational& r);
Json to_json(const Matrix& m);
Json to_json(const Poly& f);
Json to_json(const SquareClass& c);
Json to_json(Mu8 z);
Json to_json(const QuadForm& q);
Json to_json(const LocalField& field);
Json to_json(const FieldElement& x);
Json to_json(const EtaleAlgebra& algebra);
Json to_json(const AlgebraElement& x);
Json to_json(const ClassParameter& param);
Json to_json(const AmbientSpace& ambient);
Json to_json(const GSConfiguration& config);
Json to_json(const QuadraticAlgebra& k);
Json to_json(const EndoscopicDatum& datum);
Json to_json(const FormalParameter& param);
Json to_json(const FormInvariants& inv);

/// 64-bit FNV-1a of the bytes, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace tendo::cli
