#include "tendo/cli/json_io.hpp"

#include <cstdio>
#include <utility>

#include "tendo/error.hpp"

namespace tendo::cli {
namespace {

std::string child(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string child(const std::string& where, std::size_t index) { return where + "/" + std::to_string(index); }

// Pointer used when the document root itself is malformed.
std::string shown(const std::string& where) { return where.empty() ? "/" : where; }

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(shown(where), what); }

// Re-raises library argument errors at the position of the literal being decoded.
template <class F>
auto located(const std::string& where, F&& build) -> decltype(build()) {
  try {
    return build();
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidArgument& e) {
    fail(where, e.what());
  }
}

const Json& member(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(where, "missing key \"" + key + "\"");
  return *it;
}

const Json* optional_member(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  const auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

const Json& expect_array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

std::string string_from_json(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

std::vector<Rational> rationals_from_json(const Json& j, const std::string& where) {
  expect_array(j, where);
  std::vector<Rational> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_from_json(j[i], child(where, i)));
  return out;
}

int sign_from_json(const Json& j, const std::string& where) {
  const auto v = integer_from_json(j, where);
  if (v != 1 && v != -1) fail(where, "expected 1 or -1");
  return static_cast<int>(v);
}

Json rationals_to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(to_json(r));
  return out;
}

}  // namespace

Json parse_document(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(source + ":byte " + std::to_string(e.byte), e.what());
  }
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Rational(Integer(std::to_string(j.get<std::uint64_t>()), 10))
                                  : Rational(Integer(std::to_string(j.get<std::int64_t>()), 10));
  }
  if (!j.is_string()) fail(where, "expected a rational string \"n/d\" or an integer");
  const auto text = j.get<std::string>();
  try {
    return parse_rational(text);
  } catch (const ParseError&) {
    fail(where, "expected a rational of the form n or n/d, got '" + text + "'");
  }
}

std::int64_t integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
      fail(where, "integer out of range");
    }
    return j.get<std::int64_t>();
  }
  if (j.is_string()) {
    const Rational r = rational_from_json(j, where);
    if (!is_integer(r) || !r.get_num().fits_slong_p()) fail(where, "expected a machine integer");
    return r.get_num().get_si();
  }
  fail(where, "expected an integer");
}

Prime prime_from_json(const Json& j, const std::string& where) {
  const auto v = integer_from_json(j, where);
  return located(where, [&] { return Prime(v); });
}

Matrix matrix_from_json(const Json& j, const std::string& where) {
  expect_array(j, where);
  if (j.empty()) fail(where, "empty matrix");
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    rows.push_back(rationals_from_json(j[i], child(where, i)));
    if (rows.back().size() != rows.front().size()) fail(child(where, i), "ragged matrix row");
  }
  if (rows.front().empty()) fail(child(where, 0), "empty matrix row");
  return Matrix::from_rows(rows);
}

std::pair<Matrix, Prime> gram_from_json(const Json& j, const std::string& where) {
  const Prime p = prime_from_json(member(j, "p", where), child(where, "p"));
  const Json* diag = optional_member(j, "diag", where);
  const Json* gram = optional_member(j, "gram", where);
  if ((diag == nullptr) == (gram == nullptr)) fail(where, "expected exactly one of \"diag\" and \"gram\"");
  if (diag != nullptr) {
    const auto entries = rationals_from_json(*diag, child(where, "diag"));
    if (entries.empty()) fail(child(where, "diag"), "empty diagonal");
    return {Matrix::diagonal(entries), p};
  }
  Matrix m = matrix_from_json(*gram, child(where, "gram"));
  if (!m.is_square()) fail(child(where, "gram"), "Gram matrix must be square");
  return {std::move(m), p};
}

QuadForm form_from_json(const Json& j, const std::string& where) {
  auto [gram, p] = gram_from_json(j, where);
  std::string label;
  if (const Json* l = optional_member(j, "label", where)) label = string_from_json(*l, child(where, "label"));
  return located(where, [&] { return QuadForm(std::move(gram), p, label); });
}

LocalField field_from_json(const Json& j, const std::string& where) {
  const Prime p = prime_from_json(member(j, "p", where), child(where, "p"));
  const Json* poly = optional_member(j, "poly", where);
  const Json* cert = optional_member(j, "cert", where);
  if (poly == nullptr) {
    if (cert != nullptr) fail(child(where, "cert"), "certificate given without a polynomial");
    return LocalField::rationals(p);
  }
  const Poly f(rationals_from_json(*poly, child(where, "poly")));
  if (cert == nullptr) return located(child(where, "poly"), [&] { return LocalField::from_poly(p, f); });
  const auto name = string_from_json(*cert, child(where, "cert"));
  const Certificate c = located(child(where, "cert"), [&] { return certificate_from_string(name); });
  return located(child(where, "poly"), [&] { return LocalField::from_poly(p, f, c); });
}

FieldElement field_element_from_json(const Json& j, const LocalField& field, const std::string& where) {
  // A bare rational is accepted as a constant.
  if (!j.is_array()) return field.from_rational(rational_from_json(j, where));
  auto coords = rationals_from_json(j, where);
  return located(where, [&] { return field.element(std::move(coords)); });
}

EtaleAlgebra algebra_from_json(const Json& j, const std::string& where) {
  expect_array(j, where);
  if (j.empty()) fail(where, "an algebra needs at least one factor");
  std::vector<FactorTower> towers;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = child(where, i);
    LocalField base = field_from_json(member(j[i], "base", at), child(at, "base"));
    const Json& step = member(j[i], "step", at);
    if (step.is_string()) {
      if (step.get<std::string>() != "split") fail(child(at, "step"), "expected \"split\" or {\"d\": element}");
      towers.push_back(FactorTower::split(std::move(base)));
    } else {
      const std::string sat = child(at, "step");
      FieldElement d = field_element_from_json(member(step, "d", sat), base, child(sat, "d"));
      towers.push_back(located(sat, [&] { return FactorTower::quadratic(base, d); }));
    }
  }
  return located(where, [&] { return EtaleAlgebra(std::move(towers)); });
}

AlgebraElement element_from_json(const Json& j, const EtaleAlgebra& algebra, const std::string& where) {
  expect_array(j, where);
  if (j.size() != algebra.factor_count()) {
    fail(where, "expected " + std::to_string(algebra.factor_count()) + " factor values");
  }
  std::vector<FactorValue> parts;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = child(where, i);
    if (!j[i].is_array() || j[i].size() != 2) fail(at, "expected a pair [first, second]");
    const LocalField& base = algebra.factors()[i].base;
    parts.push_back(FactorValue{field_element_from_json(j[i][0], base, child(at, 0)),
                                field_element_from_json(j[i][1], base, child(at, 1))});
  }
  return located(where, [&] { return algebra.element(std::move(parts)); });
}

ClassParameter class_param_from_json(const Json& j, const std::string& where) {
  const auto kind_name = string_from_json(member(j, "kind", where), child(where, "kind"));
  const ClassKind kind = located(child(where, "kind"), [&] { return class_kind_from_string(kind_name); });
  EtaleAlgebra algebra = algebra_from_json(member(j, "algebra", where), child(where, "algebra"));
  AlgebraElement x = element_from_json(member(j, "x", where), algebra, child(where, "x"));
  ClassParameter param{kind, algebra, std::move(x), std::nullopt, std::nullopt, std::nullopt};
  if (const Json* c = optional_member(j, "c", where)) param.form_scale = element_from_json(*c, algebra, child(where, "c"));
  if (const Json* xd = optional_member(j, "xD", where)) param.extra_square = rational_from_json(*xd, child(where, "xD"));
  if (const Json* a = optional_member(j, "a", where)) param.line_value = rational_from_json(*a, child(where, "a"));
  located(where, [&] { validate(param); });
  return param;
}

AmbientSpace ambient_from_json(const Json& j, const std::string& where) {
  auto [gram, p] = gram_from_json(member(j, "qV", where), child(where, "qV"));
  const int epsilon = sign_from_json(member(j, "epsilon", where), child(where, "epsilon"));
  std::optional<Matrix> jv;
  std::optional<Matrix> jh;
  if (const Json* m = optional_member(j, "JV", where)) jv = matrix_from_json(*m, child(where, "JV"));
  if (const Json* m = optional_member(j, "JH", where)) jh = matrix_from_json(*m, child(where, "JH"));
  return located(where, [&] { return make_ambient(std::move(gram), p, epsilon, jv, jh); });
}

GSConfiguration config_from_json(const Json& j, const std::string& where) {
  AmbientSpace ambient = ambient_from_json(member(j, "ambient", where), child(where, "ambient"));
  Matrix x = matrix_from_json(member(j, "X", where), child(where, "X"));
  Matrix y = matrix_from_json(member(j, "Y", where), child(where, "Y"));
  const std::size_t n = ambient.dim();
  if (x.cols() != n) fail(child(where, "X"), "X must have " + std::to_string(n) + " columns");
  if (!y.is_square() || y.rows() != x.rows()) fail(child(where, "Y"), "Y must be square of the size of X's rows");
  return GSConfiguration{std::move(ambient), std::move(x), std::move(y)};
}

QuadraticAlgebra quadratic_algebra_from_json(const Json& j, const Prime& p, const std::string& where) {
  const Rational d = rational_from_json(j, where);
  if (d == 0) fail(where, "square class of zero");
  return QuadraticAlgebra{square_class(d, p)};
}

FormalParameter formal_param_from_json(const Json& j, const std::optional<Prime>& default_prime,
                                       const std::string& where) {
  std::optional<Prime> p = default_prime;
  const Json* list = &j;
  std::string list_at = where;
  if (j.is_object()) {
    p = prime_from_json(member(j, "p", where), child(where, "p"));
    list = &member(j, "constituents", where);
    list_at = child(where, "constituents");
  } else if (!p) {
    fail(where, "a bare constituent list needs a prime (--p)");
  }
  expect_array(*list, list_at);
  FormalParameter param;
  for (std::size_t i = 0; i < list->size(); ++i) {
    const Json& c = (*list)[i];
    const std::string at = child(list_at, i);
    const int dim = static_cast<int>(integer_from_json(member(c, "dim", at), child(at, "dim")));
    const auto sign_text = string_from_json(member(c, "sign", at), child(at, "sign"));
    const SignType sign = located(child(at, "sign"), [&] { return sign_type_from_string(sign_text); });
    const QuadraticAlgebra det = quadratic_algebra_from_json(member(c, "det", at), *p, child(at, "det"));
    FormalConstituent fc{dim, sign, det, 1, {}};
    if (const Json* m = optional_member(c, "mult", at)) fc.mult = static_cast<int>(integer_from_json(*m, child(at, "mult")));
    if (const Json* l = optional_member(c, "label", at)) fc.label = string_from_json(*l, child(at, "label"));
    param.constituents.push_back(std::move(fc));
  }
  located(where, [&] { validate(param); });
  return param;
}

Mu8 mu8_from_json(const Json& j, const std::string& where) {
  const auto text = string_from_json(j, where);
  try {
    return parse_mu8(text);
  } catch (const ParseError& e) {
    fail(where, e.what());
  }
}

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const Poly& f) { return Json{{"coeffs", rationals_to_json(f.coefficients())}, {"text", to_string(f)}}; }

Json to_json(const SquareClass& c) { return to_string(c.representative()); }

Json to_json(Mu8 z) { return to_string(z); }

Json to_json(const QuadForm& q) {
  Json out{{"p", q.prime().value()}, {"gram", to_json(q.gram())}};
  if (!q.label().empty()) out["label"] = q.label();
  return out;
}

Json to_json(const LocalField& field) {
  Json out{{"p", field.prime().value()}};
  if (field.is_rationals() && field.defining_poly() == Poly({0, 1})) return out;
  out["poly"] = rationals_to_json(field.defining_poly().coefficients());
  out["cert"] = to_string(field.certificate());
  return out;
}

Json to_json(const FieldElement& x) { return rationals_to_json(x); }

Json to_json(const EtaleAlgebra& algebra) {
  Json out = Json::array();
  for (const auto& t : algebra.factors()) {
    Json tower{{"base", to_json(t.base)}};
    if (t.is_split()) {
      tower["step"] = "split";
    } else {
      tower["step"] = Json{{"d", to_json(*t.step)}};
    }
    out.push_back(std::move(tower));
  }
  return out;
}

Json to_json(const AlgebraElement& x) {
  Json out = Json::array();
  for (const auto& part : x.parts) out.push_back(Json::array({to_json(part.first), to_json(part.second)}));
  return out;
}

Json to_json(const ClassParameter& param) {
  Json out{{"kind", to_string(param.kind)}, {"algebra", to_json(param.algebra)}, {"x", to_json(param.element)}};
  if (param.form_scale) out["c"] = to_json(*param.form_scale);
  if (param.extra_square) out["xD"] = to_json(*param.extra_square);
  if (param.line_value) out["a"] = to_json(*param.line_value);
  return out;
}

Json to_json(const AmbientSpace& ambient) {
  Json out{{"qV", Json{{"p", ambient.p.value()}, {"gram", to_json(ambient.form_gram)}}}, {"epsilon", ambient.epsilon}};
  if (ambient.complex_v) out["JV"] = to_json(*ambient.complex_v);
  if (ambient.complex_h) out["JH"] = to_json(*ambient.complex_h);
  return out;
}

Json to_json(const GSConfiguration& config) {
  return Json{{"ambient", to_json(config.ambient)}, {"X", to_json(config.to_dual)}, {"Y", to_json(config.h_to_dual)}};
}

Json to_json(const QuadraticAlgebra& k) { return to_json(k.d); }

Json to_json(const EndoscopicDatum& datum) {
  return Json{{"nO", datum.orthogonal_dim}, {"nS", datum.symplectic_dim}, {"chi", to_json(datum.character)},
              {"text", to_string(datum)}};
}

Json to_json(const FormalParameter& param) {
  Json list = Json::array();
  std::optional<std::int64_t> p;
  for (const auto& c : param.constituents) {
    p = c.det_char.prime().value();
    Json item{{"dim", c.dim}, {"sign", to_string(c.sign)}, {"det", to_json(c.det_char)}, {"mult", c.mult}};
    if (!c.label.empty()) item["label"] = c.label;
    list.push_back(std::move(item));
  }
  return Json{{"p", p.value_or(0)}, {"constituents", std::move(list)}};
}

Json to_json(const FormInvariants& inv) {
  return Json{{"dim", inv.dim},       {"det", to_json(inv.det)},          {"dpm", to_json(inv.dpm)},
              {"hasse", inv.hasse},   {"witt_index", inv.witt_index},     {"aniso_dim", inv.aniso_dim}};
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace tendo::cli
