#include "tendo/classes.hpp"

#include <array>
#include <utility>

#include "tendo/error.hpp"

namespace tendo {

namespace {

constexpr std::array<std::pair<ClassKind, const char*>, 7> kKindNames{{
    {ClassKind::TglEven, "tGL-even"},
    {ClassKind::TglOdd, "tGL-odd"},
    {ClassKind::SoEven, "SO-even"},
    {ClassKind::SoOdd, "SO-odd"},
    {ClassKind::Sp, "Sp"},
    {ClassKind::U, "U"},
    {ClassKind::TglE, "tGL-E"},
}};

bool over_quadratic_base(ClassKind kind) { return kind == ClassKind::U || kind == ClassKind::TglE; }

// The element √e of L when every tower is F_i(√e).
AlgebraElement root_of_step(const EtaleAlgebra& algebra) {
  std::vector<FieldElement> ones;
  for (const auto& f : algebra.factors()) ones.push_back(f.base.one());
  return algebra.anti_fixed(ones);
}

// dim over Q_p of the span of {y^k, s·y^k}; equals dim L iff y generates L over Q_p(s).
bool generates_over(const EtaleAlgebra& algebra, const AlgebraElement& elem, const AlgebraElement& scalar) {
  std::vector<Vector> cols;
  AlgebraElement power = algebra.one();
  for (int k = 0; k < algebra.dim(); ++k) {
    cols.push_back(algebra.coordinates(power));
    cols.push_back(algebra.coordinates(algebra.mul(scalar, power)));
    power = algebra.mul(power, elem);
  }
  return rank(Matrix::from_columns(cols)) == static_cast<std::size_t>(algebra.dim());
}

bool is_norm_one(const EtaleAlgebra& algebra, const AlgebraElement& elem) {
  return algebra.norm_to_fixed(elem) == algebra.one();
}

bool no_eigenvalue_pm1(const EtaleAlgebra& algebra, const AlgebraElement& elem) {
  return algebra.is_invertible(algebra.sub(elem, algebra.one())) &&
         algebra.is_invertible(algebra.add(elem, algebra.one()));
}

void require_generator(const ClassParameter& param) {
  const auto& algebra = param.algebra;
  if (over_quadratic_base(param.kind)) {
    require(generates_over(algebra, param.element, root_of_step(algebra)), "element does not generate L over E");
  } else {
    require(algebra.is_generator(param.element), "element does not generate L");
  }
}

const AlgebraElement& require_scale(const ClassParameter& param) {
  require(param.form_scale.has_value(), to_string(param.kind) + " parameter needs a form scale");
  require(param.algebra.is_invertible(*param.form_scale), "form scale is not invertible");
  return *param.form_scale;
}

Matrix direct_sum_one(const Matrix& m, const Rational& value) {
  return direct_sum(m, Matrix::diagonal(std::vector<Rational>{value}));
}

}  // namespace

std::string to_string(ClassKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "?";
}

ClassKind class_kind_from_string(const std::string& name) {
  for (const auto& [k, n] : kKindNames)
    if (name == n) return k;
  throw InvalidArgument("unknown class kind '" + name + "'");
}

bool is_twisted_kind(ClassKind kind) {
  return kind == ClassKind::TglEven || kind == ClassKind::TglOdd || kind == ClassKind::TglE;
}

std::optional<Rational> common_step(const EtaleAlgebra& algebra) {
  std::optional<Rational> step;
  for (const auto& f : algebra.factors()) {
    if (f.is_split() || !f.base.is_rational(*f.step)) return std::nullopt;
    const Rational value = f.step->front();
    if (step && *step != value) return std::nullopt;
    step = value;
  }
  return step;
}

void validate(const ClassParameter& param) {
  const auto& algebra = param.algebra;
  require(algebra.is_invertible(param.element), "class element is not invertible");
  if (over_quadratic_base(param.kind)) {
    require(common_step(algebra).has_value(), to_string(param.kind) + " needs every tower to be F_i(√e) for one e");
  }
  require_generator(param);
  switch (param.kind) {
    case ClassKind::TglOdd:
      require(param.extra_square.has_value() && *param.extra_square != 0, "tGL-odd needs a nonzero extra square");
      [[fallthrough]];
    case ClassKind::TglEven:
    case ClassKind::TglE:
      break;
    case ClassKind::SoOdd:
      require(param.line_value.has_value() && *param.line_value != 0, "SO-odd needs a nonzero line value");
      [[fallthrough]];
    case ClassKind::SoEven:
    case ClassKind::U:
      require(is_norm_one(algebra, param.element), "classical element must satisfy y·τ(y) = 1");
      require(algebra.is_fixed(require_scale(param)), "form scale must be τ-fixed");
      break;
    case ClassKind::Sp:
      require(is_norm_one(algebra, param.element), "classical element must satisfy y·τ(y) = 1");
      require(algebra.tau(require_scale(param)) == algebra.neg(*param.form_scale), "Sp form scale must satisfy τ(c) = -c");
      break;
  }
}

bool is_very_regular(const ClassParameter& param) {
  if (is_twisted_kind(param.kind)) return param.algebra.very_regular(param.element);
  return no_eigenvalue_pm1(param.algebra, param.element);
}

Matrix build_tgl_even(const ClassParameter& param) {
  require(param.kind == ClassKind::TglEven || param.kind == ClassKind::TglE, "expected a tGL-even parameter");
  validate(param);
  return param.algebra.trace_form_bilinear(param.element);
}

Matrix build_tgl_odd(const ClassParameter& param) {
  require(param.kind == ClassKind::TglOdd, "expected a tGL-odd parameter");
  validate(param);
  return direct_sum_one(param.algebra.trace_form_bilinear(param.element), *param.extra_square);
}

OrthogonalRepresentative build_so_even(const ClassParameter& param) {
  require(param.kind == ClassKind::SoEven, "expected an SO-even parameter");
  validate(param);
  OrthogonalRepresentative out{param.algebra.trace_form_quadratic(*param.form_scale),
                               param.algebra.mult_matrix(param.element)};
  return out;
}

OrthogonalRepresentative build_so_odd(const ClassParameter& param) {
  require(param.kind == ClassKind::SoOdd, "expected an SO-odd parameter");
  validate(param);
  const QuadForm base = param.algebra.trace_form_quadratic(*param.form_scale);
  const QuadForm line = QuadForm::diagonal({*param.line_value}, param.algebra.prime());
  return {direct_sum(base, line), direct_sum_one(param.algebra.mult_matrix(param.element), 1)};
}

std::pair<Matrix, Matrix> build_sp(const ClassParameter& param) {
  require(param.kind == ClassKind::Sp, "expected an Sp parameter");
  validate(param);
  Matrix gram = param.algebra.trace_form(*param.form_scale);
  if (!gram.is_alternating() || determinant(gram) == 0) throw InternalError("Sp trace form is not symplectic");
  return {std::move(gram), param.algebra.mult_matrix(param.element)};
}

ClassRepresentative build_class(const ClassParameter& param) {
  switch (param.kind) {
    case ClassKind::TglEven: return {param.kind, build_tgl_even(param), std::nullopt, std::nullopt};
    case ClassKind::TglOdd: return {param.kind, build_tgl_odd(param), std::nullopt, std::nullopt};
    case ClassKind::SoEven: {
      auto r = build_so_even(param);
      return {param.kind, r.form.gram(), std::move(r.group_element), std::nullopt};
    }
    case ClassKind::SoOdd: {
      auto r = build_so_odd(param);
      return {param.kind, r.form.gram(), std::move(r.group_element), std::nullopt};
    }
    case ClassKind::Sp: {
      auto [gram, elem] = build_sp(param);
      return {param.kind, std::move(gram), std::move(elem), std::nullopt};
    }
    case ClassKind::U: {
      validate(param);
      Matrix gram = param.algebra.trace_form_quadratic(*param.form_scale).gram();
      return {param.kind, std::move(gram), param.algebra.mult_matrix(param.element),
              param.algebra.mult_matrix(root_of_step(param.algebra))};
    }
    case ClassKind::TglE: {
      Matrix gram = build_tgl_even(param);
      return {param.kind, std::move(gram), std::nullopt, param.algebra.mult_matrix(root_of_step(param.algebra))};
    }
  }
  throw InternalError("unhandled class kind");
}

Poly twist_invariant(const Matrix& bilinear_gram) {
  const auto inv = try_inverse(bilinear_gram);
  require(inv.has_value(), "twist invariant of a singular form");
  return char_poly(*inv * bilinear_gram.transpose());
}

ClassInvariant class_invariant(const ClassParameter& param) {
  validate(param);
  const auto& algebra = param.algebra;
  const Prime& p = algebra.prime();
  if (is_twisted_kind(param.kind)) {
    const AlgebraElement ratio = algebra.mul(algebra.tau(param.element), algebra.inverse(param.element));
    std::optional<SquareClass> extra;
    if (param.extra_square) extra = square_class(*param.extra_square, p);
    return {param.kind, algebra.char_poly(ratio), extra};
  }
  std::optional<SquareClass> extra;
  if (param.line_value) extra = square_class(*param.line_value, p);
  return {param.kind, algebra.char_poly(param.element), extra};
}

bool corresponds(const ClassParameter& twisted, const ClassParameter& orthogonal) {
  require(twisted.kind == ClassKind::TglEven, "correspondence expects a tGL-even parameter");
  require(orthogonal.kind == ClassKind::SoEven, "correspondence expects an SO-even parameter");
  validate(twisted);
  validate(orthogonal);
  require(twisted.algebra.dim() == orthogonal.algebra.dim(), "parameters of different dimensions");
  require(is_very_regular(twisted) && is_very_regular(orthogonal), "correspondence needs very-regular classes");
  const auto& algebra = twisted.algebra;
  const AlgebraElement target =
      algebra.neg(algebra.mul(twisted.element, algebra.inverse(algebra.tau(twisted.element))));
  return algebra.char_poly(target) == orthogonal.algebra.char_poly(orthogonal.element);
}

bool is_elliptic(const ClassParameter& param) { return !param.algebra.has_split_factor(); }

}  // namespace tendo
