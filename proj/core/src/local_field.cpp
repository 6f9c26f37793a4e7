#include <algorithm>

#include "field_internal.hpp"
#include "tendo/error.hpp"
#include "tendo/localfield.hpp"

namespace tendo {

namespace detail {

Coeffs mul_mod(const Coeffs& a, const Coeffs& b, const Poly& modulus) {
  const std::size_t n = static_cast<std::size_t>(modulus.degree());
  std::vector<Rational> prod(a.size() + b.size() > 0 ? a.size() + b.size() - 1 : 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
  }
  // Reduce with T^n = -(c_0 + ... + c_{n-1} T^{n-1}).
  for (std::size_t k = prod.size(); k-- > n;) {
    const Rational c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (std::size_t j = 0; j < n; ++j) prod[k - n + j] -= c * modulus.coeff(static_cast<int>(j));
  }
  prod.resize(n);
  return prod;
}

namespace {

std::int64_t mod_p(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

__extension__ typedef __int128 Wide;

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>((static_cast<Wide>(a) * b) % p);
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  Integer r;
  const Integer aa(static_cast<long>(a)), pp(static_cast<long>(p));
  mpz_invert(r.get_mpz_t(), aa.get_mpz_t(), pp.get_mpz_t());
  return r.get_si();
}

void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_sub(FpPoly a, const FpPoly& b, std::int64_t p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod_p(a[i] - b[i], p);
  fp_trim(a);
  return a;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  fp_trim(r);
  return r;
}

FpPoly fp_rem(FpPoly a, const FpPoly& m, std::int64_t p) {
  fp_trim(a);
  const std::int64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    const std::int64_t c = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - m.size();
    for (std::size_t j = 0; j < m.size(); ++j) a[shift + j] = mod_p(a[shift + j] - mulmod(c, m[j], p), p);
    fp_trim(a);
  }
  return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::int64_t p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    FpPoly r = fp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

FpPoly fp_powmod(FpPoly base, Integer e, const FpPoly& m, std::int64_t p) {
  FpPoly result{1};
  base = fp_rem(base, m, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = fp_rem(fp_mul(result, base, p), m, p);
    e >>= 1;
    if (e > 0) base = fp_rem(fp_mul(base, base, p), m, p);
  }
  return result;
}

}  // namespace

ResidueField::ResidueField(std::int64_t p, FpPoly modulus) : p_(p), mod_(std::move(modulus)) {}

FpPoly ResidueField::mul(const FpPoly& a, const FpPoly& b) const {
  if (degree() == 1) {
    const std::int64_t x = a.empty() ? 0 : a[0];
    const std::int64_t y = b.empty() ? 0 : b[0];
    return {mulmod(x, y, p_)};
  }
  FpPoly r = fp_rem(fp_mul(a, b, p_), mod_, p_);
  r.resize(static_cast<std::size_t>(degree()), 0);
  return r;
}

FpPoly ResidueField::pow(FpPoly a, const Integer& e) const {
  FpPoly r = fp_powmod(std::move(a), e, mod_, p_);
  r.resize(static_cast<std::size_t>(degree()), 0);
  return r;
}

bool ResidueField::is_zero(const FpPoly& a) const {
  return std::all_of(a.begin(), a.end(), [this](std::int64_t x) { return x % p_ == 0; });
}

int ResidueField::quadratic_character(const FpPoly& a) const {
  require(!is_zero(a), "quadratic character of zero");
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(degree()));
  const FpPoly r = pow(a, (q - 1) / 2);
  for (std::size_t i = 1; i < r.size(); ++i)
    if (r[i] != 0) throw InternalError("quadratic character is not a constant");
  if (r[0] == 1) return 1;
  if (r[0] == p_ - 1) return -1;
  throw InternalError("quadratic character is not ±1");
}

bool irreducible_mod_p(const FpPoly& f_in, std::int64_t p) {
  FpPoly f = f_in;
  for (auto& c : f) c = mod_p(c, p);
  fp_trim(f);
  const int m = static_cast<int>(f.size()) - 1;
  if (m < 1) return false;
  if (m == 1) return true;
  FpPoly x_pow{0, 1};  // x^{p^i} mod f
  const Integer pp(static_cast<long>(p));
  for (int i = 1; i <= m / 2; ++i) {
    x_pow = fp_powmod(x_pow, pp, f, p);
    const FpPoly g = fp_gcd(f, fp_sub(x_pow, FpPoly{0, 1}, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

ResidueField residue_field(const LocalField& field) {
  if (field.model_kind() == LocalField::ModelKind::Unramified) {
    return ResidueField(field.prime().value(), field.residue_modulus());
  }
  return ResidueField(field.prime().value(), FpPoly{0, 1});
}

}  // namespace detail

namespace {

bool p_integral(const Rational& x, const Prime& p) { return x == 0 || valuation(Integer(x.get_den()), p) == 0; }

detail::FpPoly reduce_mod_p(const Poly& f, const Prime& p) {
  detail::FpPoly out;
  const Integer pp = p.integer();
  for (int i = 0; i <= f.degree(); ++i) out.push_back(residue_mod(f.coeff(i), pp).get_si());
  return out;
}

bool check_eisenstein(const Poly& f, const Prime& p) {
  const int m = f.degree();
  if (m < 1) return false;
  for (int i = 0; i < m; ++i) {
    const Rational c = f.coeff(i);
    if (!p_integral(c, p)) return false;
    if (i > 0 && c != 0 && valuation(c, p) < 1) return false;
  }
  return f.coeff(0) != 0 && valuation(f.coeff(0), p) == 1;
}

bool check_unramified(const Poly& f, const Prime& p) {
  for (int i = 0; i <= f.degree(); ++i)
    if (!p_integral(f.coeff(i), p)) return false;
  return detail::irreducible_mod_p(reduce_mod_p(f, p), p.value());
}

bool check_quadratic(const Poly& f, const Prime& p) {
  if (f.degree() != 2) return false;
  const Rational disc = f.coeff(1) * f.coeff(1) - 4 * f.coeff(0);
  return disc != 0 && !square_class(disc, p).is_trivial();
}

}  // namespace

std::string to_string(Certificate c) {
  switch (c) {
    case Certificate::DegreeOne: return "degree-one";
    case Certificate::QuadraticNonsquareDisc: return "quadratic-nonsquare-disc";
    case Certificate::Eisenstein: return "eisenstein";
    case Certificate::UnramifiedIrreducibleModP: return "unramified-irreducible-mod-p";
  }
  return "?";
}

Certificate certificate_from_string(const std::string& name) {
  for (auto c : {Certificate::DegreeOne, Certificate::QuadraticNonsquareDisc, Certificate::Eisenstein,
                 Certificate::UnramifiedIrreducibleModP}) {
    if (to_string(c) == name) return c;
  }
  throw InvalidArgument("unknown certificate '" + name + "'");
}

LocalField::LocalField(const Prime& p, Poly poly, Certificate cert) : p_(p), poly_(std::move(poly)), cert_(cert) {
  require(poly_.degree() >= 1 && poly_.is_monic(), "defining polynomial must be monic of degree >= 1");
  bool ok = false;
  switch (cert_) {
    case Certificate::DegreeOne: ok = poly_.degree() == 1; break;
    case Certificate::QuadraticNonsquareDisc: ok = check_quadratic(poly_, p_); break;
    case Certificate::Eisenstein: ok = check_eisenstein(poly_, p_); break;
    case Certificate::UnramifiedIrreducibleModP: ok = check_unramified(poly_, p_); break;
  }
  if (!ok) throw InvalidArgument("polynomial " + to_string(poly_) + " fails its " + to_string(cert_) + " certificate");
  build_model();
}

LocalField LocalField::rationals(const Prime& p) { return LocalField(p, Poly({0, 1}), Certificate::DegreeOne); }

LocalField LocalField::quadratic(const Prime& p, const Rational& d) {
  return LocalField(p, Poly({-d, 0, 1}), Certificate::QuadraticNonsquareDisc);
}

LocalField LocalField::from_poly(const Prime& p, const Poly& defining, Certificate cert) {
  return LocalField(p, defining, cert);
}

LocalField LocalField::from_poly(const Prime& p, const Poly& defining) {
  require(defining.degree() >= 1 && defining.is_monic(), "defining polynomial must be monic of degree >= 1");
  if (defining.degree() == 1) return LocalField(p, defining, Certificate::DegreeOne);
  if (check_quadratic(defining, p)) return LocalField(p, defining, Certificate::QuadraticNonsquareDisc);
  if (check_eisenstein(defining, p)) return LocalField(p, defining, Certificate::Eisenstein);
  if (check_unramified(defining, p)) return LocalField(p, defining, Certificate::UnramifiedIrreducibleModP);
  throw InvalidArgument("no irreducibility certificate applies to " + to_string(defining));
}

void LocalField::build_model() {
  const int m = degree();
  offset_ = 0;
  scale_ = 1;
  if (m == 1) {
    kind_ = ModelKind::Trivial;
    model_ = Poly({0, 1});
    e_ = f_ = 1;
    return;
  }
  if (cert_ == Certificate::Eisenstein) {
    kind_ = ModelKind::Eisenstein;
    model_ = poly_;
    e_ = m;
    f_ = 1;
    return;
  }
  if (cert_ == Certificate::UnramifiedIrreducibleModP) {
    kind_ = ModelKind::Unramified;
    model_ = poly_;
    e_ = 1;
    f_ = m;
    return;
  }
  // Quadratic: r = (-b + √D)/2 with D = b² - 4c. Write √D = p^k/den · √D'' with D'' an
  // integer of valuation 0 or 1, then √D'' = σ0 + σ1 s for a model root s.
  const Rational b = poly_.coeff(1);
  const Rational disc = b * b - 4 * poly_.coeff(0);
  const Integer den = disc.get_den();
  Integer scaled = disc.get_num() * den;
  const int v = tendo::valuation(scaled, p_);
  const int k = v / 2;
  Integer pk;
  mpz_pow_ui(pk.get_mpz_t(), p_.integer().get_mpz_t(), static_cast<unsigned long>(k));
  scaled /= pk * pk;
  const Rational kappa = Rational(pk, den * 2);
  Rational sigma0 = 0, sigma1 = 1;
  if (v % 2 == 1) {
    kind_ = ModelKind::Eisenstein;
    model_ = Poly({Rational(-scaled), 0, 1});
  } else if (!p_.is_two()) {
    kind_ = ModelKind::Unramified;
    model_ = Poly({Rational(-scaled), 0, 1});
  } else {
    const long r8 = residue_mod(Rational(scaled), 8).get_si();
    if (r8 == 5) {
      kind_ = ModelKind::Unramified;
      model_ = Poly({Rational(1 - scaled) / 4, -1, 1});
      sigma0 = -1;
      sigma1 = 2;
    } else if (r8 % 4 == 3) {
      kind_ = ModelKind::Eisenstein;
      model_ = Poly({Rational(1 - scaled), -2, 1});
      sigma0 = -1;
      sigma1 = 1;
    } else {
      throw InternalError("square discriminant passed the quadratic certificate");
    }
  }
  e_ = kind_ == ModelKind::Eisenstein ? 2 : 1;
  f_ = 2 / e_;
  offset_ = -b / 2 + kappa * sigma0;
  scale_ = kappa * sigma1;
}

Integer LocalField::residue_cardinality() const {
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p_.value()), static_cast<unsigned long>(f_));
  return q;
}

FieldElement LocalField::zero() const { return FieldElement(static_cast<std::size_t>(degree())); }

FieldElement LocalField::one() const { return from_rational(1); }

FieldElement LocalField::from_rational(const Rational& q) const {
  FieldElement x = zero();
  x[0] = q;
  return x;
}

FieldElement LocalField::generator() const {
  require(degree() >= 2, "generator of Q_p requested");
  FieldElement x = zero();
  x[1] = 1;
  return x;
}

FieldElement LocalField::element(std::vector<Rational> coords) const {
  require(coords.size() == static_cast<std::size_t>(degree()), "field element has wrong length");
  return coords;
}

bool LocalField::is_zero(const FieldElement& x) const {
  return std::all_of(x.begin(), x.end(), [](const Rational& c) { return c == 0; });
}

FieldElement LocalField::add(const FieldElement& a, const FieldElement& b) const {
  FieldElement r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

FieldElement LocalField::sub(const FieldElement& a, const FieldElement& b) const {
  FieldElement r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

FieldElement LocalField::neg(const FieldElement& a) const {
  FieldElement r = a;
  for (auto& c : r) c = -c;
  return r;
}

FieldElement LocalField::scale(const Rational& s, const FieldElement& a) const {
  FieldElement r = a;
  for (auto& c : r) c *= s;
  return r;
}

FieldElement LocalField::mul(const FieldElement& a, const FieldElement& b) const {
  return detail::mul_mod(a, b, poly_);
}

Matrix LocalField::mult_matrix(const FieldElement& a) const {
  const std::size_t n = static_cast<std::size_t>(degree());
  std::vector<Vector> cols;
  cols.reserve(n);
  FieldElement col = a;
  const FieldElement r = n > 1 ? generator() : one();
  for (std::size_t j = 0; j < n; ++j) {
    cols.push_back(col);
    if (j + 1 < n) col = mul(col, r);
  }
  return Matrix::from_columns(cols);
}

FieldElement LocalField::inverse(const FieldElement& a) const {
  require(!is_zero(a), "inverse of zero in a field");
  return solve(mult_matrix(a), one());
}

Rational LocalField::trace(const FieldElement& a) const {
  const Matrix m = mult_matrix(a);
  Rational t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

Rational LocalField::norm(const FieldElement& a) const { return determinant(mult_matrix(a)); }

bool LocalField::is_rational(const FieldElement& a) const {
  return std::all_of(a.begin() + 1, a.end(), [](const Rational& c) { return c == 0; });
}

std::vector<Rational> LocalField::to_model(const FieldElement& a) const {
  require(a.size() == static_cast<std::size_t>(degree()), "field element has wrong length");
  if (offset_ == 0 && scale_ == 1) return a;
  // degree 2: c0 + c1 r = (c0 + c1 offset) + (c1 scale) s
  return {a[0] + a[1] * offset_, a[1] * scale_};
}

FieldElement LocalField::from_model(const std::vector<Rational>& m) const {
  if (offset_ == 0 && scale_ == 1) return m;
  const Rational c1 = m[1] / scale_;
  return {m[0] - c1 * offset_, c1};
}

std::vector<Rational> LocalField::model_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
  return detail::mul_mod(a, b, model_);
}

int LocalField::model_valuation(const std::vector<Rational>& m) const {
  int best = 0;
  bool found = false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    int v = tendo::valuation(m[i], p_);
    if (kind_ == ModelKind::Eisenstein) v = e_ * v + static_cast<int>(i);
    if (!found || v < best) best = v;
    found = true;
  }
  require(found, "valuation of zero");
  return best;
}

std::vector<Rational> LocalField::model_uniformizer() const {
  std::vector<Rational> u(static_cast<std::size_t>(degree()));
  if (kind_ == ModelKind::Eisenstein) {
    u[1] = 1;
  } else {
    u[0] = static_cast<long>(p_.value());
  }
  return u;
}

std::vector<std::int64_t> LocalField::model_residue(const std::vector<Rational>& m) const {
  const Integer pp = p_.integer();
  if (kind_ == ModelKind::Unramified) {
    std::vector<std::int64_t> r;
    for (const auto& c : m) r.push_back(residue_mod(c, pp).get_si());
    return r;
  }
  return {residue_mod(m[0], pp).get_si()};
}

std::vector<std::int64_t> LocalField::residue_modulus() const { return reduce_mod_p(model_, p_); }

int LocalField::valuation(const FieldElement& a) const { return model_valuation(to_model(a)); }

bool LocalField::is_square(const FieldElement& a) const {
  require(!is_zero(a), "square test of zero");
  const auto [v, unit] = detail::split_uniformizer(*this, to_model(a));
  if (v % 2 != 0) return false;
  if (!p_.is_two()) {
    return detail::residue_field(*this).quadratic_character(model_residue(unit)) == 1;
  }
  return detail::unit_is_square_by_lifting(*this, unit);
}

std::vector<QuadraticAlgebra> quadratic_algebras(const Prime& p) {
  std::vector<QuadraticAlgebra> out;
  for (const auto& c : square_class_table(p)) out.push_back(QuadraticAlgebra{c});
  return out;
}

}  // namespace tendo
