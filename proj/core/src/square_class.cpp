#include <algorithm>

#include "tendo/error.hpp"
#include "tendo/localfield.hpp"

namespace tendo {

namespace {

struct UnitSplit {
  int v;
  Rational unit;
};

UnitSplit split_unit(const Rational& a, const Prime& p) {
  const int v = valuation(a, p);
  Rational unit = a;
  Integer pv;
  mpz_pow_ui(pv.get_mpz_t(), p.integer().get_mpz_t(), static_cast<unsigned long>(v < 0 ? -v : v));
  if (v > 0) unit /= pv;
  if (v < 0) unit *= pv;
  return {v, unit};
}

int unit_mod8(const Rational& unit) { return static_cast<int>(residue_mod(unit, 8).get_si()); }

}  // namespace

SquareClass::SquareClass(const Rational& a, const Prime& p) : p_(p) {
  require(a != 0, "square class of zero");
  const auto [v, unit] = split_unit(a, p);
  if (p.is_two()) {
    static constexpr int kUnitClass[8] = {0, 1, 0, -5, 0, 5, 0, -1};
    rep_ = kUnitClass[unit_mod8(unit)];
    if (v % 2 != 0) rep_ *= 2;
  } else {
    rep_ = legendre(unit, p) == 1 ? 1 : least_nonresidue(p);
    if (v % 2 != 0) rep_ *= static_cast<long>(p.value());
  }
}

std::size_t SquareClass::index() const {
  const auto table = square_class_table(p_);
  return static_cast<std::size_t>(std::find(table.begin(), table.end(), *this) - table.begin());
}

SquareClass SquareClass::operator*(const SquareClass& other) const {
  require(p_ == other.p_, "square classes over different primes");
  return SquareClass(rep_ * other.rep_, p_);
}

SquareClass SquareClass::operator-() const { return SquareClass(-rep_, p_); }

SquareClass square_class(const Rational& a, const Prime& p) { return SquareClass(a, p); }

std::vector<SquareClass> square_class_table(const Prime& p) {
  std::vector<SquareClass> out;
  if (p.is_two()) {
    for (int r : {1, -1, 2, -2, 5, -5, 10, -10}) out.emplace_back(Rational(r), p);
  } else {
    const long u = static_cast<long>(least_nonresidue(p));
    const long pp = static_cast<long>(p.value());
    for (long r : {1L, u, pp, u * pp}) out.emplace_back(Rational(r), p);
  }
  return out;
}

std::string to_string(const SquareClass& c) { return c.representative().get_str(); }

int hilbert_qp(const Rational& a, const Rational& b, const Prime& p) {
  require(a != 0 && b != 0, "Hilbert symbol of zero");
  const auto [alpha, u] = split_unit(a, p);
  const auto [beta, w] = split_unit(b, p);
  int exponent = 0;  // parity of the power of -1
  if (p.is_two()) {
    const int u8 = unit_mod8(u);
    const int w8 = unit_mod8(w);
    const auto eps = [](int x) { return ((x - 1) / 2) & 1; };
    const auto omega = [](int x) { return ((x * x - 1) / 8) & 1; };
    exponent = eps(u8) * eps(w8) + (alpha & 1) * omega(w8) + (beta & 1) * omega(u8);
  } else {
    const int half = static_cast<int>(((p.value() - 1) / 2) & 1);
    exponent = (alpha & 1) * (beta & 1) * half;
    if ((beta & 1) && legendre(u, p) == -1) ++exponent;
    if ((alpha & 1) && legendre(w, p) == -1) ++exponent;
  }
  return (exponent & 1) ? -1 : 1;
}

}  // namespace tendo
