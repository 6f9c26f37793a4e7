#include "tendo/poly.hpp"

#include <sstream>

#include "tendo/error.hpp"

namespace tendo {

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int degree) {
  require(degree >= 0, "negative monomial degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::linear_factor(const Rational& root) { return Poly({-root, Rational(1)}); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& Poly::leading() const {
  require(!is_zero(), "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r = *this;
  const Rational lead = leading();
  for (auto& c : r.coeffs_) c /= lead;
  return r;
}

Poly Poly::derivative() const {
  if (degree() <= 0) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Poly(std::move(v));
}

Rational Poly::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> v(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(v);
  trim();
  return *this;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  require(!b.is_zero(), "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Rational> rem = a.coeffs_;
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Rational& lead = b.leading();
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational c = rem[static_cast<std::size_t>(k + db)] / lead;
    quo[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= c * b.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool is_squarefree(const Poly& f) {
  require(!f.is_zero(), "squarefree test of the zero polynomial");
  return gcd(f, f.derivative()).degree() == 0;
}

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    Rational c = f.coeff(i);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << c.get_str();
      continue;
    }
    if (c != 1) out << c.get_str() << "*";
    out << "T";
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

}  // namespace tendo
