#include "tendo/etale.hpp"

#include "tendo/error.hpp"

namespace tendo {

namespace {

const Prime& first_prime(const std::vector<FactorTower>& factors) {
  require(!factors.empty(), "an étale algebra needs at least one factor");
  return factors.front().base.prime();
}

}  // namespace

FactorTower FactorTower::split(LocalField base) { return FactorTower{std::move(base), std::nullopt}; }

FactorTower FactorTower::quadratic(LocalField base, FieldElement d) {
  require(d.size() == static_cast<std::size_t>(base.degree()), "step element has wrong length");
  require(!base.is_zero(d), "quadratic step with d = 0");
  require(!base.is_square(d), "quadratic step with a square d");
  return FactorTower{std::move(base), std::move(d)};
}

std::string to_string(NormCoset c) {
  switch (c) {
    case NormCoset::Same: return "same";
    case NormCoset::Different: return "different";
    case NormCoset::StableOnly: return "stable-only";
  }
  return "?";
}

EtaleAlgebra::EtaleAlgebra(std::vector<FactorTower> factors)
    : factors_(std::move(factors)), p_(first_prime(factors_)) {
  for (const auto& f : factors_) {
    require(f.base.prime() == p_, "factors over different primes");
    if (f.step) {
      require(f.step->size() == static_cast<std::size_t>(f.base.degree()), "step element has wrong length");
      require(!f.base.is_zero(*f.step) && !f.base.is_square(*f.step), "quadratic step with a square d");
    }
    offsets_.push_back(dim_);
    dim_ += 2 * f.base_degree();
  }
}

bool EtaleAlgebra::has_split_factor() const {
  for (const auto& f : factors_)
    if (f.is_split()) return true;
  return false;
}

void EtaleAlgebra::check(const AlgebraElement& a) const {
  require(a.parts.size() == factors_.size(), "element has the wrong number of factors");
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto n = static_cast<std::size_t>(factors_[i].base_degree());
    require(a.parts[i].first.size() == n && a.parts[i].second.size() == n, "element factor has wrong length");
  }
}

AlgebraElement EtaleAlgebra::zero() const {
  AlgebraElement out;
  for (const auto& f : factors_) out.parts.push_back({f.base.zero(), f.base.zero()});
  return out;
}

AlgebraElement EtaleAlgebra::from_rational(const Rational& r) const {
  AlgebraElement out;
  for (const auto& f : factors_) {
    const FieldElement c = f.base.from_rational(r);
    out.parts.push_back({c, f.is_split() ? c : f.base.zero()});
  }
  return out;
}

AlgebraElement EtaleAlgebra::one() const { return from_rational(1); }

AlgebraElement EtaleAlgebra::basis_element(int i) const {
  require(i >= 0 && i < dim_, "basis index out of range");
  Vector v(static_cast<std::size_t>(dim_));
  v[static_cast<std::size_t>(i)] = 1;
  return from_coordinates(v);
}

AlgebraElement EtaleAlgebra::element(std::vector<FactorValue> parts) const {
  AlgebraElement out{std::move(parts)};
  check(out);
  return out;
}

AlgebraElement EtaleAlgebra::fixed(const std::vector<FieldElement>& components) const {
  require(components.size() == factors_.size(), "wrong number of fixed components");
  AlgebraElement out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    require(components[i].size() == static_cast<std::size_t>(f.base_degree()), "fixed component has wrong length");
    out.parts.push_back({components[i], f.is_split() ? components[i] : f.base.zero()});
  }
  return out;
}

AlgebraElement EtaleAlgebra::anti_fixed(const std::vector<FieldElement>& components) const {
  require(components.size() == factors_.size(), "wrong number of components");
  AlgebraElement out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    require(components[i].size() == static_cast<std::size_t>(f.base_degree()), "component has wrong length");
    if (f.is_split()) {
      out.parts.push_back({components[i], f.base.neg(components[i])});
    } else {
      out.parts.push_back({f.base.zero(), components[i]});
    }
  }
  return out;
}

Vector EtaleAlgebra::coordinates(const AlgebraElement& x) const {
  check(x);
  Vector out;
  out.reserve(static_cast<std::size_t>(dim_));
  for (const auto& part : x.parts) {
    out.insert(out.end(), part.first.begin(), part.first.end());
    out.insert(out.end(), part.second.begin(), part.second.end());
  }
  return out;
}

AlgebraElement EtaleAlgebra::from_coordinates(const Vector& v) const {
  require(v.size() == static_cast<std::size_t>(dim_), "coordinate vector has wrong length");
  AlgebraElement out;
  auto it = v.begin();
  for (const auto& f : factors_) {
    const auto n = static_cast<std::ptrdiff_t>(f.base_degree());
    FactorValue part{FieldElement(it, it + n), FieldElement(it + n, it + 2 * n)};
    out.parts.push_back(std::move(part));
    it += 2 * n;
  }
  return out;
}

AlgebraElement EtaleAlgebra::add(const AlgebraElement& a, const AlgebraElement& b) const {
  check(a);
  check(b);
  AlgebraElement out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& k = factors_[i].base;
    out.parts.push_back({k.add(a.parts[i].first, b.parts[i].first), k.add(a.parts[i].second, b.parts[i].second)});
  }
  return out;
}

AlgebraElement EtaleAlgebra::neg(const AlgebraElement& a) const { return scale(-1, a); }

AlgebraElement EtaleAlgebra::sub(const AlgebraElement& a, const AlgebraElement& b) const { return add(a, neg(b)); }

AlgebraElement EtaleAlgebra::scale(const Rational& s, const AlgebraElement& a) const {
  check(a);
  AlgebraElement out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& k = factors_[i].base;
    out.parts.push_back({k.scale(s, a.parts[i].first), k.scale(s, a.parts[i].second)});
  }
  return out;
}

AlgebraElement EtaleAlgebra::mul(const AlgebraElement& a, const AlgebraElement& b) const {
  check(a);
  check(b);
  AlgebraElement out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    const auto& k = f.base;
    const auto& [a0, a1] = a.parts[i];
    const auto& [b0, b1] = b.parts[i];
    if (f.is_split()) {
      out.parts.push_back({k.mul(a0, b0), k.mul(a1, b1)});
    } else {
      // (a0 + a1√d)(b0 + b1√d) = a0b0 + d·a1b1 + (a0b1 + a1b0)√d
      const FieldElement rational_part = k.add(k.mul(a0, b0), k.mul(*f.step, k.mul(a1, b1)));
      const FieldElement root_part = k.add(k.mul(a0, b1), k.mul(a1, b0));
      out.parts.push_back({rational_part, root_part});
    }
  }
  return out;
}

bool EtaleAlgebra::is_invertible(const AlgebraElement& a) const {
  check(a);
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& k = factors_[i].base;
    const auto& [a0, a1] = a.parts[i];
    if (factors_[i].is_split()) {
      if (k.is_zero(a0) || k.is_zero(a1)) return false;
    } else if (k.is_zero(a0) && k.is_zero(a1)) {
      return false;
    }
  }
  return true;
}

AlgebraElement EtaleAlgebra::inverse(const AlgebraElement& a) const {
  require(is_invertible(a), "inverse of a non-invertible element");
  AlgebraElement out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    const auto& k = f.base;
    const auto& [a0, a1] = a.parts[i];
    if (f.is_split()) {
      out.parts.push_back({k.inverse(a0), k.inverse(a1)});
    } else {
      const FieldElement n = k.sub(k.mul(a0, a0), k.mul(*f.step, k.mul(a1, a1)));
      const FieldElement n_inv = k.inverse(n);
      out.parts.push_back({k.mul(a0, n_inv), k.neg(k.mul(a1, n_inv))});
    }
  }
  return out;
}

AlgebraElement EtaleAlgebra::tau(const AlgebraElement& a) const {
  check(a);
  AlgebraElement out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& [a0, a1] = a.parts[i];
    if (factors_[i].is_split()) {
      out.parts.push_back({a1, a0});
    } else {
      out.parts.push_back({a0, factors_[i].base.neg(a1)});
    }
  }
  return out;
}

AlgebraElement EtaleAlgebra::norm_to_fixed(const AlgebraElement& x) const { return mul(x, tau(x)); }

FieldElement EtaleAlgebra::fixed_component(const AlgebraElement& fixed_elem, std::size_t i) const {
  require(is_fixed(fixed_elem), "element is not τ-fixed");
  return fixed_elem.parts.at(i).first;
}

Rational EtaleAlgebra::fixed_norm(const AlgebraElement& fixed_elem) const {
  require(is_fixed(fixed_elem), "element is not τ-fixed");
  Rational out = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) out *= factors_[i].base.norm(fixed_elem.parts[i].first);
  return out;
}

Rational EtaleAlgebra::trace(const AlgebraElement& x) const {
  check(x);
  Rational out = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& k = factors_[i].base;
    if (factors_[i].is_split()) {
      out += k.trace(x.parts[i].first) + k.trace(x.parts[i].second);
    } else {
      out += 2 * k.trace(x.parts[i].first);
    }
  }
  return out;
}

Matrix EtaleAlgebra::mult_matrix(const AlgebraElement& x) const {
  check(x);
  Matrix out(static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_));
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    const auto& k = f.base;
    const auto n = static_cast<std::size_t>(f.base_degree());
    const auto o = static_cast<std::size_t>(offsets_[i]);
    const auto& [x0, x1] = x.parts[i];
    if (f.is_split()) {
      out.set_block(o, o, k.mult_matrix(x0));
      out.set_block(o + n, o + n, k.mult_matrix(x1));
    } else {
      const Matrix m0 = k.mult_matrix(x0);
      out.set_block(o, o, m0);
      out.set_block(o + n, o + n, m0);
      out.set_block(o, o + n, k.mult_matrix(k.mul(*f.step, x1)));
      out.set_block(o + n, o, k.mult_matrix(x1));
    }
  }
  return out;
}

Poly EtaleAlgebra::char_poly(const AlgebraElement& x) const { return tendo::char_poly(mult_matrix(x)); }

bool EtaleAlgebra::is_generator(const AlgebraElement& x) const { return is_squarefree(char_poly(x)); }

bool EtaleAlgebra::very_regular(const AlgebraElement& x) const {
  require(is_invertible(x), "very-regularity of a non-invertible element");
  const AlgebraElement ratio = mul(x, inverse(tau(x)));
  return is_invertible(sub(ratio, one())) && is_invertible(add(ratio, one()));
}

Matrix EtaleAlgebra::trace_form(const AlgebraElement& x) const {
  check(x);
  const auto n = static_cast<std::size_t>(dim_);
  std::vector<AlgebraElement> basis;
  std::vector<AlgebraElement> twisted;  // τ(b_i)
  for (int i = 0; i < dim_; ++i) {
    basis.push_back(basis_element(i));
    twisted.push_back(tau(basis.back()));
  }
  std::vector<AlgebraElement> scaled;  // b_j·x
  for (const auto& b : basis) scaled.push_back(mul(b, x));
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = trace(mul(twisted[i], scaled[j]));
  return out;
}

Matrix EtaleAlgebra::trace_form_bilinear(const AlgebraElement& x) const {
  require(is_invertible(x), "trace form of a non-invertible element");
  Matrix out = trace_form(x);
  if (determinant(out) == 0) throw InternalError("degenerate trace form for an invertible element");
  return out;
}

QuadForm EtaleAlgebra::trace_form_quadratic(const AlgebraElement& fixed_elem) const {
  require(is_fixed(fixed_elem), "quadratic trace form needs a τ-fixed element");
  return QuadForm(trace_form_bilinear(fixed_elem), p_);
}

Matrix EtaleAlgebra::fixed_trace_form(const AlgebraElement& fixed_elem) const {
  require(is_fixed(fixed_elem), "fixed trace form needs a τ-fixed element");
  std::vector<std::pair<std::size_t, FieldElement>> basis;  // (factor, base power)
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& k = factors_[i].base;
    for (int j = 0; j < k.degree(); ++j) {
      FieldElement e = k.zero();
      e[static_cast<std::size_t>(j)] = 1;
      basis.emplace_back(i, std::move(e));
    }
  }
  const std::size_t m = basis.size();
  Matrix out(m, m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = 0; s < m; ++s) {
      if (basis[r].first != basis[s].first) continue;
      const std::size_t i = basis[r].first;
      const auto& k = factors_[i].base;
      out(r, s) = k.trace(k.mul(k.mul(basis[r].second, basis[s].second), fixed_elem.parts[i].first));
    }
  return out;
}

NormCoset EtaleAlgebra::norm_coset_compare(const AlgebraElement& c1, const AlgebraElement& c2) const {
  require(is_fixed(c1) && is_fixed(c2), "norm cosets are taken in the fixed algebra");
  require(is_invertible(c1) && is_invertible(c2), "norm cosets of non-invertible elements");
  bool stable_only = false;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    if (f.is_split()) continue;  // every element of F_i is a norm from F_i × F_i
    const auto& k = f.base;
    const FieldElement ratio = k.mul(c1.parts[i].first, k.inverse(c2.parts[i].first));
    try {
      if (!is_local_norm(k, *f.step, ratio)) return NormCoset::Different;
    } catch (const Unsupported&) {
      stable_only = true;
    }
  }
  return stable_only ? NormCoset::StableOnly : NormCoset::Same;
}

}  // namespace tendo
