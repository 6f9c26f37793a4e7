#include <gtest/gtest.h>

#include "oracles.hpp"
#include "property.hpp"
#include "tendo/error.hpp"
#include "tendo/etale.hpp"

namespace tendo {
namespace {

using testing::for_all;

Rational q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

EtaleAlgebra split_qp(std::int64_t p) { return EtaleAlgebra({FactorTower::split(LocalField::rationals(Prime(p)))}); }
EtaleAlgebra quad_qp(std::int64_t p, std::int64_t d) {
  const LocalField base = LocalField::rationals(Prime(p));
  return EtaleAlgebra({FactorTower::quadratic(base, base.from_rational(d))});
}
AlgebraElement pair(const EtaleAlgebra& l, const Rational& a, const Rational& b) {
  return l.element({FactorValue{{a}, {b}}});
}

TEST(Etale, Construction) {
  const EtaleAlgebra s = split_qp(5);
  EXPECT_EQ(s.dim(), 2);
  EXPECT_TRUE(s.has_split_factor());
  const EtaleAlgebra u = quad_qp(3, 2);
  EXPECT_EQ(u.dim(), 2);
  EXPECT_FALSE(u.has_split_factor());
  const EtaleAlgebra two({FactorTower::split(LocalField::rationals(Prime(3))),
                          FactorTower::quadratic(LocalField::rationals(Prime(3)), {q(3)})});
  EXPECT_EQ(two.dim(), 4);
  EXPECT_EQ(two.offset(1), 2);
  EXPECT_THROW(quad_qp(5, 4), InvalidArgument);
  EXPECT_THROW(FactorTower::quadratic(LocalField::rationals(Prime(5)), {q(0)}), InvalidArgument);
}

TEST(Etale, SplitArithmetic) {
  const EtaleAlgebra l = split_qp(7);
  const AlgebraElement x = pair(l, 2, 5);
  EXPECT_EQ(l.tau(x), pair(l, 5, 2));
  EXPECT_EQ(l.norm_to_fixed(x), pair(l, 10, 10));
  EXPECT_EQ(l.trace(l.one()), 2);
  EXPECT_EQ(l.char_poly(x), Poly::linear_factor(2) * Poly::linear_factor(5));
  const AlgebraElement y = pair(l, 3, q(1, 3));
  EXPECT_EQ(l.char_poly(y), Poly::linear_factor(3) * Poly::linear_factor(q(1, 3)));
  EXPECT_EQ(l.char_poly(l.one()), Poly::linear_factor(1) * Poly::linear_factor(1));
  EXPECT_EQ(l.mult_matrix(l.one()), Matrix::identity(2));
  EXPECT_FALSE(l.is_generator(l.one()));
  EXPECT_TRUE(l.is_generator(x));
  EXPECT_TRUE(l.very_regular(x));
  EXPECT_FALSE(l.very_regular(pair(l, 2, -2)));
  EXPECT_FALSE(l.very_regular(pair(l, 2, 2)));
  EXPECT_THROW(l.inverse(pair(l, 0, 1)), InvalidArgument);
}

TEST(Etale, TraceFormExamples) {
  const EtaleAlgebra s = split_qp(3);
  EXPECT_EQ(s.trace_form_quadratic(s.one()).gram(), Matrix::from_rows({{0, 1}, {1, 0}}));
  // Basis {1, √d}: tr(1) = 2, tr(τ(√d)√d) = -2d.
  const EtaleAlgebra k = quad_qp(5, 2);
  EXPECT_EQ(k.trace_form_quadratic(k.one()).gram(), Matrix::from_rows({{2, 0}, {0, -4}}));
  EXPECT_THROW(k.trace_form_quadratic(k.element({FactorValue{{q(1)}, {q(1)}}})), InvalidArgument);
}

TEST(Etale, RingLawsAndInvolution) {
  const auto report = for_all(51, 200, [](Rng& rng) -> std::string {
    const Prime p(rng.pick(std::vector<std::int64_t>{2, 3, 5, 7}));
    const EtaleAlgebra l = random_algebra(rng, p, static_cast<int>(rng.uniform(1, 3)));
    const AlgebraElement a = random_element(rng, l, 6);
    const AlgebraElement b = random_element(rng, l, 6);
    const AlgebraElement c = random_element(rng, l, 6);
    if (l.mul(a, l.add(b, c)) != l.add(l.mul(a, b), l.mul(a, c))) return "distributivity";
    if (l.mul(l.mul(a, b), c) != l.mul(a, l.mul(b, c))) return "associativity";
    if (l.tau(l.tau(a)) != a) return "τ² != 1";
    if (l.tau(l.mul(a, b)) != l.mul(l.tau(a), l.tau(b))) return "τ not multiplicative";
    if (!l.is_fixed(l.norm_to_fixed(a))) return "x·τ(x) not fixed";
    if (l.trace(l.tau(a)) != l.trace(a)) return "trace not τ-invariant";
    if (l.trace(a) != testing::trace_by_mult(l, a)) return "trace differs from mult-matrix trace";
    if (l.from_coordinates(l.coordinates(a)) != a) return "coordinate round trip";
    if (l.mult_matrix(l.mul(a, b)) != l.mult_matrix(a) * l.mult_matrix(b)) return "mult matrix not multiplicative";
    if (l.trace(l.one()) != l.dim()) return "tr(1) != dim";
    if (l.is_invertible(a) != (determinant(l.mult_matrix(a)) != 0)) return "invertibility vs determinant";
    if (l.is_invertible(a) && l.mul(a, l.inverse(a)) != l.one()) return "inverse";
    return "";
  });
  EXPECT_TRUE(report.ok()) << report.describe("étale ring laws");
}

TEST(Etale, CharPolyAndPredicates) {
  const auto report = for_all(52, 200, [](Rng& rng) -> std::string {
    const Prime p(rng.pick(std::vector<std::int64_t>{2, 3, 5}));
    const EtaleAlgebra l = random_algebra(rng, p, static_cast<int>(rng.uniform(1, 3)));
    const AlgebraElement x = random_invertible_element(rng, l, 6);
    const Poly f = l.char_poly(x);
    if (f != testing::faddeev_leverrier(l.mult_matrix(x))) return "char poly vs Faddeev-LeVerrier";
    if (!evaluate(f, l.mult_matrix(x)).is_zero()) return "Cayley-Hamilton";
    if (l.is_generator(x) != is_squarefree(f)) return "generator vs squarefree";
    const AlgebraElement ratio = l.mul(x, l.inverse(l.tau(x)));
    const bool expected = determinant(l.mult_matrix(l.sub(ratio, l.one()))) != 0 &&
                          determinant(l.mult_matrix(l.add(ratio, l.one()))) != 0;
    if (l.very_regular(x) != expected) return "very_regular vs determinants";
    // det(mult(x)) equals the product of the factor norms.
    Rational norms = 1;
    for (std::size_t i = 0; i < l.factor_count(); ++i) {
      const auto& t = l.factors()[i];
      const LocalField& base = t.base;
      const auto& v = x.parts[i];
      if (t.is_split()) {
        norms *= base.norm(v.first) * base.norm(v.second);
      } else {
        norms *= base.norm(base.sub(base.mul(v.first, v.first), base.mul(*t.step, base.mul(v.second, v.second))));
      }
    }
    return norms == determinant(l.mult_matrix(x)) ? "" : "determinant vs factor norms";
  });
  EXPECT_TRUE(report.ok()) << report.describe("char poly");
}

TEST(Etale, TraceFormRelations) {
  const auto report = for_all(53, 150, [](Rng& rng) -> std::string {
    const Prime p(rng.pick(std::vector<std::int64_t>{2, 3, 5, 7}));
    const EtaleAlgebra l = random_algebra(rng, p, static_cast<int>(rng.uniform(1, 3)));
    const AlgebraElement x = random_invertible_element(rng, l, 6);
    const Matrix g = l.trace_form_bilinear(x);
    if (g.transpose() != l.trace_form_bilinear(l.tau(x))) return "transpose relation";
    if (g + l.trace_form(l.tau(x)) != l.trace_form(l.add(x, l.tau(x)))) return "symmetrization";
    if (determinant(g) == 0) return "degenerate trace form at an invertible x";
    const AlgebraElement z = random_element(rng, l, 3);
    if (!l.is_invertible(z) && determinant(l.trace_form(z)) != 0) return "non-degenerate at a zero divisor";
    const AlgebraElement c = random_fixed_element(rng, l, 6);
    if (!l.trace_form_quadratic(c).gram().is_symmetric()) return "trace form of a fixed element not symmetric";
    return "";
  });
  EXPECT_TRUE(report.ok()) << report.describe("trace forms");
}

TEST(Etale, FixedTraceFormDeterminantScaling) {
  const auto report = for_all(54, 150, [](Rng& rng) -> std::string {
    const Prime p(rng.pick(std::vector<std::int64_t>{2, 3, 5}));
    const EtaleAlgebra l = random_algebra(rng, p, static_cast<int>(rng.uniform(1, 3)));
    const AlgebraElement a = random_fixed_element(rng, l, 6);
    const AlgebraElement t = random_fixed_element(rng, l, 6);
    const Rational lhs = determinant(l.fixed_trace_form(l.mul(t, a)));
    const Rational rhs = l.fixed_norm(t) * determinant(l.fixed_trace_form(a));
    return square_class(lhs, p) == square_class(rhs, p) ? "" : "det(tr⟨ta⟩) != N(t)·det(tr⟨a⟩)";
  });
  EXPECT_TRUE(report.ok()) << report.describe("determinant scaling");
}

TEST(Etale, NormCosetCompare) {
  const EtaleAlgebra s = split_qp(5);
  EXPECT_EQ(s.norm_coset_compare(pair(s, 2, 2), pair(s, 3, 3)), NormCoset::Same);
  const EtaleAlgebra k = quad_qp(5, 2);  // unramified: units are norms, 5 is not
  const auto c1 = k.from_rational(1);
  EXPECT_EQ(k.norm_coset_compare(c1, k.from_rational(3)), NormCoset::Same);
  EXPECT_EQ(k.norm_coset_compare(c1, k.from_rational(5)), NormCoset::Different);
}

}  // namespace
}  // namespace tendo
