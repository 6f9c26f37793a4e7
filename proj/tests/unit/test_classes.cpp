#include <gtest/gtest.h>

#include "oracles.hpp"
#include "property.hpp"
#include "tendo/classes.hpp"
#include "tendo/error.hpp"

namespace tendo {
namespace {

using testing::for_all;

Rational q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

EtaleAlgebra split_qp(std::int64_t p) { return EtaleAlgebra({FactorTower::split(LocalField::rationals(Prime(p)))}); }
AlgebraElement pair(const EtaleAlgebra& l, const Rational& a, const Rational& b) {
  return l.element({FactorValue{{a}, {b}}});
}

// Very-regular generator x of a random algebra.
ClassParameter random_twisted(Rng& rng, const Prime& p, int half_dim, ClassKind kind = ClassKind::TglEven,
                              const AlgebraShape& shape = {}) {
  const EtaleAlgebra l = random_algebra(rng, p, half_dim, shape);
  for (int tries = 0; tries < 1000; ++tries) {
    AlgebraElement x = random_invertible_element(rng, l, 6);
    if (!l.is_generator(x) || !l.very_regular(x)) continue;
    if (!l.is_generator(l.mul(l.tau(x), l.inverse(x)))) continue;
    ClassParameter param{kind, l, x, std::nullopt, std::nullopt, std::nullopt};
    if (kind == ClassKind::TglOdd) param.extra_square = random_nonzero_rational(rng, 9);
    return param;
  }
  throw std::runtime_error("no very-regular generator found");
}

ClassParameter orthogonal_partner(Rng& rng, const ClassParameter& twisted) {
  const EtaleAlgebra& l = twisted.algebra;
  const AlgebraElement y = l.neg(l.mul(twisted.element, l.inverse(l.tau(twisted.element))));
  return ClassParameter{ClassKind::SoEven, l, y, random_fixed_element(rng, l, 5), std::nullopt, std::nullopt};
}

TEST(ClassKind, Names) {
  for (auto k : {ClassKind::TglEven, ClassKind::TglOdd, ClassKind::SoEven, ClassKind::SoOdd, ClassKind::Sp,
                 ClassKind::U, ClassKind::TglE}) {
    EXPECT_EQ(class_kind_from_string(to_string(k)), k);
  }
  EXPECT_THROW(class_kind_from_string("GL"), InvalidArgument);
}

TEST(BuildTgl, SplitExample) {
  const EtaleAlgebra l = split_qp(5);
  const ClassParameter param{ClassKind::TglEven, l, pair(l, 2, 3), std::nullopt, std::nullopt, std::nullopt};
  // tr(τ(v)v'x) with v = (v1, v2): v2·v1'·2 + v1·v2'·3.
  EXPECT_EQ(build_tgl_even(param), Matrix::from_rows({{0, 3}, {2, 0}}));
  ClassParameter odd = param;
  odd.kind = ClassKind::TglOdd;
  odd.extra_square = 1;
  EXPECT_EQ(build_tgl_odd(odd), Matrix::from_rows({{0, 3, 0}, {2, 0, 0}, {0, 0, 1}}));
  EXPECT_EQ(is_very_regular(odd), is_very_regular(param));
  odd.extra_square.reset();
  EXPECT_THROW(build_tgl_odd(odd), InvalidArgument);
}

TEST(BuildTgl, RejectsNonGenerators) {
  const EtaleAlgebra l = split_qp(5);
  const ClassParameter param{ClassKind::TglEven, l, pair(l, 2, 2), std::nullopt, std::nullopt, std::nullopt};
  EXPECT_THROW(build_tgl_even(param), InvalidArgument);
}

TEST(TwistInvariant, Examples) {
  EXPECT_EQ(twist_invariant(Matrix::identity(3)), Poly::linear_factor(1) * Poly::linear_factor(1) * Poly::linear_factor(1));
  const Matrix alt = Matrix::from_rows({{0, 1}, {-1, 0}});
  EXPECT_EQ(twist_invariant(alt), Poly::linear_factor(-1) * Poly::linear_factor(-1));
  EXPECT_THROW(twist_invariant(Matrix(2, 2)), InvalidArgument);
}

TEST(TwistInvariant, RecoversParameter) {
  const auto report = for_all(61, 150, [](Rng& rng) -> std::string {
    const Prime p(rng.pick(std::vector<std::int64_t>{2, 3, 5}));
    const ClassParameter param = random_twisted(rng, p, static_cast<int>(rng.uniform(1, 3)));
    const EtaleAlgebra& l = param.algebra;
    const Matrix delta = build_tgl_even(param);
    const AlgebraElement ratio = l.mul(l.tau(param.element), l.inverse(param.element));
    if (twist_invariant(delta) != testing::faddeev_leverrier(l.mult_matrix(ratio))) return "twist invariant";
    if (build_tgl_even({ClassKind::TglEven, l, l.tau(param.element), {}, {}, {}}) != delta.transpose())
      return "τ(x) does not transpose δ";
    // Twisted conjugation gᵀδg keeps the invariant.
    const Matrix g = random_invertible_matrix(rng, delta.rows(), 3);
    if (twist_invariant(congruence(delta, g)) != twist_invariant(delta)) return "not a twisted-class invariant";
    return "";
  });
  EXPECT_TRUE(report.ok()) << report.describe("twist invariant");
}

TEST(BuildSo, GroupIdentities) {
  const auto report = for_all(62, 150, [](Rng& rng) -> std::string {
    const Prime p(rng.pick(std::vector<std::int64_t>{2, 3, 5}));
    const ClassParameter twisted = random_twisted(rng, p, static_cast<int>(rng.uniform(1, 3)));
    const ClassParameter so = orthogonal_partner(rng, twisted);
    const auto rep = build_so_even(so);
    const Matrix& g = rep.group_element;
    if (congruence(rep.form.gram(), g) != rep.form.gram()) return "γ not orthogonal";
    if (determinant(g) != 1) return "det γ != 1";
    const Poly f = char_poly(g);
    if (f.evaluate(1) == 0 || f.evaluate(-1) == 0) return "eigenvalue ±1 on a very-regular element";
    ClassParameter odd = so;
    odd.kind = ClassKind::SoOdd;
    odd.line_value = random_nonzero_rational(rng, 7);
    const auto rep_odd = build_so_odd(odd);
    if (rep_odd.form.dim() != rep.form.dim() + 1) return "odd dimension";
    if (congruence(rep_odd.form.gram(), rep_odd.group_element) != rep_odd.form.gram()) return "odd γ not orthogonal";
    if (rep_odd.group_element(rep.form.dim(), rep.form.dim()) != 1) return "odd γ moves the extra line";
    return "";
  });
  EXPECT_TRUE(report.ok()) << report.describe("SO builders");
}

TEST(BuildSp, SplitExampleAndIdentity) {
  const EtaleAlgebra l = split_qp(3);
  const AlgebraElement y = pair(l, 2, q(1, 2));
  const ClassParameter param{ClassKind::Sp, l, y, pair(l, 1, -1), std::nullopt, std::nullopt};
  const auto [gram, g] = build_sp(param);
  EXPECT_TRUE(gram.is_alternating());
  // tr(τ(v)·v′·c) = v₂v₁′ - v₁v₂′
  EXPECT_EQ(gram, Matrix::from_rows({{0, -1}, {1, 0}}));
  EXPECT_EQ(congruence(gram, g), gram);
  const ClassParameter bad{ClassKind::Sp, l, y, pair(l, 1, 1), std::nullopt, std::nullopt};
  EXPECT_THROW(build_sp(bad), InvalidArgument);
}

TEST(BuildSp, RandomIdentity) {
  const auto report = for_all(63, 100, [](Rng& rng) -> std::string {
    const Prime p(rng.pick(std::vector<std::int64_t>{2, 3, 5}));
    const EtaleAlgebra l = random_algebra(rng, p, static_cast<int>(rng.uniform(1, 3)));
    AlgebraElement y = random_norm_one_element(rng, l, 5);
    for (int i = 0; i < 200 && !l.is_generator(y); ++i) y = random_norm_one_element(rng, l, 5);
    if (!l.is_generator(y)) return "";
    const ClassParameter param{ClassKind::Sp, l, y, random_anti_fixed_element(rng, l, 5), {}, {}};
    const auto [gram, g] = build_sp(param);
    if (!gram.is_alternating() || determinant(gram) == 0) return "Gram not symplectic";
    return congruence(gram, g) == gram ? "" : "γ not symplectic";
  });
  EXPECT_TRUE(report.ok()) << report.describe("Sp builder");
}

TEST(Corresponds, ByConstructionAndMismatch) {
  const auto report = for_all(64, 150, [](Rng& rng) -> std::string {
    const Prime p(rng.pick(std::vector<std::int64_t>{2, 3, 5, 7}));
    const ClassParameter twisted = random_twisted(rng, p, static_cast<int>(rng.uniform(1, 3)));
    ClassParameter so = orthogonal_partner(rng, twisted);
    if (!corresponds(twisted, so)) return "constructed partner does not correspond";
    if (is_elliptic(twisted) != is_elliptic(so)) return "ellipticity differs across the correspondence";
    ClassParameter inverse = so;
    inverse.element = so.algebra.tau(so.element);
    if (!corresponds(twisted, inverse)) return "y -> τ(y) breaks correspondence";
    // A scaled x has a different ratio unless the scale is fixed.
    ClassParameter other = twisted;
    other.element = twisted.algebra.mul(twisted.element, random_fixed_element(rng, twisted.algebra, 4));
    if (!twisted.algebra.is_generator(other.element)) return "";
    if (!corresponds(other, so)) return "scaling x by a fixed element changed the class";
    if (is_elliptic(other) != is_elliptic(twisted)) return "ellipticity changed under fixed scaling";
    return "";
  });
  EXPECT_TRUE(report.ok()) << report.describe("correspondence");
}

TEST(Corresponds, PerturbedSplitCoordinate) {
  const EtaleAlgebra l = split_qp(5);
  const ClassParameter twisted{ClassKind::TglEven, l, pair(l, 2, 3), std::nullopt, std::nullopt, std::nullopt};
  const AlgebraElement y = l.neg(l.mul(twisted.element, l.inverse(l.tau(twisted.element))));
  const ClassParameter so{ClassKind::SoEven, l, y, l.one(), std::nullopt, std::nullopt};
  EXPECT_TRUE(corresponds(twisted, so));
  const ClassParameter off{ClassKind::TglEven, l, pair(l, 2, 7), std::nullopt, std::nullopt, std::nullopt};
  EXPECT_FALSE(corresponds(off, so));
}

TEST(Elliptic, Examples) {
  const EtaleAlgebra s = split_qp(5);
  EXPECT_FALSE(is_elliptic({ClassKind::TglEven, s, pair(s, 2, 3), {}, {}, {}}));
  const LocalField q5 = LocalField::rationals(Prime(5));
  const EtaleAlgebra k({FactorTower::quadratic(q5, {q(2)})});
  EXPECT_TRUE(is_elliptic({ClassKind::TglEven, k, k.element({FactorValue{{q(1)}, {q(1)}}}), {}, {}, {}}));
}

TEST(Weyl, DiagonalGeneralLinear) {
  const std::vector<Rational> t{2, 3, q(1, 5)};
  const Matrix g = Matrix::diagonal(t);
  Rational expected = 1;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t k = 0; k < t.size(); ++k)
      if (i != k) expected *= 1 - t[i] / t[k];
  EXPECT_EQ(weyl_discriminant(g, LieAlgebraKind::General, Matrix::identity(3)), expected);
  EXPECT_EQ(weyl_discriminant(Matrix::identity(3), LieAlgebraKind::General, Matrix::identity(3)), 1);
}

TEST(Weyl, SplitOrthogonalTorus) {
  // so(Hy ⊕ Hy) in the basis e1, e2, e-2, e-1; torus diag(a, b, 1/b, 1/a); roots ±e1±e2.
  const Rational a = 3, b = q(2, 7);
  const Matrix form = Matrix::from_rows({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}});
  const Matrix g = Matrix::diagonal(std::vector<Rational>{a, b, 1 / b, 1 / a});
  ASSERT_EQ(congruence(form, g), form);
  Rational expected = 1;
  for (const Rational& r : std::vector<Rational>{a * b, 1 / (a * b), a / b, b / a}) expected *= 1 - r;
  EXPECT_EQ(lie_algebra_basis(LieAlgebraKind::Orthogonal, form).size(), 6u);
  EXPECT_EQ(weyl_discriminant(g, LieAlgebraKind::Orthogonal, form), expected);
}

TEST(Weyl, TwistedInvariance) {
  const auto report = for_all(65, 40, [](Rng& rng) -> std::string {
    const Prime p(rng.pick(std::vector<std::int64_t>{3, 5}));
    const ClassParameter param = random_twisted(rng, p, static_cast<int>(rng.uniform(1, 2)));
    const Matrix delta = build_tgl_even(param);
    const Rational d = twisted_weyl_discriminant(delta);
    if (d == 0) return "zero discriminant at a very-regular point";
    const Matrix g = random_invertible_matrix(rng, delta.rows(), 3);
    return twisted_weyl_discriminant(congruence(delta, g)) == d ? "" : "not invariant under twisted conjugation";
  });
  EXPECT_TRUE(report.ok()) << report.describe("twisted Weyl discriminant");
}

TEST(ClassInvariant, OddExtraAndRoundTrip) {
  Rng rng(66);
  ClassParameter odd = random_twisted(rng, Prime(3), 2, ClassKind::TglOdd);
  const auto inv = class_invariant(odd);
  ASSERT_TRUE(inv.extra.has_value());
  EXPECT_EQ(*inv.extra, square_class(*odd.extra_square, Prime(3)));
  EXPECT_TRUE(is_squarefree(class_invariant(ClassParameter{ClassKind::TglEven, odd.algebra, odd.element, {}, {}, {}})
                                .char_poly));
}

}  // namespace
}  // namespace tendo
