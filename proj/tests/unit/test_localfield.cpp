#include <gtest/gtest.h>

#include "oracles.hpp"
#include "property.hpp"
#include "tendo/error.hpp"
#include "tendo/localfield.hpp"

namespace tendo {
namespace {

using testing::for_all;

Rational q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("6/4"), q(3, 2));
  EXPECT_EQ(parse_rational("-7"), q(-7));
  EXPECT_EQ(to_string(q(-3, 6)), "-1/2");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1.5"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(Prime, RejectsComposites) {
  EXPECT_NO_THROW(Prime(97));
  EXPECT_THROW(Prime(91), InvalidArgument);
  EXPECT_THROW(Prime(1), InvalidArgument);
}

TEST(Valuation, Examples) {
  EXPECT_EQ(valuation(q(1), Prime(5)), 0);
  EXPECT_EQ(valuation(q(4, 9), Prime(3)), -2);
  EXPECT_EQ(valuation(q(50), Prime(5)), 2);
  EXPECT_EQ(valuation(q(-96), Prime(2)), 5);
}

TEST(SquareClass, Examples) {
  const Prime p3(3);
  EXPECT_EQ(square_class(q(18), p3), square_class(q(least_nonresidue(p3)), p3));
  EXPECT_EQ(to_string(square_class(q(18), p3)), "2");
  EXPECT_TRUE(square_class(q(49), Prime(7)).is_trivial());
  EXPECT_EQ(to_string(square_class(q(-4), Prime(2))), "-1");
  EXPECT_EQ(square_class_table(Prime(2)).size(), 8u);
  EXPECT_EQ(square_class_table(Prime(11)).size(), 4u);
}

TEST(SquareClass, GroupLaw) {
  for (const std::int64_t pv : {2, 3, 5, 7}) {
    const Prime p(pv);
    const auto table = square_class_table(p);
    for (const auto& a : table) {
      EXPECT_TRUE((a * a).is_trivial());
      EXPECT_EQ(table[a.index()], a);
      for (const auto& b : table) {
        EXPECT_EQ(a * b, square_class(a.representative() * b.representative(), p));
      }
    }
  }
}

TEST(SquareClass, InvariantUnderSquares) {
  const auto report = for_all(11, 300, [](Rng& rng) -> std::string {
    const Prime p(rng.pick(std::vector<std::int64_t>{2, 3, 5, 7, 11}));
    const Rational a = random_nonzero_rational(rng, 60, 20);
    const Rational t = random_nonzero_rational(rng, 30, 30);
    return square_class(a, p) == square_class(a * t * t, p) ? "" : "class changed under a square factor";
  });
  EXPECT_TRUE(report.ok()) << report.describe("square invariance");
}

TEST(Hilbert, Examples) {
  EXPECT_EQ(hilbert_qp(q(5), q(2), Prime(5)), -1);
  EXPECT_EQ(hilbert_qp(q(-1), q(-1), Prime(2)), -1);
  for (const std::int64_t pv : {2, 3, 5}) {
    for (const auto& b : square_class_table(Prime(pv))) EXPECT_EQ(hilbert_qp(q(1), b.representative(), Prime(pv)), 1);
  }
}

TEST(Hilbert, AgreesWithSolubilitySearchOnTables) {
  for (const std::int64_t pv : {2, 3, 5, 7}) {
    const Prime p(pv);
    for (const auto& a : square_class_table(p))
      for (const auto& b : square_class_table(p))
        EXPECT_EQ(hilbert_qp(a.representative(), b.representative(), p),
                  testing::hilbert_by_search(a.representative(), b.representative(), p))
            << "p=" << pv << " a=" << to_string(a) << " b=" << to_string(b);
  }
}

TEST(Hilbert, SymmetryBilinearityAndNorms) {
  const auto report = for_all(12, 400, [](Rng& rng) -> std::string {
    const Prime p(rng.pick(std::vector<std::int64_t>{2, 3, 5, 7, 13}));
    const Rational a = random_nonzero_rational(rng, 40, 9);
    const Rational b = random_nonzero_rational(rng, 40, 9);
    const Rational c = random_nonzero_rational(rng, 40, 9);
    if (hilbert_qp(a, b, p) != hilbert_qp(b, a, p)) return "not symmetric";
    if (hilbert_qp(a * c, b, p) != hilbert_qp(a, b, p) * hilbert_qp(c, b, p)) return "not bilinear";
    if (hilbert_qp(a, -a, p) != 1) return "(a, -a) != 1";
    if (a != 1 && hilbert_qp(a, 1 - a, p) != 1) return "(a, 1 - a) != 1";
    return "";
  });
  EXPECT_TRUE(report.ok()) << report.describe("Hilbert symbol laws");
}

TEST(SolubilityOracle, Examples) {
  const LocalField q3 = LocalField::rationals(Prime(3));
  EXPECT_EQ(solubility_oracle(q(1), q(-1), q3, 4), Solubility::Soluble);
  const LocalField q5 = LocalField::rationals(Prime(5));
  EXPECT_EQ(solubility_oracle(q(5), q(2), q5, solubility_budget(q5, q5.from_rational(5), q5.from_rational(2))),
            Solubility::Insoluble);
  const LocalField q2 = LocalField::rationals(Prime(2));
  EXPECT_EQ(solubility_oracle(q(-1), q(-1), q2, solubility_budget(q2, q2.from_rational(-1), q2.from_rational(-1))),
            Solubility::Insoluble);
}

TEST(SolubilityOracle, WitnessIsAZeroToSearchPrecision) {
  const LocalField q7 = LocalField::rationals(Prime(7));
  const std::vector<FieldElement> coeffs = {q7.from_rational(1), q7.from_rational(1), q7.from_rational(-2)};
  const ZeroSearch s = find_isotropic_vector(q7, coeffs, 6);
  ASSERT_EQ(s.status, Solubility::Soluble);
  ASSERT_EQ(s.witness.size(), 3u);
  Rational value = 0;
  for (std::size_t i = 0; i < 3; ++i) value += coeffs[i][0] * s.witness[i][0] * s.witness[i][0];
  EXPECT_GE(value == 0 ? 100 : valuation(value, Prime(7)), 4);
}

TEST(LocalField, Certificates) {
  const Prime p3(3);
  EXPECT_EQ(LocalField::from_poly(p3, Poly({q(-3), 0, 1})).certificate(), Certificate::QuadraticNonsquareDisc);
  EXPECT_EQ(LocalField::from_poly(p3, Poly({q(-3), 0, 0, 1})).certificate(), Certificate::Eisenstein);
  EXPECT_THROW(LocalField::from_poly(p3, Poly({q(-4), 0, 1})), InvalidArgument);  // t² - 4 is reducible
  EXPECT_THROW(LocalField::from_poly(p3, Poly({q(-3), 0, 1}), Certificate::UnramifiedIrreducibleModP),
               InvalidArgument);
  const LocalField ram = LocalField::quadratic(p3, 3);
  EXPECT_EQ(ram.ramification_index(), 2);
  const LocalField unr = LocalField::quadratic(p3, 2);
  EXPECT_EQ(unr.residue_degree(), 2);
}

TEST(LocalField, FieldAxiomsOnRandomElements) {
  const auto report = for_all(13, 150, [](Rng& rng) -> std::string {
    const Prime p(rng.pick(std::vector<std::int64_t>{2, 3, 5}));
    const LocalField field = random_base_field(rng, p, static_cast<int>(rng.uniform(1, 3)));
    const FieldElement a = random_field_element(rng, field, 9);
    const FieldElement b = random_field_element(rng, field, 9);
    const FieldElement c = random_field_element(rng, field, 9);
    if (field.mul(a, field.add(b, c)) != field.add(field.mul(a, b), field.mul(a, c))) return "distributivity";
    if (field.mul(a, b) != field.mul(b, a)) return "commutativity";
    if (!field.is_zero(a)) {
      if (field.mul(a, field.inverse(a)) != field.one()) return "inverse";
      if (field.norm(a) != determinant(field.mult_matrix(a))) return "norm vs determinant";
    }
    Rational tr = 0;
    const Matrix m = field.mult_matrix(a);
    for (std::size_t i = 0; i < m.rows(); ++i) tr += m(i, i);
    if (tr != field.trace(a)) return "trace vs multiplication matrix";
    return "";
  });
  EXPECT_TRUE(report.ok()) << report.describe("field axioms");
}

TEST(LocalField, SquaresAreSquares) {
  const auto report = for_all(14, 120, [](Rng& rng) -> std::string {
    const Prime p(rng.pick(std::vector<std::int64_t>{2, 3, 5, 7}));
    const LocalField field = random_base_field(rng, p, static_cast<int>(rng.uniform(1, 2)));
    FieldElement a = random_field_element(rng, field, 9);
    if (field.is_zero(a)) return "";
    return field.is_square(field.mul(a, a)) ? "" : "a² not recognized as a square";
  });
  EXPECT_TRUE(report.ok()) << report.describe("squares");
}

TEST(HilbertTame, Examples) {
  const Prime p3(3);
  const LocalField ram = LocalField::from_poly(p3, Poly({q(-3), 0, 1}), Certificate::Eisenstein);
  EXPECT_EQ(hilbert_tame(ram, ram.generator(), ram.from_rational(-1)), -1);
  EXPECT_EQ(hilbert_tame(ram, ram.one(), ram.generator()), 1);
  const LocalField unr = LocalField::quadratic(p3, 2);
  EXPECT_EQ(hilbert_tame(unr, unr.generator(), unr.from_rational(-1)), 1);
}

TEST(HilbertTame, AgreesWithSearchOnExtensions) {
  const auto report = for_all(15, 60, [](Rng& rng) -> std::string {
    const Prime p(rng.pick(std::vector<std::int64_t>{3, 5, 7}));
    const LocalField field = random_base_field(rng, p, 2);
    FieldElement a = random_field_element(rng, field, 6);
    FieldElement b = random_field_element(rng, field, 6);
    if (field.is_zero(a) || field.is_zero(b)) return "";
    const int depth = solubility_budget(field, a, b);
    const Solubility s = solubility_oracle(a, b, field, depth);
    if (s == Solubility::Inconclusive) return "search inconclusive";
    return (s == Solubility::Soluble) == (hilbert_tame(field, a, b) == 1) ? "" : "tame symbol disagrees with search";
  });
  EXPECT_TRUE(report.ok()) << report.describe("tame symbol");
}

TEST(LocalNorm, Examples) {
  const LocalField q5 = LocalField::rationals(Prime(5));
  EXPECT_TRUE(is_local_norm(q5, q5.from_rational(2), q5.from_rational(2)));
  const LocalField q3 = LocalField::rationals(Prime(3));
  EXPECT_TRUE(is_local_norm(q3, q3.from_rational(3), q3.from_rational(9)));
  const LocalField q2 = LocalField::rationals(Prime(2));
  EXPECT_FALSE(is_local_norm(q2, q2.from_rational(-1), q2.from_rational(3)));
  const LocalField q2r3 = LocalField::quadratic(Prime(2), 3);
  EXPECT_THROW(hilbert_symbol(q2r3, q2r3.generator(), q2r3.from_rational(-1)), Unsupported);
}

}  // namespace
}  // namespace tendo
