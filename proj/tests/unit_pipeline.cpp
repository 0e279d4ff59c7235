#include <gtest/gtest.h>

#include "etale/error.hpp"
#include "etale/parser.hpp"
#include "etale/pipeline.hpp"
#include "etale/report.hpp"

using namespace etale;

namespace {

AlgebraPresentation present(const char* field, const char* vars, std::vector<std::string> rels) {
    std::string text = std::string("field ") + field + "\nvars " + vars + "\nrelations:\n";
    for (const auto& r : rels) text += "  " + r + "\n";
    return parse_input(text);
}

FiniteAlgebra quotient(const AlgebraPresentation& p) { return quotient_algebra(relation_basis(p)); }

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InternalContradiction;
}

}  // namespace

TEST(Pipeline, ClassifyCircleAndAxes) {
    ClassificationReport r = classify(present("Q", "X, Y", {"X^2 + Y^2 - 1", "X*Y"}));
    EXPECT_FALSE(r.trivial);
    EXPECT_TRUE(r.nette);
    EXPECT_TRUE(r.standard_etale);
    EXPECT_EQ(r.noether_dimension, 0);
    EXPECT_EQ(r.vector_space_dimension, 4u);
    EXPECT_EQ(r.discriminant, Scalar(16));
    EXPECT_TRUE(r.etale);
    std::size_t total = 0;
    for (const auto& g : r.decomposition) {
        total += *g.degree();
        EXPECT_TRUE(is_separable(g));
    }
    EXPECT_EQ(total, 4u);
    EXPECT_TRUE(r.primitive_element.has_value());
}

TEST(Pipeline, ClassifyHyperbola) {
    ClassificationReport r = classify(present("Q", "X, Y", {"X*Y - 1"}));
    EXPECT_FALSE(r.nette);
    EXPECT_TRUE(r.standard_smooth);
    EXPECT_TRUE(r.elementary_smooth);
    EXPECT_FALSE(r.standard_etale);
    EXPECT_EQ(r.noether_dimension, 1);
    EXPECT_FALSE(r.vector_space_dimension.has_value());
    EXPECT_FALSE(r.discriminant.has_value());
}

TEST(Pipeline, ClassifyDoublePoint) {
    ClassificationReport r = classify(present("Q", "X", {"X^2"}));
    EXPECT_FALSE(r.nette);
    EXPECT_EQ(r.noether_dimension, 0);
    EXPECT_EQ(r.discriminant, Scalar(0));
    EXPECT_FALSE(r.etale);
    ASSERT_TRUE(r.nilpotent_witness.has_value());
    EXPECT_EQ(r.nilpotent_witness->expression, "X");
    EXPECT_TRUE(r.decomposition.empty());
}

TEST(Pipeline, ClassifyTrivialRing) {
    ClassificationReport r = classify(present("GF(5)", "X, Y", {"X*Y - 1", "X"}));
    EXPECT_TRUE(r.trivial);
    EXPECT_TRUE(r.nette);
    EXPECT_TRUE(r.etale);
    EXPECT_EQ(r.vector_space_dimension, 0u);
    ASSERT_FALSE(r.notes.empty());
    EXPECT_NE(r.notes[0].find("TrivialAlgebra"), std::string::npos);
}

TEST(Pipeline, PrimitiveElementSqrt2Sqrt3) {
    FiniteAlgebra a = quotient(present("Q", "X, Y", {"X^2 - 2", "Y^2 - 3"}));
    PrimitiveElement prim = primitive_element(a, a.generator_refs());
    EXPECT_EQ(prim.expression, "X + Y");
    EXPECT_EQ(prim.minimal_polynomial.to_string(), "T^4 - 10*T^2 + 1");
    AlgebraElement b = prim.element;
    AlgebraElement b2 = a.mul(b, b);
    AlgebraElement value = a.add(a.sub(a.mul(b2, b2), a.scale(10, b2)), a.one());
    EXPECT_TRUE(a.is_zero(value));
}

TEST(Pipeline, PrimitiveElementExamples) {
    FiniteAlgebra sqrt2 = quotient(present("Q", "X", {"X^2 - 2"}));
    PrimitiveElement p = primitive_element(sqrt2, sqrt2.generator_refs());
    EXPECT_EQ(p.expression, "X");
    EXPECT_EQ(p.minimal_polynomial.to_string(), "T^2 - 2");

    FiniteAlgebra f2f2 = quotient(present("GF(2)", "X", {"X^2 + X"}));
    EXPECT_EQ(primitive_element(f2f2, f2f2.generator_refs()).minimal_polynomial.to_string(), "T^2 + T");

    FiniteAlgebra f2_4 = quotient(present("GF(2)", "X, Y", {"X^2 + X", "Y^2 + Y"}));
    EXPECT_EQ(code_of([&] { primitive_element(f2_4, f2_4.generator_refs()); }), ErrorCode::SearchExhausted);
    // Over all 16 elements of (GF(2))^4 no minimal polynomial reaches degree 4.
    EXPECT_EQ(code_of([&] { primitive_element(f2_4, {}); }), ErrorCode::SearchExhausted);
    EXPECT_EQ(code_of([&] { primitive_element(quotient(present("Q", "X", {"X^2"})), {}); }), ErrorCode::NotEtale);
}

TEST(Pipeline, FrobeniusSplitExamples) {
    FiniteAlgebra a = quotient(present("GF(2)", "X", {"X^2 + X"}));
    auto e = frobenius_split(a);
    ASSERT_TRUE(e.has_value());
    EXPECT_EQ(a.format(*e), "X");

    EXPECT_FALSE(frobenius_split(quotient(present("GF(2)", "X", {"X^2 + X + 1"}))).has_value());

    FiniteAlgebra b = quotient(present("GF(3)", "X", {"X^2 - 1"}));
    auto f = frobenius_split(b);
    ASSERT_TRUE(f.has_value());
    EXPECT_EQ(b.format(*f), "2 + 2*X");

    EXPECT_EQ(code_of([] { frobenius_split(quotient(present("GF(2)", "X", {"X^2 + 1"}))); }), ErrorCode::NotEtale);
    EXPECT_EQ(code_of([] { frobenius_split(quotient(present("Q", "X", {"X^2 - 1"}))); }),
              ErrorCode::CharacteristicZero);
}

TEST(Pipeline, FrobeniusSplitLargePrime) {
    // GF(1000003)[X]/<X^3 - X>: three rational points, split without scanning the field.
    FiniteAlgebra a = quotient(present("GF(1000003)", "X", {"X^3 - X"}));
    auto e = frobenius_split(a);
    ASSERT_TRUE(e.has_value());
    EXPECT_EQ(a.mul(*e, *e), *e);
    EXPECT_FALSE(a.is_zero(*e));
    EXPECT_NE(*e, a.one());
}

TEST(Pipeline, DecomposeExamples) {
    FiniteAlgebra twopoints = quotient(present("Q", "X", {"X^2 - 1"}));
    DecompositionCertificate c = decompose_etale(twopoints);
    EXPECT_TRUE(c.checks.all());

    DecompositionCertificate s = decompose_etale(quotient(present("Q", "X, Y", {"X^2 - 2", "Y^2 - 3"})));
    ASSERT_EQ(s.factors.size(), 1u);
    EXPECT_EQ(s.factors[0].polynomial.to_string(), "T^4 - 10*T^2 + 1");

    DecompositionCertificate f4 = decompose_etale(quotient(present("GF(2)", "X", {"X^2 + X + 1"})));
    ASSERT_EQ(f4.factors.size(), 1u);
    EXPECT_EQ(f4.factors[0].polynomial.to_string(), "T^2 + T + 1");

    DecompositionCertificate pts = decompose_etale(quotient(present("GF(2)", "X, Y", {"X^2 + X", "Y^2 + Y"})));
    EXPECT_TRUE(pts.checks.all());
    ASSERT_EQ(pts.factors.size(), 4u);
    for (const auto& f : pts.factors) EXPECT_EQ(*f.polynomial.degree(), 1u);
    ASSERT_FALSE(pts.notes.empty());
    EXPECT_NE(pts.notes[0].find("SearchExhausted"), std::string::npos);

    EXPECT_EQ(code_of([] { decompose_etale(quotient(present("Q", "X", {"X^2"}))); }), ErrorCode::NotEtale);
}

TEST(Pipeline, DecomposeThreePoints) {
    // The points (0, 1), (0, -1), (1, 1): neither X nor Y separates all three.
    FiniteAlgebra a = quotient(present("Q", "X, Y", {"X^2 - X", "Y^2 - 1", "X*Y - X"}));
    DecompositionCertificate c = decompose_etale(a);
    EXPECT_TRUE(c.checks.all());
    std::size_t total = 0;
    for (const auto& f : c.factors) total += *f.polynomial.degree();
    EXPECT_EQ(total, a.dimension());
}

TEST(Pipeline, VerifyRejectsBrokenCertificates) {
    FiniteAlgebra a = quotient(present("Q", "X", {"X^2 - 1"}));
    DecompositionCertificate c = decompose_etale(a);
    ASSERT_TRUE(c.checks.all());
    std::vector<DecompositionFactor> broken = c.factors;
    broken[0].idempotent = a.scale(2, broken[0].idempotent);
    EXPECT_FALSE(verify_decomposition(broken, a).all());
    broken = c.factors;
    broken[0].polynomial = broken[0].polynomial * broken[0].polynomial;
    EXPECT_FALSE(verify_decomposition(broken, a).all());
}

TEST(Pipeline, ReportsAreDeterministicAndWellFormed) {
    AlgebraPresentation p = present("GF(3)", "X, Y", {"X^2 - 1", "Y^2 + 1"});
    ClassifyOptions opts;
    opts.certificates = true;
    std::string a = render_json(classify(p, opts)), b = render_json(classify(p, opts));
    EXPECT_EQ(a, b);
    for (const char* key : {"\"input\"", "\"trivial\"", "\"nette\"", "\"standard_smooth\"", "\"elementary_smooth\"",
                            "\"standard_etale\"", "\"noether_dimension\"", "\"vector_space_dimension\"",
                            "\"discriminant\"", "\"etale\"", "\"decomposition\"", "\"primitive_element\"",
                            "\"nilpotent_witness\"", "\"notes\"", "\"certificates\""})
        EXPECT_NE(a.find(key), std::string::npos) << key;
    std::string text = render_text(classify(p, opts), Section::Smooth);
    EXPECT_NE(text.find("standard-smooth: true"), std::string::npos);
    EXPECT_EQ(text.find("nette:"), std::string::npos);
}

TEST(Pipeline, DifferentialsReport) {
    DifferentialsReport d = differentials(present("GF(2)", "X", {"X^2 + 1"}));
    EXPECT_EQ(d.omega_dimension, 2u);
    EXPECT_NE(render_text(d).find("omega_dimension: 2"), std::string::npos);
    EXPECT_FALSE(differentials(present("Q", "X, Y", {"X*Y - 1"})).omega_dimension.has_value());
}

TEST(Pipeline, BudgetsSurface) {
    AlgebraPresentation p = present("Q", "X, Y", {"X^2 + Y^2 - 1", "X*Y"});
    ClassifyOptions opts;
    opts.pair_budget = 0;
    EXPECT_EQ(code_of([&] { classify(p, opts); }), ErrorCode::BudgetExceeded);
}
