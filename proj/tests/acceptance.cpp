// Acceptance gate: one PASS/FAIL line per criterion, exact arithmetic throughout.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "etale/error.hpp"
#include "etale/parser.hpp"
#include "etale/pipeline.hpp"
#include "etale/report.hpp"
#include "oracles.hpp"

using namespace etale;

namespace {

Field field_of(std::uint64_t p) { return p ? Field::prime(p) : Field::rationals(); }

UniPoly random_monic(const Field& k, oracle::Dice& dice, long lo_deg, long hi_deg, long bound) {
    std::vector<Scalar> c;
    for (long d = dice(lo_deg, hi_deg); d > 0; --d) c.push_back(k.from_int(dice(-bound, bound)));
    c.push_back(k.one());
    return UniPoly(k, c);
}

std::vector<UniPoly> monic_corpus(const Field& k, std::uint64_t seed) {
    oracle::Dice dice(seed);
    std::vector<UniPoly> out;
    for (int i = 0; i < 200; ++i) out.push_back(random_monic(k, dice, 1, 6, 5));
    return out;
}

MultiPoly random_in_vars(const PolyRing& r, oracle::Dice& dice, std::size_t nvars, int terms, int max_exp) {
    MultiPoly f(r);
    for (int t = 0; t < terms; ++t) {
        std::vector<std::uint32_t> e(r.nvars(), 0);
        for (std::size_t v = 0; v < nvars; ++v) e[v] = static_cast<std::uint32_t>(dice(0, max_exp));
        f += MultiPoly::term(r, r.field().from_int(dice(-3, 3)), Monomial(e));
    }
    return f;
}

// Triangular zero-dimensional family: f_i is monic in X_i with coefficients in the earlier
// variables, sometimes with a repeated factor so that non-reduced instances occur.
AlgebraPresentation triangular(const Field& k, oracle::Dice& dice) {
    const std::size_t n = static_cast<std::size_t>(dice(1, 3));
    std::vector<std::string> names = {"X", "Y", "Z"};
    names.resize(n);
    PolyRing r(k, names);
    std::vector<MultiPoly> rels;
    std::size_t budget = 16;
    for (std::size_t i = 0; i < n; ++i) {
        MultiPoly x = MultiPoly::variable(r, i);
        long room = static_cast<long>(std::min<std::size_t>(4, budget / (n - i)));
        if (room < 1) room = 1;
        auto factor = [&](long deg) {
            MultiPoly f = x.pow(static_cast<std::uint32_t>(deg));
            for (long e = 0; e < deg; ++e)
                f += random_in_vars(r, dice, i, 1, 1) * x.pow(static_cast<std::uint32_t>(e));
            return f;
        };
        MultiPoly f(r);
        long deg;
        if (room >= 2 && dice(0, 2) == 0) {
            MultiPoly h = factor(1);
            deg = dice(2, room);
            f = h * h * factor(deg - 2);
        } else {
            deg = dice(1, room);
            f = factor(deg);
        }
        budget = std::max<std::size_t>(1, budget / static_cast<std::size_t>(deg));
        rels.push_back(f);
    }
    return {r, rels};
}

AlgebraPresentation random_presentation(const Field& k, oracle::Dice& dice) {
    if (dice(0, 1) == 0) return triangular(k, dice);
    const std::size_t n = static_cast<std::size_t>(dice(1, 3));
    std::vector<std::string> names = {"X", "Y", "Z"};
    names.resize(n);
    PolyRing r(k, names);
    std::vector<MultiPoly> rels;
    for (long s = dice(1, 3); s > 0; --s) rels.push_back(random_in_vars(r, dice, n, static_cast<int>(dice(1, 3)), 2));
    return {r, rels};
}

std::vector<AlgebraPresentation> triangular_suite() {
    std::vector<AlgebraPresentation> out;
    oracle::Dice dice(31337);
    for (int i = 0; i < 25; ++i) out.push_back(triangular(Field::rationals(), dice));
    for (int i = 0; i < 25; ++i) out.push_back(triangular(Field::prime(3), dice));
    return out;
}

struct Gate {
    int failures = 0;
    void report(int id, const std::string& what, const std::function<std::string()>& body) {
        auto start = std::chrono::steady_clock::now();
        std::string problem;
        try {
            problem = body();
        } catch (const std::exception& e) {
            problem = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line << (problem.empty() ? "PASS" : "FAIL") << " criterion " << id << ": " << what;
        line.precision(2);
        line << std::fixed << " (" << secs << " s)";
        if (!problem.empty()) line << " -- " << problem;
        std::cout << line.str() << std::endl;
        if (!problem.empty()) ++failures;
    }
};

std::string criterion_discriminant_coherence() {
    for (std::uint64_t p : {0ULL, 5ULL}) {
        Field k = field_of(p);
        for (const auto& f : monic_corpus(k, 100 + p)) {
            Scalar via_algebra = discriminant(monogenic_from_poly(f));
            Scalar via_resultant = discriminant_poly(f);
            if (via_algebra != via_resultant)
                return "disc mismatch for " + f.to_string() + " over " + k.name();
            // Independent check of the Sylvester-determinant route.
            oracle::Ring ring{p};
            std::vector<mpq_class> fc = f.coefficients();
            std::vector<mpq_class> dc = derivative(f).coefficients();
            const std::size_t m = fc.size() - 1;
            if (dc.empty() || dc.size() != m) continue;
            mpq_class res = oracle::resultant(ring, fc, dc);
            mpq_class sign = (m * (m - 1) / 2) % 2 ? -1 : 1;
            if (ring.norm(sign * res) != via_resultant) return "oracle mismatch for " + f.to_string();
        }
    }
    return "";
}

std::string criterion_separability() {
    for (std::uint64_t p : {0ULL, 5ULL}) {
        Field k = field_of(p);
        for (const auto& f : monic_corpus(k, 100 + p)) {
            bool etale = !k.is_zero(discriminant(monogenic_from_poly(f)));
            if (etale != is_separable(f)) return "etale/separable disagree on " + f.to_string();
        }
    }
    for (std::uint64_t p : {2ULL, 3ULL}) {
        Field k = Field::prime(p);
        oracle::Dice dice(700 + p);
        for (int i = 0; i < 100; ++i) {
            UniPoly f = random_monic(k, dice, 1, 4, 3);
            bool reduced = !oracle::has_nilpotent_by_enumeration(p, f.coefficients());
            if (reduced != is_squarefree(f)) return "reduced/squarefree disagree on " + f.to_string();
            if (reduced != is_reduced(monogenic_from_poly(f)) && p != 0) {
                // Over a perfect field reducedness and etaleness coincide.
                return "is_reduced disagrees on " + f.to_string();
            }
        }
    }
    return "";
}

std::string criterion_theorem_equivalences() {
    int etale_count = 0;
    for (const auto& p : triangular_suite()) {
        GroebnerBasis g = relation_basis(p);
        if (contains_one(g) || noether_dimension(g) != 0) return "family not zero-dimensional:\n" + p.to_string();
        FiniteAlgebra a = quotient_algebra(g);
        bool nette = is_nette(p);
        bool disc = !a.field().is_zero(discriminant(a));
        bool separable = true;
        for (const auto& gen : a.generator_refs()) separable = separable && is_separable(minimal_polynomial(gen.value, a));
        if (nette != disc || disc != separable)
            return "nette " + std::to_string(nette) + ", disc " + std::to_string(disc) + ", separable " +
                   std::to_string(separable) + " on\n" + p.to_string();
        etale_count += disc;
    }
    if (etale_count == 0 || etale_count == 50) return "suite is not mixed";
    return "";
}

std::string criterion_pipeline() {
    oracle::Dice dice(4044);
    for (int i = 0; i < 100; ++i) {
        Field k = i % 2 ? Field::prime(3) : Field::rationals();
        AlgebraPresentation p = random_presentation(k, dice);
        ClassificationReport r;
        try {
            r = classify(p);
        } catch (const Error& e) {
            return std::string(to_string(e.code())) + " on\n" + p.to_string() + e.what();
        }
        if (r.nette && !r.trivial && (r.noether_dimension != 0 || !r.discriminant || k.is_zero(*r.discriminant)))
            return "nette without finite etale quotient on\n" + p.to_string();
        if (r.etale && !r.trivial) {
            std::size_t total = 0;
            for (const auto& g : r.decomposition) {
                if (!is_separable(g)) return "inseparable factor on\n" + p.to_string();
                total += *g.degree();
            }
            if (total != r.vector_space_dimension) return "degree sum mismatch on\n" + p.to_string();
        }
        if (r.standard_etale && !r.nette) return "standard etale but not nette on\n" + p.to_string();
    }
    AlgebraPresentation hyperbola = parse_input("field Q\nvars X, Y\nrelations:\n  X*Y - 1\n");
    ClassificationReport r = classify(hyperbola);
    // Staircase oracle: the only leading monomial is X*Y, so {X} is a maximal independent set.
    if (!r.standard_smooth || r.nette || r.noether_dimension != 1) return "hyperbola witness wrong";
    return "";
}

std::string criterion_worked_instance() {
    AlgebraPresentation p = parse_input("field Q\nvars X, Y\nrelations:\n  X^2 + Y^2 - 1\n  X*Y\n");
    ClassificationReport r = classify(p);
    // Gram oracle: the four points (+-1, 0), (0, +-1) evaluated on the staircase 1, Y, X, Y^2.
    oracle::Ring q{0};
    std::vector<std::vector<mpq_class>> v = {{1, 0, 1, 0}, {1, 0, -1, 0}, {1, 1, 0, 1}, {1, -1, 0, 1}};
    mpq_class d = oracle::det(q, v);
    mpq_class expected = d * d;
    if (!r.nette || !r.standard_etale) return "flags";
    if (r.vector_space_dimension != 4u) return "dimension";
    if (!r.discriminant || *r.discriminant != expected) return "discriminant";
    std::size_t total = 0;
    for (const auto& g : r.decomposition) {
        if (!is_separable(g)) return "inseparable factor";
        total += *g.degree();
    }
    if (total != 4) return "degree sum";
    return "";
}

std::string criterion_primitive_element() {
    AlgebraPresentation p = parse_input("field Q\nvars X, Y\nrelations:\n  X^2 - 2\n  Y^2 - 3\n");
    FiniteAlgebra a = quotient_algebra(relation_basis(p));
    PrimitiveElement prim = primitive_element(a, a.generator_refs());
    if (prim.minimal_polynomial != UniPoly(Field::rationals(), {1, 0, -10, 0, 1})) return "minimal polynomial";
    if (!is_separable(prim.minimal_polynomial)) return "not separable";
    std::vector<std::vector<mpq_class>> rows;
    AlgebraElement power = a.one();
    for (int e = 0; e < 4; ++e) {
        rows.push_back(power.coordinates);
        power = a.mul(power, prim.element);
    }
    if (oracle::rank(oracle::Ring{0}, rows) != 4) return "power table rank";
    AlgebraElement b2 = a.mul(prim.element, prim.element);
    if (!a.is_zero(a.add(a.sub(a.mul(b2, b2), a.scale(10, b2)), a.one()))) return "b^4 - 10 b^2 + 1 != 0";

    AlgebraPresentation f2 = parse_input("field GF(2)\nvars X, Y\nrelations:\n  X^2 + X\n  Y^2 + Y\n");
    FiniteAlgebra b = quotient_algebra(relation_basis(f2));
    DecompositionCertificate cert = decompose_etale(b);
    bool exhausted = false;
    for (const auto& n : cert.notes) exhausted = exhausted || n.find("SearchExhausted") != std::string::npos;
    if (!exhausted) return "no SearchExhausted note";
    if (cert.factors.size() != 4) return "expected 4 factors";
    for (const auto& f : cert.factors)
        if (f.polynomial.degree() != 1u) return "factor of degree != 1";
    if (!cert.checks.all()) return "certificate checks";
    return "";
}

std::string criterion_kaehler() {
    AlgebraPresentation p = parse_input("field Q\nvars X, Y, Z\nrelations:\n  X^2 - Y*Z\n  Z^3 - X\n");
    const PolyRing& r = p.ring;
    DifferentialPresentation d = omega_presentation(p);
    GroebnerBasis g = relation_basis(p);
    oracle::Dice dice(2718);
    for (int i = 0; i < 100; ++i) {
        MultiPoly a = random_in_vars(r, dice, 3, 3, 3), b = random_in_vars(r, dice, 3, 3, 3);
        auto dab = universal_derivation(a * b, d), da = universal_derivation(a, d), db = universal_derivation(b, d);
        for (std::size_t v = 0; v < 3; ++v)
            if (normal_form(dab[v], g) != normal_form(a * db[v] + b * da[v], g)) return "Leibniz";
        UniPoly f = random_monic(r.field(), dice, 0, 4, 3);
        auto dfa = universal_derivation(compose(f, a), d);
        MultiPoly fp = compose(derivative(f), a);
        for (std::size_t v = 0; v < 3; ++v)
            if (normal_form(dfa[v], g) != normal_form(fp * da[v], g)) return "chain rule";
    }
    for (std::size_t i = 0; i < 3; ++i) {
        auto dx = universal_derivation(MultiPoly::variable(r, i), d);
        for (std::size_t j = 0; j < 3; ++j)
            if (dx[j].is_one() != (i == j) || (i != j && !dx[j].is_zero())) return "d(x_i) != e_i";
    }
    if (omega_dimension(parse_input("field GF(2)\nvars X\nrelations:\n  X^2 + 1\n")) != 2) return "omega GF(2)";
    if (omega_dimension(parse_input("field Q\nvars X\nrelations:\n  X^2 - 1\n")) != 0) return "omega Q";
    for (const auto& t : triangular_suite())
        if (is_nette(t) != (omega_dimension(t) == 0)) return "nette vs omega on\n" + t.to_string();
    return "";
}

std::string criterion_product() {
    for (int i = 0; i < 50; ++i) {
        Field k = i % 2 ? Field::prime(3) : Field::rationals();
        oracle::Dice dice(5000 + static_cast<std::uint64_t>(i));
        FiniteAlgebra a = monogenic_from_poly(random_monic(k, dice, 1, 3, 3));
        FiniteAlgebra b = monogenic_from_poly(random_monic(k, dice, 1, 3, 3));
        FiniteAlgebra ab = product(a, b);
        Scalar da = discriminant(a), db = discriminant(b), dab = discriminant(ab);
        if (dab != k.mul(da, db)) return "discriminant not multiplicative";
        if (k.is_zero(dab) != (k.is_zero(da) || k.is_zero(db))) return "etale(A x B) mismatch";
    }
    return "";
}

std::string criterion_reproducibility() {
    std::vector<AlgebraPresentation> inputs;
    for (const auto& entry : std::filesystem::directory_iterator(ETALE_TEST_DATA)) {
        std::ifstream in(entry.path());
        std::stringstream buf;
        buf << in.rdbuf();
        try {
            inputs.push_back(parse_input(buf.str()));
        } catch (const ParseError&) {
        }
    }
    for (auto& t : triangular_suite()) inputs.push_back(std::move(t));
    ClassifyOptions opts;
    opts.certificates = true;
    for (const auto& p : inputs) {
        std::string first = render_json(classify(p, opts)) + render_text(classify(p, opts));
        std::string second = render_json(classify(p, opts)) + render_text(classify(p, opts));
        if (first != second) return "report differs between runs on\n" + p.to_string();
    }
    return "";
}

}  // namespace

int main() {
    Gate gate;
    gate.report(1, "discriminant coherence, 200 monic f over Q and GF(5)", criterion_discriminant_coherence);
    gate.report(2, "etale iff separable; reduced iff squarefree by enumeration", criterion_separability);
    gate.report(3, "nette <=> disc != 0 <=> generator minimal polynomials separable", criterion_theorem_equivalences);
    gate.report(4, "pipeline raises no contradiction; hyperbola witness", criterion_pipeline);
    gate.report(5, "worked instance X^2 + Y^2 - 1, XY", criterion_worked_instance);
    gate.report(6, "primitive element x + y; (GF(2))^4 falls back to Frobenius", criterion_primitive_element);
    gate.report(7, "Kaehler suite: Leibniz, chain rule, omega dimensions", criterion_kaehler);
    gate.report(8, "product discriminant multiplicativity", criterion_product);
    gate.report(9, "report reproducibility", criterion_reproducibility);
    std::cout << (gate.failures == 0 ? "all criteria passed" : std::to_string(gate.failures) + " criteria failed")
              << std::endl;
    return gate.failures == 0 ? 0 : 1;
}
