#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "etale/finalg.hpp"
#include "etale/groebner.hpp"
#include "etale/kaehler.hpp"

namespace etale {

inline constexpr std::size_t kDefaultPrimitiveBudget = 1000;

struct PrimitiveElement {
    AlgebraElement element;
    UniPoly minimal_polynomial;
    std::vector<Scalar> weights;  // element = sum weights[i] * gens[i]
    std::string expression;
};

/// Tries b = sum lambda_i gen_i for lambda tuples ordered by the largest index into
/// enumerate_scalars, then lexicographically. Throws SearchExhausted after `budget`
/// tuples, or once every tuple over a finite field has been tried.
PrimitiveElement primitive_element(const FiniteAlgebra& algebra, const std::vector<NamedElement>& gens,
                                   std::size_t budget = kDefaultPrimitiveBudget);

/// Nontrivial idempotent from the fixed space of x -> x^p, or nothing when that space
/// is the base field (the algebra is then a field).
std::optional<AlgebraElement> frobenius_split(const FiniteAlgebra& algebra);

struct DecompositionFactor {
    UniPoly polynomial;
    AlgebraElement idempotent;  // unit of the factor, in the input algebra
    AlgebraElement generator;   // generator of the factor, in the input algebra
    /// Idempotents (in the input algebra) of the successive splits that isolated the factor.
    std::vector<AlgebraElement> idempotent_chain;
};

struct DecompositionChecks {
    bool idempotent = false;
    bool orthogonal = false;
    bool complete = false;
    bool degrees = false;
    bool separable = false;
    bool generators = false;
    bool product_discriminant = false;

    bool all() const noexcept {
        return idempotent && orthogonal && complete && degrees && separable && generators && product_discriminant;
    }
};

struct DecompositionCertificate {
    std::vector<DecompositionFactor> factors;
    DecompositionChecks checks;
    std::vector<std::string> notes;
};

DecompositionChecks verify_decomposition(const std::vector<DecompositionFactor>& factors, const FiniteAlgebra& algebra);

DecompositionCertificate decompose_etale(const FiniteAlgebra& algebra,
                                         std::size_t primitive_budget = kDefaultPrimitiveBudget);

struct ClassifyOptions {
    MonomialOrder order = MonomialOrder::GrevLex;
    std::size_t pair_budget = kDefaultPairBudget;
    std::size_t primitive_budget = kDefaultPrimitiveBudget;
    bool certificates = false;
};

struct ReportedElement {
    std::string expression;
    Vector coordinates;
};

struct ReportedPrimitive {
    std::string expression;
    Vector coordinates;
    UniPoly minimal_polynomial;
};

struct ClassificationReport {
    std::string input;
    Field field = Field::rationals();
    bool trivial = false;
    bool nette = false;
    bool standard_smooth = false;
    bool elementary_smooth = false;
    bool standard_etale = false;
    int noether_dimension = -1;
    std::optional<std::size_t> vector_space_dimension;
    std::optional<Scalar> discriminant;
    bool etale = false;
    std::vector<UniPoly> decomposition;
    std::optional<ReportedPrimitive> primitive_element;
    std::optional<ReportedElement> nilpotent_witness;
    std::vector<std::string> notes;

    std::vector<std::string> basis_labels;
    /// Per-test certificate text, filled when certificates are requested.
    std::vector<std::pair<std::string, std::string>> certificates;
};

ClassificationReport classify(const AlgebraPresentation& presentation, const ClassifyOptions& options = {});

}  // namespace etale
