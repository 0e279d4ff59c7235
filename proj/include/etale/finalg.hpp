#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "etale/field.hpp"
#include "etale/linalg.hpp"
#include "etale/unipoly.hpp"

namespace etale {

/// Coordinates of an element on the basis of some FiniteAlgebra.
struct AlgebraElement {
    Vector coordinates;

    std::size_t size() const noexcept { return coordinates.size(); }
    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

struct NamedElement {
    std::string name;
    AlgebraElement value;
};

/// Structure-constant table of shape m x m x m: product_of_basis(i, j) is the
/// coordinate vector of e_i * e_j.
using StructureTable = std::vector<std::vector<Vector>>;

/// A commutative, associative, unital algebra that is free of finite rank m >= 1 over
/// a discrete field, given by structure constants on a labelled basis. The axioms are
/// checked on construction (Error InvalidAlgebra).
class FiniteAlgebra {
   public:
    FiniteAlgebra(Field field, std::vector<std::string> labels, StructureTable table, Vector unit,
                  std::vector<NamedElement> generators = {});

    const Field& field() const noexcept { return field_; }
    std::size_t dimension() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const Vector& product_of_basis(std::size_t i, std::size_t j) const { return table_[i][j]; }
    /// Images of the presentation variables, when the algebra came from one.
    const std::vector<NamedElement>& generator_refs() const noexcept { return generators_; }

    AlgebraElement zero() const;
    AlgebraElement one() const { return {unit_}; }
    AlgebraElement basis(std::size_t i) const;
    AlgebraElement scalar(const Scalar& c) const;

    AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement scale(const Scalar& c, const AlgebraElement& a) const;
    AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement pow(const AlgebraElement& a, std::uint64_t exponent) const;
    bool is_zero(const AlgebraElement& a) const;

    std::string format(const AlgebraElement& a) const;
    /// One line per product e_i * e_j with i <= j.
    std::string table_string() const;

   private:
    void require_element(const AlgebraElement& a) const;
    void validate() const;

    Field field_;
    std::vector<std::string> labels_;
    StructureTable table_;
    Vector unit_;
    std::vector<NamedElement> generators_;
};

/// Operator b -> a*b: column j holds the coordinates of a * e_j.
Matrix mul_operator(const AlgebraElement& a, const FiniteAlgebra& algebra);
Scalar trace(const AlgebraElement& a, const FiniteAlgebra& algebra);
/// Determinant of the trace form Tr(e_i e_j); nonzero exactly when the algebra is
/// traciquement etale.
Scalar discriminant(const FiniteAlgebra& algebra);
Matrix trace_form(const FiniteAlgebra& algebra);

/// Monic generator of the annihilator of a, from the first linear dependence among
/// 1, a, a^2, ...
UniPoly minimal_polynomial(const AlgebraElement& a, const FiniteAlgebra& algebra);
AlgebraElement eval_in_algebra(const UniPoly& f, const AlgebraElement& a, const FiniteAlgebra& algebra);

/// The idempotent e of K[a] with <a> = <e>, for an a whose minimal polynomial has at
/// most a simple root at 0. Throws RepeatedZeroRoot otherwise.
AlgebraElement idempotent_of(const AlgebraElement& a, const FiniteAlgebra& algebra);
/// a^-1 as a polynomial in a; throws NotInvertible when the minimal polynomial
/// vanishes at 0.
AlgebraElement inverse_in_subalgebra(const AlgebraElement& a, const FiniteAlgebra& algebra);

/// x^exponent * (1 - y x) = 0, the zero-dimensionality certificate of an element.
struct ZeroDimensionWitness {
    std::size_t exponent;
    AlgebraElement y;
};
ZeroDimensionWitness zero_dimension_witness(const AlgebraElement& x, const FiniteAlgebra& algebra);

struct IdempotentSplit {
    FiniteAlgebra first;   // (1 - e) A
    FiniteAlgebra second;  // e A
    Matrix projection_first;   // dim first x dim A, a -> (1 - e) a
    Matrix projection_second;  // dim second x dim A, a -> e a
    Matrix embedding_first;    // dim A x dim first, non-unital multiplicative lift
    Matrix embedding_second;
};

IdempotentSplit split_by_idempotent(const AlgebraElement& e, const FiniteAlgebra& algebra);
FiniteAlgebra product(const FiniteAlgebra& first, const FiniteAlgebra& second);
/// K[X]/<f> on the basis 1, x, ..., x^(deg f - 1).
FiniteAlgebra monogenic_from_poly(const UniPoly& f);
/// Exact over perfect base fields (all supported fields are).
bool is_reduced(const FiniteAlgebra& algebra);

}  // namespace etale
