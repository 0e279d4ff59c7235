#pragma once

#include <optional>
#include <string>
#include <vector>

#include "etale/groebner.hpp"
#include "etale/multipoly.hpp"

namespace etale {

/// K[X_1..X_n] / <f_1..f_s>.
struct AlgebraPresentation {
    PolyRing ring;
    std::vector<MultiPoly> relations;

    const Field& field() const noexcept { return ring.field(); }
    std::size_t nvars() const noexcept { return ring.nvars(); }
    std::size_t nrelations() const noexcept { return relations.size(); }
    /// Same presentation with every relation moved to another term order.
    AlgebraPresentation with_order(MonomialOrder order) const;
    /// The presentation in the input-file syntax.
    std::string to_string() const;
};

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// Omega_{A/K} = Coker(Ja), Ja the transposed Jacobian A^s -> A^n.
struct DifferentialPresentation {
    std::vector<std::string> generators;  // dX_1 .. dX_n
    PolyMatrix relation_table;            // n x s, entry (i, j) = d f_j / d X_i
    AlgebraPresentation ambient;
};

/// s x n, entry (i, j) = d f_i / d X_j.
PolyMatrix jacobian(const AlgebraPresentation& presentation);
DifferentialPresentation omega_presentation(const AlgebraPresentation& presentation);
/// (dg/dX_1, ..., dg/dX_n), read modulo the columns of Ja.
std::vector<MultiPoly> universal_derivation(const MultiPoly& g, const DifferentialPresentation& omega);

MultiPoly determinant(const PolyMatrix& m, const PolyRing& ring);
/// Every size x size minor, rows and columns in lexicographic combination order;
/// size 0 yields the single minor 1.
std::vector<MultiPoly> minors(const PolyMatrix& m, std::size_t size, const PolyRing& ring);

struct CriterionOptions {
    std::size_t pair_budget = kDefaultPairBudget;
    /// Also compute cofactors expressing 1 when the criterion holds.
    bool certificates = false;
};

/// Outcome of one of the unit-ideal tests (nette, smooth, etale).
struct CriterionResult {
    bool holds = false;
    bool trivial_algebra = false;
    std::string reason;
    /// The ideal whose triviality was tested, relations first.
    std::vector<MultiPoly> tested_ideal;
    std::optional<GroebnerBasis> tested_basis;
    /// sum cofactors[i] * tested_ideal[i] = 1, when requested and the test holds.
    std::optional<std::vector<MultiPoly>> cofactors;
};

CriterionResult check_nette(const AlgebraPresentation& p, const GroebnerBasis& relations, const CriterionOptions& opts = {});
CriterionResult check_standard_smooth(const AlgebraPresentation& p, const GroebnerBasis& relations,
                                      const CriterionOptions& opts = {});
CriterionResult check_elementary_smooth(const AlgebraPresentation& p, const GroebnerBasis& relations,
                                        const CriterionOptions& opts = {});
CriterionResult check_standard_etale(const AlgebraPresentation& p, const GroebnerBasis& relations,
                                     const CriterionOptions& opts = {});

GroebnerBasis relation_basis(const AlgebraPresentation& p, std::size_t pair_budget = kDefaultPairBudget);

bool is_nette(const AlgebraPresentation& p, std::size_t pair_budget = kDefaultPairBudget);
bool is_standard_smooth(const AlgebraPresentation& p, std::size_t pair_budget = kDefaultPairBudget);
bool is_elementary_smooth(const AlgebraPresentation& p, std::size_t pair_budget = kDefaultPairBudget);
bool is_standard_etale(const AlgebraPresentation& p, std::size_t pair_budget = kDefaultPairBudget);

/// dim_K Omega_{A/K} for a finite-dimensional quotient: m*n minus the rank of Ja
/// expanded over the standard-monomial basis. The zero ring gives 0.
std::size_t omega_dimension(const AlgebraPresentation& p, std::size_t pair_budget = kDefaultPairBudget);
std::size_t omega_dimension(const AlgebraPresentation& p, const GroebnerBasis& relations);

}  // namespace etale
