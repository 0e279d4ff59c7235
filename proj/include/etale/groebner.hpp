#pragma once

#include <cstddef>
#include <vector>

#include "etale/finalg.hpp"
#include "etale/multipoly.hpp"

namespace etale {

inline constexpr std::size_t kDefaultPairBudget = 50000;

/// Reduced Groebner basis: monic, auto-reduced, sorted by increasing leading monomial.
class GroebnerBasis {
   public:
    GroebnerBasis(PolyRing ring, std::vector<MultiPoly> generators, std::vector<MultiPoly> original);

    const PolyRing& ring() const noexcept { return ring_; }
    const std::vector<MultiPoly>& generators() const noexcept { return generators_; }
    const std::vector<MultiPoly>& original() const noexcept { return original_; }
    std::vector<Monomial> leading_monomials() const;

   private:
    PolyRing ring_;
    std::vector<MultiPoly> generators_;
    std::vector<MultiPoly> original_;
};

/// Buchberger's algorithm with the coprime-leading-monomial and chain criteria.
/// Generators are moved into `ring` (and hence its order). Throws BudgetExceeded once
/// more than `pair_budget` critical pairs have been reduced.
GroebnerBasis buchberger(const PolyRing& ring, const std::vector<MultiPoly>& generators,
                         std::size_t pair_budget = kDefaultPairBudget);

/// Full remainder of f modulo the basis polynomials.
MultiPoly reduce(const MultiPoly& f, const std::vector<MultiPoly>& divisors);
MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& basis);

bool contains_one(const GroebnerBasis& basis);
/// g is a unit in K[X]/I exactly when 1 lies in I + <g>.
bool is_invertible_mod(const MultiPoly& g, const GroebnerBasis& basis, std::size_t pair_budget = kDefaultPairBudget);
/// Largest set of variables containing the support of no leading monomial.
int noether_dimension(const GroebnerBasis& basis);
/// Monomials outside the leading-term ideal, increasing in the basis order.
std::vector<Monomial> standard_monomials(const GroebnerBasis& basis);
/// The quotient on its standard-monomial basis; generator_refs holds each variable.
FiniteAlgebra quotient_algebra(const GroebnerBasis& basis);
/// Coordinates on standard_monomials(basis) of the normal form of f.
Vector quotient_coordinates(const MultiPoly& f, const GroebnerBasis& basis, const std::vector<Monomial>& staircase);

/// Cofactors c with sum c_i g_i = 1 when 1 lies in <g>; empty when it does not.
/// Runs a cofactor-tracking Buchberger, so it is noticeably slower than buchberger().
std::optional<std::vector<MultiPoly>> express_one(const PolyRing& ring, const std::vector<MultiPoly>& generators,
                                                  std::size_t pair_budget = kDefaultPairBudget);

}  // namespace etale
