#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "etale/field.hpp"
#include "etale/unipoly.hpp"

namespace etale {

enum class MonomialOrder { GrevLex, Lex };

std::string to_string(MonomialOrder order);

/// Exponent vector, one entry per ring variable.
class Monomial {
   public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    static Monomial unit(std::size_t nvars, std::size_t var, std::uint32_t exponent = 1);

    std::size_t size() const noexcept { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }
    std::uint64_t total_degree() const noexcept;
    bool is_one() const noexcept;
    /// Bit i set when variable i occurs.
    std::uint64_t support() const noexcept;

    bool divides(const Monomial& other) const noexcept;
    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// Exact quotient; requires divisor.divides(*this).
    Monomial operator/(const Monomial& divisor) const;
    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend bool coprime(const Monomial& a, const Monomial& b) noexcept;

    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::string to_string(const std::vector<std::string>& names) const;

   private:
    std::vector<std::uint32_t> exps_;
};

/// Negative, zero or positive as a < b, a == b, a > b in the given order.
int compare(const Monomial& a, const Monomial& b, MonomialOrder order) noexcept;

/// Coefficient field, variable names and term order shared by a family of polynomials.
class PolyRing {
   public:
    PolyRing(Field field, std::vector<std::string> variables, MonomialOrder order = MonomialOrder::GrevLex);

    const Field& field() const noexcept { return field_; }
    const std::vector<std::string>& variables() const noexcept { return *variables_; }
    std::size_t nvars() const noexcept { return variables_->size(); }
    MonomialOrder order() const noexcept { return order_; }
    PolyRing with_order(MonomialOrder order) const;

    friend bool operator==(const PolyRing& a, const PolyRing& b) noexcept;
    friend bool operator!=(const PolyRing& a, const PolyRing& b) noexcept { return !(a == b); }

   private:
    Field field_;
    std::shared_ptr<const std::vector<std::string>> variables_;
    MonomialOrder order_;
};

struct Term {
    Monomial monomial;
    Scalar coefficient;
};

/// Sparse polynomial in a PolyRing. Terms are kept sorted increasingly in the ring's
/// order with no zero coefficients, so equality is structural.
class MultiPoly {
   public:
    explicit MultiPoly(PolyRing ring) : ring_(std::move(ring)) {}
    MultiPoly(PolyRing ring, std::vector<Term> terms);

    static MultiPoly constant(const PolyRing& ring, const Scalar& c);
    static MultiPoly variable(const PolyRing& ring, std::size_t var);
    static MultiPoly term(const PolyRing& ring, const Scalar& c, Monomial m);

    const PolyRing& ring() const noexcept { return ring_; }
    const Field& field() const noexcept { return ring_.field(); }
    /// Increasing order; the leading term is the last one.
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    bool is_one() const;
    const Term& leading_term() const { return terms_.back(); }
    const Monomial& leading_monomial() const { return terms_.back().monomial; }
    const Scalar& leading_coefficient() const { return terms_.back().coefficient; }
    std::uint64_t total_degree() const noexcept;

    MultiPoly monic() const;
    /// The same polynomial re-sorted for another term order.
    MultiPoly in_ring(const PolyRing& ring) const;

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const Scalar& c);
    MultiPoly& operator+=(const MultiPoly& rhs) { return *this = *this + rhs; }
    MultiPoly& operator-=(const MultiPoly& rhs) { return *this = *this - rhs; }
    MultiPoly& operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }
    MultiPoly pow(std::uint32_t exponent) const;

    /// this - c * m * g, merged in one pass.
    MultiPoly sub_scaled_shift(const Scalar& c, const Monomial& m, const MultiPoly& g) const;
    /// Drops the leading term.
    MultiPoly tail() const;
    /// Removes and returns the leading term.
    Term pop_leading();

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.ring_ == b.ring_ && a.terms_.size() == b.terms_.size() && equal_terms(a, b);
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    std::string to_string() const;

   private:
    static bool equal_terms(const MultiPoly& a, const MultiPoly& b);
    void normalize();

    PolyRing ring_;
    std::vector<Term> terms_;
};

/// d f / d X_var; throws IndexOutOfRange.
MultiPoly partial_derivative(const MultiPoly& f, std::size_t var);

/// f(g) for a univariate f, by Horner's rule.
MultiPoly compose(const UniPoly& f, const MultiPoly& g);

/// Embeds a univariate polynomial as a polynomial in ring variable `var`.
MultiPoly from_unipoly(const UniPoly& f, const PolyRing& ring, std::size_t var);

}  // namespace etale
