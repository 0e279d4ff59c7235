#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "etale/field.hpp"

namespace etale {

/// Dense univariate polynomial over a Field; coefficients indexed by degree with
/// trailing zeros trimmed, so the zero polynomial has no coefficients at all.
class UniPoly {
   public:
    explicit UniPoly(Field field) : field_(field) {}
    /// Coefficients in increasing degree; values are canonicalized into `field`.
    UniPoly(Field field, std::vector<Scalar> coefficients);
    UniPoly(Field field, std::initializer_list<long> coefficients);

    static UniPoly constant(Field field, const Scalar& c);
    static UniPoly monomial(Field field, const Scalar& c, std::size_t degree);
    /// The polynomial T.
    static UniPoly variable(Field field) { return monomial(field, field.one(), 1); }

    const Field& field() const noexcept { return field_; }
    const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }
    Scalar coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(0); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Empty for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept;
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && field_.is_one(coeffs_[0]); }
    bool is_monic() const { return !coeffs_.empty() && field_.is_one(coeffs_.back()); }
    Scalar leading_coefficient() const { return coeffs_.empty() ? Scalar(0) : coeffs_.back(); }

    UniPoly monic() const;
    Scalar evaluate(const Scalar& x) const;
    UniPoly pow(std::size_t exponent) const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& rhs);
    UniPoly& operator-=(const UniPoly& rhs);
    UniPoly& operator*=(const UniPoly& rhs);
    UniPoly& operator*=(const Scalar& c);
    friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
    friend UniPoly operator-(UniPoly lhs, const UniPoly& rhs) { return lhs -= rhs; }
    friend UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs);
    friend UniPoly operator*(UniPoly lhs, const Scalar& c) { return lhs *= c; }

    friend bool operator==(const UniPoly& lhs, const UniPoly& rhs) {
        return lhs.field_ == rhs.field_ && lhs.coeffs_ == rhs.coeffs_;
    }
    friend bool operator!=(const UniPoly& lhs, const UniPoly& rhs) { return !(lhs == rhs); }

    std::string to_string(const std::string& var = "T") const;

   private:
    void trim();
    void require_same_field(const UniPoly& other) const;

    Field field_;
    std::vector<Scalar> coeffs_;
};

/// Quotient and remainder of Euclidean division; throws ZeroOperand for a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

struct ExtendedGcd {
    UniPoly gcd;  // monic
    UniPoly u;
    UniPoly v;  // gcd = u*f + v*g
};

ExtendedGcd extended_gcd(const UniPoly& f, const UniPoly& g);
UniPoly gcd(const UniPoly& f, const UniPoly& g);
UniPoly derivative(const UniPoly& f);

/// Resultant of two nonzero polynomials with respect to their actual degrees.
Scalar resultant(const UniPoly& f, const UniPoly& g);
/// (-1)^(m(m-1)/2) Res(f, f') / lc(f), taking f' with formal degree m - 1.
Scalar discriminant_poly(const UniPoly& f);

bool is_separable(const UniPoly& f);
bool is_squarefree(const UniPoly& f);
/// Product of the distinct monic irreducible factors of f, computed with gcds and
/// p-th roots only.
UniPoly squarefree_part(const UniPoly& f);

struct CoprimeSplit {
    UniPoly first;   // coprime to f', carries the simple factors
    UniPoly second;  // the repeated factors
};

/// f = first * second with gcd(first, second) = 1 and gcd(first, f') = 1, both of
/// degree below deg f.
CoprimeSplit coprime_split(const UniPoly& f);

/// g with g^p = f for a monic f with f' = 0 in characteristic p.
UniPoly pth_power_decompose(const UniPoly& f);

}  // namespace etale
