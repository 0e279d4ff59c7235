#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace etale {

/// Elements of either supported field. Over Q the value is kept in lowest terms with a
/// positive denominator (mpq canonical form); over GF(p) it is an integer in [0, p).
using Scalar = mpq_class;

enum class FieldKind { Rationals, PrimeField };

/// A discrete field: Q or a prime field GF(p). Small value type, freely copied.
class Field {
   public:
    /// Largest accepted modulus; primality is decided by trial division.
    static constexpr std::uint64_t max_modulus = 4294967291ULL;

    static Field rationals() noexcept { return Field(FieldKind::Rationals, 0); }
    /// Throws Error(NotPrime) unless p is a prime not exceeding max_modulus.
    static Field prime(std::uint64_t p);

    FieldKind kind() const noexcept { return kind_; }
    std::uint64_t modulus() const noexcept { return modulus_; }
    std::uint64_t characteristic() const noexcept { return modulus_; }
    bool is_finite() const noexcept { return kind_ == FieldKind::PrimeField; }

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }
    Scalar from_int(long value) const;
    Scalar from_integer(const mpz_class& value) const;
    /// numerator / denominator, mapped into the field; throws ZeroNotInvertible on a
    /// denominator that vanishes in the field.
    Scalar from_fraction(const mpz_class& numerator, const mpz_class& denominator) const;
    /// Re-reduces an arbitrary rational into canonical form for this field.
    Scalar canonical(const Scalar& value) const;
    bool contains(const Scalar& value) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar invert(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const;
    Scalar pow(const Scalar& a, std::uint64_t exponent) const;
    bool is_zero(const Scalar& a) const { return sgn(a) == 0; }
    bool is_one(const Scalar& a) const { return a == 1; }

    /// b with b^p = a. Over GF(p) Frobenius is the identity, so b = a.
    Scalar pth_root(const Scalar& a) const;

    /// Deterministic duplicate-free scalar stream: 0, 1, -1, 2, -2, ... over Q and
    /// 0, 1, ..., min(count, p) - 1 over GF(p).
    std::vector<Scalar> enumerate_scalars(std::size_t count) const;

    std::string to_string(const Scalar& a) const;
    /// `Q` or `GF(p)`, the same syntax accepted in input files.
    std::string name() const;

    friend bool operator==(const Field& lhs, const Field& rhs) noexcept {
        return lhs.kind_ == rhs.kind_ && lhs.modulus_ == rhs.modulus_;
    }
    friend bool operator!=(const Field& lhs, const Field& rhs) noexcept { return !(lhs == rhs); }

   private:
    Field(FieldKind kind, std::uint64_t modulus) noexcept : kind_(kind), modulus_(modulus) {}

    std::uint64_t residue(const Scalar& a) const { return mpz_get_ui(a.get_num_mpz_t()); }
    Scalar from_residue(std::uint64_t r) const;

    FieldKind kind_;
    std::uint64_t modulus_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace etale
