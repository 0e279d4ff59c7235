#include "etale/field.hpp"

#include <algorithm>

#include "etale/error.hpp"

namespace etale {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (p > max_modulus) throw Error(ErrorCode::NotPrime, "modulus " + std::to_string(p) + " exceeds the supported range");
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    return Field(FieldKind::PrimeField, p);
}

Scalar Field::from_residue(std::uint64_t r) const {
    Scalar out;
    mpz_set_ui(out.get_num_mpz_t(), r);
    return out;
}

Scalar Field::from_int(long value) const { return from_integer(mpz_class(value)); }

Scalar Field::from_integer(const mpz_class& value) const {
    if (kind_ == FieldKind::Rationals) return Scalar(value);
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), modulus_);
    return Scalar(r);
}

Scalar Field::from_fraction(const mpz_class& numerator, const mpz_class& denominator) const {
    Scalar den = from_integer(denominator);
    if (is_zero(den)) throw Error(ErrorCode::ZeroNotInvertible, "denominator vanishes in " + name());
    return div(from_integer(numerator), den);
}

Scalar Field::canonical(const Scalar& value) const {
    if (kind_ == FieldKind::Rationals) {
        Scalar out = value;
        out.canonicalize();
        return out;
    }
    return from_fraction(value.get_num(), value.get_den());
}

bool Field::contains(const Scalar& value) const {
    if (kind_ == FieldKind::Rationals) return true;
    return value.get_den() == 1 && sgn(value) >= 0 && value.get_num() < mpz_class(static_cast<unsigned long>(modulus_));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::Rationals) return a + b;
    std::uint64_t s = residue(a) + residue(b);
    return from_residue(s >= modulus_ ? s - modulus_ : s);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::Rationals) return a - b;
    std::uint64_t x = residue(a), y = residue(b);
    return from_residue(x >= y ? x - y : x + modulus_ - y);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::Rationals) return a * b;
    unsigned __int128 prod = static_cast<unsigned __int128>(residue(a)) * residue(b);
    return from_residue(static_cast<std::uint64_t>(prod % modulus_));
}

Scalar Field::neg(const Scalar& a) const {
    if (kind_ == FieldKind::Rationals) return -a;
    std::uint64_t x = residue(a);
    return from_residue(x == 0 ? 0 : modulus_ - x);
}

Scalar Field::invert(const Scalar& a) const {
    if (is_zero(a)) throw Error(ErrorCode::ZeroNotInvertible, "0 has no inverse in " + name());
    if (kind_ == FieldKind::Rationals) return 1 / a;
    mpz_class inv, mod(static_cast<unsigned long>(modulus_));
    mpz_invert(inv.get_mpz_t(), a.get_num_mpz_t(), mod.get_mpz_t());
    return Scalar(inv);
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, invert(b)); }

Scalar Field::pow(const Scalar& a, std::uint64_t exponent) const {
    Scalar result = one();
    Scalar base = a;
    while (exponent > 0) {
        if (exponent & 1) result = mul(result, base);
        exponent >>= 1;
        if (exponent > 0) base = mul(base, base);
    }
    return result;
}

Scalar Field::pth_root(const Scalar& a) const {
    if (kind_ == FieldKind::Rationals)
        throw Error(ErrorCode::CharacteristicZero, "p-th roots are only defined in positive characteristic");
    return a;
}

std::vector<Scalar> Field::enumerate_scalars(std::size_t count) const {
    std::vector<Scalar> out;
    if (kind_ == FieldKind::PrimeField) {
        std::uint64_t n = std::min<std::uint64_t>(count, modulus_);
        out.reserve(n);
        for (std::uint64_t r = 0; r < n; ++r) out.push_back(from_residue(r));
        return out;
    }
    out.reserve(count);
    for (std::size_t i = 0; out.size() < count; ++i) {
        if (i == 0) {
            out.emplace_back(0);
            continue;
        }
        out.emplace_back(static_cast<long>(i));
        if (out.size() < count) out.emplace_back(-static_cast<long>(i));
    }
    return out;
}

std::string Field::to_string(const Scalar& a) const { return a.get_str(); }

std::string Field::name() const {
    if (kind_ == FieldKind::Rationals) return "Q";
    return "GF(" + std::to_string(modulus_) + ")";
}

}  // namespace etale
