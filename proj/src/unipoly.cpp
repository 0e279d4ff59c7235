#include "etale/unipoly.hpp"

#include "etale/error.hpp"

namespace etale {

UniPoly::UniPoly(Field field, std::vector<Scalar> coefficients) : field_(field), coeffs_(std::move(coefficients)) {
    for (auto& c : coeffs_) c = field_.canonical(c);
    trim();
}

UniPoly::UniPoly(Field field, std::initializer_list<long> coefficients) : field_(field) {
    coeffs_.reserve(coefficients.size());
    for (long c : coefficients) coeffs_.push_back(field_.from_int(c));
    trim();
}

UniPoly UniPoly::constant(Field field, const Scalar& c) { return UniPoly(field, std::vector<Scalar>{c}); }

UniPoly UniPoly::monomial(Field field, const Scalar& c, std::size_t degree) {
    std::vector<Scalar> coeffs(degree + 1, field.zero());
    coeffs[degree] = c;
    return UniPoly(field, std::move(coeffs));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && field_.is_zero(coeffs_.back())) coeffs_.pop_back();
}

void UniPoly::require_same_field(const UniPoly& other) const {
    if (field_ != other.field_)
        throw Error(ErrorCode::FieldMismatch, "polynomials over " + field_.name() + " and " + other.field_.name());
}

std::optional<std::size_t> UniPoly::degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * field_.invert(leading_coefficient());
}

Scalar UniPoly::evaluate(const Scalar& x) const {
    Scalar acc = field_.zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
    return acc;
}

UniPoly UniPoly::pow(std::size_t exponent) const {
    UniPoly result = constant(field_, field_.one());
    UniPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return result;
}

UniPoly UniPoly::operator-() const {
    UniPoly out = *this;
    for (auto& c : out.coeffs_) c = field_.neg(c);
    return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
    require_same_field(rhs);
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), field_.zero());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = field_.add(coeffs_[i], rhs.coeffs_[i]);
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
    require_same_field(rhs);
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), field_.zero());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = field_.sub(coeffs_[i], rhs.coeffs_[i]);
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs) {
    lhs.require_same_field(rhs);
    const Field& k = lhs.field_;
    if (lhs.is_zero() || rhs.is_zero()) return UniPoly(k);
    std::vector<Scalar> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, k.zero());
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (k.is_zero(lhs.coeffs_[i])) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] = k.add(out[i + j], k.mul(lhs.coeffs_[i], rhs.coeffs_[j]));
    }
    UniPoly result(k);
    result.coeffs_ = std::move(out);
    result.trim();
    return result;
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) { return *this = *this * rhs; }

UniPoly& UniPoly::operator*=(const Scalar& c) {
    for (auto& x : coeffs_) x = field_.mul(x, c);
    trim();
    return *this;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Scalar& c = coeffs_[k];
        if (field_.is_zero(c)) continue;
        bool negative = sgn(c) < 0;
        Scalar mag = negative ? Scalar(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        std::string monomial = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        if (monomial.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += monomial;
        else
            out += mag.get_str() + "*" + monomial;
    }
    return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::ZeroOperand, "division by the zero polynomial");
    if (a.field() != b.field()) throw Error(ErrorCode::FieldMismatch, "divmod operands over different fields");
    const Field& k = a.field();
    const std::size_t db = *b.degree();
    Scalar inv_lead = k.invert(b.leading_coefficient());
    std::vector<Scalar> rem = a.coefficients();
    if (rem.size() <= db) return {UniPoly(k), a};
    std::vector<Scalar> quot(rem.size() - db, k.zero());
    for (std::size_t top = rem.size(); top-- > db;) {
        if (k.is_zero(rem[top])) continue;
        Scalar q = k.mul(rem[top], inv_lead);
        quot[top - db] = q;
        for (std::size_t j = 0; j <= db; ++j)
            rem[top - db + j] = k.sub(rem[top - db + j], k.mul(q, b.coefficients()[j]));
    }
    rem.resize(db);
    return {UniPoly(k, std::move(quot)), UniPoly(k, std::move(rem))};
}

ExtendedGcd extended_gcd(const UniPoly& f, const UniPoly& g) {
    if (f.field() != g.field()) throw Error(ErrorCode::FieldMismatch, "gcd operands over different fields");
    if (f.is_zero() && g.is_zero()) throw Error(ErrorCode::BothZero, "gcd(0, 0) is undefined here");
    const Field& k = f.field();
    UniPoly r0 = f, r1 = g;
    UniPoly u0 = UniPoly::constant(k, k.one()), u1(k);
    UniPoly v0(k), v1 = UniPoly::constant(k, k.one());
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        UniPoly u2 = u0 - q * u1;
        UniPoly v2 = v0 - q * v1;
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    Scalar inv = k.invert(r0.leading_coefficient());
    return {r0 * inv, u0 * inv, v0 * inv};
}

UniPoly gcd(const UniPoly& f, const UniPoly& g) { return extended_gcd(f, g).gcd; }

UniPoly derivative(const UniPoly& f) {
    const Field& k = f.field();
    if (f.coefficients().size() <= 1) return UniPoly(k);
    std::vector<Scalar> out(f.coefficients().size() - 1);
    for (std::size_t i = 1; i < f.coefficients().size(); ++i)
        out[i - 1] = k.mul(k.from_int(static_cast<long>(i)), f.coefficients()[i]);
    return UniPoly(k, std::move(out));
}

Scalar resultant(const UniPoly& f, const UniPoly& g) {
    if (f.field() != g.field()) throw Error(ErrorCode::FieldMismatch, "resultant operands over different fields");
    if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::ZeroOperand, "resultant with a zero polynomial");
    const Field& k = f.field();
    Scalar acc = k.one();
    UniPoly a = f, b = g;
    for (;;) {
        const std::size_t m = *a.degree(), n = *b.degree();
        if (n == 0) return k.mul(acc, k.pow(b.leading_coefficient(), m));
        if (m == 0) return k.mul(acc, k.pow(a.leading_coefficient(), n));
        UniPoly r = divmod(a, b).second;
        if (r.is_zero()) return k.zero();
        const std::size_t d = *r.degree();
        // Res(a, b) = (-1)^(mn) lc(b)^(m - d) Res(b, a mod b)
        acc = k.mul(acc, k.pow(b.leading_coefficient(), m - d));
        if ((m * n) % 2 == 1) acc = k.neg(acc);
        a = std::move(b);
        b = std::move(r);
    }
}

Scalar discriminant_poly(const UniPoly& f) {
    if (f.is_zero() || f.is_constant())
        throw Error(ErrorCode::ConstantPolynomial, "discriminant of a constant polynomial");
    const Field& k = f.field();
    const std::size_t m = *f.degree();
    UniPoly df = derivative(f);
    if (df.is_zero()) return k.zero();
    // The Sylvester matrix uses deg f' = m - 1; a lower actual degree contributes lc(f) powers.
    Scalar res = k.mul(resultant(f, df), k.pow(f.leading_coefficient(), (m - 1) - *df.degree()));
    Scalar disc = k.div(res, f.leading_coefficient());
    if ((m * (m - 1) / 2) % 2 == 1) disc = k.neg(disc);
    return disc;
}

namespace {

void require_monic_nonconstant(const UniPoly& f) {
    if (f.is_zero() || f.is_constant()) throw Error(ErrorCode::ConstantPolynomial, "expected degree >= 1");
    if (!f.is_monic()) throw Error(ErrorCode::NotMonic, f.to_string() + " is not monic");
}

// Coefficientwise p-th root of a polynomial whose exponents are all multiples of p.
UniPoly pth_root_of_coefficients(const UniPoly& f) {
    const Field& k = f.field();
    const std::size_t p = k.characteristic();
    std::vector<Scalar> out(*f.degree() / p + 1, k.zero());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = k.pth_root(f.coefficient(i * p));
    return UniPoly(k, std::move(out));
}

}  // namespace

bool is_separable(const UniPoly& f) {
    require_monic_nonconstant(f);
    return gcd(f, derivative(f)).is_one();
}

UniPoly squarefree_part(const UniPoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroOperand, "squarefree part of zero");
    const Field& k = f.field();
    if (f.is_constant()) return UniPoly::constant(k, k.one());
    UniPoly monic = f.monic();
    UniPoly df = derivative(monic);
    if (df.is_zero()) return squarefree_part(pth_root_of_coefficients(monic));
    UniPoly d = gcd(monic, df);
    UniPoly simple = divmod(monic, d).first;  // every factor of f, each at most once
    if (d.is_one()) return simple;
    UniPoly rest = squarefree_part(d);
    return divmod(simple * rest, gcd(simple, rest)).first.monic();
}

bool is_squarefree(const UniPoly& f) {
    require_monic_nonconstant(f);
    return squarefree_part(f) == f;
}

CoprimeSplit coprime_split(const UniPoly& f) {
    require_monic_nonconstant(f);
    UniPoly df = derivative(f);
    if (df.is_zero()) throw Error(ErrorCode::ZeroDerivative, "f' = 0; use pth_power_decompose");
    UniPoly d = gcd(f, df);
    if (d.is_one()) throw Error(ErrorCode::AlreadySeparable, f.to_string() + " is separable");
    UniPoly first = divmod(f, d).first;
    UniPoly second = d;
    for (UniPoly h = gcd(first, second); !h.is_one(); h = gcd(first, second)) {
        first = divmod(first, h).first;
        second *= h;
    }
    if (first.is_constant())
        throw Error(ErrorCode::NoSimpleFactor, f.to_string() + " has no simple factor to split off");
    return {first, second};
}

UniPoly pth_power_decompose(const UniPoly& f) {
    const Field& k = f.field();
    if (!k.is_finite()) throw Error(ErrorCode::CharacteristicZero, "p-th power decomposition needs p > 0");
    require_monic_nonconstant(f);
    if (!derivative(f).is_zero()) throw Error(ErrorCode::DerivativeNonzero, f.to_string() + " has f' != 0");
    return pth_root_of_coefficients(f);
}

}  // namespace etale
