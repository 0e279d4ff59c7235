#include "etale/multipoly.hpp"

#include <algorithm>

#include "etale/error.hpp"

namespace etale {

std::string to_string(MonomialOrder order) { return order == MonomialOrder::GrevLex ? "grevlex" : "lex"; }

Monomial Monomial::unit(std::size_t nvars, std::size_t var, std::uint32_t exponent) {
    Monomial m(nvars);
    m.exps_[var] = exponent;
    return m;
}

std::uint64_t Monomial::total_degree() const noexcept {
    std::uint64_t d = 0;
    for (auto e : exps_) d += e;
    return d;
}

bool Monomial::is_one() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e == 0; });
}

std::uint64_t Monomial::support() const noexcept {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] != 0) mask |= std::uint64_t{1} << i;
    return mask;
}

bool Monomial::divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (std::size_t i = 0; i < out.exps_.size(); ++i) out.exps_[i] += b.exps_[i];
    return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
    Monomial out = *this;
    for (std::size_t i = 0; i < out.exps_.size(); ++i) out.exps_[i] -= divisor.exps_[i];
    return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (std::size_t i = 0; i < out.exps_.size(); ++i) out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return out;
}

bool coprime(const Monomial& a, const Monomial& b) noexcept {
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
        if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
    return true;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
}

int compare(const Monomial& a, const Monomial& b, MonomialOrder order) noexcept {
    const auto& x = a.exponents();
    const auto& y = b.exponents();
    if (order == MonomialOrder::GrevLex) {
        auto da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t i = x.size(); i-- > 0;)
            if (x[i] != y[i]) return x[i] > y[i] ? -1 : 1;
        return 0;
    }
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
    return 0;
}

PolyRing::PolyRing(Field field, std::vector<std::string> variables, MonomialOrder order)
    : field_(field), variables_(std::make_shared<const std::vector<std::string>>(std::move(variables))), order_(order) {
    if (variables_->size() > 64) throw Error(ErrorCode::IndexOutOfRange, "at most 64 variables are supported");
}

PolyRing PolyRing::with_order(MonomialOrder order) const {
    PolyRing out = *this;
    out.order_ = order;
    return out;
}

bool operator==(const PolyRing& a, const PolyRing& b) noexcept {
    return a.field_ == b.field_ && a.order_ == b.order_ &&
           (a.variables_ == b.variables_ || *a.variables_ == *b.variables_);
}

MultiPoly::MultiPoly(PolyRing ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    for (const auto& t : terms_)
        if (t.monomial.size() != ring_.nvars())
            throw Error(ErrorCode::RingMismatch, "monomial length differs from the variable count");
    for (auto& t : terms_) t.coefficient = field().canonical(t.coefficient);
    normalize();
}

void MultiPoly::normalize() {
    const auto order = ring_.order();
    std::sort(terms_.begin(), terms_.end(),
              [order](const Term& a, const Term& b) { return compare(a.monomial, b.monomial, order) < 0; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().monomial == t.monomial)
            merged.back().coefficient = field().add(merged.back().coefficient, t.coefficient);
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [this](const Term& t) { return field().is_zero(t.coefficient); });
    terms_ = std::move(merged);
}

MultiPoly MultiPoly::constant(const PolyRing& ring, const Scalar& c) {
    return MultiPoly(ring, {Term{Monomial(ring.nvars()), c}});
}

MultiPoly MultiPoly::variable(const PolyRing& ring, std::size_t var) {
    if (var >= ring.nvars()) throw Error(ErrorCode::IndexOutOfRange, "variable index " + std::to_string(var));
    return MultiPoly(ring, {Term{Monomial::unit(ring.nvars(), var), ring.field().one()}});
}

MultiPoly MultiPoly::term(const PolyRing& ring, const Scalar& c, Monomial m) {
    return MultiPoly(ring, {Term{std::move(m), c}});
}

bool MultiPoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

bool MultiPoly::is_one() const { return is_constant() && !terms_.empty() && field().is_one(terms_[0].coefficient); }

std::uint64_t MultiPoly::total_degree() const noexcept {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.total_degree());
    return d;
}

bool MultiPoly::equal_terms(const MultiPoly& a, const MultiPoly& b) {
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].monomial != b.terms_[i].monomial || a.terms_[i].coefficient != b.terms_[i].coefficient)
            return false;
    return true;
}

MultiPoly MultiPoly::monic() const {
    if (is_zero()) return *this;
    return *this * field().invert(leading_coefficient());
}

MultiPoly MultiPoly::in_ring(const PolyRing& ring) const {
    if (ring.field() != field() || ring.variables() != ring_.variables())
        throw Error(ErrorCode::RingMismatch, "cannot move a polynomial into an unrelated ring");
    return MultiPoly(ring, terms_);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& t : out.terms_) t.coefficient = field().neg(t.coefficient);
    return out;
}

namespace {

void require_same_ring(const MultiPoly& a, const MultiPoly& b) {
    if (a.ring() != b.ring()) throw Error(ErrorCode::RingMismatch, "operands live in different rings");
}

// Merge of two increasing term lists: a + sign * b.
std::vector<Term> merge(const Field& k, MonomialOrder order, const std::vector<Term>& a, const std::vector<Term>& b,
                        bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int c = i == a.size() ? 1 : j == b.size() ? -1 : compare(a[i].monomial, b[j].monomial, order);
        if (c < 0) {
            out.push_back(a[i++]);
        } else if (c > 0) {
            out.push_back(Term{b[j].monomial, subtract ? k.neg(b[j].coefficient) : b[j].coefficient});
            ++j;
        } else {
            Scalar s = subtract ? k.sub(a[i].coefficient, b[j].coefficient) : k.add(a[i].coefficient, b[j].coefficient);
            if (!k.is_zero(s)) out.push_back(Term{a[i].monomial, std::move(s)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    require_same_ring(a, b);
    MultiPoly out(a.ring_);
    out.terms_ = merge(a.field(), a.ring_.order(), a.terms_, b.terms_, false);
    return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    require_same_ring(a, b);
    MultiPoly out(a.ring_);
    out.terms_ = merge(a.field(), a.ring_.order(), a.terms_, b.terms_, true);
    return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    require_same_ring(a, b);
    const Field& k = a.field();
    std::vector<Term> products;
    products.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) products.push_back(Term{s.monomial * t.monomial, k.mul(s.coefficient, t.coefficient)});
    MultiPoly out(a.ring_);
    out.terms_ = std::move(products);
    out.normalize();
    return out;
}

MultiPoly operator*(const MultiPoly& a, const Scalar& c) {
    const Field& k = a.field();
    MultiPoly out(a.ring_);
    if (k.is_zero(c)) return out;
    out.terms_.reserve(a.terms_.size());
    for (const auto& t : a.terms_) out.terms_.push_back(Term{t.monomial, k.mul(t.coefficient, c)});
    return out;
}

MultiPoly MultiPoly::pow(std::uint32_t exponent) const {
    MultiPoly result = constant(ring_, field().one());
    MultiPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return result;
}

MultiPoly MultiPoly::sub_scaled_shift(const Scalar& c, const Monomial& m, const MultiPoly& g) const {
    const Field& k = field();
    std::vector<Term> shifted;
    shifted.reserve(g.terms_.size());
    for (const auto& t : g.terms_) shifted.push_back(Term{t.monomial * m, k.mul(c, t.coefficient)});
    MultiPoly out(ring_);
    out.terms_ = merge(k, ring_.order(), terms_, shifted, true);
    return out;
}

MultiPoly MultiPoly::tail() const {
    MultiPoly out = *this;
    if (!out.terms_.empty()) out.terms_.pop_back();
    return out;
}

Term MultiPoly::pop_leading() {
    Term t = std::move(terms_.back());
    terms_.pop_back();
    return t;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        bool negative = sgn(it->coefficient) < 0;
        Scalar mag = negative ? Scalar(-it->coefficient) : it->coefficient;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (it->monomial.is_one())
            out += mag.get_str();
        else if (mag == 1)
            out += it->monomial.to_string(ring_.variables());
        else
            out += mag.get_str() + "*" + it->monomial.to_string(ring_.variables());
    }
    return out;
}

MultiPoly partial_derivative(const MultiPoly& f, std::size_t var) {
    const PolyRing& ring = f.ring();
    if (var >= ring.nvars()) throw Error(ErrorCode::IndexOutOfRange, "variable index " + std::to_string(var));
    const Field& k = ring.field();
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        std::uint32_t e = t.monomial[var];
        if (e == 0) continue;
        Scalar c = k.mul(t.coefficient, k.from_int(static_cast<long>(e)));
        if (k.is_zero(c)) continue;
        out.push_back(Term{t.monomial / Monomial::unit(ring.nvars(), var), std::move(c)});
    }
    return MultiPoly(ring, std::move(out));
}

MultiPoly compose(const UniPoly& f, const MultiPoly& g) {
    if (f.field() != g.field()) throw Error(ErrorCode::FieldMismatch, "composition across fields");
    MultiPoly acc(g.ring());
    const auto& c = f.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * g + MultiPoly::constant(g.ring(), *it);
    return acc;
}

MultiPoly from_unipoly(const UniPoly& f, const PolyRing& ring, std::size_t var) {
    if (f.field() != ring.field()) throw Error(ErrorCode::FieldMismatch, "embedding across fields");
    if (var >= ring.nvars()) throw Error(ErrorCode::IndexOutOfRange, "variable index " + std::to_string(var));
    std::vector<Term> terms;
    for (std::size_t k = 0; k < f.coefficients().size(); ++k)
        terms.push_back(Term{Monomial::unit(ring.nvars(), var, static_cast<std::uint32_t>(k)), f.coefficients()[k]});
    return MultiPoly(ring, std::move(terms));
}

}  // namespace etale
