#include "etale/finalg.hpp"

#include "etale/error.hpp"

namespace etale {

namespace {

// Triples checked for associativity; every triple up to this dimension, beyond it a
// deterministic stride through the cube.
constexpr std::size_t kFullAssociativityCheck = 16;
constexpr std::size_t kSampledTriples = 4096;

}  // namespace

FiniteAlgebra::FiniteAlgebra(Field field, std::vector<std::string> labels, StructureTable table, Vector unit,
                             std::vector<NamedElement> generators)
    : field_(field), labels_(std::move(labels)), table_(std::move(table)), unit_(std::move(unit)),
      generators_(std::move(generators)) {
    validate();
}

void FiniteAlgebra::validate() const {
    const std::size_t m = labels_.size();
    if (m == 0) throw Error(ErrorCode::InvalidAlgebra, "dimension must be at least 1");
    if (table_.size() != m || unit_.size() != m) throw Error(ErrorCode::InvalidAlgebra, "table shape");
    for (const auto& row : table_) {
        if (row.size() != m) throw Error(ErrorCode::InvalidAlgebra, "table shape");
        for (const auto& v : row) {
            if (v.size() != m) throw Error(ErrorCode::InvalidAlgebra, "table shape");
            for (const auto& c : v)
                if (!field_.contains(c)) throw Error(ErrorCode::InvalidAlgebra, "entry outside " + field_.name());
        }
    }
    for (const auto& g : generators_)
        if (g.value.size() != m) throw Error(ErrorCode::InvalidAlgebra, "generator " + g.name + " has wrong length");

    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (table_[i][j] != table_[j][i])
                throw Error(ErrorCode::InvalidAlgebra, "not commutative at (" + labels_[i] + ", " + labels_[j] + ")");
    for (std::size_t i = 0; i < m; ++i)
        if (mul(one(), basis(i)) != basis(i))
            throw Error(ErrorCode::InvalidAlgebra, "unit law fails on " + labels_[i]);

    const std::size_t total = m * m * m;
    const std::size_t stride = m <= kFullAssociativityCheck ? 1 : std::max<std::size_t>(1, total / kSampledTriples);
    for (std::size_t t = 0; t < total; t += stride) {
        std::size_t i = t / (m * m), j = (t / m) % m, k = t % m;
        AlgebraElement left = mul({table_[i][j]}, basis(k));
        AlgebraElement right = mul(basis(i), {table_[j][k]});
        if (left != right)
            throw Error(ErrorCode::InvalidAlgebra,
                        "not associative at (" + labels_[i] + ", " + labels_[j] + ", " + labels_[k] + ")");
    }
}

void FiniteAlgebra::require_element(const AlgebraElement& a) const {
    if (a.size() != dimension())
        throw Error(ErrorCode::DimensionMismatch,
                    "element of length " + std::to_string(a.size()) + " in an algebra of dimension " +
                        std::to_string(dimension()));
}

AlgebraElement FiniteAlgebra::zero() const { return {Vector(dimension(), field_.zero())}; }

AlgebraElement FiniteAlgebra::basis(std::size_t i) const {
    if (i >= dimension()) throw Error(ErrorCode::IndexOutOfRange, "basis index " + std::to_string(i));
    AlgebraElement e = zero();
    e.coordinates[i] = field_.one();
    return e;
}

AlgebraElement FiniteAlgebra::scalar(const Scalar& c) const { return scale(c, one()); }

AlgebraElement FiniteAlgebra::add(const AlgebraElement& a, const AlgebraElement& b) const {
    require_element(a);
    require_element(b);
    return {etale::add(field_, a.coordinates, b.coordinates)};
}

AlgebraElement FiniteAlgebra::sub(const AlgebraElement& a, const AlgebraElement& b) const {
    require_element(a);
    require_element(b);
    return {etale::sub(field_, a.coordinates, b.coordinates)};
}

AlgebraElement FiniteAlgebra::scale(const Scalar& c, const AlgebraElement& a) const {
    require_element(a);
    return {etale::scale(field_, c, a.coordinates)};
}

AlgebraElement FiniteAlgebra::mul(const AlgebraElement& a, const AlgebraElement& b) const {
    require_element(a);
    require_element(b);
    const std::size_t m = dimension();
    Vector out(m, field_.zero());
    for (std::size_t i = 0; i < m; ++i) {
        if (field_.is_zero(a.coordinates[i])) continue;
        for (std::size_t j = 0; j < m; ++j) {
            if (field_.is_zero(b.coordinates[j])) continue;
            Scalar c = field_.mul(a.coordinates[i], b.coordinates[j]);
            const Vector& prod = table_[i][j];
            for (std::size_t k = 0; k < m; ++k)
                if (!field_.is_zero(prod[k])) out[k] = field_.add(out[k], field_.mul(c, prod[k]));
        }
    }
    return {std::move(out)};
}

AlgebraElement FiniteAlgebra::pow(const AlgebraElement& a, std::uint64_t exponent) const {
    AlgebraElement result = one();
    AlgebraElement base = a;
    while (exponent > 0) {
        if (exponent & 1) result = mul(result, base);
        exponent >>= 1;
        if (exponent > 0) base = mul(base, base);
    }
    return result;
}

bool FiniteAlgebra::is_zero(const AlgebraElement& a) const {
    require_element(a);
    return etale::is_zero(field_, a.coordinates);
}

std::string FiniteAlgebra::format(const AlgebraElement& a) const {
    require_element(a);
    std::string out;
    for (std::size_t i = 0; i < dimension(); ++i) {
        const Scalar& c = a.coordinates[i];
        if (field_.is_zero(c)) continue;
        bool negative = sgn(c) < 0;
        Scalar mag = negative ? Scalar(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (labels_[i] == "1")
            out += mag.get_str();
        else if (mag == 1)
            out += labels_[i];
        else
            out += mag.get_str() + "*" + labels_[i];
    }
    return out.empty() ? "0" : out;
}

std::string FiniteAlgebra::table_string() const {
    std::string out;
    for (std::size_t i = 0; i < dimension(); ++i)
        for (std::size_t j = i; j < dimension(); ++j)
            out += labels_[i] + " * " + labels_[j] + " = " + format({table_[i][j]}) + "\n";
    return out;
}

Matrix mul_operator(const AlgebraElement& a, const FiniteAlgebra& algebra) {
    const std::size_t m = algebra.dimension();
    Matrix op(m, m);
    for (std::size_t j = 0; j < m; ++j) op.set_column(j, algebra.mul(a, algebra.basis(j)).coordinates);
    return op;
}

Scalar trace(const AlgebraElement& a, const FiniteAlgebra& algebra) {
    const Field& k = algebra.field();
    Matrix op = mul_operator(a, algebra);
    Scalar t = k.zero();
    for (std::size_t i = 0; i < op.rows(); ++i) t = k.add(t, op(i, i));
    return t;
}

Matrix trace_form(const FiniteAlgebra& algebra) {
    const std::size_t m = algebra.dimension();
    const Field& k = algebra.field();
    // Tr(e_i e_j) = sum_l c_ij^l Tr(e_l), so only the traces of basis elements are needed.
    Vector basis_traces(m);
    for (std::size_t l = 0; l < m; ++l) basis_traces[l] = trace(algebra.basis(l), algebra);
    Matrix gram(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            Scalar t = k.zero();
            const Vector& prod = algebra.product_of_basis(i, j);
            for (std::size_t l = 0; l < m; ++l) t = k.add(t, k.mul(prod[l], basis_traces[l]));
            gram(i, j) = t;
            gram(j, i) = t;
        }
    return gram;
}

Scalar discriminant(const FiniteAlgebra& algebra) { return determinant(algebra.field(), trace_form(algebra)); }

UniPoly minimal_polynomial(const AlgebraElement& a, const FiniteAlgebra& algebra) {
    const Field& k = algebra.field();
    const std::size_t m = algebra.dimension();
    if (a.size() != m) throw Error(ErrorCode::DimensionMismatch, "element length");
    struct Row {
        Vector v;
        std::vector<Scalar> combination;  // coefficients on 1, a, a^2, ...
        std::size_t pivot;
    };
    std::vector<Row> rows;
    AlgebraElement power = algebra.one();
    for (std::size_t deg = 0;; ++deg) {
        Vector v = power.coordinates;
        std::vector<Scalar> comb(deg + 1, k.zero());
        comb[deg] = k.one();
        for (const Row& r : rows) {
            if (k.is_zero(v[r.pivot])) continue;
            Scalar f = v[r.pivot];
            for (std::size_t i = 0; i < m; ++i) v[i] = k.sub(v[i], k.mul(f, r.v[i]));
            for (std::size_t i = 0; i < r.combination.size(); ++i)
                comb[i] = k.sub(comb[i], k.mul(f, r.combination[i]));
        }
        std::size_t pivot = 0;
        while (pivot < m && k.is_zero(v[pivot])) ++pivot;
        if (pivot == m) return UniPoly(k, std::move(comb));
        Scalar inv = k.invert(v[pivot]);
        for (auto& x : v) x = k.mul(x, inv);
        for (auto& x : comb) x = k.mul(x, inv);
        rows.push_back(Row{std::move(v), std::move(comb), pivot});
        power = algebra.mul(power, a);
    }
}

AlgebraElement eval_in_algebra(const UniPoly& f, const AlgebraElement& a, const FiniteAlgebra& algebra) {
    if (f.field() != algebra.field())
        throw Error(ErrorCode::FieldMismatch, "polynomial over " + f.field().name() + ", algebra over " +
                                                  algebra.field().name());
    AlgebraElement acc = algebra.zero();
    const auto& c = f.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = algebra.add(algebra.mul(acc, a), algebra.scalar(*it));
    return acc;
}

namespace {

// q(T) = -(h(T) - h(0)) / (T h(0)), so that T q(T) = 1 - h(T)/h(0).
UniPoly inverse_cofactor(const UniPoly& h) {
    const Field& k = h.field();
    Scalar h0 = h.coefficient(0);
    std::vector<Scalar> q;
    for (std::size_t i = 1; i < h.coefficients().size(); ++i) q.push_back(k.neg(k.div(h.coefficients()[i], h0)));
    return UniPoly(k, std::move(q));
}

}  // namespace

AlgebraElement idempotent_of(const AlgebraElement& a, const FiniteAlgebra& algebra) {
    const Field& k = algebra.field();
    UniPoly g = minimal_polynomial(a, algebra);
    UniPoly h = g;
    if (k.is_zero(g.coefficient(0))) {
        h = divmod(g, UniPoly::variable(k)).first;
        if (k.is_zero(h.coefficient(0)))
            throw Error(ErrorCode::RepeatedZeroRoot,
                        "minimal polynomial " + g.to_string() + " is divisible by T^2; " + algebra.format(a) +
                            " has a nonzero nilpotent multiple");
    }
    AlgebraElement cofactor = eval_in_algebra(inverse_cofactor(h), a, algebra);
    AlgebraElement e = algebra.mul(a, cofactor);
    if (algebra.mul(e, e) != e || algebra.mul(a, e) != a)
        throw Error(ErrorCode::InternalContradiction, "idempotent check failed for " + algebra.format(a));
    return e;
}

AlgebraElement inverse_in_subalgebra(const AlgebraElement& a, const FiniteAlgebra& algebra) {
    UniPoly g = minimal_polynomial(a, algebra);
    if (algebra.field().is_zero(g.coefficient(0)))
        throw Error(ErrorCode::NotInvertible, algebra.format(a) + " is a zero divisor (minimal polynomial " +
                                                  g.to_string() + ")");
    AlgebraElement inv = eval_in_algebra(inverse_cofactor(g), a, algebra);
    if (algebra.mul(a, inv) != algebra.one())
        throw Error(ErrorCode::InternalContradiction, "inverse check failed for " + algebra.format(a));
    return inv;
}

ZeroDimensionWitness zero_dimension_witness(const AlgebraElement& x, const FiniteAlgebra& algebra) {
    const Field& k = algebra.field();
    UniPoly h = minimal_polynomial(x, algebra);
    std::size_t exponent = 0;
    while (k.is_zero(h.coefficient(0))) {
        h = divmod(h, UniPoly::variable(k)).first;
        ++exponent;
    }
    return {exponent, eval_in_algebra(inverse_cofactor(h), x, algebra)};
}

namespace {

struct Component {
    FiniteAlgebra algebra;
    Matrix projection;
    Matrix embedding;
};

// The algebra f*A with unit f, for an idempotent f.
Component component_of(const AlgebraElement& f, const FiniteAlgebra& algebra, const std::string& prefix) {
    const Field& k = algebra.field();
    const std::size_t m = algebra.dimension();
    Matrix op = mul_operator(f, algebra);
    RowEchelon ech = row_reduce(k, transpose(op));
    const std::size_t r = ech.pivot_columns.size();

    Matrix embedding(m, r);
    Matrix projection(r, m);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t c = 0; c < m; ++c) {
            embedding(c, i) = ech.reduced(i, c);
            projection(i, c) = op(ech.pivot_columns[i], c);
        }
    }
    // Coordinates of w in f*A on the echelon basis are its entries at the pivot columns.
    auto coords = [&](const Vector& w) {
        Vector out(r);
        for (std::size_t i = 0; i < r; ++i) out[i] = w[ech.pivot_columns[i]];
        return out;
    };
    StructureTable table(r, std::vector<Vector>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            AlgebraElement prod = algebra.mul({embedding.column(i)}, {embedding.column(j)});
            table[i][j] = coords(prod.coordinates);
        }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < r; ++i) labels.push_back(prefix + std::to_string(i + 1));
    std::vector<NamedElement> gens;
    for (const auto& g : algebra.generator_refs())
        gens.push_back({g.name, {apply(k, projection, g.value.coordinates)}});
    FiniteAlgebra piece(k, std::move(labels), std::move(table), coords(f.coordinates), std::move(gens));
    return {std::move(piece), std::move(projection), std::move(embedding)};
}

}  // namespace

IdempotentSplit split_by_idempotent(const AlgebraElement& e, const FiniteAlgebra& algebra) {
    if (algebra.mul(e, e) != e) throw Error(ErrorCode::NotIdempotent, algebra.format(e) + " is not idempotent");
    if (algebra.is_zero(e) || e == algebra.one())
        throw Error(ErrorCode::TrivialIdempotent, "splitting by " + algebra.format(e) + " is trivial");
    Component first = component_of(algebra.sub(algebra.one(), e), algebra, "u");
    Component second = component_of(e, algebra, "v");
    if (first.algebra.dimension() + second.algebra.dimension() != algebra.dimension())
        throw Error(ErrorCode::InternalContradiction, "component dimensions do not add up");
    return {std::move(first.algebra), std::move(second.algebra), std::move(first.projection),
            std::move(second.projection), std::move(first.embedding), std::move(second.embedding)};
}

FiniteAlgebra product(const FiniteAlgebra& first, const FiniteAlgebra& second) {
    if (first.field() != second.field())
        throw Error(ErrorCode::FieldMismatch, "product of algebras over " + first.field().name() + " and " +
                                                  second.field().name());
    const Field& k = first.field();
    const std::size_t m1 = first.dimension(), m2 = second.dimension(), m = m1 + m2;
    auto widen = [&](const Vector& v, bool left) {
        Vector out(m, k.zero());
        for (std::size_t i = 0; i < v.size(); ++i) out[left ? i : m1 + i] = v[i];
        return out;
    };
    StructureTable table(m, std::vector<Vector>(m, Vector(m, k.zero())));
    for (std::size_t i = 0; i < m1; ++i)
        for (std::size_t j = 0; j < m1; ++j) table[i][j] = widen(first.product_of_basis(i, j), true);
    for (std::size_t i = 0; i < m2; ++i)
        for (std::size_t j = 0; j < m2; ++j) table[m1 + i][m1 + j] = widen(second.product_of_basis(i, j), false);
    std::vector<std::string> labels;
    for (const auto& l : first.labels()) labels.push_back(l + "@1");
    for (const auto& l : second.labels()) labels.push_back(l + "@2");
    std::vector<NamedElement> gens;
    for (const auto& g : first.generator_refs()) gens.push_back({g.name + "@1", {widen(g.value.coordinates, true)}});
    for (const auto& g : second.generator_refs()) gens.push_back({g.name + "@2", {widen(g.value.coordinates, false)}});
    Vector unit = add(k, widen(first.one().coordinates, true), widen(second.one().coordinates, false));
    return FiniteAlgebra(k, std::move(labels), std::move(table), std::move(unit), std::move(gens));
}

FiniteAlgebra monogenic_from_poly(const UniPoly& f) {
    if (f.is_zero() || f.is_constant()) throw Error(ErrorCode::ConstantPolynomial, "need deg f >= 1");
    if (!f.is_monic()) throw Error(ErrorCode::NotMonic, f.to_string() + " is not monic");
    const Field& k = f.field();
    const std::size_t d = *f.degree();
    // Coordinates of x^e modulo f for e < 2d - 1.
    std::vector<Vector> powers;
    Vector current(d, k.zero());
    current[0] = k.one();
    for (std::size_t e = 0; e + 1 < 2 * d; ++e) {
        powers.push_back(current);
        Vector next(d, k.zero());
        for (std::size_t i = 0; i + 1 < d; ++i) next[i + 1] = current[i];
        const Scalar& top = current[d - 1];
        if (!k.is_zero(top))
            for (std::size_t i = 0; i < d; ++i) next[i] = k.sub(next[i], k.mul(top, f.coefficient(i)));
        current = std::move(next);
    }
    StructureTable table(d, std::vector<Vector>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) table[i][j] = powers[i + j];
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d; ++i) labels.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
    Vector unit = powers[0];
    // For d = 1 the image of x is -f(0); otherwise it is the basis vector x.
    Vector x(d, k.zero());
    if (d == 1)
        x[0] = k.neg(f.coefficient(0));
    else
        x[1] = k.one();
    return FiniteAlgebra(k, std::move(labels), std::move(table), std::move(unit), {NamedElement{"x", {std::move(x)}}});
}

bool is_reduced(const FiniteAlgebra& algebra) { return !algebra.field().is_zero(discriminant(algebra)); }

}  // namespace etale
