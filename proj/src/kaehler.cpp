#include "etale/kaehler.hpp"

#include "etale/error.hpp"

namespace etale {

AlgebraPresentation AlgebraPresentation::with_order(MonomialOrder order) const {
    PolyRing r = ring.with_order(order);
    std::vector<MultiPoly> rels;
    for (const auto& f : relations) rels.push_back(f.in_ring(r));
    return {r, std::move(rels)};
}

std::string AlgebraPresentation::to_string() const {
    std::string out = "field " + field().name() + "\nvars ";
    for (std::size_t i = 0; i < nvars(); ++i) out += (i ? ", " : "") + ring.variables()[i];
    out += "\nrelations:\n";
    for (const auto& f : relations) out += "  " + f.to_string() + "\n";
    return out;
}

PolyMatrix jacobian(const AlgebraPresentation& presentation) {
    PolyMatrix jac;
    for (const auto& f : presentation.relations) {
        std::vector<MultiPoly> row;
        for (std::size_t j = 0; j < presentation.nvars(); ++j) row.push_back(partial_derivative(f, j));
        jac.push_back(std::move(row));
    }
    return jac;
}

DifferentialPresentation omega_presentation(const AlgebraPresentation& presentation) {
    PolyMatrix jac = jacobian(presentation);
    const std::size_t n = presentation.nvars(), s = presentation.nrelations();
    PolyMatrix table(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < s; ++j) table[i].push_back(jac[j][i]);
    std::vector<std::string> gens;
    for (const auto& v : presentation.ring.variables()) gens.push_back("d" + v);
    return {std::move(gens), std::move(table), presentation};
}

std::vector<MultiPoly> universal_derivation(const MultiPoly& g, const DifferentialPresentation& omega) {
    const PolyRing& ring = omega.ambient.ring;
    MultiPoly h = g.ring() == ring ? g : g.in_ring(ring);
    std::vector<MultiPoly> out;
    for (std::size_t i = 0; i < ring.nvars(); ++i) out.push_back(partial_derivative(h, i));
    return out;
}

MultiPoly determinant(const PolyMatrix& m, const PolyRing& ring) {
    const std::size_t n = m.size();
    const Field& k = ring.field();
    if (n == 0) return MultiPoly::constant(ring, k.one());
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    // Cofactor expansion along the first row; sizes stay tiny here.
    MultiPoly det(ring);
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        PolyMatrix sub;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<MultiPoly> row;
            for (std::size_t cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            sub.push_back(std::move(row));
        }
        MultiPoly term = m[0][c] * determinant(sub, ring);
        det = c % 2 == 0 ? det + term : det - term;
    }
    return det;
}

namespace {

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t r) {
    std::vector<std::vector<std::size_t>> out;
    if (r > n) return out;
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    for (;;) {
        out.push_back(idx);
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

}  // namespace

std::vector<MultiPoly> minors(const PolyMatrix& m, std::size_t size, const PolyRing& ring) {
    const std::size_t rows = m.size(), cols = rows == 0 ? 0 : m[0].size();
    std::vector<MultiPoly> out;
    for (const auto& rs : combinations(rows, size))
        for (const auto& cs : combinations(cols, size)) {
            PolyMatrix sub;
            for (std::size_t r : rs) {
                std::vector<MultiPoly> row;
                for (std::size_t c : cs) row.push_back(m[r][c]);
                sub.push_back(std::move(row));
            }
            out.push_back(determinant(sub, ring));
        }
    return out;
}

GroebnerBasis relation_basis(const AlgebraPresentation& p, std::size_t pair_budget) {
    return buchberger(p.ring, p.relations, pair_budget);
}

namespace {

CriterionResult trivial_result() {
    CriterionResult r;
    r.holds = true;
    r.trivial_algebra = true;
    r.reason = "TrivialAlgebra: 1 lies in the relation ideal, every condition holds vacuously";
    return r;
}

// Decides 1 in <relations, extra> and fills in the bookkeeping.
CriterionResult unit_ideal_test(const AlgebraPresentation& p, const GroebnerBasis& relations,
                                std::vector<MultiPoly> extra, const CriterionOptions& opts, const std::string& what) {
    CriterionResult r;
    for (const auto& f : p.relations) r.tested_ideal.push_back(f.in_ring(relations.ring()));
    for (auto& e : extra) r.tested_ideal.push_back(std::move(e));
    GroebnerBasis basis = buchberger(relations.ring(), r.tested_ideal, opts.pair_budget);
    r.holds = contains_one(basis);
    r.reason = (r.holds ? "1 lies in the relations plus " : "1 is not in the relations plus ") + what;
    if (r.holds && opts.certificates) {
        r.cofactors = express_one(relations.ring(), r.tested_ideal, opts.pair_budget);
        if (!r.cofactors) throw Error(ErrorCode::InternalContradiction, "cofactor search missed 1 in " + what);
        MultiPoly check(relations.ring());
        for (std::size_t i = 0; i < r.tested_ideal.size(); ++i) check += (*r.cofactors)[i] * r.tested_ideal[i];
        if (!check.is_one()) throw Error(ErrorCode::InternalContradiction, "cofactors do not combine to 1");
    }
    r.tested_basis = std::move(basis);
    return r;
}

MultiPoly leading_minor(const PolyMatrix& jac, std::size_t size, const PolyRing& ring) {
    PolyMatrix sub;
    for (std::size_t r = 0; r < size; ++r) sub.emplace_back(jac[r].begin(), jac[r].begin() + static_cast<long>(size));
    return determinant(sub, ring);
}

PolyMatrix jacobian_in(const AlgebraPresentation& p, const PolyRing& ring) {
    PolyMatrix jac = jacobian(p);
    for (auto& row : jac)
        for (auto& e : row) e = e.in_ring(ring);
    return jac;
}

}  // namespace

CriterionResult check_nette(const AlgebraPresentation& p, const GroebnerBasis& relations, const CriterionOptions& opts) {
    if (contains_one(relations)) return trivial_result();
    const std::size_t n = p.nvars(), s = p.nrelations();
    if (s < n) {
        CriterionResult r;
        r.reason = "s = " + std::to_string(s) + " < n = " + std::to_string(n) + ": there are no n x n minors of Ja";
        r.tested_ideal = p.relations;
        return r;
    }
    const PolyRing& ring = relations.ring();
    return unit_ideal_test(p, relations, minors(jacobian_in(p, ring), n, ring), opts, "the n x n minors of Ja");
}

CriterionResult check_standard_smooth(const AlgebraPresentation& p, const GroebnerBasis& relations,
                                      const CriterionOptions& opts) {
    if (contains_one(relations)) return trivial_result();
    const std::size_t n = p.nvars(), s = p.nrelations();
    if (s > n) {
        CriterionResult r;
        r.reason = "s = " + std::to_string(s) + " > n = " + std::to_string(n);
        return r;
    }
    const PolyRing& ring = relations.ring();
    return unit_ideal_test(p, relations, {leading_minor(jacobian_in(p, ring), s, ring)}, opts,
                           "the leading s x s minor of Ja");
}

CriterionResult check_elementary_smooth(const AlgebraPresentation& p, const GroebnerBasis& relations,
                                        const CriterionOptions& opts) {
    if (contains_one(relations)) return trivial_result();
    const std::size_t n = p.nvars(), s = p.nrelations();
    if (s > n) {
        CriterionResult r;
        r.reason = "MinorOrderExceedsShape: s = " + std::to_string(s) + " > n = " + std::to_string(n) +
                   ", the s x s minors of Ja all vanish";
        r.tested_ideal = p.relations;
        return r;
    }
    const PolyRing& ring = relations.ring();
    return unit_ideal_test(p, relations, minors(jacobian_in(p, ring), s, ring), opts, "the s x s minors of Ja");
}

CriterionResult check_standard_etale(const AlgebraPresentation& p, const GroebnerBasis& relations,
                                     const CriterionOptions& opts) {
    if (contains_one(relations)) return trivial_result();
    const std::size_t n = p.nvars(), s = p.nrelations();
    if (s != n) {
        CriterionResult r;
        r.reason = "s = " + std::to_string(s) + " differs from n = " + std::to_string(n);
        return r;
    }
    const PolyRing& ring = relations.ring();
    return unit_ideal_test(p, relations, {determinant(jacobian_in(p, ring), ring)}, opts, "det(Ja)");
}

bool is_nette(const AlgebraPresentation& p, std::size_t pair_budget) {
    return check_nette(p, relation_basis(p, pair_budget), {pair_budget, false}).holds;
}

bool is_standard_smooth(const AlgebraPresentation& p, std::size_t pair_budget) {
    return check_standard_smooth(p, relation_basis(p, pair_budget), {pair_budget, false}).holds;
}

bool is_elementary_smooth(const AlgebraPresentation& p, std::size_t pair_budget) {
    return check_elementary_smooth(p, relation_basis(p, pair_budget), {pair_budget, false}).holds;
}

bool is_standard_etale(const AlgebraPresentation& p, std::size_t pair_budget) {
    return check_standard_etale(p, relation_basis(p, pair_budget), {pair_budget, false}).holds;
}

std::size_t omega_dimension(const AlgebraPresentation& p, std::size_t pair_budget) {
    return omega_dimension(p, relation_basis(p, pair_budget));
}

std::size_t omega_dimension(const AlgebraPresentation& p, const GroebnerBasis& relations) {
    if (contains_one(relations)) return 0;
    if (noether_dimension(relations) != 0)
        throw Error(ErrorCode::NotZeroDimensional, "Omega is not finite-dimensional over the base field");
    const PolyRing& ring = relations.ring();
    const Field& k = ring.field();
    const std::vector<Monomial> staircase = standard_monomials(relations);
    const std::size_t m = staircase.size(), n = p.nvars(), s = p.nrelations();
    PolyMatrix jac = jacobian_in(p, ring);
    // Column (j, b) is the image of b * eps_j, i.e. sum_i b * df_j/dX_i * dX_i.
    Matrix scalar_map(m * n, m * s);
    for (std::size_t j = 0; j < s; ++j)
        for (std::size_t b = 0; b < m; ++b) {
            MultiPoly basis_elt = MultiPoly::term(ring, k.one(), staircase[b]);
            for (std::size_t i = 0; i < n; ++i) {
                Vector coords = quotient_coordinates(basis_elt * jac[j][i], relations, staircase);
                for (std::size_t r = 0; r < m; ++r) scalar_map(i * m + r, j * m + b) = coords[r];
            }
        }
    return m * n - rank(k, scalar_map);
}

}  // namespace etale
