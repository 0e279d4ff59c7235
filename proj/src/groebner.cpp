#include "etale/groebner.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "etale/error.hpp"

namespace etale {

GroebnerBasis::GroebnerBasis(PolyRing ring, std::vector<MultiPoly> generators, std::vector<MultiPoly> original)
    : ring_(std::move(ring)), generators_(std::move(generators)), original_(std::move(original)) {}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(generators_.size());
    for (const auto& g : generators_) out.push_back(g.leading_monomial());
    return out;
}

namespace {

const MultiPoly* find_divisor(const Monomial& m, const std::vector<MultiPoly>& divisors) {
    for (const auto& g : divisors)
        if (!g.is_zero() && g.leading_monomial().divides(m)) return &g;
    return nullptr;
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const Monomial& l) {
    const Field& k = f.field();
    MultiPoly shifted = MultiPoly::term(f.ring(), k.div(k.one(), f.leading_coefficient()), l / f.leading_monomial()) * f;
    return shifted.sub_scaled_shift(k.div(k.one(), g.leading_coefficient()), l / g.leading_monomial(), g);
}

std::vector<MultiPoly> to_ring(const PolyRing& ring, const std::vector<MultiPoly>& generators) {
    std::vector<MultiPoly> out;
    out.reserve(generators.size());
    for (const auto& g : generators) {
        if (g.field() != ring.field() || g.ring().variables() != ring.variables())
            throw Error(ErrorCode::RingMismatch, "generator " + g.to_string() + " is not in the requested ring");
        out.push_back(g.in_ring(ring));
    }
    return out;
}

struct CriticalPair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
};

// Normal selection strategy: smallest lcm first, ties broken by index for determinism.
struct PairOrder {
    MonomialOrder order;
    bool operator()(const CriticalPair& a, const CriticalPair& b) const {
        int c = compare(a.lcm, b.lcm, order);
        if (c != 0) return c < 0;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    }
};

class PairQueue {
   public:
    explicit PairQueue(MonomialOrder order) : queue_(PairOrder{order}) {}

    void add_polynomial(const std::vector<Monomial>& leads) {
        const std::size_t t = leads.size() - 1;
        pending_.emplace_back(leads.size(), 0);
        for (auto& row : pending_) row.resize(leads.size(), 0);
        for (std::size_t i = 0; i < t; ++i) {
            queue_.insert(CriticalPair{i, t, lcm(leads[i], leads[t])});
            pending_[i][t] = 1;
        }
    }

    bool empty() const { return queue_.empty(); }

    CriticalPair pop() {
        CriticalPair p = *queue_.begin();
        queue_.erase(queue_.begin());
        pending_[p.i][p.j] = 0;
        return p;
    }

    bool pending(std::size_t a, std::size_t b) const {
        return a < b ? pending_[a][b] != 0 : pending_[b][a] != 0;
    }

    // Buchberger's chain criterion: some third leading monomial divides the lcm and
    // both pairs through it have already been treated.
    bool chain_redundant(const CriticalPair& p, const std::vector<Monomial>& leads) const {
        for (std::size_t k = 0; k < leads.size(); ++k) {
            if (k == p.i || k == p.j) continue;
            if (leads[k].divides(p.lcm) && !pending(p.i, k) && !pending(p.j, k)) return true;
        }
        return false;
    }

   private:
    std::set<CriticalPair, PairOrder> queue_;
    std::vector<std::vector<char>> pending_;
};

std::vector<MultiPoly> unit_basis(const PolyRing& ring) { return {MultiPoly::constant(ring, ring.field().one())}; }

std::vector<MultiPoly> interreduce(std::vector<MultiPoly> basis, MonomialOrder order) {
    std::vector<MultiPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& li = basis[i].leading_monomial();
            const Monomial& lj = basis[j].leading_monomial();
            redundant = lj.divides(li) && (lj != li || j < i);
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::vector<MultiPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(reduce(minimal[i], others).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [order](const MultiPoly& a, const MultiPoly& b) {
        return compare(a.leading_monomial(), b.leading_monomial(), order) < 0;
    });
    return reduced;
}

}  // namespace

MultiPoly reduce(const MultiPoly& f, const std::vector<MultiPoly>& divisors) {
    const Field& k = f.field();
    MultiPoly p = f;
    std::vector<Term> remainder;
    while (!p.is_zero()) {
        const Term& lead = p.leading_term();
        if (const MultiPoly* g = find_divisor(lead.monomial, divisors)) {
            p = p.sub_scaled_shift(k.div(lead.coefficient, g->leading_coefficient()),
                                   lead.monomial / g->leading_monomial(), *g);
        } else {
            remainder.push_back(p.pop_leading());
        }
    }
    return MultiPoly(f.ring(), std::move(remainder));
}

GroebnerBasis buchberger(const PolyRing& ring, const std::vector<MultiPoly>& generators, std::size_t pair_budget) {
    std::vector<MultiPoly> input = to_ring(ring, generators);
    std::vector<MultiPoly> basis;
    std::vector<Monomial> leads;
    PairQueue queue(ring.order());

    // Returns false once a nonzero constant shows up: the ideal is the whole ring.
    auto insert = [&](MultiPoly h) {
        if (h.is_constant()) return false;
        h = h.monic();
        leads.push_back(h.leading_monomial());
        basis.push_back(std::move(h));
        queue.add_polynomial(leads);
        return true;
    };

    for (const auto& g : input) {
        MultiPoly h = reduce(g, basis);
        if (h.is_zero()) continue;
        if (!insert(std::move(h))) return GroebnerBasis(ring, unit_basis(ring), input);
    }

    std::size_t reduced_pairs = 0;
    while (!queue.empty()) {
        CriticalPair pair = queue.pop();
        if (coprime(leads[pair.i], leads[pair.j])) continue;
        if (queue.chain_redundant(pair, leads)) continue;
        if (++reduced_pairs > pair_budget)
            throw Error(ErrorCode::BudgetExceeded,
                        "Groebner basis computation exceeded " + std::to_string(pair_budget) + " critical pairs");
        MultiPoly h = reduce(s_polynomial(basis[pair.i], basis[pair.j], pair.lcm), basis);
        if (h.is_zero()) continue;
        if (!insert(std::move(h))) return GroebnerBasis(ring, unit_basis(ring), input);
    }
    return GroebnerBasis(ring, interreduce(std::move(basis), ring.order()), std::move(input));
}

MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& basis) {
    if (f.ring() != basis.ring()) {
        if (f.field() != basis.ring().field() || f.ring().variables() != basis.ring().variables())
            throw Error(ErrorCode::RingMismatch, "normal form across rings");
        return reduce(f.in_ring(basis.ring()), basis.generators());
    }
    return reduce(f, basis.generators());
}

bool contains_one(const GroebnerBasis& basis) {
    return basis.generators().size() == 1 && basis.generators()[0].is_one();
}

bool is_invertible_mod(const MultiPoly& g, const GroebnerBasis& basis, std::size_t pair_budget) {
    std::vector<MultiPoly> gens = basis.generators();
    gens.push_back(g);
    return contains_one(buchberger(basis.ring(), to_ring(basis.ring(), gens), pair_budget));
}

int noether_dimension(const GroebnerBasis& basis) {
    if (contains_one(basis)) throw Error(ErrorCode::TrivialIdeal, "the ideal contains 1");
    const std::size_t n = basis.ring().nvars();
    std::vector<std::uint64_t> supports;
    for (const auto& m : basis.leading_monomials()) supports.push_back(m.support());
    auto independent = [&](std::uint64_t set) {
        return std::none_of(supports.begin(), supports.end(), [set](std::uint64_t s) { return (s & ~set) == 0; });
    };
    // Independence is inherited by subsets, so a depth-first search with pruning works.
    int best = 0;
    auto search = [&](auto&& self, std::size_t next, std::uint64_t set, int size) -> void {
        best = std::max(best, size);
        if (size + static_cast<int>(n - next) <= best) return;
        for (std::size_t v = next; v < n; ++v) {
            std::uint64_t grown = set | (std::uint64_t{1} << v);
            if (independent(grown)) self(self, v + 1, grown, size + 1);
        }
    };
    search(search, 0, 0, 0);
    return best;
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& basis) {
    if (contains_one(basis)) throw Error(ErrorCode::TrivialIdeal, "the quotient is the zero ring");
    if (noether_dimension(basis) != 0)
        throw Error(ErrorCode::NotZeroDimensional, "the quotient is not finite-dimensional");
    const std::size_t n = basis.ring().nvars();
    const auto leads = basis.leading_monomials();
    auto is_standard = [&](const Monomial& m) {
        return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
    };
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<Monomial> out;
    std::deque<Monomial> frontier{Monomial(n)};
    seen.insert(Monomial(n).exponents());
    while (!frontier.empty()) {
        Monomial m = std::move(frontier.front());
        frontier.pop_front();
        out.push_back(m);
        for (std::size_t v = 0; v < n; ++v) {
            Monomial next = m * Monomial::unit(n, v);
            if (!is_standard(next) || !seen.insert(next.exponents()).second) continue;
            frontier.push_back(std::move(next));
        }
    }
    const auto order = basis.ring().order();
    std::sort(out.begin(), out.end(), [order](const Monomial& a, const Monomial& b) { return compare(a, b, order) < 0; });
    return out;
}

Vector quotient_coordinates(const MultiPoly& f, const GroebnerBasis& basis, const std::vector<Monomial>& staircase) {
    const Field& k = basis.ring().field();
    MultiPoly r = normal_form(f, basis);
    Vector out(staircase.size(), k.zero());
    for (const auto& t : r.terms()) {
        auto it = std::find(staircase.begin(), staircase.end(), t.monomial);
        if (it == staircase.end())
            throw Error(ErrorCode::InternalContradiction, "normal form left a non-standard monomial");
        out[static_cast<std::size_t>(it - staircase.begin())] = t.coefficient;
    }
    return out;
}

FiniteAlgebra quotient_algebra(const GroebnerBasis& basis) {
    const std::vector<Monomial> staircase = standard_monomials(basis);
    const PolyRing& ring = basis.ring();
    const Field& k = ring.field();
    const std::size_t m = staircase.size();
    StructureTable table(m, std::vector<Vector>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            table[i][j] = quotient_coordinates(MultiPoly::term(ring, k.one(), staircase[i] * staircase[j]), basis, staircase);
            table[j][i] = table[i][j];
        }
    std::vector<std::string> labels;
    for (const auto& s : staircase) labels.push_back(s.to_string(ring.variables()));
    std::vector<NamedElement> gens;
    for (std::size_t v = 0; v < ring.nvars(); ++v)
        gens.push_back({ring.variables()[v], {quotient_coordinates(MultiPoly::variable(ring, v), basis, staircase)}});
    Vector unit = quotient_coordinates(MultiPoly::constant(ring, k.one()), basis, staircase);
    return FiniteAlgebra(k, std::move(labels), std::move(table), std::move(unit), std::move(gens));
}

std::optional<std::vector<MultiPoly>> express_one(const PolyRing& ring, const std::vector<MultiPoly>& generators,
                                                  std::size_t pair_budget) {
    const std::vector<MultiPoly> input = to_ring(ring, generators);
    const Field& k = ring.field();
    const std::size_t s = input.size();
    struct Tracked {
        MultiPoly poly;
        std::vector<MultiPoly> cofactors;
    };
    std::vector<Tracked> basis;
    std::vector<Monomial> leads;
    PairQueue queue(ring.order());

    // Top-reduction with cofactor bookkeeping: t.poly = sum t.cofactors[i] * input[i].
    auto top_reduce = [&](Tracked t) {
        while (!t.poly.is_zero()) {
            const Term& lead = t.poly.leading_term();
            auto it = std::find_if(basis.begin(), basis.end(),
                                   [&](const Tracked& b) { return b.poly.leading_monomial().divides(lead.monomial); });
            if (it == basis.end()) break;
            Scalar c = k.div(lead.coefficient, it->poly.leading_coefficient());
            Monomial shift = lead.monomial / it->poly.leading_monomial();
            t.poly = t.poly.sub_scaled_shift(c, shift, it->poly);
            for (std::size_t i = 0; i < s; ++i) t.cofactors[i] = t.cofactors[i].sub_scaled_shift(c, shift, it->cofactors[i]);
        }
        return t;
    };
    auto finish = [&](const Tracked& t) {
        Scalar inv = k.invert(t.poly.leading_coefficient());
        std::vector<MultiPoly> out;
        for (const auto& c : t.cofactors) out.push_back(c * inv);
        return out;
    };
    // Returns true when t turned out to be a nonzero constant.
    auto insert = [&](Tracked t) {
        if (t.poly.is_constant()) return true;
        leads.push_back(t.poly.leading_monomial());
        basis.push_back(std::move(t));
        queue.add_polynomial(leads);
        return false;
    };

    for (std::size_t i = 0; i < s; ++i) {
        Tracked t{input[i], std::vector<MultiPoly>(s, MultiPoly(ring))};
        t.cofactors[i] = MultiPoly::constant(ring, k.one());
        t = top_reduce(std::move(t));
        if (t.poly.is_zero()) continue;
        if (t.poly.is_constant()) return finish(t);
        insert(std::move(t));
    }
    std::size_t reduced_pairs = 0;
    while (!queue.empty()) {
        CriticalPair pair = queue.pop();
        if (coprime(leads[pair.i], leads[pair.j])) continue;
        if (queue.chain_redundant(pair, leads)) continue;
        if (++reduced_pairs > pair_budget)
            throw Error(ErrorCode::BudgetExceeded,
                        "cofactor computation exceeded " + std::to_string(pair_budget) + " critical pairs");
        const Tracked& a = basis[pair.i];
        const Tracked& b = basis[pair.j];
        Scalar ca = k.invert(a.poly.leading_coefficient());
        Scalar cb = k.invert(b.poly.leading_coefficient());
        Monomial sa = pair.lcm / a.poly.leading_monomial();
        Monomial sb = pair.lcm / b.poly.leading_monomial();
        Tracked t{MultiPoly(ring), std::vector<MultiPoly>(s, MultiPoly(ring))};
        t.poly = MultiPoly(ring).sub_scaled_shift(k.neg(ca), sa, a.poly).sub_scaled_shift(cb, sb, b.poly);
        for (std::size_t i = 0; i < s; ++i)
            t.cofactors[i] =
                MultiPoly(ring).sub_scaled_shift(k.neg(ca), sa, a.cofactors[i]).sub_scaled_shift(cb, sb, b.cofactors[i]);
        t = top_reduce(std::move(t));
        if (t.poly.is_zero()) continue;
        if (t.poly.is_constant()) return finish(t);
        insert(std::move(t));
    }
    return std::nullopt;
}

}  // namespace etale
