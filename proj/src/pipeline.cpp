#include "etale/pipeline.hpp"

#include "etale/error.hpp"

namespace etale {

namespace {

std::size_t degree_of(const UniPoly& f) { return f.degree().value_or(0); }

std::vector<NamedElement> basis_elements(const FiniteAlgebra& algebra) {
    std::vector<NamedElement> out;
    for (std::size_t i = 0; i < algebra.dimension(); ++i) out.push_back({algebra.labels()[i], algebra.basis(i)});
    return out;
}

std::vector<NamedElement> declared_or_basis(const FiniteAlgebra& algebra) {
    return algebra.generator_refs().empty() ? basis_elements(algebra) : algebra.generator_refs();
}

std::vector<NamedElement> candidates(const FiniteAlgebra& algebra) {
    std::vector<NamedElement> out = algebra.generator_refs();
    for (auto& b : basis_elements(algebra)) out.push_back(std::move(b));
    return out;
}

void require_etale(const FiniteAlgebra& algebra, const std::string& who) {
    if (algebra.field().is_zero(discriminant(algebra)))
        throw Error(ErrorCode::NotEtale, who + ": the trace form is degenerate");
}

std::string linear_combination(const Field& k, const std::vector<Scalar>& weights,
                               const std::vector<NamedElement>& gens) {
    std::string out;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const Scalar& c = weights[i];
        if (k.is_zero(c)) continue;
        bool negative = sgn(c) < 0;
        Scalar mag = negative ? Scalar(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += mag == 1 ? gens[i].name : mag.get_str() + "*" + gens[i].name;
    }
    return out.empty() ? "0" : out;
}

UniPoly powmod(UniPoly base, mpz_class exponent, const UniPoly& modulus) {
    UniPoly result = UniPoly::constant(modulus.field(), modulus.field().one());
    base = divmod(base, modulus).second;
    while (exponent > 0) {
        if (mpz_odd_p(exponent.get_mpz_t())) result = divmod(result * base, modulus).second;
        base = divmod(base * base, modulus).second;
        exponent >>= 1;
    }
    return result;
}

}  // namespace

PrimitiveElement primitive_element(const FiniteAlgebra& algebra, const std::vector<NamedElement>& given,
                                   std::size_t budget) {
    require_etale(algebra, "primitive_element");
    const Field& k = algebra.field();
    const std::vector<NamedElement> gens = given.empty() ? basis_elements(algebra) : given;
    const std::size_t n = gens.size(), dim = algebra.dimension();
    const std::vector<Scalar> stream = k.enumerate_scalars(budget + 1);

    std::size_t attempts = 0;
    for (std::size_t height = 0; height < stream.size(); ++height) {
        std::vector<std::size_t> idx(n, 0);
        for (;;) {
            bool at_height = height == 0;
            for (std::size_t i : idx) at_height = at_height || i == height;
            if (at_height) {
                if (attempts == budget)
                    throw Error(ErrorCode::SearchExhausted,
                                "no primitive element among the first " + std::to_string(budget) + " tuples");
                ++attempts;
                std::vector<Scalar> weights;
                AlgebraElement b = algebra.zero();
                for (std::size_t i = 0; i < n; ++i) {
                    weights.push_back(stream[idx[i]]);
                    b = algebra.add(b, algebra.scale(stream[idx[i]], gens[i].value));
                }
                UniPoly g = minimal_polynomial(b, algebra);
                if (degree_of(g) == dim) {
                    if (!is_separable(g))
                        throw Error(ErrorCode::InternalContradiction,
                                    "primitive element with inseparable minimal polynomial " + g.to_string());
                    std::string expr = linear_combination(k, weights, gens);
                    return {std::move(b), std::move(g), std::move(weights), std::move(expr)};
                }
            }
            std::size_t i = n;
            while (i > 0 && idx[i - 1] == height) idx[--i] = 0;
            if (i == 0) break;
            ++idx[i - 1];
        }
    }
    throw Error(ErrorCode::SearchExhausted,
                "no primitive element: all " + std::to_string(attempts) + " coefficient tuples over " + k.name() +
                    " were tried");
}

std::optional<AlgebraElement> frobenius_split(const FiniteAlgebra& algebra) {
    const Field& k = algebra.field();
    if (!k.is_finite()) throw Error(ErrorCode::CharacteristicZero, "frobenius_split needs a prime field");
    require_etale(algebra, "frobenius_split");
    const std::size_t m = algebra.dimension();
    const std::uint64_t p = k.modulus();

    Matrix fixed(m, m);
    for (std::size_t j = 0; j < m; ++j) {
        AlgebraElement e = algebra.basis(j);
        fixed.set_column(j, algebra.sub(algebra.pow(e, p), e).coordinates);
    }
    const AlgebraElement one = algebra.one();
    std::optional<AlgebraElement> b;
    for (auto& v : nullspace(k, fixed)) {
        Matrix pair(m, 2);
        pair.set_column(0, one.coordinates);
        pair.set_column(1, v);
        if (rank(k, pair) == 2) {
            b = AlgebraElement{std::move(v)};
            break;
        }
    }
    if (!b) return std::nullopt;

    auto nontrivial = [&](const AlgebraElement& e) { return !algebra.is_zero(e) && e != one; };
    const UniPoly mu = minimal_polynomial(*b, algebra);
    if (p <= 65536) {
        for (std::uint64_t r = 1; r <= p; ++r) {
            Scalar c = k.from_int(static_cast<long>(r % p));
            if (!k.is_zero(mu.evaluate(c))) continue;
            AlgebraElement e = algebra.sub(one, idempotent_of(algebra.sub(*b, algebra.scalar(c)), algebra));
            if (nontrivial(e)) return e;
        }
    } else {
        // mu splits into distinct linear factors; separate them by quadratic character.
        const mpz_class half = (mpz_class(static_cast<unsigned long>(p)) - 1) / 2;
        for (long delta = 0; delta < 1000; ++delta) {
            UniPoly shifted = UniPoly::variable(k) + UniPoly::constant(k, k.from_int(delta));
            UniPoly h = gcd(mu, powmod(shifted, half, mu) - UniPoly::constant(k, k.one()));
            std::size_t d = h.is_zero() ? 0 : degree_of(h);
            if (d == 0 || d == degree_of(mu)) continue;
            AlgebraElement e = idempotent_of(eval_in_algebra(h, *b, algebra), algebra);
            if (nontrivial(e)) return e;
        }
    }
    throw Error(ErrorCode::InternalContradiction, "fixed-space element " + algebra.format(*b) + " did not split");
}

DecompositionChecks verify_decomposition(const std::vector<DecompositionFactor>& factors, const FiniteAlgebra& algebra) {
    const Field& k = algebra.field();
    DecompositionChecks c;
    c.idempotent = c.orthogonal = c.separable = c.generators = true;
    AlgebraElement sum = algebra.zero();
    std::size_t total = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& f = factors[i];
        const AlgebraElement& e = f.idempotent;
        sum = algebra.add(sum, e);
        c.idempotent = c.idempotent && algebra.mul(e, e) == e;
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            c.orthogonal = c.orthogonal && algebra.is_zero(algebra.mul(e, factors[j].idempotent));
        const std::size_t d = degree_of(f.polynomial);
        total += d;
        c.separable = c.separable && f.polynomial.is_monic() && d >= 1 && is_separable(f.polynomial);

        // e*A contains the generator, g(a) vanishes there, and e, a, ..., a^(d-1) are independent.
        bool gen_ok = algebra.mul(e, f.generator) == f.generator &&
                      algebra.is_zero(algebra.mul(e, eval_in_algebra(f.polynomial, f.generator, algebra)));
        if (gen_ok) {
            Matrix powers(algebra.dimension(), d);
            AlgebraElement x = e;
            for (std::size_t t = 0; t < d; ++t) {
                powers.set_column(t, x.coordinates);
                x = algebra.mul(x, f.generator);
            }
            gen_ok = rank(k, powers) == d;
        }
        c.generators = c.generators && gen_ok;
    }
    c.complete = !factors.empty() && sum == algebra.one();
    c.degrees = total == algebra.dimension();
    if (c.separable && !factors.empty()) {
        FiniteAlgebra prod = monogenic_from_poly(factors[0].polynomial);
        for (std::size_t i = 1; i < factors.size(); ++i) prod = product(prod, monogenic_from_poly(factors[i].polynomial));
        c.product_discriminant = !k.is_zero(discriminant(prod));
    }
    return c;
}

namespace {

struct Piece {
    FiniteAlgebra algebra;
    Matrix embedding;  // coordinates in the piece -> coordinates in the input algebra
    std::vector<AlgebraElement> chain;
};

class Decomposer {
   public:
    Decomposer(const FiniteAlgebra& algebra, std::size_t budget) : algebra_(algebra), budget_(budget) {}

    DecompositionCertificate run() {
        run(Piece{algebra_, Matrix::identity(algebra_.field(), algebra_.dimension()), {}}, false);
        cert_.checks = verify_decomposition(cert_.factors, algebra_);
        return std::move(cert_);
    }

   private:
    AlgebraElement lift(const Piece& piece, const AlgebraElement& x) const {
        return {apply(algebra_.field(), piece.embedding, x.coordinates)};
    }

    void emit(const Piece& piece, UniPoly g, const AlgebraElement& generator) {
        cert_.factors.push_back({std::move(g), lift(piece, piece.algebra.one()), lift(piece, generator), piece.chain});
    }

    void split(const Piece& piece, const AlgebraElement& e, bool frobenius_mode) {
        const Field& k = algebra_.field();
        const FiniteAlgebra& a = piece.algebra;
        IdempotentSplit s = split_by_idempotent(e, a);
        Piece first{std::move(s.first), multiply(k, piece.embedding, s.embedding_first), piece.chain};
        first.chain.push_back(lift(piece, a.sub(a.one(), e)));
        Piece second{std::move(s.second), multiply(k, piece.embedding, s.embedding_second), piece.chain};
        second.chain.push_back(lift(piece, e));
        run(std::move(first), frobenius_mode);
        run(std::move(second), frobenius_mode);
    }

    void run(Piece piece, bool frobenius_mode) {
        const FiniteAlgebra& a = piece.algebra;
        const std::size_t dim = a.dimension();
        if (frobenius_mode) {
            if (auto e = frobenius_split(a)) return split(piece, *e, true);
            for (const auto& c : candidates(a)) {
                UniPoly g = minimal_polynomial(c.value, a);
                if (degree_of(g) == dim) return emit(piece, std::move(g), c.value);
            }
            PrimitiveElement prim = primitive_element(a, basis_elements(a), budget_);
            return emit(piece, std::move(prim.minimal_polynomial), prim.element);
        }

        for (const auto& c : candidates(a)) {
            UniPoly g = minimal_polynomial(c.value, a);
            if (derivative(g).is_zero()) {
                AlgebraElement w = eval_in_algebra(pth_power_decompose(g), c.value, a);
                throw Error(ErrorCode::NonEtaleWitness, "minimal polynomial " + g.to_string() + " of " + c.name +
                                                            " has zero derivative; nilpotent " + a.format(w));
            }
            if (!is_separable(g)) {
                CoprimeSplit cs = coprime_split(g);
                AlgebraElement e = idempotent_of(eval_in_algebra(cs.first, c.value, a), a);
                if (a.is_zero(e) || e == a.one()) continue;
                return split(piece, e, false);
            }
            if (degree_of(g) == dim) return emit(piece, std::move(g), c.value);
        }

        const std::vector<NamedElement> gens = declared_or_basis(a);
        if (!a.field().is_finite()) {
            PrimitiveElement prim = primitive_element(a, gens, budget_);
            return emit(piece, std::move(prim.minimal_polynomial), prim.element);
        }
        try {
            PrimitiveElement prim = primitive_element(a, gens, budget_);
            return emit(piece, std::move(prim.minimal_polynomial), prim.element);
        } catch (const Error& err) {
            if (err.code() != ErrorCode::SearchExhausted) throw;
            cert_.notes.push_back(std::string(err.what()) + "; falling back to frobenius_split");
        }
        run(std::move(piece), true);
    }

    const FiniteAlgebra& algebra_;
    std::size_t budget_;
    DecompositionCertificate cert_;
};

}  // namespace

DecompositionCertificate decompose_etale(const FiniteAlgebra& algebra, std::size_t primitive_budget) {
    require_etale(algebra, "decompose_etale");
    return Decomposer(algebra, primitive_budget).run();
}

namespace {

std::string combination_text(const std::vector<MultiPoly>& cofactors, const std::vector<MultiPoly>& ideal) {
    std::string out = "1 =";
    bool first = true;
    for (std::size_t i = 0; i < ideal.size(); ++i) {
        if (cofactors[i].is_zero()) continue;
        out += first ? " " : " + ";
        out += "(" + cofactors[i].to_string() + ")*(" + ideal[i].to_string() + ")";
        first = false;
    }
    return out;
}

std::string criterion_certificate(const CriterionResult& r) {
    std::string out = r.reason;
    if (r.cofactors) {
        out += "\n" + combination_text(*r.cofactors, r.tested_ideal);
    } else if (r.tested_basis && !r.holds) {
        out += "\nGroebner basis of the tested ideal:";
        for (const auto& g : r.tested_basis->generators()) out += "\n  " + g.to_string();
    }
    return out;
}

}  // namespace

ClassificationReport classify(const AlgebraPresentation& input, const ClassifyOptions& options) {
    ClassificationReport rep;
    rep.input = input.to_string();
    rep.field = input.field();

    const AlgebraPresentation p = input.with_order(options.order);
    const GroebnerBasis relations = relation_basis(p, options.pair_budget);
    const CriterionOptions copt{options.pair_budget, options.certificates};

    if (contains_one(relations)) {
        rep.trivial = rep.nette = rep.standard_smooth = rep.elementary_smooth = rep.standard_etale = true;
        rep.etale = true;
        rep.vector_space_dimension = 0;
        rep.notes.push_back("TrivialAlgebra: 1 lies in the relation ideal, so the quotient is the zero ring");
        if (options.certificates) {
            auto cof = express_one(p.ring, p.relations, options.pair_budget);
            if (cof) rep.certificates.push_back({"trivial", combination_text(*cof, p.relations)});
        }
        return rep;
    }

    const CriterionResult nette = check_nette(p, relations, copt);
    const CriterionResult std_smooth = check_standard_smooth(p, relations, copt);
    const CriterionResult elem_smooth = check_elementary_smooth(p, relations, copt);
    const CriterionResult std_etale = check_standard_etale(p, relations, copt);
    rep.nette = nette.holds;
    rep.standard_smooth = std_smooth.holds;
    rep.elementary_smooth = elem_smooth.holds;
    rep.standard_etale = std_etale.holds;
    if (options.certificates) {
        rep.certificates.push_back({"nette", criterion_certificate(nette)});
        rep.certificates.push_back({"standard-smooth", criterion_certificate(std_smooth)});
        rep.certificates.push_back({"elementary-smooth", criterion_certificate(elem_smooth)});
        rep.certificates.push_back({"standard-etale", criterion_certificate(std_etale)});
    }

    rep.noether_dimension = noether_dimension(relations);
    if (rep.nette && rep.noether_dimension != 0)
        throw Error(ErrorCode::InternalContradiction,
                    "nette presentation with Noether dimension " + std::to_string(rep.noether_dimension));
    if (rep.noether_dimension != 0) {
        rep.notes.push_back("Noether dimension " + std::to_string(rep.noether_dimension) +
                            ": the quotient is not strictly finite");
        return rep;
    }

    const FiniteAlgebra algebra = quotient_algebra(relations);
    const Field& k = algebra.field();
    rep.basis_labels = algebra.labels();
    rep.vector_space_dimension = algebra.dimension();
    rep.discriminant = discriminant(algebra);
    rep.etale = !k.is_zero(*rep.discriminant);
    if (rep.etale != rep.nette)
        throw Error(ErrorCode::InternalContradiction, std::string("zero-dimensional quotient with nette = ") +
                                                          (rep.nette ? "true" : "false") + " but discriminant " +
                                                          k.to_string(*rep.discriminant));

    if (rep.etale) {
        DecompositionCertificate cert = decompose_etale(algebra, options.primitive_budget);
        if (!cert.checks.all())
            throw Error(ErrorCode::InternalContradiction, "decomposition certificate failed its checks");
        for (auto& n : cert.notes) rep.notes.push_back(std::move(n));
        for (const auto& f : cert.factors) rep.decomposition.push_back(f.polynomial);
        if (!k.is_finite()) {
            try {
                PrimitiveElement prim = primitive_element(algebra, algebra.generator_refs(), options.primitive_budget);
                rep.primitive_element = ReportedPrimitive{prim.expression, prim.element.coordinates,
                                                          prim.minimal_polynomial};
            } catch (const Error& err) {
                if (err.code() != ErrorCode::SearchExhausted) throw;
                rep.notes.push_back("SearchExhausted: " + std::string(err.what()));
            }
        } else if (cert.factors.size() == 1) {
            const auto& f = cert.factors[0];
            rep.primitive_element = ReportedPrimitive{algebra.format(f.generator), f.generator.coordinates,
                                                      f.polynomial};
        } else {
            rep.notes.push_back("no primitive element reported: the decomposition over " + k.name() + " has " +
                                std::to_string(cert.factors.size()) + " factors");
        }
        if (options.certificates) {
            std::string text;
            for (std::size_t i = 0; i < cert.factors.size(); ++i) {
                const auto& f = cert.factors[i];
                text += "factor " + std::to_string(i + 1) + ": " + f.polynomial.to_string() + "\n  idempotent " +
                        algebra.format(f.idempotent) + "\n  generator " + algebra.format(f.generator) + "\n  chain";
                if (f.idempotent_chain.empty()) text += " (none)";
                for (const auto& e : f.idempotent_chain) text += " [" + algebra.format(e) + "]";
                text += "\n";
            }
            text += "checks: orthogonal, sum 1, degrees, separable, generators, product discriminant all pass";
            rep.certificates.push_back({"decomposition", text});
        }
        return rep;
    }

    for (const auto& c : candidates(algebra)) {
        UniPoly g = minimal_polynomial(c.value, algebra);
        if (is_squarefree(g)) continue;
        AlgebraElement w = eval_in_algebra(squarefree_part(g), c.value, algebra);
        if (algebra.is_zero(w) || !algebra.is_zero(algebra.pow(w, algebra.dimension())))
            throw Error(ErrorCode::InternalContradiction, "bad nilpotent witness from " + c.name);
        rep.nilpotent_witness = ReportedElement{algebra.format(w), w.coordinates};
        rep.notes.push_back("nilpotent witness from " + c.name + ": minimal polynomial " + g.to_string() +
                            " is not squarefree");
        break;
    }
    return rep;
}

}  // namespace etale
