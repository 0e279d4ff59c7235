#pragma once

// Reference computations used as test oracles. They are deliberately naive and
// share no code with the library's algorithms beyond the Field/Scalar types.

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace oracle {

/// Rational or mod-p number with the plainest possible arithmetic.
struct Ring {
    std::uint64_t p = 0;  // 0 means Q

    mpq_class norm(mpq_class a) const {
        if (p == 0) return a;
        mpz_class n = a.get_num() % mpz_class(static_cast<unsigned long>(p));
        mpz_class d = a.get_den() % mpz_class(static_cast<unsigned long>(p));
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), mpz_class(static_cast<unsigned long>(p)).get_mpz_t());
        mpz_class r = (n * inv) % mpz_class(static_cast<unsigned long>(p));
        if (r < 0) r += static_cast<unsigned long>(p);
        return mpq_class(r);
    }
    mpq_class inv(const mpq_class& a) const { return p == 0 ? mpq_class(1 / a) : norm(mpq_class(1) / a); }
};

/// Determinant by cofactor-free Gaussian elimination on a copy.
inline mpq_class det(const Ring& k, std::vector<std::vector<mpq_class>> m) {
    const std::size_t n = m.size();
    mpq_class d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && k.norm(m[piv][c]) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            d = -d;
        }
        d = k.norm(d * m[c][c]);
        mpq_class inv = k.inv(m[c][c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            mpq_class f = k.norm(m[r][c] * inv);
            for (std::size_t j = c; j < n; ++j) m[r][j] = k.norm(m[r][j] - f * m[c][j]);
        }
    }
    return k.norm(d);
}

inline std::size_t rank(const Ring& k, std::vector<std::vector<mpq_class>> m) {
    std::size_t r = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && k.norm(m[piv][c]) == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        mpq_class inv = k.inv(m[r][c]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            mpq_class f = k.norm(m[i][c] * inv);
            for (std::size_t j = c; j < cols; ++j) m[i][j] = k.norm(m[i][j] - f * m[r][j]);
        }
        ++r;
    }
    return r;
}

/// Sylvester matrix of f, g (coefficients in increasing degree, nonzero leading terms).
inline std::vector<std::vector<mpq_class>> sylvester(const std::vector<mpq_class>& f, const std::vector<mpq_class>& g) {
    const std::size_t m = f.size() - 1, n = g.size() - 1, size = m + n;
    std::vector<std::vector<mpq_class>> s(size, std::vector<mpq_class>(size, 0));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = f[m - i];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= n; ++i) s[n + r][r + i] = g[n - i];
    return s;
}

inline mpq_class resultant(const Ring& k, const std::vector<mpq_class>& f, const std::vector<mpq_class>& g) {
    if (f.size() == 1 && g.size() == 1) return 1;
    return det(k, sylvester(f, g));
}

/// Polynomial product with coefficients in increasing degree.
inline std::vector<mpq_class> mul(const Ring& k, const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
    std::vector<mpq_class> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = k.norm(out[i + j] + a[i] * b[j]);
    return out;
}

/// prod (X - r_i).
inline std::vector<mpq_class> from_roots(const Ring& k, const std::vector<mpq_class>& roots) {
    std::vector<mpq_class> f{1};
    for (const auto& r : roots) f = mul(k, f, {k.norm(-r), 1});
    return f;
}

/// Discriminant of prod (X - r_i) as prod_{i<j} (r_i - r_j)^2.
inline mpq_class discriminant_from_roots(const Ring& k, const std::vector<mpq_class>& roots) {
    mpq_class d = 1;
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j) d = k.norm(d * (roots[i] - roots[j]) * (roots[i] - roots[j]));
    return d;
}

/// Residue of a modulo the monic f (increasing-degree coefficients).
inline std::vector<mpq_class> mod(const Ring& k, std::vector<mpq_class> a, const std::vector<mpq_class>& f) {
    const std::size_t n = f.size() - 1;
    for (std::size_t d = a.size(); d-- > n;) {
        mpq_class c = a[d];
        if (c == 0) continue;
        for (std::size_t i = 0; i <= n; ++i) a[d - n + i] = k.norm(a[d - n + i] - c * f[i]);
    }
    a.resize(n, 0);
    return a;
}

/// K[X]/<f> over GF(p) has a nonzero nilpotent, by enumerating all p^deg f residues.
inline bool has_nilpotent_by_enumeration(std::uint64_t p, const std::vector<mpq_class>& f) {
    Ring k{p};
    const std::size_t n = f.size() - 1;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= p;
    for (std::uint64_t code = 1; code < total; ++code) {
        std::vector<mpq_class> a(n);
        std::uint64_t c = code;
        for (std::size_t i = 0; i < n; ++i, c /= p) a[i] = static_cast<unsigned long>(c % p);
        std::vector<mpq_class> power = a;
        for (std::size_t e = 1; e < n + 1; ++e) power = mod(k, mul(k, power, a), f);
        bool zero = true;
        for (const auto& x : power) zero = zero && x == 0;
        if (zero) return true;
    }
    return false;
}

/// Deterministic small integers in [lo, hi].
class Dice {
   public:
    explicit Dice(std::uint64_t seed) : gen_(seed) {}
    long operator()(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

   private:
    std::mt19937_64 gen_;
};

}  // namespace oracle
