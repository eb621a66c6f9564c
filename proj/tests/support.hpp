#pragma once

#include <random>
#include <string>
#include <vector>

#include "dres/dres.hpp"

namespace dres {

inline void PrintTo(const Poly& p, std::ostream* os) { *os << to_string(p); }
inline void PrintTo(const RatFun& f, std::ostream* os) { *os << to_string(f); }

}  // namespace dres

namespace dres::test {

inline Poly P(const std::string& s) {
    RatFun f = parse(s);
    if (!f.is_polynomial()) throw std::invalid_argument("not a polynomial: " + s);
    return f.num();
}

inline RatFun F(const std::string& s) { return parse(s); }

inline long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rat random_rat(std::mt19937_64& rng, long bound, long den_bound = 1) {
    return make_rat(Int(uniform(rng, -bound, bound)), Int(uniform(rng, 1, den_bound)));
}

/// Random polynomial of degree <= max_deg with small rational coefficients (may be zero).
inline Poly random_poly(std::mt19937_64& rng, int max_deg, long bound = 9, long den_bound = 4) {
    const long d = uniform(rng, 0, max_deg);
    std::vector<Rat> c;
    for (long i = 0; i <= d; ++i) c.push_back(random_rat(rng, bound, den_bound));
    return Poly(std::move(c));
}

/// Random nonzero polynomial of exact degree deg.
inline Poly random_poly_exact(std::mt19937_64& rng, int deg, long bound = 9, long den_bound = 4) {
    std::vector<Rat> c;
    for (int i = 0; i <= deg; ++i) c.push_back(random_rat(rng, bound, den_bound));
    while (c.back() == 0) c.back() = random_rat(rng, bound, den_bound);
    return Poly(std::move(c));
}

/// Random rational function num/den with den of exact degree >= 1.
inline RatFun random_ratfun(std::mt19937_64& rng, int max_num, int max_den) {
    const int dd = static_cast<int>(uniform(rng, 1, max_den));
    return normalize(random_poly(rng, max_num), random_poly_exact(rng, dd));
}

/// Determinant by fraction Gaussian elimination.
inline Rat determinant(std::vector<std::vector<Rat>> m) {
    const std::size_t n = m.size();
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const Rat q = m[r][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[r][j] -= q * m[c][j];
        }
    }
    return det;
}

inline Rat sylvester_resultant(const Poly& a, const Poly& b) {
    const auto m = static_cast<std::size_t>(a.degree()), n = static_cast<std::size_t>(b.degree());
    std::vector<std::vector<Rat>> s(m + n, std::vector<Rat>(m + n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = a[m - j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = b[n - j];
    return determinant(std::move(s));
}

/// Dispersion by scanning gcd(b, b(x+l)) for l = 1..limit.
inline long dispersion_scan(const Poly& b, long limit) {
    long best = 0;
    for (long l = 1; l <= limit; ++l)
        if (gcd(b, shift(b, Rat(l))).degree() > 0) best = l;
    return best;
}

inline std::vector<long> shift_set_scan(const Poly& b, long limit) {
    std::vector<long> out;
    for (long l = 1; l <= limit; ++l)
        if (gcd(b, shift(b, Rat(l))).degree() > 0) out.push_back(l);
    return out;
}

/// Sum of c / (x - alpha) over the order-k terms of a spec.
inline RatFun layer_from_spec(const testkit::OrbitSpec& spec, unsigned k) {
    RatFun out;
    for (const auto& t : spec.terms)
        if (t.k == k) out += RatFun(t.c) / RatFun(Poly{-t.alpha, 1});
    return out;
}

/// Random spec with only first-order poles.
inline testkit::OrbitSpec random_simple_spec(std::mt19937_64& rng) {
    testkit::RandomSpecOptions opt;
    opt.max_order = 1;
    return testkit::random_orbit_spec(rng, opt);
}

inline std::size_t rank_of(std::vector<std::vector<Rat>> m) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const Rat q = m[r][c] / m[rank][c];
            for (std::size_t j = c; j < cols; ++j) m[r][j] -= q * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// Membership of v in the Z-span of rows given in row echelon form.
inline bool in_integer_span(const std::vector<IntVector>& rows, IntVector v) {
    long last = -1;
    for (const auto& row : rows) {
        long piv = 0;
        while (piv < static_cast<long>(row.size()) && row[piv] == 0) ++piv;
        if (piv == static_cast<long>(row.size()) || piv <= last) throw std::logic_error("basis not in echelon form");
        last = piv;
        if (v[piv] % row[piv] != 0) return false;
        const Int q = v[piv] / row[piv];
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= q * row[j];
    }
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace dres::test
