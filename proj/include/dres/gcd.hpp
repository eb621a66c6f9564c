#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "dres/error.hpp"
#include "dres/modular.hpp"
#include "dres/poly.hpp"

namespace dres {

namespace detail {

/// Pseudo-remainder of a by b over the integers:
/// lc(b)^(deg a - deg b + 1) a = q b + r.
inline IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
    const std::size_t db = b.size() - 1;
    const Int& lb = b.back();
    while (!a.empty() && a.size() > db) {
        const std::size_t shift = a.size() - 1 - db;
        Int lead = a.back();
        for (auto& c : a) c *= lb;
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= lead * b[j];
        trim(a);
    }
    return a;
}

/// Primitive polynomial remainder sequence over Z; returns the primitive
/// gcd with positive leading coefficient.
inline IntPoly primitive_prs_gcd(IntPoly a, IntPoly b) {
    make_primitive(a);
    make_primitive(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        IntPoly r = pseudo_remainder(a, b);
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace detail

/// Above this degree the primitive PRS loses to the modular algorithm.
inline constexpr long kModularGcdDegree = 32;

/// Monic gcd; gcd(a, 0) = monic(a).
inline Poly gcd(const Poly& a, const Poly& b) {
    detail::require(!(a.is_zero() && b.is_zero()), "gcd of two zero polynomials");
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return Poly(1);
    auto ia = detail::primitive_integer(a), ib = detail::primitive_integer(b);
    if (std::max(a.degree(), b.degree()) >= kModularGcdDegree)
        return monic(detail::to_poly(detail::modular_gcd(std::move(ia), std::move(ib))));
    return monic(detail::to_poly(detail::primitive_prs_gcd(std::move(ia), std::move(ib))));
}

inline Poly lcm(const Poly& a, const Poly& b) {
    detail::require(!a.is_zero() && !b.is_zero(), "lcm with zero polynomial");
    return monic(exact_quotient(a * b, gcd(a, b)));
}

inline bool coprime(const Poly& a, const Poly& b) { return gcd(a, b).degree() == 0; }

inline bool is_squarefree(const Poly& p) { return !p.is_zero() && coprime(p, derivative(p)); }

struct ExtGcd {
    Poly g;
    Poly s;
    Poly t;
};

/// Extended Euclid over Q: s*a + t*b = g with g the monic gcd.
inline ExtGcd ext_gcd(const Poly& a, const Poly& b) {
    detail::require(!(a.is_zero() && b.is_zero()), "extended gcd of two zero polynomials");
    Poly r0 = a, r1 = b;
    Poly s0 = 1, s1 = 0;
    Poly t0 = 0, t1 = 1;
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    Rat u = 1 / r0.lc();
    return {r0 * u, s0 * u, t0 * u};
}

struct Bezout {
    Poly s;
    Poly t;
};

/// Solves s*a + t*b = c with deg s < deg b. Requires gcd(a, b) | c.
inline Bezout solve_bezout(const Poly& a, const Poly& b, const Poly& c) {
    detail::require(!b.is_zero(), "bezout modulus is zero");
    auto eg = ext_gcd(a, b);
    auto [q, rem] = divrem(c, eg.g);
    detail::require(rem.is_zero(), "bezout right-hand side not divisible by gcd");
    Poly s = (eg.s * q) % b;
    Poly t = exact_quotient(c - s * a, b);
    return {s, t};
}

/// Inverse of a modulo m; a must be coprime to m.
inline Poly inverse_mod(const Poly& a, const Poly& m) {
    detail::require(!m.is_zero(), "inverse modulo zero polynomial");
    if (m.is_constant()) return {};
    auto eg = ext_gcd(a % m, m);
    detail::require(eg.g.degree() == 0, "polynomial not invertible modulo m");
    return eg.s % m;
}

struct SquarefreeFactor {
    Poly factor;
    unsigned multiplicity;
};

struct SquarefreeDecomposition {
    Rat unit = 1;
    std::vector<SquarefreeFactor> factors;

    Poly expand() const {
        Poly out = unit;
        for (const auto& f : factors) out *= pow(f.factor, f.multiplicity);
        return out;
    }

    unsigned max_multiplicity() const { return factors.empty() ? 0 : factors.back().multiplicity; }
};

/// Yun's algorithm. Factors are monic, ascending in multiplicity.
inline SquarefreeDecomposition squarefree_decomposition(const Poly& p) {
    detail::require(!p.is_zero(), "squarefree decomposition of zero");
    SquarefreeDecomposition out;
    out.unit = p.lc();
    if (p.is_constant()) return out;
    Poly dp = derivative(p);
    Poly a = gcd(p, dp);
    Poly b = exact_quotient(p, a);
    Poly c = exact_quotient(dp, a);
    Poly d = c - derivative(b);
    for (unsigned i = 1; !b.is_constant(); ++i) {
        Poly ai = gcd(b, d);
        b = exact_quotient(b, ai);
        c = exact_quotient(d, ai);
        d = c - derivative(b);
        if (!ai.is_constant()) out.factors.push_back({monic(ai), i});
    }
    return out;
}

/// Product of the distinct monic irreducible factors of p.
inline Poly squarefree_part(const Poly& p) {
    detail::require(!p.is_zero(), "squarefree part of zero");
    return monic(exact_quotient(p, gcd(p, derivative(p))));
}

}  // namespace dres
