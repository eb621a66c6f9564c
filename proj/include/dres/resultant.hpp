#pragma once

#include <utility>
#include <vector>

#include "dres/error.hpp"
#include "dres/modular.hpp"
#include "dres/poly.hpp"

namespace dres {

/// Resultant over Q by the Euclidean remainder sequence:
/// Res(A, B) = (-1)^(deg A deg B) lc(B)^(deg A - deg R) Res(B, R), R = A mod B.
inline Rat resultant(Poly a, Poly b) {
    if (a.is_zero() || b.is_zero()) return 0;
    Rat acc = 1;
    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1)) acc = -acc;
        std::swap(a, b);
    }
    while (b.degree() > 0) {
        Poly r = a % b;
        if (r.is_zero()) return 0;
        const long da = a.degree(), db = b.degree(), dr = r.degree();
        if ((da & 1) && (db & 1)) acc = -acc;
        acc *= pow(b.lc(), da - dr);
        a = std::move(b);
        b = std::move(r);
    }
    return acc * pow(b.lc(), a.degree());
}

namespace detail {

inline bool ring_is_zero(const Rat& r) { return r == 0; }
inline bool ring_is_zero(const Poly& p) { return p.is_zero(); }
inline Rat ring_exact_div(const Rat& a, const Rat& b) { return a / b; }
inline Poly ring_exact_div(const Poly& a, const Poly& b) { return exact_quotient(a, b); }

template <class R>
R ring_pow(const R& base, long e) {
    R out = R(1);
    for (long i = 0; i < e; ++i) out = out * base;
    return out;
}

template <class R>
void ring_trim(std::vector<R>& p) {
    while (!p.empty() && ring_is_zero(p.back())) p.pop_back();
}

/// lc(b)^(da - db + 1) * a mod b, with the exponent fixed regardless of
/// cancellations during the elimination.
template <class R>
std::vector<R> ring_prem(const std::vector<R>& a, const std::vector<R>& b) {
    const long da = static_cast<long>(a.size()) - 1;
    const long db = static_cast<long>(b.size()) - 1;
    std::vector<R> rem = a;
    const R& lb = b.back();
    for (long i = da; i >= db; --i) {
        R lead = static_cast<std::size_t>(i) < rem.size() ? rem[static_cast<std::size_t>(i)] : R(0);
        for (auto& c : rem) c = c * lb;
        if (!ring_is_zero(lead))
            for (long j = 0; j <= db; ++j)
                rem[static_cast<std::size_t>(i - db + j)] = rem[static_cast<std::size_t>(i - db + j)] - lead * b[static_cast<std::size_t>(j)];
    }
    ring_trim(rem);
    return rem;
}

}  // namespace detail

/// Resultant over an integral domain R by the subresultant PRS
/// (Collins-Brown). Polynomials are coefficient vectors, ascending.
/// R must provide +, -, *, construction from int, and
/// detail::ring_is_zero / detail::ring_exact_div overloads.
template <class R>
R subresultant_resultant(std::vector<R> a, std::vector<R> b) {
    detail::ring_trim(a);
    detail::ring_trim(b);
    if (a.empty() || b.empty()) return R(0);
    R sign = R(1);
    if (a.size() < b.size()) {
        if (((a.size() - 1) & 1) && ((b.size() - 1) & 1)) sign = R(-1);
        std::swap(a, b);
    }
    if (b.size() == 1) return sign * detail::ring_pow(b[0], static_cast<long>(a.size()) - 1);
    R g = R(1), h = R(1);
    while (true) {
        const long da = static_cast<long>(a.size()) - 1;
        const long db = static_cast<long>(b.size()) - 1;
        const long delta = da - db;
        if ((da & 1) && (db & 1)) sign = R(0) - sign;
        std::vector<R> r = detail::ring_prem(a, b);
        a = std::move(b);
        R divisor = g * detail::ring_pow(h, delta);
        for (auto& c : r) c = detail::ring_exact_div(c, divisor);
        b = std::move(r);
        g = a.back();
        // h <- g^delta / h^(delta - 1)
        if (delta != 0)
            h = detail::ring_exact_div(detail::ring_pow(g, delta), detail::ring_pow(h, delta - 1));
        if (b.empty()) return R(0);
        if (b.size() == 1) {
            const long dA = static_cast<long>(a.size()) - 1;
            // h <- lc(b)^deg(a) / h^(deg(a) - 1)
            R out = detail::ring_exact_div(detail::ring_pow(b[0], dA), detail::ring_pow(h, dA - 1));
            return sign * out;
        }
    }
}

namespace detail {

/// Newton interpolation through (0, v0), (1, v1), ..., (n, vn).
inline Poly interpolate_consecutive(const std::vector<Rat>& values) {
    const std::size_t n = values.size();
    std::vector<Rat> div(values);
    // divided differences with nodes 0, 1, ..., n-1
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            div[i] = (div[i] - div[i - 1]) / static_cast<unsigned long>(j);
            if (i == j) break;
        }
    Poly acc = div[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
        acc = acc * Poly{Rat(-static_cast<long>(i)), Rat(1)};
        acc += Poly(div[i]);
    }
    return acc;
}

/// Coefficients in x of b(x + z), each a polynomial in z.
inline std::vector<Poly> shifted_coefficients(const Poly& b) {
    const std::size_t n = b.size();
    std::vector<Poly> out(n);
    // b(x+z) = sum_i b_i sum_j C(i,j) x^j z^(i-j)
    for (std::size_t i = 0; i < n; ++i) {
        if (b[i] == 0) continue;
        Int binom = 1;
        for (std::size_t j = 0; j <= i; ++j) {
            out[j] += Poly::monomial(b[i] * binom, i - j);
            binom = binom * static_cast<unsigned long>(i - j) / static_cast<unsigned long>(j + 1);
        }
    }
    return out;
}

inline void require_shift_degree(const Poly& b) {
    require(!b.is_zero() && b.degree() >= 2, "shift resultant needs degree >= 2");
}

}  // namespace detail

/// Res_x(b(x), b(x + z)) as a polynomial in z, by evaluation at
/// z = 0, 1, ..., (deg b)^2 and interpolation. The x-leading coefficient of
/// b(x + z) does not depend on z, so every point is good. Evaluation and
/// interpolation run modulo word-size primes and are lifted by Chinese
/// remaindering past a coefficient bound, which keeps the cost polynomial.
inline Poly resultant_shift(const Poly& b) {
    detail::require_shift_degree(b);
    const detail::IntPoly q = detail::primitive_integer(b);
    const Rat scale = b.lc() / Rat(q.back());  // b = scale * q
    return detail::to_poly(detail::shift_resultant_integer(q)) * pow(scale, 2 * b.degree());
}

/// Plain evaluation-interpolation over Q, one scalar resultant per node.
inline Poly resultant_shift_rational(const Poly& b) {
    detail::require_shift_degree(b);
    const auto d = static_cast<std::size_t>(b.degree());
    std::vector<Rat> values;
    values.reserve(d * d + 1);
    for (std::size_t z = 0; z <= d * d; ++z) values.push_back(resultant(b, shift(b, Rat(static_cast<long>(z)))));
    return detail::interpolate_consecutive(values);
}

/// Same quantity as resultant_shift, computed directly by the subresultant
/// PRS over Q[z]. Kept as an independent cross-check.
inline Poly resultant_shift_subresultant(const Poly& b) {
    detail::require_shift_degree(b);
    std::vector<Poly> lhs;
    for (const auto& c : b.coeffs()) lhs.emplace_back(c);
    return subresultant_resultant<Poly>(std::move(lhs), detail::shifted_coefficients(b));
}

/// Res_x(b(x), z - r(x)) as a polynomial in z; its roots are the values of
/// r at the roots of b.
inline Poly resultant_residue_values(const Poly& b, const Poly& r) {
    detail::require(!b.is_zero() && b.degree() >= 1, "residue resultant needs non-constant b");
    const auto d = static_cast<std::size_t>(b.degree());
    std::vector<Rat> values;
    values.reserve(d + 1);
    for (std::size_t z = 0; z <= d; ++z) values.push_back(resultant(b, Poly(Rat(static_cast<long>(z))) - r));
    return detail::interpolate_consecutive(values);
}

}  // namespace dres
