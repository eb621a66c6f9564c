#pragma once

#include <vector>

#include "dres/error.hpp"
#include "dres/gcd.hpp"
#include "dres/poly.hpp"
#include "dres/resultant.hpp"
#include "dres/roots.hpp"

namespace dres {

struct ShiftSetResult {
    std::vector<long> shifts;  ///< ascending positive integers
    Poly resultant;            ///< R(z) = Res_x(b(x), b(x+z))
    Poly reduced;              ///< R(z) / (z * gcd(R, R')), an even polynomial
    Poly halved;               ///< T with T(z^2) = reduced(z)
};

namespace detail {

/// Positive l with T(l^2) = 0. Candidates l^2 divide the constant term of
/// the primitive integer form of T and stay under its root bound.
inline std::vector<long> positive_square_roots_of_roots(const Poly& t) {
    std::vector<long> out;
    if (t.is_constant()) return out;
    IntPoly q = primitive_integer(t);
    ensure(q.front() != 0, "halved shift resultant vanishes at zero");
    Int bound = root_magnitude_bound(q);
    const Int c0 = abs(q.front());
    if (c0 < bound) bound = c0;
    if (bound > Int(kIntegerRootScanLimit) * Int(kIntegerRootScanLimit))
        throw ScaleLimitError("shift set search bound exceeded");
    for (unsigned long l = 1;; ++l) {
        const Int sq = Int(l) * Int(l);
        if (sq > bound) break;
        if (!mpz_divisible_p(c0.get_mpz_t(), sq.get_mpz_t())) continue;
        if (eval(q, sq) == 0) out.push_back(static_cast<long>(l));
    }
    return out;
}

}  // namespace detail

/// Positive integers l with deg gcd(b(x), b(x+l)) >= 1, from the integer
/// roots of the shift resultant.
inline ShiftSetResult shift_set(const Poly& b) {
    detail::require(!b.is_zero(), "shift set of the zero polynomial");
    ShiftSetResult out;
    if (b.degree() <= 1) return out;

    out.resultant = resultant_shift(b);
    const Poly dr = derivative(out.resultant);
    out.reduced = exact_quotient(out.resultant, Poly::x() * gcd(out.resultant, dr));
    detail::ensure(out.reduced[0] != 0, "z divides the reduced shift resultant");

    std::vector<Rat> even;
    const auto coeffs = out.reduced.coeffs();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i % 2 == 1) {
            detail::ensure(coeffs[i] == 0, "reduced shift resultant is not even");
        } else {
            even.push_back(coeffs[i]);
        }
    }
    out.halved = Poly(std::move(even));
    out.shifts = detail::positive_square_roots_of_roots(out.halved);
    return out;
}

/// Largest l with gcd(b, b(x+l)) != 1, or 0 if there is none.
inline long dispersion(const Poly& b) {
    detail::require(!b.is_zero() && b.degree() >= 1, "dispersion of a constant polynomial");
    auto s = shift_set(b);
    return s.shifts.empty() ? 0 : s.shifts.back();
}

}  // namespace dres
