#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "dres/error.hpp"
#include "dres/poly.hpp"

namespace dres {

/// Candidate integers are scanned up to this magnitude; beyond it the
/// search reports ScaleLimitError instead of running unbounded.
inline constexpr unsigned long kIntegerRootScanLimit = 50'000'000UL;

namespace detail {

/// Upper bound on |root| for an integer polynomial with nonzero constant
/// term: 2 * max_i ceil(|a_(n-i) / a_n|^(1/i)) (Fujiwara).
inline Int root_magnitude_bound(const IntPoly& p) {
    const std::size_t n = p.size() - 1;
    const Int lead = abs(p.back());
    Int best = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        const Int& c = p[n - i];
        if (c == 0) continue;
        Int q;
        mpz_cdiv_q(q.get_mpz_t(), abs(c).get_mpz_t(), lead.get_mpz_t());
        Int root;
        mpz_root(root.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(i));
        root += 1;
        if (root > best) best = root;
    }
    return 2 * best;
}

/// Strips the power of z dividing p; returns the multiplicity of 0.
inline std::size_t strip_zero_roots(IntPoly& p) {
    std::size_t v = 0;
    while (v < p.size() && p[v] == 0) ++v;
    p.erase(p.begin(), p.begin() + static_cast<long>(v));
    return v;
}

}  // namespace detail

/// All integer roots of p, ascending. Candidates are divisors of the
/// constant term of the primitive integer form (after removing the z^v
/// factor), restricted by a root-magnitude bound and tested exactly.
inline std::vector<Int> integer_roots(const Poly& p) {
    detail::require(!p.is_zero(), "integer roots of the zero polynomial");
    detail::IntPoly q = detail::primitive_integer(p);
    std::set<Int> roots;
    if (detail::strip_zero_roots(q) > 0) roots.insert(Int(0));
    if (q.size() > 1) {
        const Int& c0 = q.front();
        Int bound = detail::root_magnitude_bound(q);
        if (abs(c0) < bound) bound = abs(c0);
        if (bound > kIntegerRootScanLimit) throw ScaleLimitError("integer root search bound exceeded");
        const unsigned long limit = bound.get_ui();
        for (unsigned long n = 1; n <= limit; ++n) {
            if (!mpz_divisible_ui_p(c0.get_mpz_t(), n)) continue;
            const Int pos(n);
            if (detail::eval(q, pos) == 0) roots.insert(pos);
            const Int neg = -pos;
            if (detail::eval(q, neg) == 0) roots.insert(neg);
        }
    }
    return {roots.begin(), roots.end()};
}

}  // namespace dres
