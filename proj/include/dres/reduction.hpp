#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dres/error.hpp"
#include "dres/gcd.hpp"
#include "dres/ratfun.hpp"
#include "dres/shiftset.hpp"

namespace dres {

/// Intermediate data of a reduction, kept for diagnostics.
struct ReductionParts {
    std::vector<long> shift_set;
    std::map<long, Poly> shift_gcds;  ///< g_l = gcd(b, b(x - l))
    Poly shifted_lcm = 1;             ///< G = lcm of the g_l
    Poly initial_roots = 1;           ///< b0 = b / G
    std::vector<long> levels;         ///< N, always starting with 0
    std::vector<Poly> level_denominators;  ///< b_l for l in N
    std::vector<Poly> level_numerators;    ///< a_l for l in N
};

struct ReductionOutput {
    RatFun reduced;
    std::optional<RatFun> certificate;  ///< g with f = reduced + delta(g)
    ReductionParts parts;
};

namespace detail {

inline void require_simple_poles(const RatFun& f) {
    require(f.is_proper(), "reduction needs a proper rational function");
    require(f.is_zero() || is_squarefree(f.den()), "reduction needs a squarefree denominator");
}

/// Shift set, shift gcds and divisor of initial roots of b.
inline void initial_roots(const Poly& b, ReductionParts& parts) {
    parts.shift_set = shift_set(b).shifts;
    parts.shifted_lcm = 1;
    for (long l : parts.shift_set) {
        Poly gl = gcd(b, shift(b, Rat(-l)));
        parts.shifted_lcm = lcm(parts.shifted_lcm, gl);
        parts.shift_gcds.emplace(l, std::move(gl));
    }
    parts.initial_roots = exact_quotient(b, parts.shifted_lcm);
}

/// Splits f along b_l = gcd(b0(x - l), den f) for l in {0} and the shift
/// set, and moves every piece onto the initial roots.
inline ReductionOutput reduce_against(const RatFun& f, const ReductionParts& common, bool want_certificate) {
    ReductionOutput out;
    out.parts = common;
    auto& parts = out.parts;
    parts.levels.clear();
    parts.level_denominators.clear();
    parts.level_numerators.clear();

    if (f.is_zero()) {
        if (want_certificate) out.certificate = RatFun();
        return out;
    }
    parts.levels.push_back(0);
    parts.level_denominators.push_back(gcd(parts.initial_roots, f.den()));
    for (long l : parts.shift_set) {
        Poly bl = gcd(shift(parts.initial_roots, Rat(-l)), f.den());
        if (bl.degree() >= 1) {
            parts.levels.push_back(l);
            parts.level_denominators.push_back(std::move(bl));
        }
    }
    parts.level_numerators = parfrac(f, parts.level_denominators);

    RatFun certificate;
    for (std::size_t i = 0; i < parts.levels.size(); ++i) {
        const RatFun piece = normalize(parts.level_numerators[i], parts.level_denominators[i]);
        const long l = parts.levels[i];
        out.reduced += sigma(piece, l);
        if (want_certificate)
            for (long s = 0; s < l; ++s) certificate -= sigma(piece, s);
    }
    if (want_certificate) out.certificate = certificate;
    return out;
}

}  // namespace detail

/// Reduced form with simple poles and polar dispersion 0 such that
/// f - reduced is summable. Poles land on the initial root of each orbit.
inline ReductionOutput simple_reduction(const RatFun& f, bool want_certificate = false) {
    detail::require_simple_poles(f);
    if (f.is_zero()) {
        ReductionOutput out;
        if (want_certificate) out.certificate = RatFun();
        return out;
    }
    ReductionParts common;
    detail::initial_roots(f.den(), common);
    if (common.shift_set.empty()) {
        ReductionOutput out;
        out.reduced = f;
        if (want_certificate) out.certificate = RatFun();
        out.parts = std::move(common);
        out.parts.levels = {0};
        out.parts.level_denominators = {f.den()};
        out.parts.level_numerators = {f.num()};
        return out;
    }
    return detail::reduce_against(f, common, want_certificate);
}

/// Compatible reductions of several simple-pole functions: every output
/// denominator divides the divisor of initial roots of the lcm of all
/// input denominators, so a shared orbit shows up as a shared pole.
inline std::vector<RatFun> simple_reduction_multi(const std::vector<RatFun>& fs) {
    detail::require(!fs.empty(), "compatible reduction of an empty family");
    Poly b = 1;
    for (const auto& f : fs) {
        detail::require_simple_poles(f);
        if (!f.is_zero()) b = lcm(b, f.den());
    }
    if (b.degree() < 1) return fs;
    ReductionParts common;
    detail::initial_roots(b, common);
    if (common.shift_set.empty()) return fs;

    std::vector<RatFun> out;
    out.reserve(fs.size());
    for (const auto& f : fs) out.push_back(detail::reduce_against(f, common, false).reduced);
    return out;
}

}  // namespace dres
