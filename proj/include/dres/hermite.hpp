#pragma once

#include <vector>

#include "dres/error.hpp"
#include "dres/gcd.hpp"
#include "dres/ratfun.hpp"

namespace dres {

struct HermiteReduction {
    RatFun g;  ///< rational part: f = g' + h
    RatFun h;  ///< remainder with squarefree denominator
};

/// Hermite-Ostrogradsky reduction, quadratic variant driven by the
/// squarefree decomposition of the denominator.
inline HermiteReduction hermite_reduction(const RatFun& f) {
    detail::require(f.is_proper(), "hermite reduction needs a proper rational function");
    if (f.is_zero()) return {};

    const auto sqf = squarefree_decomposition(f.den());
    Poly a = f.num();
    Poly d = f.den();
    RatFun g;
    for (const auto& [v, i] : sqf.factors) {
        if (i < 2) continue;
        Poly u = exact_quotient(d, pow(v, i));
        Poly dv = derivative(v);
        for (unsigned j = i - 1; j >= 1; --j) {
            // b*(u v') + c*v = -a/j
            auto [b, c] = solve_bezout(u * dv, v, -a / Rat(j));
            g += normalize(b, pow(v, j));
            a = -Rat(j) * c - u * derivative(b);
        }
        d = u * v;
    }
    return {g, normalize(a, d)};
}

/// Simple-pole layers f_1..f_m of a proper f: f_k carries the order-k
/// coefficients c_k(alpha) as first-order residues, so that
/// f = sum_k (-1)^(k-1) / (k-1)! * d^(k-1)/dx^(k-1) f_k.
struct HermiteLayers {
    std::vector<RatFun> layers;

    std::size_t order() const noexcept { return layers.size(); }
    const RatFun& operator[](std::size_t k) const { return layers.at(k - 1); }

    RatFun reconstruct() const {
        RatFun out;
        for (std::size_t k = 1; k <= layers.size(); ++k) {
            Rat c = make_rat((k % 2 == 1) ? Int(1) : Int(-1), factorial(k - 1));
            out += RatFun(c) * derivative(layers[k - 1], static_cast<unsigned>(k - 1));
        }
        return out;
    }
};

inline HermiteLayers hermite_list(const RatFun& f) {
    detail::require(!f.is_zero(), "hermite list of zero");
    detail::require(f.is_proper(), "hermite list needs a proper rational function");
    std::vector<RatFun> hats;
    RatFun g = f;
    while (!g.is_zero()) {
        auto step = hermite_reduction(g);
        hats.push_back(std::move(step.h));
        g = std::move(step.g);
    }
    HermiteLayers out;
    out.layers.reserve(hats.size());
    for (std::size_t k = 1; k <= hats.size(); ++k) {
        Int scale = factorial(k - 1);
        if (k % 2 == 0) scale = -scale;
        out.layers.push_back(RatFun(Rat(scale)) * hats[k - 1]);
    }
    return out;
}

}  // namespace dres
