#pragma once

#include <algorithm>
#include <vector>

#include "dres/error.hpp"
#include "dres/gcd.hpp"
#include "dres/hermite.hpp"
#include "dres/ratfun.hpp"
#include "dres/reduction.hpp"

namespace dres {

/// Symbolic residues: the roots of B are the places, D evaluated at a
/// root is the value there. (1, 0) stands for "nothing".
struct ResiduePair {
    Poly B = 1;
    Poly D;

    bool is_trivial() const { return D.is_zero(); }
    friend bool operator==(const ResiduePair&, const ResiduePair&) = default;
};

/// Discrete residues of one function; pairs[k - 1] holds order k.
struct DresOutput {
    std::vector<ResiduePair> pairs;

    std::size_t order() const noexcept { return pairs.size(); }
    const ResiduePair& operator[](std::size_t k) const { return pairs.at(k - 1); }
    bool all_trivial() const {
        return std::all_of(pairs.begin(), pairs.end(), [](const ResiduePair& p) { return p.is_trivial(); });
    }
};

/// Discrete residues of a family over one common B; D[i][k - 1] is the
/// order-k value polynomial of function i.
struct MultiDresOutput {
    Poly B = 1;
    std::vector<std::vector<Poly>> D;

    std::size_t order() const noexcept { return D.empty() ? 0 : D.front().size(); }
};

/// (b, r) with r * b' = a (mod b) and deg r < deg b, so that
/// f = sum over roots alpha of b of r(alpha) / (x - alpha).
inline ResiduePair first_residues(const RatFun& f) {
    if (f.is_zero()) return {};
    detail::require(f.is_proper(), "first residues need a proper rational function");
    detail::require(is_squarefree(f.den()), "first residues need a squarefree denominator");
    const Poly& b = f.den();
    Poly r = (f.num() * inverse_mod(derivative(b), b)) % b;
    detail::ensure(((r * derivative(b) - f.num()) % b).is_zero(), "residue congruence failed");
    return {b, r};
}

struct FirstResiduesMulti {
    Poly B = 1;
    std::vector<Poly> values;
};

/// First residues of several simple-pole functions over B = lcm of their
/// denominators: values[i] agrees with the residue of f_i at every root of
/// B, which is zero where f_i has no pole.
inline FirstResiduesMulti first_residues_multi(const std::vector<RatFun>& fs) {
    FirstResiduesMulti out;
    for (const auto& f : fs) {
        detail::require(f.is_proper(), "first residues need proper rational functions");
        if (!f.is_zero()) {
            detail::require(is_squarefree(f.den()), "first residues need squarefree denominators");
            out.B = lcm(out.B, f.den());
        }
    }
    out.values.reserve(fs.size());
    for (const auto& f : fs) {
        if (f.is_zero()) {
            out.values.emplace_back();
            continue;
        }
        const auto [bi, ri] = first_residues(f);
        const Poly di = exact_quotient(out.B, bi);
        // p = di * (ri / di mod bi): p = ri (mod bi), p = 0 (mod di)
        Poly p = di * ((ri * inverse_mod(di, bi)) % bi);
        out.values.push_back(p % out.B);
    }
    return out;
}

/// Discrete residues by independent reduction of every Hermite layer.
inline DresOutput discrete_residues(const RatFun& f) {
    detail::require(f.is_proper(), "discrete residues need a proper rational function");
    DresOutput out;
    if (f.is_zero()) return out;
    const auto layers = hermite_list(f);
    out.pairs.reserve(layers.order());
    for (const auto& layer : layers.layers) out.pairs.push_back(first_residues(simple_reduction(layer).reduced));
    return out;
}

/// Discrete residues with all layers reduced compatibly, so a given orbit
/// is represented by the same root of B_k for every order k.
inline DresOutput discrete_residues_coordinated(const RatFun& f) {
    detail::require(f.is_proper(), "discrete residues need a proper rational function");
    DresOutput out;
    if (f.is_zero()) return out;
    const auto layers = hermite_list(f);
    for (const auto& reduced : simple_reduction_multi(layers.layers)) out.pairs.push_back(first_residues(reduced));
    return out;
}

/// Discrete residues of a family, compatible across functions and orders.
/// When every residue vanishes the result is B = 1 with a zero matrix.
inline MultiDresOutput discrete_residues_multi(const std::vector<RatFun>& fs) {
    detail::require(!fs.empty(), "discrete residues of an empty family");
    std::vector<HermiteLayers> all;
    all.reserve(fs.size());
    std::size_t m = 0;
    for (const auto& f : fs) {
        detail::require(!f.is_zero() && f.is_proper(), "discrete residues need nonzero proper functions");
        all.push_back(hermite_list(f));
        m = std::max(m, all.back().order());
    }
    std::vector<RatFun> flat;
    flat.reserve(fs.size() * m);
    for (const auto& layers : all)
        for (std::size_t k = 1; k <= m; ++k) flat.push_back(k <= layers.order() ? layers[k] : RatFun());

    const auto reduced = simple_reduction_multi(flat);
    auto [B, values] = first_residues_multi(reduced);

    MultiDresOutput out;
    out.B = std::move(B);
    out.D.assign(fs.size(), std::vector<Poly>(m));
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t k = 0; k < m; ++k) out.D[i][k] = std::move(values[i * m + k]);
    return out;
}

}  // namespace dres
