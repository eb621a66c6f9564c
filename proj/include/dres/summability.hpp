#pragma once

#include <optional>
#include <vector>

#include "dres/error.hpp"
#include "dres/hermite.hpp"
#include "dres/linalg.hpp"
#include "dres/ratfun.hpp"
#include "dres/reduction.hpp"
#include "dres/residues.hpp"

namespace dres {

/// P with P(x + 1) - P(x) = p, via the binomial basis: if
/// p = sum c_j C(x, j) with c_j the forward differences of p at 0, then
/// P = sum c_j C(x, j + 1).
inline Poly polynomial_antidifference(const Poly& p) {
    if (p.is_zero()) return {};
    const auto n = static_cast<std::size_t>(p.degree());
    std::vector<Rat> diffs;
    diffs.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) diffs.push_back(p(Rat(static_cast<long>(i))));
    // forward difference table, leftmost column
    std::vector<Rat> lead;
    for (std::size_t j = 0; j <= n; ++j) {
        lead.push_back(diffs[0]);
        for (std::size_t i = 0; i + 1 < diffs.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
        diffs.pop_back();
    }
    Poly out;
    Poly falling = Poly::x();  // x (x-1) ... (x-j), starts at j = 0
    for (std::size_t j = 0; j <= n; ++j) {
        out += falling * (lead[j] / Rat(factorial(j + 1)));
        falling *= Poly{Rat(-static_cast<long>(j + 1)), Rat(1)};
    }
    return out;
}

struct SummabilityResult {
    bool summable = false;
    std::optional<RatFun> certificate;  ///< g with f = delta(g)
};

/// Decides whether f = g(x+1) - g(x) for a rational g. The polynomial
/// part is always summable; the proper part is summable iff every Hermite
/// layer reduces to zero.
inline SummabilityResult is_summable(const RatFun& f, bool want_certificate = false) {
    SummabilityResult out;
    auto [p, proper] = proper_part(f);
    RatFun certificate = want_certificate ? RatFun(polynomial_antidifference(p)) : RatFun();
    if (!proper.is_zero()) {
        const auto layers = hermite_list(proper);
        for (std::size_t k = 1; k <= layers.order(); ++k) {
            auto red = simple_reduction(layers[k], want_certificate);
            if (!red.reduced.is_zero()) return out;
            if (want_certificate) {
                // layer k enters f as (-1)^(k-1)/(k-1)! times its (k-1)-th derivative
                Rat c = make_rat((k % 2 == 1) ? Int(1) : Int(-1), factorial(k - 1));
                certificate += RatFun(c) * derivative(*red.certificate, static_cast<unsigned>(k - 1));
            }
        }
    }
    out.summable = true;
    if (want_certificate) out.certificate = certificate;
    return out;
}

struct VSpaceBasis {
    std::vector<RatVector> vectors;

    std::size_t dimension() const noexcept { return vectors.size(); }
};

/// Coefficient matrix of the linear conditions sum_i v_i D_{i,k} = 0:
/// one row per (order k, power of x), one column per function.
inline Matrix<Rat> residue_condition_matrix(const MultiDresOutput& res) {
    const std::size_t n = res.D.size();
    const std::size_t m = res.order();
    const std::size_t width = res.B.degree() > 0 ? static_cast<std::size_t>(res.B.degree()) : 0;
    Matrix<Rat> a(m * width, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t e = 0; e < width; ++e) a(k * width + e, i) = res.D[i][k][e];
    return a;
}

/// Basis of V(f) = {v in Q^n : sum v_i f_i is summable}.
inline VSpaceBasis vspace(const std::vector<RatFun>& fs) {
    detail::require(!fs.empty(), "solution space of an empty family");
    const auto res = discrete_residues_multi(fs);
    return {nullspace(residue_condition_matrix(res))};
}

}  // namespace dres
