#pragma once

#include <map>
#include <vector>

#include "dres/error.hpp"
#include "dres/gcd.hpp"
#include "dres/linalg.hpp"
#include "dres/ratfun.hpp"
#include "dres/reduction.hpp"
#include "dres/residues.hpp"
#include "dres/resultant.hpp"
#include "dres/roots.hpp"
#include "dres/summability.hpp"

namespace dres {

/// r' / r.
inline RatFun log_derivative(const RatFun& r) {
    detail::require(!r.is_zero(), "log derivative of zero");
    RatFun f = derivative(r) / r;
    detail::ensure(f.is_proper() && (f.is_zero() || is_squarefree(f.den())), "log derivative with a multiple pole");
    return f;
}

/// Z-basis of {e in Z^n : sum e_i f_i is summable} for functions whose
/// residues are all first order and integral: the integer kernel of the
/// compatible residue matrix.
inline std::vector<IntVector> integer_lattice_solutions(const std::vector<RatFun>& fs) {
    detail::require(!fs.empty(), "lattice of an empty family");
    std::vector<RatFun> nonzero;
    std::vector<std::size_t> where;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        detail::require(fs[i].is_proper(), "lattice inputs must be proper");
        detail::require(fs[i].is_zero() || is_squarefree(fs[i].den()), "lattice inputs must have simple poles");
        if (!fs[i].is_zero()) {
            nonzero.push_back(fs[i]);
            where.push_back(i);
        }
    }
    const std::size_t n = fs.size();
    Matrix<Rat> conditions(0, n);
    if (!nonzero.empty()) {
        const auto res = discrete_residues_multi(nonzero);
        const auto sub = residue_condition_matrix(res);
        conditions = Matrix<Rat>(sub.rows(), n);
        for (std::size_t r = 0; r < sub.rows(); ++r)
            for (std::size_t c = 0; c < sub.cols(); ++c) conditions(r, where[c]) = sub(r, c);
    }
    return integer_kernel(detail::clear_row_denominators(conditions));
}

/// Monic p (numerator and denominator) with p'/p = g, for g with simple
/// poles and integer residues. The distinct residue values are the integer
/// roots of Res_x(b(x), z - r(x)); the poles with residue c are the roots
/// of gcd(b, r - c).
inline RatFun exp_log_derivative(const RatFun& g) {
    detail::require(g.is_proper(), "exp of log derivative needs a proper function");
    if (g.is_zero()) return RatFun(1);
    detail::require(is_squarefree(g.den()), "exp of log derivative needs simple poles");
    const auto [b, r] = first_residues(g);
    const Poly values = resultant_residue_values(b, r);
    RatFun p(1);
    long covered = 0;
    for (const Int& c : integer_roots(values)) {
        if (c == 0) continue;
        Poly part = gcd(b, r - Poly(Rat(c)));
        covered += part.degree();
        p *= pow(RatFun(part), c.get_si());
    }
    if (covered != b.degree() || !(log_derivative(p) == g))
        throw PreconditionError("function is not a logarithmic derivative: residues are not all integers");
    return p;
}

/// Lattices of multiplicative relations for sigma(Y) = diag(r_1..r_n) Y.
struct RelationLattice {
    std::vector<IntVector> tilde_basis;  ///< Z-basis of the summable exponent lattice
    std::vector<RatFun> witnesses;       ///< p_j with (p_j)'/p_j the certificate of basis vector j
    std::vector<Rat> gammas;             ///< r^(e_j) = gamma_j * sigma(p_j)/p_j
    std::vector<IntVector> basis;        ///< Z-basis of E, in exponent coordinates
};

inline constexpr unsigned long kDefaultTrialDivisionBound = 1'000'000UL;

namespace detail {

/// Prime factorization of |n| by trial division. A cofactor left after
/// dividing out all primes up to the bound is prime only when it is below
/// bound^2; otherwise ScaleLimitError.
inline void factor_into(Int n, int sign, unsigned long bound, std::map<Int, long>& exps) {
    n = abs(n);
    for (unsigned long d = 2; d <= bound && Int(d) * Int(d) <= n; d += (d == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            n /= d;
            exps[Int(d)] += sign;
        }
    }
    if (n > 1) {
        if (n > Int(bound) * Int(bound)) throw ScaleLimitError("constant factorization bound exceeded");
        exps[n] += sign;
    }
}

}  // namespace detail

inline RelationLattice multiplicative_relations(const std::vector<RatFun>& rs,
                                                unsigned long trial_bound = kDefaultTrialDivisionBound) {
    detail::require(!rs.empty(), "relations of an empty family");
    for (const auto& r : rs) detail::require(!r.is_zero(), "relations need nonzero rational functions");
    const std::size_t n = rs.size();

    std::vector<RatFun> fs;
    fs.reserve(n);
    for (const auto& r : rs) fs.push_back(log_derivative(r));

    RelationLattice out;
    out.tilde_basis = integer_lattice_solutions(fs);

    for (const auto& e : out.tilde_basis) {
        RatFun combo;
        RatFun power(1);
        for (std::size_t i = 0; i < n; ++i) {
            if (e[i] == 0) continue;
            combo += RatFun(Rat(e[i])) * fs[i];
            power *= pow(rs[i], e[i].get_si());
        }
        auto red = simple_reduction(combo, true);
        detail::ensure(red.reduced.is_zero(), "summable exponent vector has a nonzero reduced form");
        RatFun p = exp_log_derivative(*red.certificate);
        RatFun gamma = power * p / sigma(p);
        detail::ensure(gamma.num().degree() <= 0 && gamma.den().degree() == 0, "multiplicative quotient is not constant");
        out.witnesses.push_back(std::move(p));
        out.gammas.push_back(gamma.num()[0]);
    }

    // m in Z^s with prod gamma_j^(m_j) = 1: prime exponents cancel and the
    // number of negative gammas used is even (slack column absorbs 2t).
    const std::size_t s = out.gammas.size();
    std::vector<std::map<Int, long>> exps(s);
    std::map<Int, std::size_t> primes;
    for (std::size_t j = 0; j < s; ++j) {
        detail::factor_into(Int(out.gammas[j].get_num()), 1, trial_bound, exps[j]);
        detail::factor_into(Int(out.gammas[j].get_den()), -1, trial_bound, exps[j]);
        for (const auto& [pr, ex] : exps[j])
            if (ex != 0) primes.emplace(pr, 0);
    }
    std::size_t row = 0;
    for (auto& [pr, idx] : primes) idx = row++;
    Matrix<Int> relation(primes.size() + 1, s + 1);
    for (std::size_t j = 0; j < s; ++j) {
        for (const auto& [pr, ex] : exps[j])
            if (ex != 0) relation(primes.at(pr), j) = ex;
        relation(primes.size(), j) = out.gammas[j] < 0 ? 1 : 0;
    }
    relation(primes.size(), s) = -2;

    std::vector<IntVector> m_gens;
    for (auto& v : integer_kernel(relation)) {
        v.pop_back();
        m_gens.push_back(std::move(v));
    }
    std::vector<IntVector> e_gens;
    for (const auto& m : hermite_normal_form(m_gens, s)) {
        IntVector e(n, Int(0));
        for (std::size_t j = 0; j < s; ++j)
            for (std::size_t i = 0; i < n; ++i) e[i] += m[j] * out.tilde_basis[j][i];
        e_gens.push_back(std::move(e));
    }
    out.basis = hermite_normal_form(std::move(e_gens), n);
    return out;
}

}  // namespace dres
