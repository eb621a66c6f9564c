#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dres/error.hpp"
#include "dres/ratfun.hpp"
#include "dres/residues.hpp"

// Reference data built directly from partial fractions with rational
// poles, for cross-checking the factorization-free pipeline.

namespace dres::testkit {

struct OrbitTerm {
    Rat alpha;
    unsigned k = 1;
    Rat c;
};

/// f = sum c / (x - alpha)^k over the terms.
struct OrbitSpec {
    std::vector<OrbitTerm> terms;
};

inline void validate(const OrbitSpec& spec) {
    std::set<std::pair<Rat, unsigned>> seen;
    for (const auto& t : spec.terms) {
        detail::require(t.k >= 1, "orbit term order must be positive");
        detail::require(t.c != 0, "orbit term coefficient must be nonzero");
        detail::require(seen.emplace(t.alpha, t.k).second, "duplicate (alpha, k) in orbit spec");
    }
}

inline RatFun build_from_spec(const OrbitSpec& spec) {
    validate(spec);
    // group by pole so each pole contributes one fraction over (x - alpha)^kmax
    std::map<Rat, std::vector<const OrbitTerm*>> by_pole;
    for (const auto& t : spec.terms) by_pole[t.alpha].push_back(&t);
    RatFun out;
    for (const auto& [alpha, terms] : by_pole) {
        unsigned kmax = 0;
        for (const auto* t : terms) kmax = std::max(kmax, t->k);
        const Poly lin{-alpha, Rat(1)};
        Poly num;
        for (const auto* t : terms) num += pow(lin, kmax - t->k) * t->c;
        out += normalize(num, pow(lin, kmax));
    }
    return out;
}

struct DresEntry {
    Rat representative;  ///< smallest alpha of the orbit present in the spec
    unsigned k = 1;
    Rat value;

    friend bool operator==(const DresEntry&, const DresEntry&) = default;
};

/// Fractional part in [0, 1), which identifies the Z-orbit of a rational.
inline Rat orbit_key(const Rat& a) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    return a - Rat(fl);
}

/// Discrete residues straight from the definition: sum the order-k
/// coefficients over each Z-orbit; zero sums are dropped. Sorted by k,
/// then representative.
inline std::vector<DresEntry> dres_by_definition(const OrbitSpec& spec) {
    validate(spec);
    std::map<Rat, Rat> rep;  // orbit key -> smallest alpha
    for (const auto& t : spec.terms) {
        auto key = orbit_key(t.alpha);
        auto it = rep.find(key);
        if (it == rep.end() || t.alpha < it->second) rep[key] = t.alpha;
    }
    std::map<std::pair<unsigned, Rat>, Rat> sums;  // (k, orbit key) -> sum
    for (const auto& t : spec.terms) sums[{t.k, orbit_key(t.alpha)}] += t.c;
    std::vector<DresEntry> out;
    for (const auto& [key, value] : sums)
        if (value != 0) out.push_back({rep.at(key.second), key.first, value});
    std::sort(out.begin(), out.end(), [](const DresEntry& a, const DresEntry& b) {
        return a.k != b.k ? a.k < b.k : a.representative < b.representative;
    });
    return out;
}

/// One term per non-empty line: `alpha k c`, rationals as `p/q`.
/// Lines starting with '#' are comments.
inline OrbitSpec parse_orbit_spec(std::istream& in) {
    OrbitSpec spec;
    std::string line;
    std::size_t lineno = 0, offset = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t at = offset;
        offset += line.size() + 1;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::string a, k, c, extra;
        if (!(ls >> a >> k >> c) || (ls >> extra))
            throw ParseError("orbit spec line " + std::to_string(lineno) + ": expected 'alpha k c'", at);
        Rat alpha, kr, coeff;
        try {
            alpha = parse_rat(a);
            kr = parse_rat(k);
            coeff = parse_rat(c);
        } catch (const PreconditionError& e) {
            throw ParseError("orbit spec line " + std::to_string(lineno) + ": " + e.what(), at);
        }
        if (!is_integer(kr) || kr < 1)
            throw ParseError("orbit spec line " + std::to_string(lineno) + ": order must be a positive integer", at);
        spec.terms.push_back({alpha, static_cast<unsigned>(kr.get_num().get_ui()), coeff});
    }
    validate(spec);
    return spec;
}

inline OrbitSpec parse_orbit_spec(const std::string& text) {
    std::istringstream in(text);
    return parse_orbit_spec(in);
}

struct RandomSpecOptions {
    unsigned max_orbits = 6;
    unsigned max_poles_per_orbit = 3;
    unsigned max_order = 4;
    long max_offset = 4;              ///< poles at alpha + n, |n| <= max_offset
    long coefficient_bound = 65535;   ///< |numerator| of coefficients
    long coefficient_den_bound = 12;
    double cancel_probability = 0.25;  ///< chance an (orbit, k) sum is forced to zero
};

/// Random spec with rational poles in distinct orbits.
inline OrbitSpec random_orbit_spec(std::mt19937_64& rng, const RandomSpecOptions& opt = {}) {
    auto uni = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    static constexpr long kDens[] = {1, 1, 1, 2, 3, 4, 5, 7};
    auto coefficient = [&] {
        long num = 0;
        while (num == 0) num = uni(-opt.coefficient_bound, opt.coefficient_bound);
        return make_rat(Int(num), Int(uni(1, opt.coefficient_den_bound)));
    };

    OrbitSpec spec;
    std::set<Rat> keys;
    const long orbits = uni(1, opt.max_orbits);
    for (long o = 0; o < orbits; ++o) {
        Rat base;
        do {
            const long den = kDens[uni(0, static_cast<long>(std::size(kDens)) - 1)];
            base = make_rat(Int(uni(-3 * den, 3 * den)), Int(den));
        } while (!keys.insert(orbit_key(base)).second);

        std::set<long> offsets;
        const long poles = uni(1, opt.max_poles_per_orbit);
        while (static_cast<long>(offsets.size()) < poles) offsets.insert(uni(-opt.max_offset, opt.max_offset));

        std::map<unsigned, std::vector<OrbitTerm>> by_order;
        for (long off : offsets) {
            const Rat alpha = base + Rat(off);
            for (unsigned k = 1; k <= opt.max_order; ++k)
                if (k == 1 ? uni(0, 3) != 0 : uni(0, static_cast<long>(k)) == 0)
                    by_order[k].push_back({alpha, k, coefficient()});
        }
        if (by_order.empty()) by_order[1].push_back({base + Rat(*offsets.begin()), 1, coefficient()});
        for (auto& [k, terms] : by_order) {
            if (terms.size() >= 2 && std::bernoulli_distribution(opt.cancel_probability)(rng)) {
                Rat rest = 0;
                for (std::size_t i = 0; i + 1 < terms.size(); ++i) rest += terms[i].c;
                if (rest != 0) terms.back().c = -rest;
            }
            for (auto& t : terms) spec.terms.push_back(t);
        }
    }
    validate(spec);
    return spec;
}

/// Checks a DresOutput against the definition. Every root of B_k must be
/// a pole of the spec (reduced forms keep poles on initial roots), each
/// nonzero oracle entry must be hit by exactly one root in its orbit with
/// D_k equal to the residue value, and B_k has no other roots.
inline bool matches_oracle(const DresOutput& got, const OrbitSpec& spec, std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const auto expected = dres_by_definition(spec);
    std::set<Rat> poles;
    unsigned max_k = 0;
    for (const auto& t : spec.terms) {
        poles.insert(t.alpha);
        max_k = std::max(max_k, t.k);
    }
    if (got.order() > max_k) return fail("more orders than the highest pole order");
    for (unsigned k = 1; k <= got.order(); ++k) {
        const auto& [B, D] = got[k];
        std::map<Rat, Rat> want;  // orbit key -> value
        for (const auto& e : expected)
            if (e.k == k) want[orbit_key(e.representative)] = e.value;
        if (D.is_zero()) {
            if (!(B == Poly(1))) return fail("trivial pair with B != 1 at k=" + std::to_string(k));
            if (!want.empty()) return fail("missing residues at k=" + std::to_string(k));
            continue;
        }
        long roots = 0;
        std::set<Rat> hit;
        for (const auto& alpha : poles) {
            if (B(alpha) != 0) continue;
            ++roots;
            const Rat key = orbit_key(alpha);
            auto it = want.find(key);
            if (it == want.end()) return fail("root in an orbit without residue at k=" + std::to_string(k));
            if (!hit.insert(key).second) return fail("two roots in one orbit at k=" + std::to_string(k));
            if (D(alpha) != it->second) return fail("wrong residue value at k=" + std::to_string(k));
        }
        if (roots != B.degree()) return fail("B has roots outside the spec poles at k=" + std::to_string(k));
        if (hit.size() != want.size()) return fail("orbit missed at k=" + std::to_string(k));
    }
    for (const auto& e : expected)
        if (e.k > got.order()) return fail("residue of order beyond output");
    return true;
}

}  // namespace dres::testkit
