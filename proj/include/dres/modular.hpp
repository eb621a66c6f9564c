#pragma once

// Word-size prime field arithmetic for multi-modular resultants and gcds.

#include <cstdint>
#include <mutex>
#include <vector>

#include "dres/poly.hpp"
#include "dres/rational.hpp"

namespace dres::detail::modp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using ModPoly = std::vector<u64>;  // ascending, no trailing zeros

inline u64 mul(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
inline u64 add(u64 a, u64 b, u64 p) { return a >= p - b ? a - (p - b) : a + b; }
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

inline u64 pow(u64 a, u64 e, u64 p) {
    u64 r = 1;
    for (; e; e >>= 1, a = mul(a, a, p))
        if (e & 1) r = mul(r, a, p);
    return r;
}

inline u64 inv(u64 a, u64 p) { return pow(a, p - 2, p); }

inline u64 reduce(const Int& n, u64 p) {
    return mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(p));
}

inline void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline ModPoly reduce(const IntPoly& a, u64 p) {
    ModPoly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = reduce(a[i], p);
    trim(out);
    return out;
}

/// a mod b, b nonzero.
inline void rem_in_place(ModPoly& a, const ModPoly& b, u64 p) {
    const std::size_t n = b.size() - 1;
    const u64 li = inv(b.back(), p);
    while (a.size() > n && !a.empty()) {
        const u64 q = mul(a.back(), li, p);
        const std::size_t shift = a.size() - 1 - n;
        for (std::size_t i = 0; i < n; ++i) a[shift + i] = sub(a[shift + i], mul(q, b[i], p), p);
        a.pop_back();
        trim(a);
    }
}

/// Res(a, b) over GF(p) for nonzero a, b, using the degrees of the inputs.
inline u64 resultant(ModPoly a, ModPoly b, u64 p) {
    u64 acc = 1;
    while (true) {
        const std::size_t m = a.size() - 1, n = b.size() - 1;
        if (n == 0) return mul(acc, pow(b[0], m, p), p);
        ModPoly r = a;
        rem_in_place(r, b, p);
        if (r.empty()) return 0;
        if ((m & 1) && (n & 1)) acc = sub(0, acc, p);
        acc = mul(acc, pow(b.back(), m - (r.size() - 1), p), p);
        a = std::move(b);
        b = std::move(r);
    }
}

/// Monic gcd over GF(p); empty when both are zero.
inline ModPoly gcd(ModPoly a, ModPoly b, u64 p) {
    while (!b.empty()) {
        rem_in_place(a, b, p);
        std::swap(a, b);
    }
    if (!a.empty()) {
        const u64 li = inv(a.back(), p);
        for (auto& c : a) c = mul(c, li, p);
    }
    return a;
}

/// a(x + 1), in place.
inline void shift_by_one(ModPoly& a, u64 p) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j-- > i;) a[j] = add(a[j], a[j + 1], p);
}

/// Polynomial through (0, v0), ..., (n-1, v_{n-1}) over GF(p), p > n.
inline ModPoly interpolate(std::vector<u64> div, u64 p) {
    const std::size_t n = div.size();
    std::vector<u64> inverses(n, 1);
    for (std::size_t j = 1; j < n; ++j) inverses[j] = inv(j % p, p);
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            div[i] = mul(sub(div[i], div[i - 1], p), inverses[j], p);
            if (i == j) break;
        }
    ModPoly acc{div[n - 1]};
    for (std::size_t i = n - 1; i-- > 0;) {
        // acc = acc * (z - i) + div[i]
        ModPoly next(acc.size() + 1, 0);
        const u64 mi = sub(0, i % p, p);
        for (std::size_t k = 0; k < acc.size(); ++k) {
            next[k + 1] = add(next[k + 1], acc[k], p);
            next[k] = add(next[k], mul(acc[k], mi, p), p);
        }
        next[0] = add(next[0], div[i], p);
        acc = std::move(next);
    }
    trim(acc);
    return acc;
}

/// Primes just below 2^62, descending; shared and grown on demand.
inline u64 prime(std::size_t index) {
    static std::vector<u64> primes;
    static std::mutex lock;
    std::lock_guard<std::mutex> guard(lock);
    u64 candidate = primes.empty() ? (u64{1} << 62) - 1 : primes.back() - 2;
    while (primes.size() <= index) {
        const Int n(static_cast<unsigned long>(candidate));
        if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) primes.push_back(candidate);
        candidate -= 2;
    }
    return primes[index];
}

/// Incremental Chinese remaindering of coefficient vectors.
class Crt {
public:
    void add(const ModPoly& residues, std::size_t length, u64 p) {
        if (modulus_ == 0) {
            modulus_ = 1;
            values_.assign(length, Int(0));
        }
        const u64 mi = inv(reduce(modulus_, p), p);
        for (std::size_t i = 0; i < length; ++i) {
            const u64 r = i < residues.size() ? residues[i] : 0;
            const u64 t = mul(sub(r, reduce(values_[i], p), p), mi, p);
            if (t != 0) values_[i] += modulus_ * Int(static_cast<unsigned long>(t));
        }
        modulus_ *= Int(static_cast<unsigned long>(p));
    }

    const Int& modulus() const { return modulus_; }

    /// Symmetric representatives in (-M/2, M/2].
    IntPoly symmetric() const {
        IntPoly out(values_);
        const Int half = modulus_ / 2;
        for (auto& v : out)
            if (v > half) v -= modulus_;
        detail::trim(out);
        return out;
    }

    void reset() {
        modulus_ = 0;
        values_.clear();
    }

private:
    Int modulus_ = 0;
    std::vector<Int> values_;
};

}  // namespace dres::detail::modp

namespace dres::detail {

/// Res_x(q(x), q(x + z)) for primitive integer q, deg q >= 1, computed by
/// evaluation at z = 0..d^2 and interpolation modulo enough primes to cover
/// the bound |coeff| <= (2^d * |q|_2)^(2d).
inline IntPoly shift_resultant_integer(const IntPoly& q) {
    const std::size_t d = q.size() - 1;
    const std::size_t nodes = d * d + 1;
    Int norm2 = 0;
    for (const auto& c : q) norm2 += c * c;
    Int norm;
    mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
    norm += 1;
    Int bound = 1;
    mpz_pow_ui(bound.get_mpz_t(), Int(norm << static_cast<mp_bitcnt_t>(d)).get_mpz_t(), 2 * d);
    const Int target = 2 * bound + 1;

    modp::Crt crt;
    for (std::size_t k = 0; crt.modulus() == 0 || crt.modulus() <= target; ++k) {
        const modp::u64 p = modp::prime(k);
        if (modp::reduce(q.back(), p) == 0) continue;
        const modp::ModPoly a = modp::reduce(q, p);
        modp::ModPoly shifted = a;
        std::vector<modp::u64> values(nodes);
        for (std::size_t z = 0; z < nodes; ++z) {
            values[z] = modp::resultant(a, shifted, p);
            modp::shift_by_one(shifted, p);
        }
        crt.add(modp::interpolate(std::move(values), p), nodes, p);
    }
    return crt.symmetric();
}

/// Primitive gcd over Z of nonzero integer polynomials, by gcds modulo
/// primes and Chinese remaindering; candidates are verified by exact
/// division, so the answer does not depend on luck with primes.
inline IntPoly modular_gcd(IntPoly a, IntPoly b) {
    make_primitive(a);
    make_primitive(b);
    const Int gamma = gcd(a.back(), b.back());
    std::size_t best = std::min(a.size(), b.size());  // degree + 1 of current image
    modp::Crt crt;
    IntPoly previous;
    for (std::size_t k = 0;; ++k) {
        const modp::u64 p = modp::prime(k);
        if (modp::reduce(a.back(), p) == 0 || modp::reduce(b.back(), p) == 0) continue;
        modp::ModPoly g = modp::gcd(modp::reduce(a, p), modp::reduce(b, p), p);
        if (g.size() == 1) return IntPoly{1};
        if (g.size() > best) continue;
        if (g.size() < best) {
            best = g.size();
            crt.reset();
            previous.clear();
        }
        const modp::u64 gm = modp::reduce(gamma, p);
        for (auto& c : g) c = modp::mul(c, gm, p);
        crt.add(g, best, p);
        IntPoly candidate = crt.symmetric();
        make_primitive(candidate);
        if (candidate == previous) {
            const Poly c = to_poly(candidate);
            if (divides(c, to_poly(a)) && divides(c, to_poly(b))) return candidate;
        }
        previous = std::move(candidate);
    }
}

}  // namespace dres::detail
