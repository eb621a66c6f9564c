#pragma once

#include <utility>
#include <vector>

#include "dres/error.hpp"
#include "dres/gcd.hpp"
#include "dres/poly.hpp"

namespace dres {

class RatFun;
inline RatFun normalize(Poly num, Poly den);

/// Reduced rational function num/den: den monic, gcd(num, den) = 1.
/// Every operation returns a normalized value.
class RatFun {
public:
    RatFun() : den_(1) {}
    RatFun(Poly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatFun(const Rat& c) : num_(c), den_(1) {}       // NOLINT(google-explicit-constructor)
    RatFun(long c) : RatFun(Rat(c)) {}               // NOLINT(google-explicit-constructor)
    RatFun(int c) : RatFun(Rat(c)) {}                // NOLINT(google-explicit-constructor)

    friend RatFun normalize(Poly num, Poly den);

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.degree() == 0; }
    bool is_proper() const noexcept { return num_.is_zero() || num_.degree() < den_.degree(); }

    Rat operator()(const Rat& at) const {
        Rat d = den_(at);
        detail::require(d != 0, "evaluation at a pole");
        return num_(at) / d;
    }

    RatFun operator-() const {
        RatFun r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return normalize(a.num_ + b.num_, a.den_);
        Poly g = gcd(a.den_, b.den_);
        Poly ca = exact_quotient(b.den_, g);
        Poly cb = exact_quotient(a.den_, g);
        return normalize(a.num_ * ca + b.num_ * cb, a.den_ * ca);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        if (a.is_zero() || b.is_zero()) return {};
        return normalize(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        detail::require(!b.is_zero(), "rational function divided by zero");
        return normalize(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }

    friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

private:
    RatFun(Poly num, Poly den, int) : num_(std::move(num)), den_(std::move(den)) {}

    Poly num_;
    Poly den_;
};

/// Reduced representative of num/den with monic denominator.
inline RatFun normalize(Poly num, Poly den) {
    detail::require(!den.is_zero(), "rational function with zero denominator");
    if (num.is_zero()) return {};
    Poly g = gcd(num, den);
    if (g.degree() > 0) {
        num = exact_quotient(num, g);
        den = exact_quotient(den, g);
    }
    Rat u = den.lc();
    return RatFun(num / u, den / u, 0);
}

inline RatFun pow(const RatFun& f, long e) {
    if (e < 0) return pow(RatFun(1) / f, -e);
    return normalize(pow(f.num(), static_cast<unsigned long>(e)), pow(f.den(), static_cast<unsigned long>(e)));
}

/// f(x + c).
inline RatFun shift(const RatFun& f, const Rat& c) {
    if (c == 0 || f.is_polynomial()) return normalize(shift(f.num(), c), f.den());
    return normalize(shift(f.num(), c), shift(f.den(), c));
}

/// sigma^l f = f(x + l).
inline RatFun sigma(const RatFun& f, long l = 1) { return shift(f, Rat(l)); }

/// sigma(g) - g.
inline RatFun delta(const RatFun& g) { return sigma(g) - g; }

inline RatFun derivative(const RatFun& f) {
    if (f.is_zero()) return {};
    // (a/b)' = (a' b - a b') / b^2
    return normalize(derivative(f.num()) * f.den() - f.num() * derivative(f.den()), f.den() * f.den());
}

inline RatFun derivative(const RatFun& f, unsigned n) {
    RatFun out = f;
    for (unsigned i = 0; i < n; ++i) out = derivative(out);
    return out;
}

struct ProperSplit {
    Poly polynomial;
    RatFun proper;
};

/// f = polynomial + proper, where proper keeps the denominator of f.
inline ProperSplit proper_part(const RatFun& f) {
    auto [q, r] = divrem(f.num(), f.den());
    return {q, normalize(r, f.den())};
}

/// Numerators a_i with deg a_i < deg b_i and f = sum a_i / b_i, for
/// pairwise coprime monic parts whose product is the squarefree
/// denominator of the proper function f. Parts equal to 1 yield 0.
inline std::vector<Poly> parfrac(const RatFun& f, const std::vector<Poly>& parts) {
    detail::require(f.is_proper(), "parfrac needs a proper rational function");
    Poly product = 1;
    for (const auto& p : parts) {
        detail::require(p.is_monic(), "parfrac parts must be monic");
        product *= p;
    }
    detail::require(product == f.den(), "parfrac parts do not multiply to the denominator");
    detail::require(is_squarefree(f.den()) || f.den().degree() == 0, "parfrac needs a squarefree denominator");
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            detail::require(coprime(parts[i], parts[j]), "parfrac parts are not pairwise coprime");

    std::vector<Poly> out;
    out.reserve(parts.size());
    for (const auto& bi : parts) {
        if (bi.is_constant()) {
            out.emplace_back();
            continue;
        }
        Poly cofactor = exact_quotient(f.den(), bi);
        out.push_back((f.num() * inverse_mod(cofactor, bi)) % bi);
    }
    return out;
}

}  // namespace dres
