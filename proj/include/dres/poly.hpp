#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "dres/error.hpp"
#include "dres/rational.hpp"

namespace dres {

/// Dense univariate polynomial over the rationals; coefficient i belongs
/// to x^i. The zero polynomial has no coefficients and otherwise the
/// leading coefficient is nonzero.
class Poly {
public:
    /// Degree reported for the zero polynomial. Callers test is_zero()
    /// before doing arithmetic with degrees.
    static constexpr long kZeroDegree = std::numeric_limits<long>::min();

    Poly() = default;
    Poly(const Rat& c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) c_.push_back(c);
    }
    Poly(long c) : Poly(Rat(c)) {}  // NOLINT(google-explicit-constructor)
    Poly(int c) : Poly(Rat(c)) {}   // NOLINT(google-explicit-constructor)
    Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly x() { return Poly{Rat(0), Rat(1)}; }

    static Poly monomial(const Rat& c, std::size_t n) {
        if (c == 0) return {};
        std::vector<Rat> v(n + 1);
        v[n] = c;
        return Poly(std::move(v));
    }

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    long degree() const noexcept { return c_.empty() ? kZeroDegree : static_cast<long>(c_.size()) - 1; }
    /// Number of stored coefficients, i.e. degree + 1, and 0 for zero.
    std::size_t size() const noexcept { return c_.size(); }

    const Rat& lc() const {
        detail::require(!c_.empty(), "leading coefficient of zero polynomial");
        return c_.back();
    }

    /// Coefficient of x^i; zero past the degree.
    Rat operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    std::span<const Rat> coeffs() const noexcept { return c_; }

    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Rat operator()(const Rat& at) const {
        Rat acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
        return acc;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    Poly& operator*=(const Rat& s) {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& c : c_) c *= s;
        return *this;
    }

    Poly& operator/=(const Rat& s) {
        detail::require(s != 0, "polynomial divided by zero scalar");
        for (auto& c : c_) c /= s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
    friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
    friend Poly operator/(Poly a, const Rat& s) { return a /= s; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rat> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(out));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rat> c_;
};

struct DivRem {
    Poly quotient;
    Poly remainder;
};

inline DivRem divrem(const Poly& a, const Poly& b) {
    detail::require(!b.is_zero(), "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly{}, a};
    std::vector<Rat> rem(a.coeffs().begin(), a.coeffs().end());
    const std::size_t db = b.size() - 1;
    std::vector<Rat> quo(rem.size() - db);
    const Rat inv_lc = 1 / b.lc();
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i] == 0) continue;
        Rat q = rem[i] * inv_lc;
        quo[i - db] = q;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * b[j];
    }
    rem.resize(db);
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

inline Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).remainder; }

/// Quotient of a division known to be exact; a nonzero remainder is an
/// internal error.
inline Poly exact_quotient(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    detail::ensure(r.is_zero(), "inexact polynomial division");
    return q;
}

inline bool divides(const Poly& d, const Poly& p) { return (p % d).is_zero(); }

inline Poly monic(const Poly& p) { return p.is_zero() ? p : p / p.lc(); }

inline Poly derivative(const Poly& p) {
    if (p.size() <= 1) return {};
    std::vector<Rat> out(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * static_cast<unsigned long>(i);
    return Poly(std::move(out));
}

inline Rat eval(const Poly& p, const Rat& at) { return p(at); }

/// p(x + c), by Horner's scheme on the shifted variable.
inline Poly shift(const Poly& p, const Rat& c) {
    if (c == 0 || p.is_constant()) return p;
    std::vector<Rat> acc;
    auto coeffs = p.coeffs();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        // acc <- acc * (x + c) + coefficient
        acc.insert(acc.begin(), Rat(0));
        for (std::size_t i = 0; i + 1 < acc.size(); ++i) acc[i] += c * acc[i + 1];
        acc[0] += *it;
    }
    return Poly(std::move(acc));
}

inline Poly pow(const Poly& base, unsigned long e) {
    Poly result = 1;
    Poly sq = base;
    while (e != 0) {
        if (e & 1UL) result *= sq;
        e >>= 1;
        if (e != 0) sq *= sq;
    }
    return result;
}

/// Composition p(q(x)).
inline Poly compose(const Poly& p, const Poly& q) {
    Poly acc;
    auto coeffs = p.coeffs();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * q + Poly(*it);
    return acc;
}

/// Least common multiple of the coefficient denominators.
inline Int denominator_lcm(const Poly& p) {
    Int l = 1;
    for (const auto& c : p.coeffs()) l = lcm(l, Int(c.get_den()));
    return l;
}

namespace detail {

using IntPoly = std::vector<Int>;

inline void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Int content(const IntPoly& p) {
    Int g = 0;
    for (const auto& c : p) {
        g = gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

/// Divides out the content and makes the leading coefficient positive.
inline void make_primitive(IntPoly& p) {
    trim(p);
    if (p.empty()) return;
    Int g = content(p);
    if (p.back() < 0) g = -g;
    if (g != 1)
        for (auto& c : p) c = exact_div(c, g);
}

/// Primitive integer polynomial with the same roots as p.
inline IntPoly primitive_integer(const Poly& p) {
    Int l = denominator_lcm(p);
    IntPoly out;
    out.reserve(p.size());
    for (const auto& c : p.coeffs()) out.push_back(exact_div(Int(c.get_num() * l), Int(c.get_den())));
    make_primitive(out);
    return out;
}

inline Poly to_poly(const IntPoly& p) {
    std::vector<Rat> v;
    v.reserve(p.size());
    for (const auto& c : p) v.emplace_back(c);
    return Poly(std::move(v));
}

inline Int eval(const IntPoly& p, const Int& at) {
    Int acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * at + *it;
    return acc;
}

}  // namespace detail
}  // namespace dres
