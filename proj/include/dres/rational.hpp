#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "dres/error.hpp"

namespace dres {

using Int = mpz_class;
/// Exact rational scalar. gmpxx keeps results of arithmetic canonical
/// (gcd(num, den) = 1, den > 0); values built from raw parts go through
/// make_rat.
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    detail::require(den != 0, "rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }
inline std::string to_string(const Int& n) { return n.get_str(); }

/// Parses `[-]digits[/digits]`. Whitespace is not accepted.
inline Rat parse_rat(std::string_view text) {
    auto digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char ch : s)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        return true;
    };
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!digits(num) || !digits(den))
        throw PreconditionError("malformed rational literal '" + std::string(text) + "'");
    Int n(std::string(num), 10);
    Int d(std::string(den), 10);
    if (negative) n = -n;
    return make_rat(n, d);
}

inline Int abs(const Int& n) {
    Int r;
    mpz_abs(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int exact_div(const Int& a, const Int& b) {
    Int r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat pow(const Rat& base, long e) {
    if (e < 0) {
        detail::require(base != 0, "negative power of zero");
        auto n = static_cast<unsigned long>(-e);
        return make_rat(pow(Int(base.get_den()), n), pow(Int(base.get_num()), n));
    }
    auto n = static_cast<unsigned long>(e);
    return make_rat(pow(Int(base.get_num()), n), pow(Int(base.get_den()), n));
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace dres
