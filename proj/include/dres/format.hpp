#pragma once

#include <string>
#include <vector>

#include "dres/poly.hpp"
#include "dres/ratfun.hpp"

namespace dres {

/// Human-readable polynomial in descending powers, e.g. `3/4*x^2 - x + 1`.
/// The output is accepted by parse().
inline std::string to_string(const Poly& p, const char* var = "x") {
    if (p.is_zero()) return "0";
    std::string out;
    const auto coeffs = p.coeffs();
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const Rat& c = coeffs[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rat mag = negative ? Rat(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        std::string mono;
        if (i >= 1) mono = var;
        if (i >= 2) mono += "^" + std::to_string(i);
        if (mono.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.get_str() + "*" + mono;
    }
    return out;
}

inline std::string to_string(const RatFun& f) {
    if (f.is_polynomial()) return to_string(f.num());
    return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

/// Ascending coefficient strings, the machine-readable form.
inline std::vector<std::string> coefficient_strings(const Poly& p) {
    std::vector<std::string> out;
    out.reserve(p.size());
    for (const auto& c : p.coeffs()) out.push_back(c.get_str());
    return out;
}

}  // namespace dres
