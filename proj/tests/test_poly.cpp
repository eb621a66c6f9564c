#include <gtest/gtest.h>

#include <random>

#include "dres/dres.hpp"
#include "support.hpp"

using namespace dres;
using dres::test::P;

TEST(Poly, Basics) {
    Poly p{1, 2, 3};
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(p.lc(), 3);
    EXPECT_EQ(p(Rat(2)), 17);
    EXPECT_TRUE(Poly().is_zero());
    EXPECT_EQ(Poly().degree(), Poly::kZeroDegree);
    EXPECT_EQ((Poly{0, 0}.degree()), Poly::kZeroDegree);
    EXPECT_EQ(p - p, Poly());
    EXPECT_EQ(P("(x+1)*(x-1)"), P("x^2-1"));
}

TEST(Poly, DivRem) {
    auto r = divrem(P("x^2-1"), P("x-1"));
    EXPECT_EQ(r.quotient, P("x+1"));
    EXPECT_TRUE(r.remainder.is_zero());
    r = divrem(P("x^3"), P("x^2+1"));
    EXPECT_EQ(r.quotient, P("x"));
    EXPECT_EQ(r.remainder, P("-x"));
    r = divrem(Poly(5), P("x+2"));
    EXPECT_TRUE(r.quotient.is_zero());
    EXPECT_EQ(r.remainder, Poly(5));
    EXPECT_THROW(divrem(P("x"), Poly()), PreconditionError);
}

TEST(Poly, DivRemRandomIdentity) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        Poly a = test::random_poly(rng, 8), b = test::random_poly(rng, 4);
        if (b.is_zero()) continue;
        auto [q, r] = divrem(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_TRUE(r.is_zero() || r.degree() < b.degree());
    }
}

TEST(Poly, Gcd) {
    EXPECT_EQ(gcd(P("x^2-1"), P("x^2-2*x+1")), P("x-1"));
    EXPECT_EQ(gcd(P("x"), P("x+1")), Poly(1));
    EXPECT_EQ(gcd(P("2*x+2"), Poly()), P("x+1"));
    EXPECT_THROW(gcd(Poly(), Poly()), PreconditionError);
}

TEST(Poly, GcdRandomCommonFactor) {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 100; ++i) {
        Poly c = test::random_poly(rng, 3), a = test::random_poly(rng, 4), b = test::random_poly(rng, 4);
        if (c.degree() < 1 || a.is_zero() || b.is_zero()) continue;
        Poly g = gcd(a * c, b * c);
        EXPECT_TRUE(g.is_monic());
        EXPECT_TRUE(divides(g, a * c));
        EXPECT_TRUE(divides(g, b * c));
        EXPECT_TRUE(divides(monic(c), g));
        // cofactors coprime
        EXPECT_EQ(gcd(exact_quotient(a * c, g), exact_quotient(b * c, g)), Poly(1));
    }
}

TEST(Poly, ExtGcd) {
    auto e = ext_gcd(P("x"), P("x+1"));
    EXPECT_EQ(e.g, Poly(1));
    EXPECT_EQ(e.s, Poly(-1));
    EXPECT_EQ(e.t, Poly(1));
    e = ext_gcd(P("x-1"), P("x-1"));
    EXPECT_EQ(e.g, P("x-1"));
    EXPECT_EQ(e.s * P("x-1") + e.t * P("x-1"), e.g);

    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        Poly a = test::random_poly(rng, 5), b = test::random_poly(rng, 5);
        if (a.is_zero() || b.is_zero()) continue;
        auto r = ext_gcd(a, b);
        EXPECT_EQ(r.s * a + r.t * b, r.g);
        EXPECT_EQ(r.g, gcd(a, b));
    }
}

TEST(Poly, BezoutAndInverse) {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 100; ++i) {
        Poly a = test::random_poly(rng, 4), b = test::random_poly(rng, 4), c = test::random_poly(rng, 6);
        if (a.is_zero() || b.degree() < 1 || !coprime(a, b)) continue;
        auto [s, t] = solve_bezout(a, b, c);
        EXPECT_EQ(s * a + t * b, c);
        EXPECT_LT(s.degree(), b.degree());
        EXPECT_EQ((a * inverse_mod(a, b)) % b, Poly(1));
    }
    EXPECT_THROW(inverse_mod(P("x"), P("x^2")), PreconditionError);
}

TEST(Poly, Shift) {
    EXPECT_EQ(shift(P("x^2"), 1), P("x^2+2*x+1"));
    Poly p = P("3*x^3-x+7");
    EXPECT_EQ(shift(p, 0), p);
    std::mt19937_64 rng(15);
    for (int i = 0; i < 50; ++i) {
        Poly q = test::random_poly(rng, 6);
        Rat c = test::random_rat(rng, 9);
        EXPECT_EQ(shift(q, c), compose(q, Poly{c, 1}));
        EXPECT_EQ(shift(shift(q, c), -c), q);
    }
}

TEST(Poly, Derivative) {
    EXPECT_EQ(derivative(P("x^3")), P("3*x^2"));
    EXPECT_EQ(derivative(Poly(7)), Poly());
    EXPECT_EQ(derivative(P("x^4 - 2*x + 1")), P("4*x^3 - 2"));
}

TEST(Poly, Squarefree) {
    auto s = squarefree_decomposition(P("x^3*(x+2)^3*(x+3)*(x^2+1)*(x^2+4*x+5)^2"));
    ASSERT_EQ(s.factors.size(), 3u);
    EXPECT_EQ(s.factors[0].factor, P("(x+3)*(x^2+1)"));
    EXPECT_EQ(s.factors[0].multiplicity, 1u);
    EXPECT_EQ(s.factors[1].factor, P("x^2+4*x+5"));
    EXPECT_EQ(s.factors[1].multiplicity, 2u);
    EXPECT_EQ(s.factors[2].factor, P("x*(x+2)"));
    EXPECT_EQ(s.factors[2].multiplicity, 3u);

    s = squarefree_decomposition(P("(x-1)^2"));
    ASSERT_EQ(s.factors.size(), 1u);
    EXPECT_EQ(s.factors[0].factor, P("x-1"));
    EXPECT_EQ(s.factors[0].multiplicity, 2u);

    s = squarefree_decomposition(P("x^2+1"));
    ASSERT_EQ(s.factors.size(), 1u);
    EXPECT_EQ(s.factors[0].multiplicity, 1u);

    std::mt19937_64 rng(16);
    for (int i = 0; i < 60; ++i) {
        Poly p = Rat(3) * pow(test::random_poly(rng, 2), 3) * pow(test::random_poly(rng, 2), 2) * test::random_poly(rng, 3);
        if (p.is_zero()) continue;
        auto d = squarefree_decomposition(p);
        EXPECT_EQ(d.expand(), p);
        for (std::size_t a = 0; a < d.factors.size(); ++a) {
            EXPECT_TRUE(is_squarefree(d.factors[a].factor));
            EXPECT_TRUE(d.factors[a].factor.is_monic());
            for (std::size_t b = a + 1; b < d.factors.size(); ++b) EXPECT_TRUE(coprime(d.factors[a].factor, d.factors[b].factor));
        }
    }
}

namespace {

// Res_x(b(x), b(x+z)) = lc^d * prod_{b(a)=0} b(a+z), for b split over Q.
Poly root_product_resultant(const Rat& lc, const std::vector<Rat>& roots) {
    Poly b{lc};
    for (const auto& r : roots) b *= Poly{-r, 1};
    Poly out{pow(lc, static_cast<long>(roots.size()))};
    for (const auto& r : roots) out *= shift(b, r);
    return out;
}

}  // namespace

TEST(Resultant, ShiftExamples) {
    EXPECT_EQ(resultant_shift(P("x*(x+1)")), P("x^2*(x^2-1)"));
    EXPECT_EQ(resultant_shift(P("x^2")), P("x^4"));
    const Poly r = resultant_shift(P("x^2+1"));
    for (const Int& n : integer_roots(r)) EXPECT_EQ(n, 0);
    EXPECT_EQ(r, resultant_shift_subresultant(P("x^2+1")));
}

TEST(Resultant, ShiftRootProductOracle) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 40; ++i) {
        const int d = 2 + static_cast<int>(rng() % 4);
        std::vector<Rat> roots;
        for (int j = 0; j < d; ++j) roots.push_back(test::random_rat(rng, 5, 3));
        Rat lc = test::random_rat(rng, 4);
        if (lc == 0) lc = 1;
        Poly b{lc};
        for (const auto& r : roots) b *= Poly{-r, 1};
        EXPECT_EQ(resultant_shift(b), root_product_resultant(lc, roots));
    }
}

TEST(Resultant, ScalarAgainstSylvester) {
    std::mt19937_64 rng(18);
    for (int i = 0; i < 60; ++i) {
        Poly a = test::random_poly(rng, 5), b = test::random_poly(rng, 4);
        if (a.degree() < 1 || b.degree() < 1) continue;
        EXPECT_EQ(resultant(a, b), test::sylvester_resultant(a, b));
    }
}

TEST(Resultant, ResidueValues) {
    // Res_x(x^2+1, z - (-x/2)) = (z - i/2)(z + i/2) = z^2 + 1/4
    EXPECT_EQ(resultant_residue_values(P("x^2+1"), P("-x/2")), P("x^2+1/4"));
}

TEST(Roots, IntegerRoots) {
    auto r = integer_roots(P("x*(x-1)*(x+2)"));
    EXPECT_EQ(r, (std::vector<Int>{-2, 0, 1}));
    EXPECT_TRUE(integer_roots(P("x^2+1")).empty());
    EXPECT_EQ(integer_roots(P("x-1")), (std::vector<Int>{1}));
    EXPECT_EQ(integer_roots(P("(2*x-1)*(x-3)^2*x^2")), (std::vector<Int>{0, 3}));
    EXPECT_EQ(integer_roots(P("x^2 - 1000000^2")), (std::vector<Int>{-1000000, 1000000}));

    std::mt19937_64 rng(19);
    for (int i = 0; i < 50; ++i) {
        std::set<long> want;
        Poly p = P("x^2+x+1");
        const int n = 1 + static_cast<int>(rng() % 4);
        for (int j = 0; j < n; ++j) {
            long v = static_cast<long>(rng() % 41) - 20;
            want.insert(v);
            p *= Poly{Rat(-v), 1};
        }
        std::vector<Int> got = integer_roots(p);
        std::vector<Int> expect(want.begin(), want.end());
        EXPECT_EQ(got, expect);
    }
}

TEST(Parser, Examples) {
    EXPECT_EQ(parse("x - x"), RatFun());
    EXPECT_EQ(parse("1/x + 1/x"), RatFun(normalize(Poly(2), P("x"))));
    const RatFun f = parse("1/(x^3*(x+2)^3*(x+3)*(x^2+1)*(x^2+4*x+5)^2)");
    EXPECT_EQ(f.num(), Poly(1));
    EXPECT_EQ(f.den(), P("x^3") * pow(P("x+2"), 3) * P("x+3") * P("x^2+1") * pow(P("x^2+4*x+5"), 2));
    EXPECT_EQ(parse("2^3"), RatFun(8));
    EXPECT_THROW(parse("2^3^1"), ParseError);
    EXPECT_EQ(parse("-x^2"), RatFun(P("-x^2")));
    EXPECT_EQ(parse("8/4/2"), RatFun(1));
    EXPECT_EQ(parse("1-2-3"), RatFun(-4));
    EXPECT_EQ(parse("x^-1"), normalize(Poly(1), P("x")));
    EXPECT_EQ(parse("x^(-2)"), normalize(Poly(1), P("x^2")));
}

TEST(Parser, Errors) {
    auto offset_of = [](const std::string& s) -> long {
        try {
            parse(s);
        } catch (const ParseError& e) {
            return static_cast<long>(e.offset());
        }
        return -1;
    };
    EXPECT_EQ(offset_of("2x"), 1);
    EXPECT_EQ(offset_of("1/(x-x)"), 1);
    EXPECT_EQ(offset_of("(x+1"), 4);
    EXPECT_EQ(offset_of("y"), 0);
    EXPECT_EQ(offset_of(""), 0);
    EXPECT_EQ(offset_of("x^"), 2);
    EXPECT_EQ(offset_of("x ** 2"), 3);
}

TEST(Parser, PrintRoundTrip) {
    std::mt19937_64 rng(20);
    for (int i = 0; i < 100; ++i) {
        RatFun f = normalize(test::random_poly(rng, 5), test::random_poly(rng, 4) + Poly(Rat(1, 3)));
        EXPECT_EQ(parse(to_string(f)), f) << to_string(f);
        EXPECT_EQ(parse(to_string(f.num())), RatFun(f.num()));
    }
    EXPECT_EQ(to_string(P("3/4*x^2 - x + 1")), "3/4*x^2 - x + 1");
    EXPECT_EQ(to_string(Poly()), "0");
}

TEST(Modular, ShiftResultantBackendsAgree) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 30; ++i) {
        const Poly b = test::random_poly_exact(rng, static_cast<int>(test::uniform(rng, 2, 7)), 30, 6);
        const Poly r = resultant_shift(b);
        EXPECT_EQ(r, resultant_shift_rational(b));
        if (b.degree() <= 5) EXPECT_EQ(r, resultant_shift_subresultant(b));
        EXPECT_EQ(r(Rat(0)), 0);
        EXPECT_LE(r.degree(), b.degree() * b.degree());
    }
}

TEST(Modular, GcdMatchesPrs) {
    std::mt19937_64 rng(24);
    for (int i = 0; i < 30; ++i) {
        const Poly c = test::random_poly_exact(rng, static_cast<int>(test::uniform(rng, 0, 12)), 50);
        const Poly a = c * test::random_poly_exact(rng, 30, 50), b = c * test::random_poly_exact(rng, 25, 50);
        const auto ia = detail::primitive_integer(a), ib = detail::primitive_integer(b);
        EXPECT_EQ(detail::modular_gcd(ia, ib), detail::primitive_prs_gcd(ia, ib));
        EXPECT_EQ(gcd(a, b), monic(detail::to_poly(detail::primitive_prs_gcd(ia, ib))));
    }
}

TEST(Modular, PrimeFieldResultant) {
    // Res(x^2 + 1, x - 2) = 5 and Res(x - 2, x^2 + 1) = 5
    const detail::modp::u64 p = detail::modp::prime(0);
    EXPECT_EQ(detail::modp::resultant({1, 0, 1}, {p - 2, 1}, p), 5u);
    EXPECT_EQ(detail::modp::resultant({p - 2, 1}, {1, 0, 1}, p), 5u);
    // Res(x, x + 1) = 1, Res(x^2, x^2 + 1) = 1
    EXPECT_EQ(detail::modp::resultant({0, 1}, {1, 1}, p), 1u);
    EXPECT_EQ(detail::modp::resultant({0, 0, 1}, {1, 0, 1}, p), 1u);
}
