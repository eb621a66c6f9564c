#include <gtest/gtest.h>

#include <random>

#include "dres/dres.hpp"
#include "support.hpp"
#include "worked_example.hpp"

using namespace dres;
using dres::test::F;
using dres::test::P;

namespace {

// Partial-fraction data of a reduced form: every pole of the spec orbit
// carries the orbit sum at a single point.
void expect_reduced_matches_spec(const RatFun& reduced, const testkit::OrbitSpec& spec, std::set<Rat> poles = {}) {
    const auto table = testkit::dres_by_definition(spec);
    RatFun rebuilt;
    for (const auto& t : spec.terms) poles.insert(t.alpha);
    for (const auto& alpha : poles) {
        if (reduced.is_zero() || reduced.den()(alpha) != 0) continue;
        // residue of a simple pole: num / den'
        const Rat res = reduced.num()(alpha) / derivative(reduced.den())(alpha);
        rebuilt += RatFun(res) / RatFun(Poly{-alpha, 1});
        bool found = false;
        for (const auto& e : table)
            if (testkit::orbit_key(e.representative) == testkit::orbit_key(alpha)) {
                EXPECT_EQ(e.value, res);
                found = true;
            }
        EXPECT_TRUE(found);
    }
    EXPECT_EQ(rebuilt, reduced) << "reduced form has poles outside the spec";
    std::size_t nonzero = 0;
    for (const auto& e : table) nonzero += e.value != 0;
    EXPECT_EQ(reduced.is_zero() ? 0 : static_cast<std::size_t>(reduced.den().degree()), nonzero);
}

}  // namespace

TEST(Reduction, WorkedExample) {
    const auto out = simple_reduction(test::worked::f1(), true);
    EXPECT_EQ(out.reduced, test::worked::f1_reduced());
    const auto& parts = out.parts;
    EXPECT_EQ(parts.shift_set, (std::vector<long>{1, 2, 3}));
    EXPECT_EQ(parts.initial_roots, test::worked::b0());
    ASSERT_EQ(parts.levels, (std::vector<long>{0, 1, 2, 3}));
    EXPECT_EQ(parts.level_denominators[0], test::worked::b0());
    EXPECT_EQ(parts.level_denominators[1], test::worked::b1());
    EXPECT_EQ(parts.level_denominators[2], test::worked::b2());
    EXPECT_EQ(parts.level_denominators[3], test::worked::b3());
    EXPECT_EQ(normalize(parts.level_numerators[0], parts.level_denominators[0]), test::worked::a0_over_b0());
    EXPECT_EQ(normalize(parts.level_numerators[1], parts.level_denominators[1]), test::worked::a1_over_b1());
    EXPECT_EQ(normalize(parts.level_numerators[2], parts.level_denominators[2]), test::worked::a2_over_b2());
    EXPECT_EQ(normalize(parts.level_numerators[3], parts.level_denominators[3]), test::worked::a3_over_b3());
    ASSERT_TRUE(out.certificate);
    EXPECT_EQ(out.reduced + delta(*out.certificate), test::worked::f1());
}

TEST(Reduction, WorkedExampleParFrac) {
    using namespace test::worked;
    const auto a = parfrac(f1(), {b0(), b1(), b2(), b3()});
    ASSERT_EQ(a.size(), 4u);
    EXPECT_EQ(normalize(a[0], b0()), a0_over_b0());
    EXPECT_EQ(normalize(a[1], b1()), a1_over_b1());
    EXPECT_EQ(normalize(a[2], b2()), a2_over_b2());
    EXPECT_EQ(normalize(a[3], b3()), a3_over_b3());
}

TEST(Reduction, Examples) {
    auto out = simple_reduction(F("1/(x*(x+1))"), true);
    EXPECT_TRUE(out.reduced.is_zero());
    ASSERT_TRUE(out.certificate);
    EXPECT_EQ(*out.certificate, F("-1/x"));

    out = simple_reduction(F("1/x"), true);
    EXPECT_EQ(out.reduced, F("1/x"));
    ASSERT_TRUE(out.certificate);
    EXPECT_TRUE(out.certificate->is_zero());

    EXPECT_TRUE(simple_reduction(RatFun()).reduced.is_zero());
    EXPECT_THROW(simple_reduction(F("1/x^2")), PreconditionError);
    EXPECT_THROW(simple_reduction(F("x^2/(x+1)")), PreconditionError);
}

TEST(Reduction, RandomAgainstOracle) {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 100; ++i) {
        const auto spec = test::random_simple_spec(rng);
        const RatFun f = testkit::build_from_spec(spec);
        const auto out = simple_reduction(f, true);
        ASSERT_TRUE(out.certificate);
        EXPECT_EQ(out.reduced + delta(*out.certificate), f);
        EXPECT_TRUE(out.reduced.is_proper());
        if (!out.reduced.is_zero()) {
            EXPECT_TRUE(is_squarefree(out.reduced.den()));
            EXPECT_EQ(dispersion(out.reduced.den()), 0);
            EXPECT_TRUE(divides(out.reduced.den(), out.parts.initial_roots));
        }
        expect_reduced_matches_spec(out.reduced, spec);
    }
}

TEST(ReductionMulti, Examples) {
    auto out = simple_reduction_multi({F("1/x"), F("1/(x+1)")});
    ASSERT_EQ(out.size(), 2u);
    EXPECT_EQ(out[0], F("1/(x+1)"));
    EXPECT_EQ(out[1], F("1/(x+1)"));

    out = simple_reduction_multi({test::worked::f1(), test::worked::f1()});
    EXPECT_EQ(out[0], out[1]);
    EXPECT_EQ(out[0], test::worked::f1_reduced());

    out = simple_reduction_multi({test::worked::f1()});
    EXPECT_EQ(out[0], test::worked::f1_reduced());

    out = simple_reduction_multi({RatFun(), F("1/x")});
    EXPECT_TRUE(out[0].is_zero());
    EXPECT_EQ(out[1], F("1/x"));

    EXPECT_THROW(simple_reduction_multi({}), PreconditionError);
}

TEST(ReductionMulti, SharedSupportAndSummableDifference) {
    std::mt19937_64 rng(52);
    for (int i = 0; i < 40; ++i) {
        std::vector<RatFun> fs;
        std::vector<testkit::OrbitSpec> specs;
        const long n = test::uniform(rng, 1, 4);
        testkit::RandomSpecOptions opt;
        opt.max_order = 1;
        opt.max_orbits = 3;
        std::set<Rat> poles;  // the shared support may sit on any member's pole
        for (long j = 0; j < n; ++j) {
            specs.push_back(testkit::random_orbit_spec(rng, opt));
            fs.push_back(testkit::build_from_spec(specs.back()));
            for (const auto& t : specs.back().terms) poles.insert(t.alpha);
        }
        const auto out = simple_reduction_multi(fs);
        ASSERT_EQ(out.size(), fs.size());
        Poly common = 1;
        for (const auto& g : out) common = lcm(common, g.den());
        EXPECT_EQ(dispersion(common.degree() >= 1 ? common : P("x")), 0);
        for (std::size_t j = 0; j < fs.size(); ++j) {
            EXPECT_TRUE(is_summable(fs[j] - out[j]).summable);
            expect_reduced_matches_spec(out[j], specs[j], poles);
        }
    }
}
