#include <gtest/gtest.h>

#include <set>

#include "iprng/generator.hpp"
#include "test_support.hpp"

using namespace iprng;
using iprng::testing::for_each_triple;
using iprng::testing::naive_orbit;

TEST(Generator, StepSendsIdealToIncrement) {
    const auto ring = make_context(5, 2);
    EXPECT_EQ(step(ring, Residue{0}, Residue{3}, Residue{7}).value, 7U);
    EXPECT_EQ(step(ring, Residue{10}, Residue{3}, Residue{7}).value, 7U);
    EXPECT_EQ(step(ring, Residue{2}, Residue{1}, Residue{0}).value, 13U);
}

TEST(Generator, OrbitPrefix) {
    const auto ring = make_context(5, 2);
    const auto xs = orbit(ring, {Residue{5}, Residue{3}, Residue{7}}, 2);
    ASSERT_EQ(xs.size(), 3U);
    EXPECT_EQ(xs[0].value, 7U);
    EXPECT_EQ(xs[1].value, 18U);
    EXPECT_EQ(xs[2].value, 13U);
    EXPECT_EQ(orbit(ring, {Residue{1}, Residue{0}, Residue{4}}, 0).size(), 1U);
}

TEST(Generator, EventualPeriodExamples) {
    const auto ring = make_context(5, 2);
    EXPECT_EQ(eventual_period(ring, {Residue{1}, Residue{0}, Residue{2}}), (OrbitResult{0, 2, Residue{2}}));
    const auto r = eventual_period(make_context(5, 3), {Residue{5}, Residue{3}, Residue{7}});
    EXPECT_EQ(r.period, 1U);
    EXPECT_EQ(r.preperiod, 3U);
    // x -> 1/x fixes 1.
    EXPECT_EQ(eventual_period(ring, {Residue{1}, Residue{0}, Residue{1}}), (OrbitResult{0, 1, Residue{1}}));
}

TEST(Generator, EventualPeriodMatchesNaive) {
    const auto ring = make_context(5, 2);
    OrbitScratch scratch(ring.modulus());
    for_each_triple(ring, [&](const GeneratorParams& params) {
        const auto expected = naive_orbit(ring, params);
        ASSERT_EQ(eventual_period(ring, params, scratch), expected);
        ASSERT_EQ(eventual_period(ring, params), expected);
    });
}

TEST(Generator, CycleRepresentativeIsOnCycle) {
    const auto ring = make_context(7, 2);
    for (int i = 0; i < 2000; ++i) {
        const GeneratorParams params{iprng::testing::random_residue(ring), iprng::testing::random_residue(ring),
                                     iprng::testing::random_residue(ring)};
        const auto r = eventual_period(ring, params);
        Residue x = r.cycle_representative;
        for (std::uint64_t k = 0; k < r.period; ++k) x = step(ring, x, params.a, params.b);
        EXPECT_EQ(x, r.cycle_representative);
        const auto prefix = orbit(ring, params, r.preperiod);
        EXPECT_EQ(prefix.back(), r.cycle_representative);
    }
}

TEST(Generator, MultiplierInIdealGivesFixedPoint) {
    for (auto [p, e] : {std::pair{5U, 2U}, std::pair{7U, 2U}}) {
        const auto ring = make_context(p, e);
        for_each_triple(ring, [&](const GeneratorParams& params) {
            if (ring.is_unit(params.a)) return;
            ASSERT_EQ(eventual_period(ring, params).period, 1U);
        });
    }
}

TEST(Generator, LfsrSequence) {
    const auto ring = make_context(5, 2);
    const auto y = lfsr_sequence(ring, Residue{2}, Residue{0}, Residue{3}, 3);
    ASSERT_EQ(y.size(), 4U);
    EXPECT_EQ(y[0].value, 1U);
    EXPECT_EQ(y[1].value, 3U);
    EXPECT_EQ(y[2].value, 2U);
    EXPECT_EQ(y[3].value, 6U);
    EXPECT_EQ(lfsr_sequence(ring, Residue{2}, Residue{0}, Residue{3}, 0).size(), 1U);
}

TEST(Generator, RatioRecurrenceReproducesOrbit) {
    const auto ring = make_context(5, 2);
    for_each_triple(ring, [&](const GeneratorParams& params) {
        ASSERT_TRUE(check_lemma4(ring, params.a, params.b, params.x0, 30));
    });
    const auto ring7 = make_context(7, 2);
    for (int i = 0; i < 3000; ++i) {
        EXPECT_TRUE(check_lemma4(ring7, iprng::testing::random_residue(ring7), iprng::testing::random_residue(ring7),
                                 iprng::testing::random_residue(ring7), 60));
    }
}

TEST(Generator, IdealIncrementPermutesUnits) {
    for (auto [p, e] : {std::pair{5U, 2U}, std::pair{7U, 2U}}) {
        const auto ring = make_context(p, e);
        for (std::uint64_t a = 1; a < ring.modulus(); ++a) {
            if (a % p == 0) continue;
            for (std::uint64_t b = 0; b < ring.modulus(); b += p) {
                std::set<std::uint64_t> image;
                for (std::uint64_t x = 1; x < ring.modulus(); ++x) {
                    if (x % p == 0) continue;
                    const Residue y = step(ring, Residue{x}, Residue{a}, Residue{b});
                    ASSERT_TRUE(ring.is_unit(y));
                    image.insert(y.value);
                }
                ASSERT_EQ(image.size(), ring.group_order());
                // A bijection of a finite set has no transient.
                for (std::uint64_t x = 1; x < ring.modulus(); ++x) {
                    if (x % p == 0) continue;
                    ASSERT_EQ(eventual_period(ring, {Residue{a}, Residue{b}, Residue{x}}).preperiod, 0U);
                }
            }
        }
    }
}

TEST(Generator, UnitIncrementCanLeaveUnits) {
    const auto ring = make_context(5, 2);
    // x = 1: a + b = 0 puts the next state in (p).
    EXPECT_FALSE(ring.is_unit(step(ring, Residue{1}, Residue{4}, Residue{1})));
}
