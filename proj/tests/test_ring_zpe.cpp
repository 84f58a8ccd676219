#include <gtest/gtest.h>

#include "iprng/ring_zpe.hpp"
#include "test_support.hpp"

using namespace iprng;
using iprng::testing::naive_order;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no iprng::Error thrown";
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(RingContext, Construction) {
    const auto ring = make_context(5, 3);
    EXPECT_EQ(ring.prime(), 5U);
    EXPECT_EQ(ring.exponent(), 3U);
    EXPECT_EQ(ring.modulus(), 125U);
    EXPECT_EQ(ring.group_order(), 100U);
    EXPECT_EQ(make_context(3, 1).modulus(), 3U);
    EXPECT_EQ(make_context(5, 13).modulus(), 1220703125U);
}

TEST(RingContext, RejectsBadParameters) {
    EXPECT_EQ(kind_of([] { make_context(4, 2); }), ErrorKind::NotPrime);
    EXPECT_EQ(kind_of([] { make_context(2, 3); }), ErrorKind::NotPrime);
    EXPECT_EQ(kind_of([] { make_context(1, 3); }), ErrorKind::NotPrime);
    EXPECT_EQ(kind_of([] { make_context(5, 0); }), ErrorKind::ExponentOutOfRange);
    EXPECT_EQ(kind_of([] { make_context(5, 14); }), ErrorKind::ModulusTooLarge);
    EXPECT_EQ(kind_of([] { make_context(65537, 2); }), ErrorKind::ModulusTooLarge);
}

TEST(RingContext, ResidueNormalizes) {
    const auto ring = make_context(5, 2);
    EXPECT_EQ(ring.residue(-1).value, 24U);
    EXPECT_EQ(ring.residue(26).value, 1U);
    EXPECT_EQ(ring.residue(-50).value, 0U);
}

TEST(RingContext, Arithmetic) {
    const auto ring = make_context(7, 2);
    EXPECT_EQ(ring.add(Residue{40}, Residue{20}).value, 11U);
    EXPECT_EQ(ring.sub(Residue{3}, Residue{10}).value, 42U);
    EXPECT_EQ(ring.neg(Residue{0}).value, 0U);
    EXPECT_EQ(ring.mul(Residue{10}, Residue{10}).value, 2U);
    EXPECT_EQ(ring.pow(Residue{3}, 0).value, 1U);
    EXPECT_EQ(ring.inverse(Residue{2}).value, 25U);
}

TEST(RingContext, InverseIsInvolutionOnUnits) {
    for (auto [p, e] : {std::pair{5U, 3U}, std::pair{7U, 2U}, std::pair{13U, 2U}}) {
        const auto ring = make_context(p, e);
        for (std::uint64_t v = 0; v < ring.modulus(); ++v) {
            const Residue x{v};
            if (!ring.is_unit(x)) continue;
            const Residue inv = ring.inverse(x);
            ASSERT_EQ(ring.mul(x, inv), ring.one()) << v;
            ASSERT_EQ(ring.inverse(inv), x) << v;
        }
    }
}

TEST(RingContext, InverseOfNonUnitThrows) {
    const auto ring = make_context(5, 2);
    EXPECT_EQ(kind_of([&] { ring.inverse(Residue{0}); }), ErrorKind::NotUnit);
    EXPECT_EQ(kind_of([&] { ring.inverse(Residue{10}); }), ErrorKind::NotUnit);
}

TEST(RingContext, Valuation) {
    const auto ring = make_context(5, 3);
    EXPECT_EQ(ring.valuation(Residue{0}), 3U);
    EXPECT_EQ(ring.valuation(Residue{1}), 0U);
    EXPECT_EQ(ring.valuation(Residue{10}), 1U);
    EXPECT_EQ(ring.valuation(Residue{75}), 2U);
    for (std::uint64_t v = 1; v < ring.modulus(); ++v) {
        const unsigned k = ring.valuation(Residue{v});
        std::uint64_t pk = 1;
        for (unsigned i = 0; i < k; ++i) pk *= 5;
        EXPECT_EQ(v % pk, 0U);
        EXPECT_NE(v % (pk * 5), 0U);
    }
}

TEST(RingContext, DigitsRoundTrip) {
    const auto ring = make_context(5, 3);
    EXPECT_EQ(ring.padic_digits(Residue{7}).digits, (std::vector<std::uint64_t>{2, 1, 0}));
    EXPECT_EQ(ring.padic_digits(Residue{124}).digits, (std::vector<std::uint64_t>{4, 4, 4}));
    for (std::uint64_t v = 0; v < ring.modulus(); ++v) {
        const auto d = ring.padic_digits(Residue{v});
        ASSERT_EQ(d.digits.size(), 3U);
        EXPECT_EQ(ring.from_digits(d).value, v);
    }
}

TEST(RingContext, ReductionIsRingHomomorphism) {
    const auto ring = make_context(5, 3);
    for (unsigned k = 1; k < 3; ++k) {
        const auto target = ring.reduced(k);
        EXPECT_EQ(target.exponent(), 3 - k);
        for (std::uint64_t x = 0; x < 125; ++x) {
            for (std::uint64_t y = 0; y < 125; ++y) {
                const Residue rx{x}, ry{y};
                ASSERT_EQ(ring.reduce(ring.add(rx, ry), k), target.add(ring.reduce(rx, k), ring.reduce(ry, k)));
                ASSERT_EQ(ring.reduce(ring.mul(rx, ry), k), target.mul(ring.reduce(rx, k), ring.reduce(ry, k)));
            }
        }
    }
}

TEST(RingContext, ReducedContexts) {
    const auto ring = make_context(7, 3);
    EXPECT_EQ(ring.reduced(0).modulus(), 343U);
    EXPECT_EQ(ring.reduced(2).modulus(), 7U);
    EXPECT_EQ(ring.reduced(2).group_order(), 6U);
    EXPECT_EQ(ring.reduce(Residue{100}, 1).value, 2U);
    EXPECT_EQ(kind_of([&] { ring.reduced(3); }), ErrorKind::ReductionOutOfRange);
    EXPECT_EQ(kind_of([&] { ring.reduce(Residue{1}, 3); }), ErrorKind::ReductionOutOfRange);
}

TEST(RingContext, MultOrderMatchesNaive) {
    for (auto [p, e] : {std::pair{5U, 2U}, std::pair{7U, 2U}, std::pair{5U, 3U}, std::pair{11U, 2U}}) {
        const auto ring = make_context(p, e);
        const auto mul = [&](Residue l, Residue r) { return ring.mul(l, r); };
        for (std::uint64_t v = 1; v < ring.modulus(); ++v) {
            const Residue x{v};
            if (!ring.is_unit(x)) continue;
            ASSERT_EQ(ring.mult_order(x), naive_order(x, ring.one(), mul)) << p << '^' << e << ' ' << v;
        }
    }
    const auto ring = make_context(5, 2);
    EXPECT_EQ(ring.mult_order(Residue{2}), 20U);
    EXPECT_EQ(ring.mult_order(Residue{24}), 2U);
    EXPECT_EQ(ring.mult_order(Residue{6}), 5U);
    EXPECT_EQ(kind_of([&] { ring.mult_order(Residue{5}); }), ErrorKind::NotUnit);
}

TEST(RingContext, SqrtUnitExhaustive) {
    const auto ring = make_context(5, 3);
    for (std::uint64_t v = 0; v < ring.modulus(); ++v) {
        const Residue x{v};
        if (!ring.is_unit(x)) {
            EXPECT_EQ(kind_of([&] { ring.sqrt_unit(x); }), ErrorKind::NotUnit);
        } else if (v % 5 == 1 || v % 5 == 4) {
            const Residue r = ring.sqrt_unit(x);
            ASSERT_EQ(ring.mul(r, r), x) << v;
            EXPECT_GE(r.value % 5, 1U);
            EXPECT_LE(r.value % 5, 2U);
        } else {
            EXPECT_EQ(kind_of([&] { ring.sqrt_unit(x); }), ErrorKind::NonResidue);
        }
    }
}

TEST(RingContext, SqrtUnitAtHighPrecision) {
    const auto ring = make_context(5, 13);
    for (int i = 0; i < 500; ++i) {
        const Residue r = iprng::testing::random_unit(ring);
        const Residue square = ring.mul(r, r);
        const Residue root = ring.sqrt_unit(square);
        EXPECT_EQ(ring.mul(root, root), square);
        EXPECT_TRUE(root == r || root == ring.neg(r));
    }
}

TEST(RingContext, Equality) {
    EXPECT_EQ(make_context(5, 2), make_context(5, 2));
    EXPECT_FALSE(make_context(5, 2) == make_context(5, 3));
    EXPECT_EQ(make_context(5, 3).reduced(1), make_context(5, 2));
}
