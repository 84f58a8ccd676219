#include <gtest/gtest.h>

#include "iprng/ring_gr2.hpp"
#include "test_support.hpp"

using namespace iprng;
using iprng::testing::naive_order;
using iprng::testing::random_quad;

namespace {

// t^2 - bt - a with b^2 + 4a a non-square mod p.
QuadContext make_quad(std::uint64_t p, unsigned e, std::uint64_t a, std::uint64_t b) {
    return QuadContext(make_context(p, e), Residue{a}, Residue{b});
}

std::vector<QuadContext> sample_extensions() {
    return {make_quad(5, 2, 2, 0), make_quad(5, 2, 1, 3), make_quad(5, 3, 3, 0), make_quad(7, 2, 1, 1),
            make_quad(11, 2, 2, 3)};
}

}  // namespace

TEST(QuadContext, RejectsSplitPolynomials) {
    EXPECT_THROW(make_quad(5, 2, 1, 0), Error);   // D = 4
    EXPECT_THROW(make_quad(5, 2, 1, 1), Error);   // D = 5
    EXPECT_NO_THROW(make_quad(5, 2, 1, 3));       // D = 13
}

TEST(QuadContext, GroupOrder) {
    EXPECT_EQ(make_quad(5, 2, 2, 0).group_order(), 24U * 25U);
    EXPECT_EQ(make_quad(7, 3, 1, 1).group_order(), 48U * 49U * 49U);
}

TEST(QuadContext, RootsSatisfyPolynomial) {
    for (const auto& q : sample_extensions()) {
        const auto& base = q.base();
        const QuadElem t = q.root();
        const QuadElem s = q.conjugate_root();
        for (const QuadElem& r : {t, s}) {
            const QuadElem value = q.sub(q.sub(q.mul(r, r), q.mul(q.element(q.b()), r)), q.element(q.a()));
            EXPECT_EQ(value, q.element(base.zero()));
        }
        EXPECT_EQ(q.add(t, s), q.element(q.b()));
        EXPECT_EQ(q.mul(t, s), q.element(base.neg(q.a())));
        EXPECT_EQ(q.conjugate(t), s);
    }
}

TEST(QuadContext, RingAxiomsOnRandomElements) {
    for (const auto& q : sample_extensions()) {
        for (int i = 0; i < 300; ++i) {
            const QuadElem x = random_quad(q), y = random_quad(q), z = random_quad(q);
            ASSERT_EQ(q.mul(x, y), q.mul(y, x));
            ASSERT_EQ(q.mul(q.mul(x, y), z), q.mul(x, q.mul(y, z)));
            ASSERT_EQ(q.mul(x, q.add(y, z)), q.add(q.mul(x, y), q.mul(x, z)));
            ASSERT_EQ(q.mul(x, q.one()), x);
            ASSERT_EQ(q.sub(q.add(x, y), y), x);
        }
    }
}

TEST(QuadContext, ConjugationIsInvolutiveAutomorphism) {
    for (const auto& q : sample_extensions()) {
        for (int i = 0; i < 300; ++i) {
            const QuadElem x = random_quad(q), y = random_quad(q);
            ASSERT_EQ(q.conjugate(q.mul(x, y)), q.mul(q.conjugate(x), q.conjugate(y)));
            ASSERT_EQ(q.conjugate(q.add(x, y)), q.add(q.conjugate(x), q.conjugate(y)));
            ASSERT_EQ(q.conjugate(q.conjugate(x)), x);
        }
    }
}

TEST(QuadContext, NormIsMultiplicativeAndInBaseRing) {
    for (const auto& q : sample_extensions()) {
        for (int i = 0; i < 300; ++i) {
            const QuadElem x = random_quad(q), y = random_quad(q);
            EXPECT_EQ(q.mul(x, q.conjugate(x)).c1.value, 0U);
            ASSERT_EQ(q.norm(q.mul(x, y)), q.base().mul(q.norm(x), q.norm(y)));
        }
    }
}

TEST(QuadContext, InverseOfUnits) {
    for (const auto& q : sample_extensions()) {
        for (int i = 0; i < 300; ++i) {
            const QuadElem x = random_quad(q);
            if (!q.is_unit(x)) {
                EXPECT_THROW(q.inverse(x), Error);
                continue;
            }
            ASSERT_EQ(q.mul(x, q.inverse(x)), q.one());
        }
        const QuadElem p_elem = q.element(Residue{q.base().prime()});
        EXPECT_FALSE(q.is_unit(p_elem));
        EXPECT_THROW(q.inverse(p_elem), Error);
    }
}

TEST(QuadContext, OrderMatchesNaiveOnRandomUnits) {
    const auto q = make_quad(5, 2, 2, 0);
    const auto mul = [&](const QuadElem& l, const QuadElem& r) { return q.mul(l, r); };
    int checked = 0;
    while (checked < 1000) {
        const QuadElem x = random_quad(q);
        if (!q.is_unit(x)) continue;
        const std::uint64_t order = q.order(x);
        ASSERT_EQ(order, naive_order(x, q.one(), mul));
        EXPECT_EQ(q.group_order() % order, 0U);
        ++checked;
    }
    EXPECT_THROW(q.order(q.element(Residue{0})), Error);
}

TEST(QuadContext, RootRatioHasNormOne) {
    for (const auto& q : sample_extensions()) {
        const QuadElem ratio = q.mul(q.root(), q.inverse(q.conjugate_root()));
        EXPECT_EQ(q.norm(ratio), q.base().one());
        const std::uint64_t p = q.base().prime();
        const std::uint64_t bound = (p + 1) * (q.base().modulus() / p);
        EXPECT_EQ(bound % q.order(ratio), 0U);
    }
}

TEST(QuadContext, ResidueImageIsHomomorphism) {
    for (const auto& q : sample_extensions()) {
        const auto& f = q.residue_field();
        for (int i = 0; i < 300; ++i) {
            const QuadElem x = random_quad(q), y = random_quad(q);
            ASSERT_EQ(q.residue_image(q.mul(x, y)), f.mul(q.residue_image(x), q.residue_image(y)));
            ASSERT_EQ(q.residue_image(q.add(x, y)), f.add(q.residue_image(x), q.residue_image(y)));
        }
    }
}

TEST(ResidueField, FrobeniusIsConjugation) {
    for (const auto& q : sample_extensions()) {
        const auto& f = q.residue_field();
        const std::uint64_t p = f.prime();
        for (std::uint64_t r0 = 0; r0 < p; ++r0) {
            for (std::uint64_t r1 = 0; r1 < p; ++r1) {
                const ResidueFieldElem x{r0, r1};
                EXPECT_EQ(f.pow(x, p), f.conjugate(x));
            }
        }
    }
}

TEST(ResidueField, IsAFieldWithCyclicUnitGroup) {
    const auto q = make_quad(7, 2, 1, 1);
    const auto& f = q.residue_field();
    const auto mul = [&](ResidueFieldElem l, ResidueFieldElem r) { return f.mul(l, r); };
    bool has_generator = false;
    for (std::uint64_t r0 = 0; r0 < 7; ++r0) {
        for (std::uint64_t r1 = 0; r1 < 7; ++r1) {
            const ResidueFieldElem x{r0, r1};
            if (x == ResidueFieldElem{}) {
                EXPECT_THROW(f.inverse(x), Error);
                EXPECT_THROW(f.order(x), Error);
                continue;
            }
            EXPECT_EQ(f.mul(x, f.inverse(x)), f.one());
            const std::uint64_t order = f.order(x);
            EXPECT_EQ(order, naive_order(x, f.one(), mul));
            has_generator = has_generator || order == 48;
        }
    }
    EXPECT_TRUE(has_generator);
}

TEST(ResidueField, ConstantsOfSplitAlgebra) {
    // f = t^2 - 1 splits mod 5; the prime-field constants still behave.
    const ResidueField f(5, 1, 0, multiply(factorize(4), factorize(6)));
    for (std::uint64_t c = 1; c < 5; ++c) {
        EXPECT_EQ(f.mul(f.constant(c), f.inverse(f.constant(c))), f.one());
        EXPECT_EQ(4 % f.order(f.constant(c)), 0U);
    }
    EXPECT_THROW(f.inverse({1, 1}), Error);  // (1 + t)(1 - t) = 0
}
