#include <set>

#include <gtest/gtest.h>

#include <permwalsh/error.hpp>
#include <permwalsh/field.hpp>
#include <permwalsh/io.hpp>

#include "oracle.hpp"

using namespace permwalsh;

TEST(FieldCtx, ExponentsFromQ) {
    const FieldCtx f2(2), f4(4);
    EXPECT_EQ(f2.q(), 4U);
    EXPECT_EQ(f2.d(), 7U);
    EXPECT_EQ(f2.d_prime(), 13U);
    EXPECT_EQ(f4.q(), 16U);
    EXPECT_EQ(f4.d(), 91U);
    EXPECT_EQ(f4.d_prime(), 241U);
}

TEST(FieldCtx, RejectsOddOrOutOfRange) {
    EXPECT_THROW(FieldCtx(3), OddExtensionDegree);
    EXPECT_THROW(FieldCtx(0), OddExtensionDegree);
    EXPECT_THROW(FieldCtx(18), OddExtensionDegree);
}

TEST(FieldCtx, DeterministicParameters) {
    for (int e : {2, 4, 6, 8}) {
        const FieldCtx a(e), b(e);
        EXPECT_EQ(a.modulus(), b.modulus());
        EXPECT_EQ(a.lambda(), b.lambda());
        EXPECT_EQ(a.generator(), b.generator());
        EXPECT_EQ(a.mu_generator(), b.mu_generator());
    }
}

TEST(FieldCtx, ParametersMatchOracle) {
    for (int e : {2, 4, 6, 8}) {
        const FieldCtx ctx(e);
        const oracle::Field o(e);
        EXPECT_EQ(ctx.modulus(), o.modulus) << "e=" << e;
        EXPECT_EQ(ctx.lambda().bits, o.lambda) << "e=" << e;
        // g: smallest element of order q-1
        std::uint64_t g = 0;
        for (std::uint64_t a = 2; g == 0; ++a) {
            bool primitive = true;
            for (std::uint64_t k = 1; k < o.q - 1 && primitive; ++k) primitive = o.pow(a, k) != 1;
            if (primitive) g = a;
        }
        EXPECT_EQ(ctx.generator().bits, g) << "e=" << e;
        EXPECT_EQ(ctx.omega().bits, o.pow(g, (o.q - 1) / 3)) << "e=" << e;
    }
}

TEST(FieldCtx, KnownSmallContexts) {
    const FieldCtx f2(2);
    EXPECT_EQ(f2.modulus(), 0x7U);
    EXPECT_EQ(to_string(f2.omega()), "2");
    EXPECT_EQ(to_string(f2.mu_generator()), "3+2*t");
    EXPECT_EQ(FieldCtx(8).modulus(), 0x11bU);
}

TEST(GFq, MultiplicationMatchesOracle) {
    for (int e : {2, 4, 6}) {
        const FieldCtx ctx(e);
        const oracle::Field o(e);
        for (std::uint32_t a = 0; a < ctx.q(); ++a)
            for (std::uint32_t b = 0; b < ctx.q(); ++b)
                ASSERT_EQ(ctx.mul(Elem{a}, Elem{b}).bits, o.mul(a, b)) << e << ' ' << a << ' ' << b;
    }
}

TEST(GFq, InverseAndDivision) {
    const FieldCtx ctx(4);
    EXPECT_EQ(ctx.inv(Elem{1}), Elem{1});
    EXPECT_THROW(ctx.inv(Elem{0}), DivisionByZero);
    for (std::uint32_t a = 1; a < ctx.q(); ++a) {
        EXPECT_EQ(ctx.mul(Elem{a}, ctx.inv(Elem{a})), Elem{1});
        EXPECT_EQ(ctx.pow(Elem{a}, ctx.q() - 1), Elem{1});
        EXPECT_EQ(ctx.pow(Elem{a}, -1), ctx.inv(Elem{a}));
    }
}

TEST(GFq, CubeRootsOfUnity) {
    const FieldCtx ctx(2);
    const Elem w = ctx.omega();
    const Elem w2 = ctx.mul(w, w);
    EXPECT_NE(w, Elem{1});
    EXPECT_EQ(ctx.mul(w, w2), Elem{1});
    EXPECT_EQ(ctx.tr(w), 1);
}

TEST(GFq, TraceMatchesFrobeniusSum) {
    for (int e : {2, 4, 6, 8}) {
        const FieldCtx ctx(e);
        const oracle::Field o(e);
        EXPECT_EQ(ctx.tr(Elem{0}), 0);
        EXPECT_EQ(ctx.tr(Elem{1}), 0);
        int ones = 0;
        for (std::uint32_t a = 0; a < ctx.q(); ++a) {
            ASSERT_EQ(ctx.tr(Elem{a}), o.tr(a));
            ones += ctx.tr(Elem{a});
        }
        EXPECT_EQ(ones, static_cast<int>(ctx.q() / 2));
    }
}

TEST(GFq, SquareRoot) {
    const FieldCtx f2(2);
    EXPECT_EQ(f2.sqrt(Elem{0}), Elem{0});
    EXPECT_EQ(f2.sqrt(Elem{1}), Elem{1});
    EXPECT_EQ(f2.sqrt(f2.omega()), f2.sqr(f2.omega()));
    const FieldCtx f4(4);
    const oracle::Field o(4);
    for (std::uint32_t a = 0; a < f4.q(); ++a) {
        // inverse of the squaring map, by search
        std::uint32_t root = 0;
        while (o.mul(root, root) != a) ++root;
        EXPECT_EQ(f4.sqrt(Elem{a}).bits, root);
    }
}

TEST(GFq, CubeClassification) {
    EXPECT_TRUE(FieldCtx(2).is_cube(Elem{1}));
    EXPECT_FALSE(FieldCtx(2).is_cube(FieldCtx(2).omega()));
    EXPECT_THROW(FieldCtx(2).is_cube(Elem{0}), ZeroArgument);
    for (int e : {2, 4, 6, 8}) {
        const FieldCtx ctx(e);
        const oracle::Field o(e);
        std::set<std::uint64_t> cubes;
        for (std::uint64_t y = 1; y < o.q; ++y) cubes.insert(o.mul(y, o.mul(y, y)));
        EXPECT_EQ(cubes.size(), (ctx.q() - 1) / 3);
        for (std::uint32_t a = 1; a < ctx.q(); ++a) ASSERT_EQ(ctx.is_cube(Elem{a}), cubes.count(a) == 1);
    }
}

TEST(Tower, MultiplicationMatchesOracle) {
    for (int e : {2, 4}) {
        const FieldCtx ctx(e);
        const oracle::Field o(e);
        for (std::uint32_t x = 0; x < ctx.q2(); ++x)
            for (std::uint32_t y = 0; y < ctx.q2(); ++y) {
                const auto want = o.mul2(o.dec(x), o.dec(y));
                ASSERT_EQ(ctx.encode(ctx.mul(ctx.decode(x), ctx.decode(y))), o.enc(want));
            }
    }
}

TEST(Tower, FrobeniusIsConjugation) {
    for (int e : {2, 4, 6}) {
        const FieldCtx ctx(e);
        const oracle::Field o(e);
        for (std::uint32_t k = 0; k < ctx.q2(); ++k) {
            const Elem2 x = ctx.decode(k);
            ASSERT_EQ(ctx.encode(FieldCtx::conj(x)), o.enc(o.pow2(o.dec(k), o.q)));
            ASSERT_EQ(FieldCtx::conj(FieldCtx::conj(x)), x);
        }
    }
}

TEST(Tower, TraceTransitivity) {
    for (int e : {2, 4}) {
        const FieldCtx ctx(e);
        const oracle::Field o(e);
        for (std::uint32_t k = 0; k < ctx.q2(); ++k) {
            const Elem2 x = ctx.decode(k);
            const Elem2 t = x + FieldCtx::conj(x);
            ASSERT_TRUE(FieldCtx::in_base(t));
            ASSERT_EQ(ctx.tr2(x), ctx.tr(t.a0));
            ASSERT_EQ(ctx.tr2(x), o.tr2(o.dec(k)));
        }
    }
}

TEST(Tower, InverseAndPowers) {
    const FieldCtx ctx(4);
    EXPECT_THROW(ctx.inv(Elem2{}), DivisionByZero);
    for (std::uint32_t k = 1; k < ctx.q2(); ++k) {
        const Elem2 x = ctx.decode(k);
        ASSERT_EQ(ctx.mul(x, ctx.inv(x)), FieldCtx::one2());
        ASSERT_EQ(ctx.pow(x, -2), ctx.inv(ctx.sqr(x)));
        ASSERT_EQ(ctx.pow_u(x, ctx.q2() - 1), FieldCtx::one2());
    }
}

TEST(UnitCircle, Elements) {
    const FieldCtx f2(2);
    EXPECT_EQ(f2.pow_u(f2.mu_generator(), 5), FieldCtx::one2());
    for (int e : {2, 4, 6}) {
        const FieldCtx ctx(e);
        const auto mu = ctx.mu_elements();
        ASSERT_EQ(mu.size(), ctx.q() + 1U);
        EXPECT_EQ(mu.front(), FieldCtx::one2());
        std::set<std::uint32_t> seen, cubed;
        for (const Elem2 z : mu) {
            EXPECT_EQ(ctx.pow_u(z, ctx.q() + 1), FieldCtx::one2());
            EXPECT_EQ(FieldCtx::conj(z), ctx.inv(z));
            EXPECT_TRUE(ctx.in_mu(z));
            seen.insert(ctx.encode(z));
            cubed.insert(ctx.encode(ctx.pow_u(z, 3)));
        }
        EXPECT_EQ(seen.size(), mu.size());
        EXPECT_EQ(cubed, seen);
    }
}

TEST(UnitCircle, ProductDecomposition) {
    const FieldCtx ctx(4);
    std::set<std::uint32_t> products;
    for (const Elem2 z : ctx.mu_elements())
        for (std::uint32_t y = 1; y < ctx.q(); ++y) products.insert(ctx.encode(ctx.mul(Elem{y}, z)));
    EXPECT_EQ(products.size(), ctx.q2() - 1);
    EXPECT_EQ(products.count(0), 0U);
}

TEST(Io, HexRoundTrip) {
    const FieldCtx ctx(8);
    for (std::uint32_t a = 0; a < ctx.q(); ++a) EXPECT_EQ(parse_elem(ctx, to_string(Elem{a})), Elem{a});
    EXPECT_EQ(to_string(Elem{0xab}), "ab");
    EXPECT_EQ(parse_elem(ctx, "0xAB"), Elem{0xab});
    EXPECT_THROW(parse_elem(ctx, "100"), ParseError);
    EXPECT_THROW(parse_elem(ctx, "zz"), ParseError);
    EXPECT_THROW(parse_elem(ctx, ""), ParseError);
    const Elem2 x{Elem{0x1f}, Elem{0x3}};
    EXPECT_EQ(to_string(x), "1f+3*t");
    EXPECT_EQ(parse_elem2(ctx, "1f+3*t"), x);
}
