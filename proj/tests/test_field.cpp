#include <gtest/gtest.h>

#include <random>

#include "fibfq/field.hpp"

using namespace fibfq;

TEST(FieldSpec, PrimeFieldBasics) {
    FieldSpec f3 = FieldSpec::create(3);
    EXPECT_EQ(f3.p(), 3);
    EXPECT_EQ(f3.l(), 1);
    EXPECT_EQ(f3.q(), 3u);
    EXPECT_EQ(f3.modulus(), (std::vector<int64_t>{0, 1}));  // g = t
}

TEST(FieldSpec, RejectsCompositeCharacteristic) {
    EXPECT_THROW(FieldSpec::create(4), Error);
    EXPECT_THROW(FieldSpec::create(1), Error);
}

TEST(FieldSpec, GeneratedModulusIsSmallestIrreducible) {
    FieldSpec f4 = FieldSpec::create(2, 2);
    EXPECT_EQ(f4.modulus(), (std::vector<int64_t>{1, 1, 1}));  // t^2+t+1
    FieldSpec f9 = FieldSpec::create(3, 2);
    EXPECT_EQ(f9.modulus(), (std::vector<int64_t>{1, 0, 1}));  // t^2+1
}

TEST(FieldSpec, RejectsReducibleModulus) {
    EXPECT_THROW(FieldSpec::create(2, 2, {1, 0, 1}), Error);  // t^2+1 = (t+1)^2
    EXPECT_NO_THROW(FieldSpec::create(2, 2, {1, 1, 1}));
}

TEST(FieldElem, InverseInF3) {
    FieldSpec f3 = FieldSpec::create(3);
    FieldElem two = FieldElem::from_int(f3, 2);
    EXPECT_EQ(two.inv(), two);  // 2*2 = 4 = 1
}

TEST(FieldElem, GeneratorSquareInF4) {
    FieldSpec f4 = FieldSpec::create(2, 2);
    FieldElem t = FieldElem::gen(f4);
    FieldElem t_plus_1 = t + FieldElem::one(f4);
    EXPECT_EQ(t * t, t_plus_1);  // reduction by t^2+t+1
}

TEST(FieldElem, GeneratorCubeInF4IsOneByRepeatedMultiplication) {
    FieldSpec f4 = FieldSpec::create(2, 2);
    FieldElem t = FieldElem::gen(f4);
    FieldElem by_pow = t.pow(3);
    FieldElem by_mult = t * t * t;
    EXPECT_EQ(by_pow, by_mult);
    EXPECT_TRUE(by_pow.is_one());
}

TEST(FieldElem, DivisionByZeroThrows) {
    FieldSpec f5 = FieldSpec::create(5);
    try {
        FieldElem::zero(f5).inv();
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), errc::division_by_zero);
    }
}

TEST(FieldElem, MixedFieldsThrow) {
    FieldSpec f3 = FieldSpec::create(3);
    FieldSpec f5 = FieldSpec::create(5);
    try {
        (void)(FieldElem::one(f3) + FieldElem::one(f5));
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), errc::spec_mismatch);
    }
}

TEST(FieldElem, StructurallyEqualSpecsInteroperate) {
    FieldSpec a = FieldSpec::create(2, 2);
    FieldSpec b = FieldSpec::create(2, 2);
    EXPECT_TRUE(a.same(b));
    EXPECT_TRUE((FieldElem::gen(a) * FieldElem::gen(b)) == FieldElem::gen(a).pow(2));
}

// Ring axioms on random samples, for a field with tables and one without
// (the table limit is bypassed by checking the direct ops explicitly).
TEST(FieldElem, RingAxiomsOnRandomSamples) {
    for (auto [p, l] : {std::pair<int64_t, int>{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}, {2, 4}}) {
        FieldSpec f = FieldSpec::create(p, l);
        std::mt19937_64 rng(42);
        std::uniform_int_distribution<uint64_t> dist(0, f.q() - 1);
        for (int it = 0; it < 200; ++it) {
            FieldElem a(f, dist(rng)), b(f, dist(rng)), c(f, dist(rng));
            EXPECT_EQ((a + b) + c, a + (b + c));
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(a + FieldElem::zero(f), a);
            EXPECT_EQ(a * FieldElem::one(f), a);
            EXPECT_EQ(a - a, FieldElem::zero(f));
            if (!a.is_zero()) EXPECT_TRUE((a * a.inv()).is_one());
        }
    }
}

// Table-backed and direct arithmetic agree element by element.
TEST(FieldElem, TablesMatchDirectArithmetic) {
    for (auto [p, l] : {std::pair<int64_t, int>{3, 2}, {2, 3}}) {
        FieldSpec f = FieldSpec::create(p, l);
        const auto& d = f.data();
        ASSERT_TRUE(d.pair_tables);
        for (uint64_t i = 0; i < f.q(); ++i)
            for (uint64_t j = 0; j < f.q(); ++j) {
                EXPECT_EQ(d.add(i, j), d.add_direct(i, j));
                EXPECT_EQ(d.mul(i, j), d.mul_direct(i, j));
            }
        for (uint64_t i = 1; i < f.q(); ++i) EXPECT_EQ(d.mul(d.inv(i), i), 1u);
    }
}

TEST(FieldElem, PthRootInvertsFrobenius) {
    FieldSpec f8 = FieldSpec::create(2, 3);
    for (uint64_t i = 0; i < 8; ++i) {
        FieldElem a(f8, i);
        EXPECT_EQ(a.pth_root().pow(2), a);
    }
}

TEST(FieldSpec, ExplicitDegreeOneModulus) {
    FieldSpec f = FieldSpec::create(5, 1, {0, 1});  // g = t
    EXPECT_TRUE(f.same(FieldSpec::create(5)));
}

// A field past the pair-table limit exercises the exp/log multiplication.
TEST(FieldElem, MidSizeFieldUsesLogTablesConsistently) {
    FieldSpec f = FieldSpec::create(2, 11);  // q = 2048
    const auto& d = f.data();
    ASSERT_FALSE(d.pair_tables);
    ASSERT_TRUE(d.exp_log);
    std::mt19937_64 rng(4096);
    std::uniform_int_distribution<uint64_t> dist(0, f.q() - 1);
    for (int it = 0; it < 300; ++it) {
        uint64_t a = dist(rng), b = dist(rng);
        EXPECT_EQ(d.mul(a, b), d.mul_direct(a, b));
        if (a) EXPECT_EQ(d.mul(a, d.inv(a)), 1u);
    }
}

TEST(FieldElem, MultiplicativeOrderDividesGroupOrder) {
    FieldSpec f9 = FieldSpec::create(3, 2);
    for (uint64_t i = 1; i < 9; ++i) {
        FieldElem a(f9, i);
        Int ord = a.order();
        EXPECT_EQ(Int(8) % ord, 0);
        EXPECT_TRUE(a.pow(ord).is_one());
        for (const Int& r : int_prime_divisors(ord)) EXPECT_FALSE(a.pow(ord / r).is_one());
    }
}
