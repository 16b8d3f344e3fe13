#include <gtest/gtest.h>

#include <random>

#include "fibfq/poly.hpp"

using namespace fibfq;

namespace {

Poly random_poly(const FieldSpec& f, int64_t max_deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<uint64_t> cdist(0, f.q() - 1);
    std::uniform_int_distribution<int64_t> ddist(-1, max_deg);  // -1 -> zero polynomial
    int64_t deg = ddist(rng);
    std::vector<FieldElem> c;
    for (int64_t i = 0; i <= deg; ++i) c.emplace_back(f, cdist(rng));
    return Poly::from_coeffs(f, c);
}

}  // namespace

TEST(Poly, ZeroHasSentinelDegree) {
    FieldSpec f2 = FieldSpec::create(2);
    EXPECT_EQ(Poly::zero(f2).degree(), Poly::kNegInf);
    EXPECT_TRUE(Poly::zero(f2).is_zero());
    EXPECT_EQ(Poly::from_ints(f2, {0, 0, 0}), Poly::zero(f2));
}

TEST(Poly, GcdOfSquareInCharTwo) {
    FieldSpec f2 = FieldSpec::create(2);
    Poly f = Poly::from_ints(f2, {1, 0, 1});  // x^2+1 = (x+1)^2
    Poly g = Poly::from_ints(f2, {1, 1});     // x+1
    EXPECT_EQ(poly_gcd(f, g), g);
}

TEST(Poly, DivmodByHand) {
    FieldSpec f2 = FieldSpec::create(2);
    Poly f = Poly::from_ints(f2, {0, 0, 0, 1});  // x^3
    Poly g = Poly::from_ints(f2, {1, 1, 1});     // x^2+x+1
    auto [q, r] = divmod(f, g);
    EXPECT_EQ(q, Poly::from_ints(f2, {1, 1}));  // x+1
    EXPECT_EQ(r, Poly::one(f2));
    EXPECT_EQ(q * g + r, f);
}

TEST(Poly, MultiplicationByZeroAnnihilates) {
    FieldSpec f5 = FieldSpec::create(5);
    Poly f = Poly::from_ints(f5, {1, 2, 3});
    EXPECT_TRUE((f * Poly::zero(f5)).is_zero());
}

TEST(Poly, DegreeOfProductAdds) {
    FieldSpec f9 = FieldSpec::create(3, 2);
    std::mt19937_64 rng(7);
    for (int it = 0; it < 100; ++it) {
        Poly f = random_poly(f9, 6, rng), g = random_poly(f9, 6, rng);
        if (f.is_zero() || g.is_zero()) continue;
        EXPECT_EQ((f * g).degree(), f.degree() + g.degree());
    }
}

TEST(Poly, DivmodRoundTripOnRandomInputs) {
    for (auto [p, l] : {std::pair<int64_t, int>{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}}) {
        FieldSpec fq = FieldSpec::create(p, l);
        std::mt19937_64 rng(11 * p + l);
        for (int it = 0; it < 100; ++it) {
            Poly f = random_poly(fq, 9, rng), g = random_poly(fq, 5, rng);
            if (g.is_zero()) continue;
            auto [q, r] = divmod(f, g);
            EXPECT_EQ(q * g + r, f);
            EXPECT_LT(r.degree(), g.degree());
            if (!f.is_zero()) EXPECT_EQ((f * g) / g, f);
        }
    }
}

TEST(Poly, DivisionByZeroThrows) {
    FieldSpec f2 = FieldSpec::create(2);
    try {
        divmod(Poly::one(f2), Poly::zero(f2));
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), errc::division_by_zero);
    }
    EXPECT_THROW(poly_gcd(Poly::zero(f2), Poly::zero(f2)), Error);
}

// Freshman's dream: f(x)^p has the p-th powers of f's coefficients at
// indices multiplied by p.
TEST(Poly, FrobeniusPowerSpreadsCoefficients) {
    for (auto [p, l] : {std::pair<int64_t, int>{2, 2}, {3, 2}, {5, 1}}) {
        FieldSpec fq = FieldSpec::create(p, l);
        std::mt19937_64 rng(13 * p + l);
        for (int it = 0; it < 30; ++it) {
            Poly f = random_poly(fq, 5, rng);
            Poly fp = f.pow(static_cast<uint64_t>(p));
            if (f.is_zero()) {
                EXPECT_TRUE(fp.is_zero());
                continue;
            }
            EXPECT_EQ(fp.degree(), f.degree() * p);
            for (int64_t i = 0; i <= fp.degree(); ++i) {
                if (i % p == 0) EXPECT_EQ(fp.coeff(i), f.coeff(i / p).pow(p));
                else EXPECT_TRUE(fp.coeff(i).is_zero());
            }
        }
    }
}

TEST(Poly, GcdIsMonicAndDividesBoth) {
    FieldSpec f4 = FieldSpec::create(2, 2);
    std::mt19937_64 rng(99);
    for (int it = 0; it < 100; ++it) {
        Poly f = random_poly(f4, 8, rng), g = random_poly(f4, 8, rng);
        if (f.is_zero() && g.is_zero()) continue;
        Poly d = poly_gcd(f, g);
        EXPECT_TRUE(d.is_monic());
        if (!f.is_zero()) EXPECT_TRUE((f % d).is_zero());
        if (!g.is_zero()) EXPECT_TRUE((g % d).is_zero());
    }
}

TEST(Poly, InverseModulo) {
    FieldSpec f3 = FieldSpec::create(3);
    Poly m = Poly::from_ints(f3, {1, 0, 1});  // x^2+1, irreducible over F_3
    std::mt19937_64 rng(5);
    for (int it = 0; it < 50; ++it) {
        Poly f = random_poly(f3, 4, rng);
        if ((f % m).is_zero()) continue;
        Poly inv = poly_invmod(f, m);
        EXPECT_TRUE((f * inv % m).is_one());
    }
}
