#include <gtest/gtest.h>

#include <random>

#include "fibfq/factorize.hpp"

using namespace fibfq;

namespace {

Poly random_poly(const FieldSpec& f, int64_t max_deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<uint64_t> cdist(0, f.q() - 1);
    std::uniform_int_distribution<int64_t> ddist(0, max_deg);
    std::vector<FieldElem> c;
    int64_t deg = ddist(rng);
    for (int64_t i = 0; i <= deg; ++i) c.emplace_back(f, cdist(rng));
    return Poly::from_coeffs(f, c);
}

/// Enumerate all monic polynomials of the given degree over F_q.
std::vector<Poly> all_monic(const FieldSpec& f, int64_t deg) {
    std::vector<Poly> out;
    uint64_t count = 1;
    for (int64_t i = 0; i < deg; ++i) count *= f.q();
    for (uint64_t v = 0; v < count; ++v) {
        std::vector<FieldElem> c;
        uint64_t t = v;
        for (int64_t i = 0; i < deg; ++i) {
            c.emplace_back(f, t % f.q());
            t /= f.q();
        }
        c.push_back(FieldElem::one(f));
        out.push_back(Poly::from_coeffs(f, c));
    }
    return out;
}

/// Independent irreducibility oracle: trial division by every monic
/// polynomial of degree at most deg(f)/2.
bool irreducible_by_trial_division(const Poly& f) {
    for (int64_t d = 1; 2 * d <= f.degree(); ++d)
        for (const Poly& g : all_monic(f.spec(), d))
            if ((f % g).is_zero()) return false;
    return true;
}

}  // namespace

TEST(IsIrreducible, KnownSmallCases) {
    FieldSpec f2 = FieldSpec::create(2);
    EXPECT_TRUE(is_irreducible(Poly::from_ints(f2, {1, 1, 1})));   // x^2+x+1
    EXPECT_FALSE(is_irreducible(Poly::from_ints(f2, {1, 0, 1})));  // x^2+1, root at 1
}

TEST(IsIrreducible, QuarticOverF2AgainstTrialDivision) {
    FieldSpec f2 = FieldSpec::create(2);
    Poly f = Poly::from_ints(f2, {1, 0, 0, 1, 1});  // x^4+x^3+1
    EXPECT_TRUE(irreducible_by_trial_division(f));
    EXPECT_TRUE(is_irreducible(f));
}

TEST(IsIrreducible, MatchesTrialDivisionExhaustively) {
    for (auto [p, l] : {std::pair<int64_t, int>{2, 1}, {3, 1}, {2, 2}}) {
        FieldSpec fq = FieldSpec::create(p, l);
        for (int64_t d = 2; d <= 4; ++d)
            for (const Poly& f : all_monic(fq, d)) {
                if (static_cast<uint64_t>(f.raw()[0]) == 0 && d > 3) continue;  // keep it quick
                EXPECT_EQ(is_irreducible(f), irreducible_by_trial_division(f))
                    << "q=" << fq.q() << " poly degree " << d;
            }
    }
}

TEST(IsIrreducible, RejectsConstants) {
    FieldSpec f2 = FieldSpec::create(2);
    EXPECT_THROW(is_irreducible(Poly::one(f2)), Error);
    EXPECT_THROW(factor_poly(Poly::one(f2)), Error);
}

TEST(FactorPoly, HandComputedExamples) {
    FieldSpec f2 = FieldSpec::create(2);
    // x^6+x^4+x^2 = x^2 (x^2+x+1)^2: expand and compare first
    Poly x = Poly::x(f2);
    Poly expected = (x * x) * Poly::from_ints(f2, {1, 1, 1}).pow(2);
    Poly f = Poly::from_ints(f2, {0, 0, 1, 0, 1, 0, 1});
    ASSERT_EQ(f, expected);
    Factorization fact = factor_poly(f);
    ASSERT_EQ(fact.parts.size(), 2u);
    EXPECT_EQ(fact.parts[0].prime, x);
    EXPECT_EQ(fact.parts[0].exponent, 2);
    EXPECT_EQ(fact.parts[1].prime, Poly::from_ints(f2, {1, 1, 1}));
    EXPECT_EQ(fact.parts[1].exponent, 2);

    Factorization sq = factor_poly(Poly::from_ints(f2, {1, 0, 1}));
    ASSERT_EQ(sq.parts.size(), 1u);
    EXPECT_EQ(sq.parts[0].prime, Poly::from_ints(f2, {1, 1}));
    EXPECT_EQ(sq.parts[0].exponent, 2);

    FieldSpec f3 = FieldSpec::create(3);
    Factorization irr = factor_poly(Poly::from_ints(f3, {1, 0, 1}));
    ASSERT_EQ(irr.parts.size(), 1u);  // -1 is a non-residue mod 3
    EXPECT_EQ(irr.parts[0].exponent, 1);
}

TEST(FactorPoly, RoundTripOnRandomInputs) {
    int checked = 0;
    for (auto [p, l] : {std::pair<int64_t, int>{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
        FieldSpec fq = FieldSpec::create(p, l);
        std::mt19937_64 rng(1000 * p + l);
        for (int it = 0; it < 40; ++it) {
            Poly f = random_poly(fq, 12, rng);
            if (f.degree() < 1) continue;
            Factorization fact = factor_poly(f);
            EXPECT_EQ(fact.product(), f);
            for (size_t i = 0; i < fact.parts.size(); ++i) {
                EXPECT_TRUE(fact.parts[i].prime.is_monic());
                EXPECT_GE(fact.parts[i].exponent, 1);
                EXPECT_TRUE(is_irreducible(fact.parts[i].prime));
                if (fact.parts[i].prime.degree() <= 3)
                    EXPECT_TRUE(irreducible_by_trial_division(fact.parts[i].prime));
                if (i > 0) EXPECT_TRUE(fact.parts[i - 1].prime.lex_less(fact.parts[i].prime));
            }
            ++checked;
        }
    }
    EXPECT_GE(checked, 180);
}

TEST(FactorPoly, DeterministicAcrossCalls) {
    FieldSpec f9 = FieldSpec::create(3, 2);
    std::mt19937_64 rng(77);
    Poly f = random_poly(f9, 10, rng) * random_poly(f9, 10, rng);
    if (f.degree() < 1) f = Poly::from_ints(f9, {1, 1, 1});
    Factorization a = factor_poly(f), b = factor_poly(f);
    ASSERT_EQ(a.parts.size(), b.parts.size());
    for (size_t i = 0; i < a.parts.size(); ++i) {
        EXPECT_EQ(a.parts[i].prime, b.parts[i].prime);
        EXPECT_EQ(a.parts[i].exponent, b.parts[i].exponent);
    }
}

TEST(Valuation, HandComputedExamples) {
    FieldSpec f2 = FieldSpec::create(2);
    EXPECT_EQ(valuation(Poly::from_ints(f2, {1, 1}), Poly::from_ints(f2, {1, 0, 1})), 2);
    // x^6+x^4+x^2 has (x^2+x+1)-valuation 2
    EXPECT_EQ(valuation(Poly::from_ints(f2, {1, 1, 1}), Poly::from_ints(f2, {0, 0, 1, 0, 1, 0, 1})),
              2);
    EXPECT_EQ(valuation(Poly::from_ints(f2, {1, 1}), Poly::zero(f2)), kValInfinity);
}

TEST(Valuation, RejectsReducibleBase) {
    FieldSpec f2 = FieldSpec::create(2);
    try {
        valuation(Poly::from_ints(f2, {1, 0, 1}), Poly::one(f2));
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), errc::not_irreducible);
    }
}

TEST(Valuation, AdditiveOnProducts) {
    FieldSpec f3 = FieldSpec::create(3);
    Poly P = Poly::from_ints(f3, {1, 0, 1});  // irreducible
    std::mt19937_64 rng(31);
    for (int it = 0; it < 50; ++it) {
        Poly f = random_poly(f3, 6, rng), g = random_poly(f3, 6, rng);
        if (f.is_zero() || g.is_zero()) continue;
        EXPECT_EQ(valuation(P, f * g), valuation(P, f) + valuation(P, g));
    }
}

TEST(QuadRoots, ConstantsOverF5) {
    FieldSpec f5 = FieldSpec::create(5);
    // X^2 = 1 mod x: roots 1 and 4
    QuadRoots qr = quad_roots(Poly::zero(f5), Poly::one(f5), Poly::x(f5));
    ASSERT_EQ(qr.status, QuadRoots::Status::two_distinct);
    std::vector<uint64_t> got{qr.roots[0].raw()[0], qr.roots[1].raw()[0]};
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, (std::vector<uint64_t>{1, 4}));
}

TEST(QuadRoots, CharTwoSplitsByConstruction) {
    FieldSpec f2 = FieldSpec::create(2);
    Poly P = Poly::from_ints(f2, {1, 1, 1});
    // X^2 + X + 1 = 0 mod x^2+x+1 has roots x and x+1
    QuadRoots qr = quad_roots(Poly::one(f2), Poly::one(f2), P);
    ASSERT_EQ(qr.status, QuadRoots::Status::two_distinct);
    std::vector<Poly> expect{Poly::x(f2), Poly::from_ints(f2, {1, 1})};
    EXPECT_TRUE((qr.roots[0] == expect[0] && qr.roots[1] == expect[1]) ||
                (qr.roots[0] == expect[1] && qr.roots[1] == expect[0]));
}

TEST(QuadRoots, CharTwoRepeatedRootIsTheSquareRoot) {
    FieldSpec f2 = FieldSpec::create(2);
    Poly P = Poly::from_ints(f2, {1, 1, 1});
    // a = P itself vanishes mod P; the single root squares to b
    QuadRoots qr = quad_roots(P, Poly::x(f2), P);
    ASSERT_EQ(qr.status, QuadRoots::Status::repeated);
    ASSERT_EQ(qr.roots.size(), 1u);
    EXPECT_EQ(qr.roots[0] * qr.roots[0] % P, Poly::x(f2));
}

TEST(QuadRoots, NonResidueDiscriminantOverF3) {
    FieldSpec f3 = FieldSpec::create(3);
    // delta = 1 + 4 = 5 = 2, a non-residue mod 3
    QuadRoots qr = quad_roots(Poly::one(f3), Poly::one(f3), Poly::x(f3));
    EXPECT_EQ(qr.status, QuadRoots::Status::irreducible_mod_p);
    EXPECT_TRUE(qr.roots.empty());
}

TEST(QuadRoots, CoprimalityIsEnforced) {
    FieldSpec f2 = FieldSpec::create(2);
    try {
        quad_roots(Poly::one(f2), Poly::x(f2), Poly::x(f2));
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), errc::b_not_coprime);
    }
}

// Any returned root satisfies the quadratic; distinct roots differ, sum
// to a and multiply to -b mod P.
TEST(QuadRoots, RootsSatisfyTheQuadraticOnRandomInputs) {
    for (auto [p, l] : {std::pair<int64_t, int>{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}}) {
        FieldSpec fq = FieldSpec::create(p, l);
        std::mt19937_64 rng(500 * p + l);
        int splits = 0;
        for (int it = 0; it < 250; ++it) {
            Poly a = random_poly(fq, 3, rng);
            Poly b = random_poly(fq, 3, rng);
            Poly P = random_poly(fq, 3, rng);
            if (b.is_zero() || P.degree() < 1) continue;
            P = monic(P);
            if (!is_irreducible(P) || poly_gcd(b, P).degree() != 0) continue;
            QuadRoots qr = quad_roots(a, b, P);
            for (const Poly& r : qr.roots) {
                EXPECT_TRUE(((r * r - a * r - b) % P).is_zero());
                EXPECT_FALSE(r.is_zero());
            }
            if (qr.status == QuadRoots::Status::two_distinct) {
                ++splits;
                EXPECT_NE(qr.roots[0], qr.roots[1]);
                EXPECT_EQ((qr.roots[0] + qr.roots[1]) % P, a % P);
                EXPECT_EQ((qr.roots[0] * qr.roots[1]) % P, (-b) % P);
            }
            if (fq.p() == 2 && !(a % P).is_zero()) {
                // the trace decides solvability, and the two code paths agree
                Poly c = b * poly_invmod(a * a % P, P) % P;
                Poly tr = detail::abs_trace_mod(c, P, fq.l() * P.degree());
                EXPECT_EQ(qr.status == QuadRoots::Status::irreducible_mod_p, !tr.is_zero());
                EXPECT_TRUE(tr.is_zero() || tr.is_one());
            }
        }
        EXPECT_GT(splits, 0);
    }
}
