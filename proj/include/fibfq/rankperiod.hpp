#ifndef FIBFQ_RANKPERIOD_HPP
#define FIBFQ_RANKPERIOD_HPP

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "fibfq/fibcore.hpp"

namespace fibfq {

// ---------------------------------------------------------------------------
// Prime-case classification
// ---------------------------------------------------------------------------

/// How the characteristic quadratic behaves modulo an irreducible P.
/// Odd characteristic splits on the discriminant (zero mod P, nonzero
/// square, non-square); characteristic 2 splits on P | a and otherwise on
/// the trace of b/a^2 in F_{q^d}.
enum class PrimeTag {
    delta_zero_mod_p_odd,
    qr,
    non_qr,
    p2_a_divisible,
    p2_trace_zero,
    p2_trace_nonzero,
};

struct PrimeCase {
    PrimeTag tag;
    int64_t d;  // deg P
};

namespace detail {

inline void require_prime_modulus(const Poly& P) {
    if (P.degree() < 1 || !P.is_monic() || !is_irreducible(P))
        raise(errc::not_irreducible, "P must be monic irreducible");
}

inline void require_b_coprime(const SeqParams& params, const Poly& M) {
    if (poly_gcd(params.b, M).degree() != 0) raise(errc::b_not_coprime, "gcd(b, M) != 1");
}

inline Int q_pow_d(const FieldSpec& s, int64_t d) {
    return int_pow(s.q_big(), static_cast<uint64_t>(d));
}

inline Int int_power(int64_t base, int64_t e) { return int_pow(Int(base), static_cast<uint64_t>(e)); }

}  // namespace detail

inline PrimeCase classify(const SeqParams& params, const Poly& P) {
    detail::require_prime_modulus(P);
    detail::require_b_coprime(params, P);
    const FieldSpec& s = params.spec;
    int64_t d = P.degree();
    if (s.p() != 2) {
        Poly delta = params.delta % P;
        if (delta.is_zero()) return {PrimeTag::delta_zero_mod_p_odd, d};
        Int half = (detail::q_pow_d(s, d) - 1) / 2;
        bool square = poly_powmod(delta, half, P) == Poly::one(s);
        return {square ? PrimeTag::qr : PrimeTag::non_qr, d};
    }
    if ((params.a % P).is_zero()) return {PrimeTag::p2_a_divisible, d};
    Poly am = params.a % P;
    Poly c = params.b * poly_invmod(am * am % P, P) % P;
    Poly tr = detail::abs_trace_mod(c, P, s.l() * d);
    return {tr.is_zero() ? PrimeTag::p2_trace_zero : PrimeTag::p2_trace_nonzero, d};
}

// ---------------------------------------------------------------------------
// alpha(P) and pi(P)
// ---------------------------------------------------------------------------

namespace detail {

/// Least n with F_n = 0 mod P among the divisors of bound, located by
/// removing prime factors while the zero persists. Requires F_bound = 0.
inline Int least_zero_divisor(const SeqParams& params, const Int& bound, const ResidueRing& ring) {
    auto is_zero_at = [&](const Int& n) { return fib_pair_at(params, n, ring).first.is_zero(); };
    if (!is_zero_at(bound)) raise(errc::internal_mismatch, "divisibility frame violated");
    Int n = bound;
    for (const Int& r : int_prime_divisors(bound)) {
        while (n % r == 0 && is_zero_at(n / r)) n /= r;
    }
    return n;
}

/// Same descent for the period condition (F_n, F_{n+1}) = (0, 1) mod P^e.
inline Int least_period_divisor(const SeqParams& params, const Int& bound, const ResidueRing& ring) {
    auto hits = [&](const Int& n) {
        auto [fn, fn1] = fib_pair_at(params, n, ring);
        return fn.is_zero() && fn1.is_one();
    };
    if (!hits(bound)) raise(errc::internal_mismatch, "period bound violated");
    Int n = bound;
    for (const Int& r : int_prime_divisors(bound)) {
        while (n % r == 0 && hits(n / r)) n /= r;
    }
    return n;
}

}  // namespace detail

/// Rank of apparition modulo an irreducible P. The repeated-root cases are
/// closed forms; otherwise the rank is the least divisor of q^d -+ 1
/// (square vs non-square side) at which F vanishes.
inline Int rank_prime(const SeqParams& params, const Poly& P) {
    PrimeCase pc = classify(params, P);
    const FieldSpec& s = params.spec;
    switch (pc.tag) {
        case PrimeTag::delta_zero_mod_p_odd: return s.p();
        case PrimeTag::p2_a_divisible: return 2;
        case PrimeTag::qr:
        case PrimeTag::p2_trace_zero:
            return detail::least_zero_divisor(params, detail::q_pow_d(s, pc.d) - 1,
                                              ResidueRing::create(P));
        case PrimeTag::non_qr:
        case PrimeTag::p2_trace_nonzero:
            return detail::least_zero_divisor(params, detail::q_pow_d(s, pc.d) + 1,
                                              ResidueRing::create(P));
    }
    raise(errc::internal_mismatch, "unreachable");
}

/// Period modulo an irreducible P: pi(P) = alpha(P) * ord_P(s) with s the
/// scalar of U^alpha(P). Cross-checked against the lcm of the root orders
/// when the quadratic splits mod P and against the repeated-root closed
/// forms otherwise.
inline Int period_prime(const SeqParams& params, const Poly& P) {
    PrimeCase pc = classify(params, P);
    Int alpha = rank_prime(params, P);
    ResidueRing ring = ResidueRing::create(P);
    Mat2 ua = mat2_pow(Mat2::companion(ring, params.a, params.b), alpha);
    std::optional<Residue> s = scalar_test(ua);
    if (!s) raise(errc::internal_mismatch, "U^alpha is not scalar mod P");
    Int pi = alpha * residue_order(*s);

    const FieldSpec& fs = params.spec;
    switch (pc.tag) {
        case PrimeTag::qr:
        case PrimeTag::p2_trace_zero: {
            QuadRoots qr = quad_roots(params.a, params.b, P);
            if (qr.status != QuadRoots::Status::two_distinct)
                raise(errc::internal_mismatch, "classification disagrees with the root solver");
            Int cross = int_lcm(mult_order(qr.roots[0], P), mult_order(qr.roots[1], P));
            if (cross != pi) raise(errc::internal_mismatch, "pi(P) != lcm of root orders");
            break;
        }
        case PrimeTag::delta_zero_mod_p_odd: {
            Poly half_a = (params.a * FieldElem::from_int(fs, 2).inv()) % P;
            if (pi != Int(fs.p()) * mult_order(half_a, P))
                raise(errc::internal_mismatch, "pi(P) != p * ord_P(a/2)");
            break;
        }
        case PrimeTag::p2_a_divisible: {
            if (pi != 2 * mult_order(params.b, P))
                raise(errc::internal_mismatch, "pi(P) != 2 * ord_P(b)");
            break;
        }
        default: break;  // roots live outside F_{q^d}; no second route
    }
    return pi;
}

// ---------------------------------------------------------------------------
// Auxiliary orders and valuations
// ---------------------------------------------------------------------------

/// Smallest monic irreducible quadratic over F_q, enumerating constant
/// coefficient vectors in index order. Realizes F_{q^2} as a residue ring.
inline Poly quadratic_extension_modulus(const FieldSpec& s) {
    if (s.q() > (uint64_t{1} << 20))
        raise(errc::precondition_violated, "quadratic extension sieve supports q <= 2^20");
    for (uint64_t v = 0; v < s.q() * s.q(); ++v) {
        Poly cand = Poly::from_coeffs(
            s, {FieldElem(s, v % s.q()), FieldElem(s, v / s.q()), FieldElem::one(s)});
        if (is_irreducible(cand)) return cand;
    }
    raise(errc::internal_mismatch, "no irreducible quadratic found");
}

/// Order m of the root ratio lambda_2/lambda_1 in F_{q^2}, defined when
/// a^2/b is a constant and the discriminant is nonzero. The ratio solves
/// r^2 + (2 + a^2/b) r + 1 = 0; both roots are mutually inverse, so the
/// order does not depend on the choice.
inline Int ratio_order(const SeqParams& params) {
    if (!params.ratio_in_fq || params.delta_is_zero)
        raise(errc::precondition_violated, "ratio order needs a^2/b constant and delta nonzero");
    const FieldSpec& s = params.spec;
    FieldElem c = FieldElem::from_int(s, 2) + *params.ratio;
    Poly p2 = quadratic_extension_modulus(s);
    QuadRoots qr = quad_roots(Poly::constant(-c), Poly::constant(-FieldElem::one(s)), p2);
    if (qr.status == QuadRoots::Status::irreducible_mod_p)
        raise(errc::internal_mismatch, "ratio quadratic must split in F_{q^2}");
    Int m = mult_order(qr.roots[0], p2);
    if (qr.roots.size() == 2 && (Residue(ResidueRing::create(p2), qr.roots[0] * qr.roots[1]).is_one() == false))
        raise(errc::internal_mismatch, "ratio roots are not mutually inverse");
    return m;
}

namespace detail {

inline constexpr int64_t kMaxLiftExponent = 1 << 22;

/// v_P(F_n) for F_n != 0, evaluated modulo P^E with E doubling from 8;
/// exact as soon as the observed valuation drops below E.
inline int64_t fib_valuation_at(const SeqParams& params, const Int& n, const Poly& P) {
    for (int64_t E = 8;; E *= 2) {
        if (E > kMaxLiftExponent) raise(errc::degree_cap_exceeded, "valuation exponent blow-up");
        ResidueRing ring = ResidueRing::create(P.pow(static_cast<uint64_t>(E)));
        Residue fn = fib_pair_at(params, n, ring).first;
        if (!fn.is_zero()) return valuation_unchecked(P, fn.rep());
    }
}

/// Largest j with U^n = I mod P^j (finite when U^n != I exactly), via the
/// minimal entry valuation of U^n - I, again with doubling exponents.
inline int64_t matrix_identity_gap(const SeqParams& params, const Int& n, const Poly& P) {
    for (int64_t E = 8;; E *= 2) {
        if (E > kMaxLiftExponent) raise(errc::degree_cap_exceeded, "valuation exponent blow-up");
        ResidueRing ring = ResidueRing::create(P.pow(static_cast<uint64_t>(E)));
        Mat2 un = mat2_pow(Mat2::companion(ring, params.a, params.b), n);
        Mat2 gap{un.a - Residue::one(ring), un.b, un.c, un.d - Residue::one(ring)};
        int64_t v = kValInfinity;
        for (const Residue* r : {&gap.a, &gap.b, &gap.c, &gap.d})
            v = std::min(v, valuation_unchecked(P, r->rep()));
        if (v < E) return v;
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Rank lifting: alpha(P^e)
// ---------------------------------------------------------------------------

/// The exponents e_1 < e_2 < ... at which alpha(P^e) steps up by a factor
/// p, and the closed form they follow. When e_1 does not exist the rank
/// never moves; the two special regimes record why.
struct RankProfile {
    enum class Rule { geometric_sum, geometric };
    enum class Special { none, delta_zero_poly, ratio_constant };

    int64_t p = 0;  // field characteristic
    Int alpha_p;
    std::optional<int64_t> e1;
    Rule rule = Rule::geometric;
    Special special = Special::none;
    Int ratio_m;  // order of the root ratio when special == ratio_constant

    /// e_i; requires e1 present. Geometric-sum rule: e_{i+1} = p e_i + e_1;
    /// geometric rule: e_{i+1} = p e_i.
    Int e(int64_t i) const {
        if (!e1) raise(errc::precondition_violated, "rank ladder is empty (e_1 absent)");
        if (rule == Rule::geometric_sum)
            return (detail::int_power(p, i) - 1) * (*e1) / (p - 1);
        return detail::int_power(p, i - 1) * (*e1);
    }
    /// alpha(P^{e_i}).
    Int alpha_at(int64_t i) const {
        if (rule == Rule::geometric_sum) return detail::int_power(p, i);
        return detail::int_power(p, i - 1) * alpha_p;
    }
};

inline RankProfile rank_profile(const SeqParams& params, const Poly& P) {
    RankProfile prof;
    prof.p = params.spec.p();
    prof.alpha_p = rank_prime(params, P);
    prof.rule = (params.delta % P).is_zero() ? RankProfile::Rule::geometric_sum
                                             : RankProfile::Rule::geometric;
    if (params.delta_is_zero) prof.special = RankProfile::Special::delta_zero_poly;
    else if (params.ratio_in_fq) {
        prof.special = RankProfile::Special::ratio_constant;
        prof.ratio_m = ratio_order(params);
    }
    // e_1 exists iff F_{alpha(P)} is not exactly zero. The zero-term
    // dichotomies decide the same question without the exact term: zero
    // terms appear only in the degenerate regimes, at the multiples of p
    // resp. of the ratio order. Both answers must agree when the exact
    // term is affordable.
    bool absent_by_flags = params.delta_is_zero ||
                           (prof.special == RankProfile::Special::ratio_constant &&
                            prof.alpha_p == prof.ratio_m);
    bool absent = absent_by_flags;
    try {
        absent = fib_exact(params, prof.alpha_p).is_zero();
        if (absent != absent_by_flags)
            raise(errc::internal_mismatch, "exact zero term disagrees with the dichotomies");
    } catch (const Error& e) {
        if (e.code() != errc::degree_cap_exceeded) throw;
    }
    if (absent) return prof;
    prof.e1 = detail::fib_valuation_at(params, prof.alpha_p, P);
    return prof;
}

/// alpha(P^e). Ladder lookup when e_1 exists, the characteristic p when
/// the discriminant vanishes identically, and a divisor search over the
/// ratio order in the remaining degenerate regime.
inline Int lift_rank(const SeqParams& params, const Poly& P, const Int& e) {
    if (e < 1) raise(errc::precondition_violated, "exponent must be positive");
    detail::require_prime_modulus(P);
    detail::require_b_coprime(params, P);
    if (params.delta_is_zero) return params.spec.p();
    RankProfile prof = rank_profile(params, P);
    if (!prof.e1) {
        if (prof.special != RankProfile::Special::ratio_constant)
            raise(errc::internal_mismatch, "rank ladder missing outside the ratio regime");
        if (e * P.degree() > kDefaultDegreeCap)
            raise(errc::degree_cap_exceeded, "P^e too large for the divisor search");
        ResidueRing ring = ResidueRing::create(P.pow(static_cast<uint64_t>(e)));
        return detail::least_zero_divisor(params, prof.ratio_m, ring);
    }
    int64_t i = 1;
    while (prof.e(i) < e) ++i;
    return prof.alpha_at(i);
}

// ---------------------------------------------------------------------------
// Period lifting: pi(P^e)
// ---------------------------------------------------------------------------

/// The exponents e_1' < e_2' < ... at which pi(P^e) steps up by a factor
/// p. Which closed form applies is decided in the fixed order: rank ladder
/// absent; e_1' < e_1; discriminant nonzero mod P; then the repeated-root
/// cases for odd p and p = 2, the latter with the g_i/m_i refinement when
/// m = e_1.
struct PeriodProfile {
    enum class Case {
        a_no_e1,
        b_e1p_lt_e1,
        c_delta_nonzero_mod_p,
        d_odd_repeated,
        e_char2_repeated,
    };

    Int pi_p;
    int64_t e1p = 0;
    Case kase = Case::a_no_e1;
    std::optional<int64_t> e1;

    // Case D: k = ord_P(a/2), m = v_P((a/2)^k - 1).
    // Case E: k = ord_P(b),   m = v_P(b^k - 1).
    Int k;
    int64_t m = 0;
    std::vector<int64_t> m_i;  // m_2, m_3, ... (case E with m = e_1)
    std::optional<int64_t> j;  // stopping index: first i >= 2 with m_i != e_1

    int64_t upto = 0;
    std::vector<Int> eprime;  // e_1'..e_upto'

    Int e_prime(int64_t i) const {
        if (i < 1 || i > upto) raise(errc::precondition_violated, "profile depth exceeded");
        return eprime[static_cast<size_t>(i - 1)];
    }
};

namespace detail {

/// The c_i recursion c_1 = b^k - 1, c_i = a^{2^i - 2} + b c_{i-1}^2 gives
/// e_i' = min((2^i - 1) e_1, v_P(c_i)); used as an independent check of
/// the closed form while the degrees stay affordable.
inline void cross_check_case_e(const SeqParams& params, const Poly& P, const Poly& bk1,
                               const PeriodProfile& prof) {
    int64_t e1 = *prof.e1;
    Poly c = bk1;
    Int pow2 = 2;
    for (int64_t i = 2; i <= prof.upto; ++i) {
        pow2 *= 2;  // 2^i
        Int adeg = Int(params.a.degree()) * (pow2 - 2);
        if (adeg + 2 * c.degree() > kDefaultDegreeCap) return;
        c = params.a.pow(static_cast<uint64_t>(pow2 - 2)) + params.b * c * c;
        Int via_c = std::min(Int((pow2 - 1) * e1), Int(valuation_unchecked(P, c)));
        if (via_c != prof.e_prime(i))
            raise(errc::internal_mismatch, "c_i recursion disagrees with the closed form");
    }
}

}  // namespace detail

inline PeriodProfile period_profile(const SeqParams& params, const Poly& P, int64_t upto) {
    if (upto < 1) raise(errc::precondition_violated, "profile depth must be positive");
    if (params.constants_only)
        raise(errc::precondition_violated, "period ladder needs a or b non-constant");
    detail::require_prime_modulus(P);
    detail::require_b_coprime(params, P);
    const FieldSpec& s = params.spec;
    int64_t p = s.p();

    PeriodProfile prof;
    prof.upto = upto;
    prof.pi_p = period_prime(params, P);
    prof.e1p = detail::matrix_identity_gap(params, prof.pi_p, P);
    RankProfile rank = rank_profile(params, P);
    prof.e1 = rank.e1;
    if (rank.e1 && prof.e1p > *rank.e1)
        raise(errc::internal_mismatch, "e_1' exceeds e_1");

    auto fill_geometric = [&]() {
        Int v = prof.e1p;
        for (int64_t i = 1; i <= upto; ++i) {
            prof.eprime.push_back(v);
            v *= p;
        }
    };

    if (!rank.e1) {
        prof.kase = PeriodProfile::Case::a_no_e1;
        fill_geometric();
        return prof;
    }
    if (prof.e1p < *rank.e1) {
        prof.kase = PeriodProfile::Case::b_e1p_lt_e1;
        fill_geometric();
        return prof;
    }
    if (!(params.delta % P).is_zero()) {
        prof.kase = PeriodProfile::Case::c_delta_nonzero_mod_p;
        fill_geometric();
        return prof;
    }
    int64_t e1 = *rank.e1;

    if (p != 2) {
        prof.kase = PeriodProfile::Case::d_odd_repeated;
        Poly half_a = params.a * FieldElem::from_int(s, 2).inv();  // exact a/2
        prof.k = mult_order(half_a, P);
        if (half_a.is_constant()) {
            // (a/2)^k - 1 is a constant divisible by P, hence exactly zero
            prof.m = kValInfinity;
        } else {
            // m = v_P((a/2)^k - 1), via powers in P^E with doubling
            for (int64_t E = 8;; E *= 2) {
                if (E > detail::kMaxLiftExponent)
                    raise(errc::degree_cap_exceeded, "valuation exponent blow-up");
                ResidueRing ring = ResidueRing::create(P.pow(static_cast<uint64_t>(E)));
                Residue r = Residue(ring, half_a).pow(prof.k) - Residue::one(ring);
                if (!r.is_zero()) {
                    prof.m = detail::valuation_unchecked(P, r.rep());
                    break;
                }
            }
        }
        prof.eprime.push_back(prof.e1p);
        for (int64_t i = 2; i <= upto; ++i) {
            Int ladder = (detail::int_power(p, i) - 1) * e1 / (p - 1);
            prof.eprime.push_back(prof.m == kValInfinity
                                      ? ladder
                                      : std::min(Int(prof.m) * detail::int_power(p, i), ladder));
        }
        return prof;
    }

    prof.kase = PeriodProfile::Case::e_char2_repeated;
    prof.k = mult_order(params.b, P);
    if (Int(params.b.degree()) * prof.k > kDefaultDegreeCap)
        raise(errc::degree_cap_exceeded, "b^k too large for the refinement process");
    Poly bk1 = params.b.pow(static_cast<uint64_t>(prof.k)) - Poly::one(s);
    prof.m = detail::valuation_unchecked(P, bk1);
    if (prof.m < e1) raise(errc::internal_mismatch, "v_P(b^k - 1) below e_1");
    prof.eprime.push_back(prof.e1p);
    if (prof.m > e1) {
        Int v = 2 * Int(e1);
        for (int64_t i = 2; i <= upto; ++i) {
            prof.eprime.push_back(v);
            v *= 2;
        }
        return prof;
    }
    // m = e_1: run the g_i/m_i process to its stopping index (which may
    // never come; values computed so far are then final as given).
    Poly pe1 = P.pow(static_cast<uint64_t>(e1));
    auto exact_divide = [&](const Poly& f) {
        auto [q, r] = divmod(f, pe1);
        if (!r.is_zero()) raise(errc::internal_mismatch, "expected divisibility by P^e1 failed");
        return q;
    };
    Poly g1 = exact_divide(params.a);
    Poly gi = exact_divide(bk1);  // g_2
    Int pow2 = 2;
    for (int64_t i = 2; i <= upto; ++i) {
        pow2 *= 2;  // 2^i
        if (Int(std::max<int64_t>(g1.degree(), 0)) * (pow2 - 2) > kDefaultDegreeCap)
            raise(errc::degree_cap_exceeded, "g_i process degree blow-up");
        Poly G = g1.pow(static_cast<uint64_t>(pow2 - 2)) + params.b * gi * gi;
        int64_t mi = detail::valuation_unchecked(P, G);
        prof.m_i.push_back(mi);
        if (mi != e1) {
            prof.j = i;
            break;
        }
        gi = exact_divide(G);
    }
    for (int64_t i = 2; i <= upto; ++i) {
        if (!prof.j || i < *prof.j) {
            prof.eprime.push_back((detail::int_power(2, i) - 1) * e1);
        } else if (i == *prof.j) {
            Int stopped = prof.m_i.back() == kValInfinity
                              ? (detail::int_power(2, i) - 1) * e1
                              : std::min((detail::int_power(2, i) - 1) * e1,
                                         (detail::int_power(2, i) - 2) * e1 + prof.m_i.back());
            prof.eprime.push_back(stopped);
        } else {
            prof.eprime.push_back(2 * prof.eprime.back());
        }
    }
    detail::cross_check_case_e(params, P, bk1, prof);
    return prof;
}

namespace detail {

/// Bound for the period divisor search when a and b are both constants:
/// the roots live in F_{q^2}; with a repeated root the bound is p times
/// the root order, otherwise the lcm of the root-ratio order and a root
/// order.
inline Int constants_period_bound(const SeqParams& params) {
    const FieldSpec& s = params.spec;
    Poly p2 = quadratic_extension_modulus(s);
    QuadRoots qr = quad_roots(params.a, params.b, p2);
    if (qr.status == QuadRoots::Status::irreducible_mod_p)
        raise(errc::internal_mismatch, "constant quadratic must split in F_{q^2}");
    if (qr.status == QuadRoots::Status::repeated)
        return Int(s.p()) * mult_order(qr.roots[0], p2);
    Poly ratio = qr.roots[1] * poly_invmod(qr.roots[0], p2) % p2;
    return int_lcm(mult_order(ratio, p2), mult_order(qr.roots[0], p2));
}

}  // namespace detail

/// pi(P^e): a divisor search under the F_{q^2} bound for constant (a, b),
/// otherwise the profile ladder value p^{i-1} pi(P) with
/// e_{i-1}' < e <= e_i'.
inline Int lift_period(const SeqParams& params, const Poly& P, const Int& e) {
    if (e < 1) raise(errc::precondition_violated, "exponent must be positive");
    detail::require_prime_modulus(P);
    detail::require_b_coprime(params, P);
    if (params.constants_only) {
        if (e * P.degree() > kDefaultDegreeCap)
            raise(errc::degree_cap_exceeded, "P^e too large for the divisor search");
        ResidueRing ring = ResidueRing::create(P.pow(static_cast<uint64_t>(e)));
        return detail::least_period_divisor(params, detail::constants_period_bound(params), ring);
    }
    int64_t depth = 8;
    while (true) {
        PeriodProfile prof = period_profile(params, P, depth);
        if (e <= prof.e_prime(depth)) {
            int64_t i = 1;
            while (prof.e_prime(i) < e) ++i;
            return detail::int_power(params.spec.p(), i - 1) * prof.pi_p;
        }
        depth *= 2;
    }
}

// ---------------------------------------------------------------------------
// Composition to arbitrary M and the beta laws
// ---------------------------------------------------------------------------

/// Structured computation over the prime decomposition of M: per-prime
/// lifted ranks and periods, their lcms, and the beta relations.
struct FullReport {
    struct PerPrime {
        Poly prime;
        int64_t exponent;
        Int alpha;
        Int pi;
    };
    Poly m;
    Factorization factorization;
    std::vector<PerPrime> per_prime;
    Int alpha;
    Int pi;
    Int beta;
    Int ord_minus_b;
    int lcm_factor = 1;
};

inline FullReport report(const SeqParams& params, const Poly& M) {
    if (M.degree() < 1) raise(errc::precondition_violated, "modulus must be non-constant");
    detail::require_b_coprime(params, M);
    FullReport rep;
    rep.m = M;
    rep.factorization = factor_poly(M);
    rep.alpha = 1;
    rep.pi = 1;
    for (const auto& part : rep.factorization.parts) {
        Int a = lift_rank(params, part.prime, part.exponent);
        Int p = lift_period(params, part.prime, part.exponent);
        rep.alpha = int_lcm(rep.alpha, a);
        rep.pi = int_lcm(rep.pi, p);
        rep.per_prime.push_back({part.prime, part.exponent, std::move(a), std::move(p)});
    }
    if (rep.pi % rep.alpha != 0) raise(errc::internal_mismatch, "period not a multiple of the rank");
    rep.beta = rep.pi / rep.alpha;
    rep.ord_minus_b = mult_order(-params.b, M);
    if (2 * rep.ord_minus_b % rep.beta != 0)
        raise(errc::internal_mismatch, "beta does not divide 2 ord_M(-b)");
    Int base = int_lcm(rep.alpha, rep.ord_minus_b);
    if (rep.pi == base) rep.lcm_factor = 1;
    else if (rep.pi == 2 * base) rep.lcm_factor = 2;
    else raise(errc::internal_mismatch, "pi is not (1 or 2) * lcm(alpha, ord_M(-b))");
    return rep;
}

/// beta(P) <= beta(P^e) <= p^{k+1} beta(P), under the hypotheses
/// delta != 0, a^2/b not constant, e_1/e_1' <= p^k and e > e_{k+2}.
inline bool beta_bound_check(const SeqParams& params, const Poly& P, int64_t k, const Int& e) {
    if (params.delta_is_zero || params.ratio_in_fq)
        raise(errc::precondition_violated, "bound needs delta != 0 and a^2/b non-constant");
    if (k < 1) raise(errc::precondition_violated, "k must be positive");
    RankProfile rank = rank_profile(params, P);
    if (!rank.e1) raise(errc::internal_mismatch, "rank ladder must exist here");
    PeriodProfile per = period_profile(params, P, 1);
    int64_t p = params.spec.p();
    if (Int(*rank.e1) > detail::int_power(p, k) * per.e1p)
        raise(errc::precondition_violated, "e_1/e_1' exceeds p^k");
    if (e <= rank.e(k + 2)) raise(errc::precondition_violated, "e must exceed e_{k+2}");
    Int alpha_p = rank.alpha_p;
    Int beta_p = per.pi_p / alpha_p;
    if (per.pi_p % alpha_p != 0) raise(errc::internal_mismatch, "beta(P) not integral");
    Int alpha_e = lift_rank(params, P, e);
    Int pi_e = lift_period(params, P, e);
    if (pi_e % alpha_e != 0) raise(errc::internal_mismatch, "beta(P^e) not integral");
    Int beta_e = pi_e / alpha_e;
    return beta_p <= beta_e && beta_e <= detail::int_power(p, k + 1) * beta_p;
}

}  // namespace fibfq

#endif  // FIBFQ_RANKPERIOD_HPP
