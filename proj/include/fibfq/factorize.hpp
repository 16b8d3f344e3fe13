#ifndef FIBFQ_FACTORIZE_HPP
#define FIBFQ_FACTORIZE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "fibfq/poly.hpp"

namespace fibfq {

namespace detail {

inline uint64_t fnv_mix(uint64_t h, uint64_t v) {
    h ^= v;
    h *= 0x100000001b3ULL;
    return h;
}

/// Deterministic seed derived from the field and a set of polynomials, so
/// that randomized splitting is reproducible per input.
inline uint64_t poly_seed(std::initializer_list<const Poly*> polys) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (const Poly* f : polys) {
        const FieldSpec& s = f->spec();
        h = fnv_mix(h, static_cast<uint64_t>(s.p()));
        h = fnv_mix(h, static_cast<uint64_t>(s.l()));
        for (int64_t c : s.modulus()) h = fnv_mix(h, static_cast<uint64_t>(c));
        for (uint64_t c : f->raw()) h = fnv_mix(h, c + 1);
        h = fnv_mix(h, 0xfeedULL);
    }
    return h;
}

/// x^{q^k} mod f for k = 0..n, reusing successive q-th powers.
inline std::vector<Poly> frobenius_powers(const Poly& f, int64_t n) {
    std::vector<Poly> out;
    out.reserve(static_cast<size_t>(n) + 1);
    Poly h = Poly::x(f.spec()) % f;
    out.push_back(h);
    for (int64_t k = 1; k <= n; ++k) {
        h = poly_powmod(h, f.spec().q_big(), f);
        out.push_back(h);
    }
    return out;
}

}  // namespace detail

/// True iff f is irreducible over F_q.
inline bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) raise(errc::constant_input, "irreducibility needs degree >= 1");
    int64_t n = f.degree();
    if (n == 1) return true;
    Poly g = monic(f);
    Poly x = Poly::x(g.spec());
    std::vector<Poly> frob = detail::frobenius_powers(g, n);
    if (frob[static_cast<size_t>(n)] != x % g) return false;
    for (int64_t r = 2; r <= n; ++r) {
        if (n % r != 0 || !is_probable_prime(Int(r))) continue;
        Poly d = poly_gcd(frob[static_cast<size_t>(n / r)] - x, g);
        if (d.degree() != 0) return false;
    }
    return true;
}

/// P-adic valuation of f: largest n with P^n | f, INT64_MAX for f = 0.
/// P must be monic irreducible.
inline constexpr int64_t kValInfinity = INT64_MAX;

namespace detail {

inline int64_t valuation_unchecked(const Poly& P, Poly f) {
    if (f.is_zero()) return kValInfinity;
    int64_t v = 0;
    while (true) {
        auto [q, r] = divmod(f, P);
        if (!r.is_zero()) return v;
        ++v;
        f = std::move(q);
    }
}

}  // namespace detail

inline int64_t valuation(const Poly& P, const Poly& f) {
    if (P.degree() < 1 || !P.is_monic() || !is_irreducible(P))
        raise(errc::not_irreducible, "valuation base must be monic irreducible");
    return detail::valuation_unchecked(P, f);
}

/// Prime decomposition: unit times a product of distinct monic irreducible
/// powers, sorted by (degree, lexicographic).
struct Factorization {
    struct Part {
        Poly prime;
        int64_t exponent;
    };
    FieldElem unit;
    std::vector<Part> parts;

    Poly product() const {
        Poly r = Poly::constant(unit);
        for (const auto& pt : parts) r = r * pt.prime.pow(static_cast<uint64_t>(pt.exponent));
        return r;
    }
};

namespace detail {

inline Poly poly_pth_root(const Poly& f) {
    const FieldSpec& s = f.spec();
    int64_t p = s.p();
    std::vector<FieldElem> out;
    for (int64_t i = 0; i * p <= f.degree(); ++i) out.push_back(f.coeff(i * p).pth_root());
    return Poly::from_coeffs(s, out);
}

/// Squarefree decomposition in characteristic p.
inline void squarefree_decompose(const Poly& f, int64_t mult,
                                 std::vector<std::pair<Poly, int64_t>>& out) {
    const int64_t p = f.spec().p();
    Poly df = derivative(f);
    if (df.is_zero()) {
        squarefree_decompose(poly_pth_root(f), mult * p, out);
        return;
    }
    Poly c = poly_gcd(f, df);
    Poly w = f / c;
    int64_t i = 1;
    while (!w.is_one()) {
        Poly y = poly_gcd(w, c);
        Poly fac = w / y;
        if (fac.degree() > 0) out.emplace_back(monic(fac), mult * i);
        w = std::move(y);
        c = c / w;
        ++i;
    }
    if (!c.is_one()) squarefree_decompose(poly_pth_root(c), mult * p, out);
}

/// Absolute trace into F_2 computed modulo f: sum of r^{2^i} for
/// i < bits. Splits products of degree-k irreducibles when bits = l*k.
inline Poly abs_trace_mod(const Poly& r, const Poly& f, int64_t bits) {
    Poly acc = r % f;
    Poly term = acc;
    for (int64_t i = 1; i < bits; ++i) {
        term = term * term % f;
        acc = acc + term;
    }
    return acc;
}

inline Poly random_poly_below(const FieldSpec& s, int64_t deg_bound, std::mt19937_64& rng) {
    std::vector<FieldElem> c;
    std::uniform_int_distribution<uint64_t> dist(0, s.q() - 1);
    for (int64_t i = 0; i < deg_bound; ++i) c.push_back(FieldElem(s, dist(rng)));
    return Poly::from_coeffs(s, c);
}

/// Cantor-Zassenhaus equal-degree splitting of a monic product of
/// distinct irreducibles of degree k.
inline void equal_degree_split(const Poly& f, int64_t k, std::mt19937_64& rng,
                               std::vector<Poly>& out) {
    if (f.degree() == k) {
        out.push_back(f);
        return;
    }
    const FieldSpec& s = f.spec();
    Poly d(s);
    while (true) {
        Poly r = random_poly_below(s, f.degree(), rng);
        if (r.degree() < 1) continue;
        Poly g = poly_gcd(r, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            d = g;
            break;
        }
        if (s.p() == 2) {
            Poly t = abs_trace_mod(r, f, s.l() * k);
            g = poly_gcd(t, f);
        } else {
            Int e = (int_pow(s.q_big(), static_cast<uint64_t>(k)) - 1) / 2;
            Poly t = poly_powmod(r, e, f) - Poly::one(s);
            g = poly_gcd(t, f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            d = g;
            break;
        }
    }
    equal_degree_split(d, k, rng, out);
    equal_degree_split(f / d, k, rng, out);
}

inline void distinct_degree_split(Poly g, std::mt19937_64& rng,
                                  std::vector<Poly>& out) {
    Poly x = Poly::x(g.spec());
    Poly h = x % g;
    int64_t k = 1;
    while (g.degree() >= 2 * k) {
        h = poly_powmod(h, g.spec().q_big(), g);
        Poly d = poly_gcd(h - x, g);
        if (d.degree() > 0) {
            equal_degree_split(d, k, rng, out);
            g = g / d;
            h = h % g;
        }
        ++k;
    }
    if (g.degree() > 0) out.push_back(g);
}

}  // namespace detail

/// Full factorization over F_q. Squarefree decomposition, then
/// distinct-degree and randomized equal-degree splitting; the random
/// stream is seeded from the input so output is reproducible.
inline Factorization factor_poly(const Poly& f) {
    if (f.degree() < 1) raise(errc::constant_input, "factorization needs degree >= 1");
    Factorization out{f.leading(), {}};
    std::mt19937_64 rng(detail::poly_seed({&f}));
    std::vector<std::pair<Poly, int64_t>> square_free;
    detail::squarefree_decompose(monic(f), 1, square_free);
    for (const auto& [part, mult] : square_free) {
        std::vector<Poly> primes;
        detail::distinct_degree_split(part, rng, primes);
        for (Poly& prime : primes) out.parts.push_back({std::move(prime), mult});
    }
    std::sort(out.parts.begin(), out.parts.end(),
              [](const Factorization::Part& a, const Factorization::Part& b) {
                  return a.prime.lex_less(b.prime);
              });
    return out;
}

/// Roots of the characteristic quadratic X^2 - aX - b modulo a monic
/// irreducible P, i.e. in the field F_{q^d}, d = deg P.
struct QuadRoots {
    enum class Status { two_distinct, repeated, irreducible_mod_p };
    Status status;
    std::vector<Poly> roots;  // residues mod P; empty iff irreducible_mod_p
};

namespace detail {

/// Square root in F_{q^d} = F_q[x]/P for odd q^d, by Tonelli-Shanks with a
/// deterministically seeded non-residue search. Requires a to be a nonzero
/// square mod P.
inline Poly sqrt_mod(const Poly& a, const Poly& P) {
    const FieldSpec& s = P.spec();
    Int N = int_pow(s.q_big(), static_cast<uint64_t>(P.degree())) - 1;
    Poly one = Poly::one(s);
    Int t = N;
    unsigned e2 = 0;
    while (t % 2 == 0) {
        t /= 2;
        ++e2;
    }
    if (e2 == 1) return poly_powmod(a, (N / 2 + 1) / 2, P);  // q^d = 3 mod 4
    std::mt19937_64 rng(poly_seed({&a, &P}));
    Poly z(s);
    for (int64_t c = 2;; ++c) {
        Poly cand = c < 2 + s.p() ? Poly::constant(FieldElem::from_int(s, c))
                                  : random_poly_below(s, P.degree(), rng);
        if (cand.is_zero()) continue;
        if (poly_powmod(cand, N / 2, P) != one) {
            z = cand;
            break;
        }
    }
    unsigned m = e2;
    Poly c = poly_powmod(z, t, P);
    Poly u = poly_powmod(a, t, P);
    Poly r = poly_powmod(a, (t + 1) / 2, P);
    while (u != one) {
        unsigned i = 0;
        Poly v = u;
        while (v != one) {
            v = v * v % P;
            ++i;
        }
        Poly b = c;
        for (unsigned j = 0; j + i + 1 < m; ++j) b = b * b % P;
        m = i;
        c = b * b % P;
        u = u * c % P;
        r = r * b % P;
    }
    return r;
}

/// Solution of X^2 + X = c in F_{2^m} = F_q[x]/P (m = l*deg P), assuming
/// Tr(c) = 0. Half-trace for odd m, F_2-linear solve otherwise.
inline Poly artin_schreier_solve(const Poly& c, const Poly& P) {
    const FieldSpec& s = P.spec();
    int64_t m = s.l() * P.degree();
    if (m % 2 == 1) {
        Poly r(s), term = c % P;
        for (int64_t i = 0; 2 * i < m; ++i) {
            r = r + term;
            term = term * term % P;
            term = term * term % P;
        }
        return r;
    }
    // z -> z^2 + z is F_2-linear on the m-bit space spanned by t^i x^j.
    int64_t l = s.l(), d = P.degree();
    auto to_bits = [&](const Poly& v) {
        std::vector<uint8_t> bits(static_cast<size_t>(m), 0);
        for (int64_t j = 0; j < d; ++j) {
            uint64_t idx = j <= v.degree() ? v.raw()[static_cast<size_t>(j)] : 0;
            for (int64_t i = 0; i < l; ++i) bits[static_cast<size_t>(j * l + i)] = (idx >> i) & 1;
        }
        return bits;
    };
    std::vector<std::vector<uint8_t>> col(static_cast<size_t>(m));
    for (int64_t j = 0; j < d; ++j)
        for (int64_t i = 0; i < l; ++i) {
            Poly z = Poly::constant(FieldElem(s, uint64_t{1} << i)).shifted(j);
            col[static_cast<size_t>(j * l + i)] = to_bits((z * z % P) + z);
        }
    std::vector<uint8_t> rhs = to_bits(c % P);
    // Gaussian elimination on the m x (m+1) augmented system, columns = unknowns.
    std::vector<std::vector<uint8_t>> aug(static_cast<size_t>(m),
                                          std::vector<uint8_t>(static_cast<size_t>(m) + 1, 0));
    for (int64_t r = 0; r < m; ++r) {
        for (int64_t k = 0; k < m; ++k) aug[r][k] = col[static_cast<size_t>(k)][static_cast<size_t>(r)];
        aug[r][static_cast<size_t>(m)] = rhs[static_cast<size_t>(r)];
    }
    std::vector<int64_t> pivot_col(static_cast<size_t>(m), -1);
    int64_t row = 0;
    for (int64_t k = 0; k < m && row < m; ++k) {
        int64_t pr = -1;
        for (int64_t r = row; r < m; ++r)
            if (aug[r][k]) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(aug[row], aug[pr]);
        for (int64_t r = 0; r < m; ++r)
            if (r != row && aug[r][k])
                for (int64_t k2 = k; k2 <= m; ++k2) aug[r][k2] ^= aug[row][k2];
        pivot_col[static_cast<size_t>(row)] = k;
        ++row;
    }
    std::vector<uint8_t> sol(static_cast<size_t>(m), 0);
    for (int64_t r = 0; r < m; ++r) {
        if (pivot_col[static_cast<size_t>(r)] >= 0)
            sol[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] = aug[r][static_cast<size_t>(m)];
        else if (aug[r][static_cast<size_t>(m)])
            raise(errc::internal_mismatch, "trace-zero quadratic has no solution");
    }
    std::vector<FieldElem> coeffs;
    for (int64_t j = 0; j < d; ++j) {
        uint64_t idx = 0;
        for (int64_t i = 0; i < l; ++i)
            idx |= static_cast<uint64_t>(sol[static_cast<size_t>(j * l + i)]) << i;
        coeffs.push_back(FieldElem(s, idx));
    }
    return Poly::from_coeffs(s, coeffs);
}

}  // namespace detail

inline QuadRoots quad_roots(const Poly& a, const Poly& b, const Poly& P) {
    if (P.degree() < 1 || !P.is_monic() || !is_irreducible(P))
        raise(errc::not_irreducible, "quadratic solving needs a monic irreducible modulus");
    if (poly_gcd(b, P).degree() != 0) raise(errc::b_not_coprime, "gcd(b, P) != 1");
    const FieldSpec& s = P.spec();
    Poly am = a % P, bm = b % P;
    if (s.p() != 2) {
        Poly four = Poly::constant(FieldElem::from_int(s, 4));
        Poly delta = (am * am + four * bm) % P;
        FieldElem half = FieldElem::from_int(s, 2).inv();
        if (delta.is_zero()) return {QuadRoots::Status::repeated, {am * half % P}};
        Int N = int_pow(s.q_big(), static_cast<uint64_t>(P.degree())) - 1;
        if (poly_powmod(delta, N / 2, P) != Poly::one(s))
            return {QuadRoots::Status::irreducible_mod_p, {}};
        Poly sq = detail::sqrt_mod(delta, P);
        Poly r1 = (am + sq) * half % P;
        Poly r2 = (am - sq) * half % P;
        return {QuadRoots::Status::two_distinct, {r1, r2}};
    }
    if (am.is_zero()) {
        Int half_q = int_pow(Int(2), static_cast<uint64_t>(s.l() * P.degree()) - 1);
        return {QuadRoots::Status::repeated, {poly_powmod(bm, half_q, P)}};
    }
    Poly c = bm * poly_invmod(am * am % P, P) % P;
    Poly tr = detail::abs_trace_mod(c, P, s.l() * P.degree());
    if (!tr.is_zero()) return {QuadRoots::Status::irreducible_mod_p, {}};
    Poly r = detail::artin_schreier_solve(c, P);
    Poly r1 = am * r % P;
    Poly r2 = (r1 + am) % P;
    return {QuadRoots::Status::two_distinct, {r1, r2}};
}

}  // namespace fibfq

#endif  // FIBFQ_FACTORIZE_HPP
