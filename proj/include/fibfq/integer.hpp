#ifndef FIBFQ_INTEGER_HPP
#define FIBFQ_INTEGER_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include <boost/integer/common_factor_rt.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "fibfq/error.hpp"

namespace fibfq {

/// Exact integer used for every reported rank, period, order and exponent.
/// Expression templates are off so mixed arithmetic deduces plain values.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int int_pow(const Int& base, uint64_t exp) {
    Int r = 1, b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

namespace detail {

inline Int mulmod(const Int& a, const Int& b, const Int& m) { return a * b % m; }

inline Int powmod(Int base, Int exp, const Int& m) {
    Int r = 1;
    base %= m;
    if (base < 0) base += m;
    while (exp > 0) {
        if (boost::multiprecision::bit_test(exp, 0)) r = r * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return r;
}

inline bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, unsigned s) {
    Int x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;  // composite witness
}

}  // namespace detail

/// Miller-Rabin primality test, deterministic for n below 3.3e24 via the
/// standard 13-base set; larger inputs fall back to the same bases as a
/// strong probable-prime test.
inline bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    unsigned s = 0;
    while (!boost::multiprecision::bit_test(d, 0)) {
        d >>= 1;
        ++s;
    }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (detail::miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

namespace detail {

/// Brent-cycle Pollard rho; returns a nontrivial factor of composite odd n.
inline Int pollard_brent(const Int& n, uint64_t seed) {
    if (n % 2 == 0) return 2;
    uint64_t state = seed;
    auto next_u64 = [&state]() {
        state += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    while (true) {
        Int y = Int(next_u64()) % n;
        Int c = Int(next_u64()) % n;
        if (c == 0) c = 1;
        Int g = 1, r = 1, q = 1, x = 0, ys = 0;
        while (g == 1) {
            x = y;
            for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
            Int k = 0;
            while (k < r && g == 1) {
                ys = y;
                Int lim = std::min(Int(128), r - k);
                for (Int i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = int_gcd(q, n);
                k += 128;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = int_gcd(abs(x - ys), n);
            }
        }
        if (g != n) return g;
        // cycle degenerated; retry with a fresh polynomial
    }
}

inline void factor_into(const Int& n, std::vector<Int>& out, uint64_t seed) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out.push_back(n);
        return;
    }
    Int f = pollard_brent(n, seed);
    factor_into(f, out, seed + 1);
    factor_into(n / f, out, seed + 2);
}

}  // namespace detail

/// Prime factorization with multiplicity, sorted ascending. Trial division
/// through 10^5 first, Pollard-Brent rho on whatever survives.
inline std::vector<Int> int_factor(Int n) {
    if (n < 1) raise(errc::precondition_violated, "int_factor requires n >= 1");
    std::vector<Int> out;
    for (Int p = 2; p <= 100000 && p * p <= n; p == 2 ? p = 3 : p += 2) {
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    }
    detail::factor_into(n, out, 0x5eedULL);
    std::sort(out.begin(), out.end());
    return out;
}

/// Distinct primes of n, ascending.
inline std::vector<Int> int_prime_divisors(const Int& n) {
    std::vector<Int> f = int_factor(n);
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
}

}  // namespace fibfq

#endif  // FIBFQ_INTEGER_HPP
