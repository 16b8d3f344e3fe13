#ifndef FIBFQ_FIELD_HPP
#define FIBFQ_FIELD_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fibfq/error.hpp"
#include "fibfq/integer.hpp"

namespace fibfq {

class FieldSpec;
class FieldElem;

namespace detail {

// Plain polynomial arithmetic over F_p on int64 coefficient vectors,
// used only while constructing a field (modulus validation and sieving).
// Vectors are little-endian and trimmed.

inline void fp_trim(std::vector<int64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

inline std::vector<int64_t> fp_mulmod(const std::vector<int64_t>& a, const std::vector<int64_t>& b,
                                      const std::vector<int64_t>& g, int64_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int64_t> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    size_t dg = g.size() - 1;  // g monic
    for (size_t i = r.size(); i-- > dg;) {
        int64_t c = r[i] % p;
        if (c == 0) continue;
        for (size_t j = 0; j < dg; ++j) r[i - dg + j] = ((r[i - dg + j] - c * g[j]) % p + p) % p;
        r[i] = 0;
    }
    r.resize(dg);
    for (auto& c : r) c = (c % p + p) % p;
    fp_trim(r);
    return r;
}

inline std::vector<int64_t> fp_powmod(std::vector<int64_t> base, Int e, const std::vector<int64_t>& g,
                                      int64_t p) {
    std::vector<int64_t> r{1};
    while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0)) r = fp_mulmod(r, base, g, p);
        base = fp_mulmod(base, base, g, p);
        e >>= 1;
    }
    return r;
}

inline std::vector<int64_t> fp_gcd(std::vector<int64_t> a, std::vector<int64_t> b, int64_t p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        // a mod b by schoolbook division (b need not be monic)
        int64_t lead = b.back();
        // lead^{-1} mod p by Fermat
        int64_t inv = 1, base = lead % p, k = p - 2;
        while (k) {
            if (k & 1) inv = inv * base % p;
            base = base * base % p;
            k >>= 1;
        }
        while (a.size() >= b.size() && !a.empty()) {
            int64_t c = a.back() * inv % p;
            size_t off = a.size() - b.size();
            for (size_t j = 0; j < b.size(); ++j) a[off + j] = ((a[off + j] - c * b[j]) % p + p) % p;
            fp_trim(a);
        }
        std::swap(a, b);
    }
    return a;
}

inline bool fp_is_irreducible(const std::vector<int64_t>& g, int64_t p) {
    size_t l = g.size() - 1;
    if (l == 0) return false;
    std::vector<int64_t> x{0, 1};
    if (l == 1) return true;
    // x^{p^l} == x mod g, and gcd(x^{p^{l/r}} - x, g) = 1 for prime r | l
    std::vector<int64_t> h = x;
    std::vector<std::vector<int64_t>> frob(l + 1);  // frob[k] = x^{p^k} mod g
    frob[0] = x;
    for (size_t k = 1; k <= l; ++k) {
        h = fp_powmod(h, p, g, p);
        frob[k] = h;
    }
    std::vector<int64_t> diff = frob[l];
    // subtract x
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    fp_trim(diff);
    if (!diff.empty()) return false;
    for (size_t r = 2; r <= l; ++r) {
        if (l % r != 0) continue;
        bool rp = true;
        for (size_t d = 2; d * d <= r; ++d)
            if (r % d == 0) rp = false;
        if (!rp) continue;
        std::vector<int64_t> dk = frob[l / r];
        if (dk.size() < 2) dk.resize(2, 0);
        dk[1] = ((dk[1] - 1) % p + p) % p;
        fp_trim(dk);
        if (fp_gcd(dk, g, p).size() != 1) return false;  // gcd must be a nonzero constant
    }
    return true;
}

struct FieldData {
    int64_t p = 0;
    int l = 1;
    uint64_t q = 0;
    Int q_big;
    std::vector<int64_t> mod;  // monic, length l+1; equals {0,1} (i.e. t) when l = 1

    // Acceleration tables. Pair tables exist for q <= pair_limit, exp/log
    // for q <= exp_log_limit; all operations fall back to direct
    // coefficient arithmetic when absent.
    static constexpr uint64_t pair_limit = 1024;
    static constexpr uint64_t exp_log_limit = 1u << 20;
    std::vector<uint32_t> add_tab, mul_tab;  // q*q
    std::vector<uint32_t> exp_tab;           // q-1 entries, exp_tab[k] = gen^k
    std::vector<uint32_t> log_tab;           // q entries, log_tab[0] unused
    std::vector<uint64_t> inv_tab;           // q entries, inv_tab[0] unused
    bool pair_tables = false;
    bool exp_log = false;

    void decode(uint64_t idx, int64_t* out) const {
        for (int i = 0; i < l; ++i) {
            out[i] = static_cast<int64_t>(idx % static_cast<uint64_t>(p));
            idx /= static_cast<uint64_t>(p);
        }
    }
    uint64_t encode(const int64_t* c) const {
        uint64_t idx = 0;
        for (int i = l - 1; i >= 0; --i) idx = idx * static_cast<uint64_t>(p) + static_cast<uint64_t>(c[i]);
        return idx;
    }

    uint64_t add_direct(uint64_t a, uint64_t b) const {
        int64_t x[64], y[64];
        decode(a, x);
        decode(b, y);
        for (int i = 0; i < l; ++i) {
            x[i] += y[i];
            if (x[i] >= p) x[i] -= p;
        }
        return encode(x);
    }
    uint64_t sub_direct(uint64_t a, uint64_t b) const {
        int64_t x[64], y[64];
        decode(a, x);
        decode(b, y);
        for (int i = 0; i < l; ++i) {
            x[i] -= y[i];
            if (x[i] < 0) x[i] += p;
        }
        return encode(x);
    }
    uint64_t neg_direct(uint64_t a) const {
        int64_t x[64];
        decode(a, x);
        for (int i = 0; i < l; ++i)
            if (x[i]) x[i] = p - x[i];
        return encode(x);
    }
    uint64_t mul_direct(uint64_t a, uint64_t b) const {
        if (a == 0 || b == 0) return 0;
        int64_t x[64], y[64], r[128] = {0};
        decode(a, x);
        decode(b, y);
        for (int i = 0; i < l; ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < l; ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % p;
        }
        for (int i = 2 * l - 2; i >= l; --i) {
            int64_t c = r[i];
            if (c == 0) continue;
            for (int j = 0; j < l; ++j) r[i - l + j] = ((r[i - l + j] - c * mod[j]) % p + p) % p;
        }
        return encode(r);
    }
    uint64_t inv_direct(uint64_t a) const {
        // extended Euclid on (rep, mod) over F_p[t]
        int64_t buf[64];
        decode(a, buf);
        std::vector<int64_t> r0(mod), r1(buf, buf + l), s0, s1{1};
        fp_trim(r1);
        while (!r1.empty()) {
            // r0 = qq*r1 + rem
            std::vector<int64_t> qq;
            std::vector<int64_t> rem = r0;
            int64_t lead = r1.back();
            int64_t inv = 1, base = lead % p, k = p - 2;
            while (k) {
                if (k & 1) inv = inv * base % p;
                base = base * base % p;
                k >>= 1;
            }
            if (rem.size() >= r1.size()) qq.assign(rem.size() - r1.size() + 1, 0);
            while (rem.size() >= r1.size() && !rem.empty()) {
                int64_t c = rem.back() * inv % p;
                size_t off = rem.size() - r1.size();
                qq[off] = c;
                for (size_t j = 0; j < r1.size(); ++j)
                    rem[off + j] = ((rem[off + j] - c * r1[j]) % p + p) % p;
                fp_trim(rem);
            }
            // s stepping: s0 - qq*s1
            std::vector<int64_t> t(std::max(s0.size(), qq.size() + s1.size()), 0);
            for (size_t i = 0; i < s0.size(); ++i) t[i] = s0[i];
            for (size_t i = 0; i < qq.size(); ++i) {
                if (qq[i] == 0) continue;
                for (size_t j = 0; j < s1.size(); ++j)
                    t[i + j] = ((t[i + j] - qq[i] * s1[j]) % p + p) % p;
            }
            fp_trim(t);
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = t;
        }
        // r0 = gcd, constant (mod irreducible, a nonzero); scale s0 by r0^{-1}
        int64_t lead = r0.back();
        int64_t inv = 1, base = lead % p, k = p - 2;
        while (k) {
            if (k & 1) inv = inv * base % p;
            base = base * base % p;
            k >>= 1;
        }
        int64_t out[64] = {0};
        for (size_t i = 0; i < s0.size() && i < static_cast<size_t>(l); ++i) out[i] = s0[i] * inv % p;
        return encode(out);
    }

    uint64_t add(uint64_t a, uint64_t b) const {
        return pair_tables ? add_tab[a * q + b] : add_direct(a, b);
    }
    uint64_t sub(uint64_t a, uint64_t b) const {
        return pair_tables ? add_tab[a * q + neg(b)] : sub_direct(a, b);
    }
    uint64_t neg(uint64_t a) const {
        if (p == 2) return a;
        return neg_direct(a);
    }
    uint64_t mul(uint64_t a, uint64_t b) const {
        if (pair_tables) return mul_tab[a * q + b];
        if (exp_log) {
            if (a == 0 || b == 0) return 0;
            return exp_tab[(log_tab[a] + log_tab[b]) % (q - 1)];
        }
        return mul_direct(a, b);
    }
    uint64_t inv(uint64_t a) const {
        if (a == 0) raise(errc::division_by_zero, "inverse of zero field element");
        if (!inv_tab.empty()) return inv_tab[a];
        return inv_direct(a);
    }
    uint64_t pow(uint64_t a, Int e) const {
        if (e == 0) return 1;
        if (a == 0) return 0;
        if (exp_log) {
            Int group = q_big - 1;
            uint64_t em = static_cast<uint64_t>(e % group);
            uint64_t lg = log_tab[a];
            return exp_tab[static_cast<uint64_t>((Int(lg) * em) % group)];
        }
        uint64_t r = 1, b = a;
        while (e > 0) {
            if (boost::multiprecision::bit_test(e, 0)) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }

    void build_tables() {
        if (q <= pair_limit) {
            add_tab.resize(q * q);
            mul_tab.resize(q * q);
            for (uint64_t i = 0; i < q; ++i)
                for (uint64_t j = 0; j <= i; ++j) {
                    uint32_t s = static_cast<uint32_t>(add_direct(i, j));
                    uint32_t m = static_cast<uint32_t>(mul_direct(i, j));
                    add_tab[i * q + j] = add_tab[j * q + i] = s;
                    mul_tab[i * q + j] = mul_tab[j * q + i] = m;
                }
            pair_tables = true;
        }
        if (q <= exp_log_limit) {
            std::vector<Int> rs = int_prime_divisors(q_big - 1);
            uint64_t gen = 0;
            for (uint64_t cand = 1; cand < q; ++cand) {
                bool prim = true;
                for (const Int& r : rs) {
                    if (pow(cand, (q_big - 1) / r) == 1) {
                        prim = false;
                        break;
                    }
                }
                if (prim) {
                    gen = cand;
                    break;
                }
            }
            exp_tab.resize(q - 1);
            log_tab.assign(q, 0);
            uint64_t cur = 1;
            for (uint64_t k = 0; k + 1 < q; ++k) {
                exp_tab[k] = static_cast<uint32_t>(cur);
                log_tab[cur] = static_cast<uint32_t>(k);
                cur = pair_tables ? mul_tab[cur * q + gen] : mul_direct(cur, gen);
            }
            exp_log = true;
            inv_tab.assign(q, 0);
            for (uint64_t a = 1; a < q; ++a)
                inv_tab[a] = exp_tab[(q - 1 - log_tab[a]) % (q - 1)];
        }
    }
};

}  // namespace detail

/// The ambient field F_q = F_p[t]/(g), q = p^l. A FieldSpec is an immutable
/// shared handle; elements hold one and stay valid as long as any handle
/// does. Elements are stored as canonical base-p indices of their
/// coefficient vectors.
class FieldSpec {
   public:
    FieldSpec() = default;

    /// Prime field F_p (g = t).
    static FieldSpec create(int64_t p) { return create(p, 1); }

    /// F_{p^l} with the generated modulus: the monic irreducible of degree l
    /// whose low-coefficient vector, read as a base-p number, is smallest.
    static FieldSpec create(int64_t p, int l) { return create_impl(p, l, nullptr); }

    /// F_{p^l} with a caller-supplied monic irreducible modulus
    /// (little-endian coefficients, length l+1).
    static FieldSpec create(int64_t p, int l, const std::vector<int64_t>& modulus) {
        return create_impl(p, l, &modulus);
    }

    int64_t p() const { return d_->p; }
    int l() const { return d_->l; }
    uint64_t q() const { return d_->q; }
    const Int& q_big() const { return d_->q_big; }
    const std::vector<int64_t>& modulus() const { return d_->mod; }

    bool same(const FieldSpec& o) const {
        if (d_ == o.d_) return true;
        return d_ && o.d_ && d_->p == o.d_->p && d_->l == o.d_->l && d_->mod == o.d_->mod;
    }
    bool valid() const { return static_cast<bool>(d_); }

    const detail::FieldData& data() const { return *d_; }

   private:
    static FieldSpec create_impl(int64_t p, int l, const std::vector<int64_t>* modulus) {
        if (p < 2 || !is_probable_prime(Int(p)))
            raise(errc::precondition_violated, "field characteristic must be prime");
        if (l < 1) raise(errc::precondition_violated, "extension degree must be positive");
        auto d = std::make_shared<detail::FieldData>();
        d->p = p;
        d->l = l;
        d->q_big = int_pow(Int(p), static_cast<uint64_t>(l));
        if (d->q_big >= (Int(1) << 62))
            raise(errc::precondition_violated, "field order exceeds the supported range (2^62)");
        d->q = static_cast<uint64_t>(d->q_big);
        if (modulus) {
            std::vector<int64_t> g = *modulus;
            for (auto& c : g) c = ((c % p) + p) % p;
            detail::fp_trim(g);
            if (g.size() != static_cast<size_t>(l) + 1 || g.back() != 1)
                raise(errc::precondition_violated, "field modulus must be monic of degree l");
            if (!detail::fp_is_irreducible(g, p))
                raise(errc::not_irreducible, "field modulus is reducible over F_p");
            d->mod = g;
        } else if (l == 1) {
            d->mod = {0, 1};  // g = t
        } else {
            std::vector<int64_t> g(static_cast<size_t>(l) + 1, 0);
            g[l] = 1;
            for (uint64_t v = 0;; ++v) {
                uint64_t t = v;
                for (int i = 0; i < l; ++i) {
                    g[i] = static_cast<int64_t>(t % static_cast<uint64_t>(p));
                    t /= static_cast<uint64_t>(p);
                }
                if (detail::fp_is_irreducible(g, p)) break;
                if (v + 1 == d->q) raise(errc::internal_mismatch, "modulus sieve exhausted");
            }
            d->mod = g;
        }
        d->build_tables();
        FieldSpec f;
        f.d_ = std::move(d);
        return f;
    }

    std::shared_ptr<const detail::FieldData> d_;
};

/// One element of F_q, canonical (all coefficients reduced mod p).
class FieldElem {
   public:
    FieldElem() = default;
    FieldElem(FieldSpec f, uint64_t idx) : f_(std::move(f)), idx_(idx) {}

    static FieldElem zero(const FieldSpec& f) { return {f, 0}; }
    static FieldElem one(const FieldSpec& f) { return {f, 1}; }
    /// The extension generator t.
    static FieldElem gen(const FieldSpec& f) {
        return {f, f.l() > 1 ? static_cast<uint64_t>(f.p()) : 0};
    }
    static FieldElem from_int(const FieldSpec& f, int64_t v) {
        int64_t c = ((v % f.p()) + f.p()) % f.p();
        return {f, static_cast<uint64_t>(c)};
    }
    static FieldElem from_coeffs(const FieldSpec& f, const std::vector<int64_t>& c) {
        int64_t buf[64] = {0};
        for (size_t i = 0; i < c.size(); ++i) {
            if (i >= static_cast<size_t>(f.l()))
                raise(errc::coeff_out_of_field, "coefficient vector longer than extension degree");
            buf[i] = ((c[i] % f.p()) + f.p()) % f.p();
        }
        return {f, f.data().encode(buf)};
    }

    const FieldSpec& spec() const { return f_; }
    uint64_t index() const { return idx_; }
    bool is_zero() const { return idx_ == 0; }
    bool is_one() const { return idx_ == 1; }

    std::vector<int64_t> coeffs() const {
        int64_t buf[64];
        f_.data().decode(idx_, buf);
        return std::vector<int64_t>(buf, buf + f_.l());
    }

    FieldElem operator+(const FieldElem& o) const {
        check(o);
        return {f_, f_.data().add(idx_, o.idx_)};
    }
    FieldElem operator-(const FieldElem& o) const {
        check(o);
        return {f_, f_.data().sub(idx_, o.idx_)};
    }
    FieldElem operator*(const FieldElem& o) const {
        check(o);
        return {f_, f_.data().mul(idx_, o.idx_)};
    }
    FieldElem operator-() const { return {f_, f_.data().neg(idx_)}; }
    FieldElem inv() const { return {f_, f_.data().inv(idx_)}; }
    FieldElem operator/(const FieldElem& o) const {
        check(o);
        return {f_, f_.data().mul(idx_, f_.data().inv(o.idx_))};
    }
    FieldElem pow(const Int& e) const {
        if (e < 0) raise(errc::precondition_violated, "pow exponent must be nonnegative");
        return {f_, f_.data().pow(idx_, e)};
    }
    /// Inverse Frobenius: the unique c with c^p = *this.
    FieldElem pth_root() const {
        return pow(int_pow(Int(f_.p()), static_cast<uint64_t>(f_.l() - 1)));
    }
    /// Multiplicative order; requires a nonzero element.
    Int order() const {
        if (idx_ == 0) raise(errc::division_by_zero, "order of zero field element");
        Int n = f_.q_big() - 1;
        for (const Int& r : int_prime_divisors(n)) {
            while (n % r == 0 && pow(n / r).is_one()) n /= r;
        }
        return n;
    }

    bool operator==(const FieldElem& o) const { return f_.same(o.f_) && idx_ == o.idx_; }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

   private:
    void check(const FieldElem& o) const {
        if (!f_.same(o.f_)) raise(errc::spec_mismatch, "operands from different fields");
    }

    FieldSpec f_;
    uint64_t idx_ = 0;
};

}  // namespace fibfq

#endif  // FIBFQ_FIELD_HPP
