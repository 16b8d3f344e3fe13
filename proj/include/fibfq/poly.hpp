#ifndef FIBFQ_POLY_HPP
#define FIBFQ_POLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "fibfq/field.hpp"

namespace fibfq {

/// Dense polynomial over F_q. Coefficients are stored little-endian as
/// canonical element indices with no trailing zeros; the zero polynomial
/// has an empty coefficient vector and degree kNegInf.
class Poly {
   public:
    static constexpr int64_t kNegInf = INT64_MIN / 2;

    Poly() = default;
    explicit Poly(FieldSpec f) : f_(std::move(f)) {}

    static Poly zero(const FieldSpec& f) { return Poly(f); }
    static Poly one(const FieldSpec& f) { return constant(FieldElem::one(f)); }
    static Poly x(const FieldSpec& f) {
        Poly r(f);
        r.c_ = {0, 1};
        return r;
    }
    static Poly constant(const FieldElem& c) {
        Poly r(c.spec());
        if (!c.is_zero()) r.c_ = {c.index()};
        return r;
    }
    static Poly from_coeffs(const FieldSpec& f, const std::vector<FieldElem>& coeffs) {
        Poly r(f);
        r.c_.reserve(coeffs.size());
        for (const auto& c : coeffs) {
            if (!c.spec().same(f)) raise(errc::spec_mismatch, "coefficient from a different field");
            r.c_.push_back(c.index());
        }
        r.trim();
        return r;
    }
    /// Coefficients given as integers, reduced mod p.
    static Poly from_ints(const FieldSpec& f, const std::vector<int64_t>& coeffs) {
        Poly r(f);
        r.c_.reserve(coeffs.size());
        for (int64_t c : coeffs) r.c_.push_back(FieldElem::from_int(f, c).index());
        r.trim();
        return r;
    }

    const FieldSpec& spec() const { return f_; }
    int64_t degree() const { return c_.empty() ? kNegInf : static_cast<int64_t>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    FieldElem coeff(int64_t i) const {
        if (i < 0 || static_cast<size_t>(i) >= c_.size()) return FieldElem::zero(f_);
        return {f_, c_[static_cast<size_t>(i)]};
    }
    FieldElem leading() const {
        if (c_.empty()) return FieldElem::zero(f_);
        return {f_, c_.back()};
    }
    const std::vector<uint64_t>& raw() const { return c_; }

    Poly operator+(const Poly& o) const {
        check(o);
        const auto& d = f_.data();
        Poly r(f_);
        r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] = d.add(r.c_[i], o.c_[i]);
        r.trim();
        return r;
    }
    Poly operator-(const Poly& o) const {
        check(o);
        const auto& d = f_.data();
        Poly r(f_);
        r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] = d.sub(r.c_[i], o.c_[i]);
        r.trim();
        return r;
    }
    Poly operator-() const {
        const auto& d = f_.data();
        Poly r(*this);
        for (auto& c : r.c_) c = d.neg(c);
        return r;
    }
    Poly operator*(const Poly& o) const {
        check(o);
        if (c_.empty() || o.c_.empty()) return Poly(f_);
        const auto& d = f_.data();
        Poly r(f_);
        r.c_.assign(c_.size() + o.c_.size() - 1, 0);
        for (size_t i = 0; i < c_.size(); ++i) {
            uint64_t ci = c_[i];
            if (ci == 0) continue;
            for (size_t j = 0; j < o.c_.size(); ++j) {
                if (o.c_[j] == 0) continue;
                r.c_[i + j] = d.add(r.c_[i + j], d.mul(ci, o.c_[j]));
            }
        }
        r.trim();
        return r;
    }
    Poly operator*(const FieldElem& s) const {
        if (!s.spec().same(f_)) raise(errc::spec_mismatch, "scalar from a different field");
        if (s.is_zero()) return Poly(f_);
        const auto& d = f_.data();
        Poly r(*this);
        for (auto& c : r.c_) c = d.mul(c, s.index());
        return r;
    }

    /// Multiplication by x^k.
    Poly shifted(int64_t k) const {
        if (c_.empty() || k == 0) return *this;
        Poly r(f_);
        r.c_.assign(c_.size() + static_cast<size_t>(k), 0);
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i + static_cast<size_t>(k)] = c_[i];
        return r;
    }

    Poly pow(uint64_t e) const {
        Poly r = one(f_), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    bool operator==(const Poly& o) const { return f_.same(o.f_) && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Total order used for deterministic output: degree first, then
    /// coefficient indices from the top down.
    bool lex_less(const Poly& o) const {
        if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
        for (size_t i = c_.size(); i-- > 0;)
            if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
        return false;
    }

   private:
    void check(const Poly& o) const {
        if (!f_.same(o.f_)) raise(errc::spec_mismatch, "operands over different fields");
    }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    friend std::pair<Poly, Poly> divmod(const Poly&, const Poly&);
    friend Poly derivative(const Poly&);

    FieldSpec f_;
    std::vector<uint64_t> c_;
};

/// Quotient and remainder with deg(remainder) < deg(divisor).
inline std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
    if (!f.spec().same(g.spec())) raise(errc::spec_mismatch, "operands over different fields");
    if (g.is_zero()) raise(errc::division_by_zero, "polynomial division by zero");
    if (f.degree() < g.degree()) return {Poly(f.spec()), f};
    const auto& d = f.spec().data();
    uint64_t lead_inv = d.inv(g.raw().back());
    Poly rem = f;
    Poly quot(f.spec());
    quot.c_.assign(static_cast<size_t>(f.degree() - g.degree()) + 1, 0);
    size_t dg = g.raw().size() - 1;
    while (!rem.c_.empty() && rem.c_.size() >= g.raw().size()) {
        uint64_t c = d.mul(rem.c_.back(), lead_inv);
        size_t off = rem.c_.size() - 1 - dg;
        quot.c_[off] = c;
        for (size_t j = 0; j <= dg; ++j)
            rem.c_[off + j] = d.sub(rem.c_[off + j], d.mul(c, g.raw()[j]));
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

inline Poly operator/(const Poly& f, const Poly& g) { return divmod(f, g).first; }
inline Poly operator%(const Poly& f, const Poly& g) { return divmod(f, g).second; }

inline Poly monic(const Poly& f) {
    if (f.is_zero() || f.is_monic()) return f;
    return f * f.leading().inv();
}

/// Monic greatest common divisor; requires inputs not both zero.
inline Poly poly_gcd(Poly a, Poly b) {
    if (!a.spec().same(b.spec())) raise(errc::spec_mismatch, "operands over different fields");
    if (a.is_zero() && b.is_zero()) raise(errc::division_by_zero, "gcd of two zero polynomials");
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

inline Poly poly_powmod(Poly base, Int e, const Poly& m) {
    Poly r = Poly::one(m.spec());
    base = base % m;
    while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0)) r = r * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return r;
}

/// Inverse of f modulo m via extended Euclid; gcd(f, m) must be constant.
inline Poly poly_invmod(const Poly& f, const Poly& m) {
    Poly r0 = m, r1 = f % m;
    Poly s0 = Poly::zero(m.spec()), s1 = Poly::one(m.spec());
    while (!r1.is_zero()) {
        auto [q, rem] = divmod(r0, r1);
        Poly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (!r0.is_constant() || r0.is_zero())
        raise(errc::not_coprime, "element is not invertible modulo m");
    return (s0 * r0.leading().inv()) % m;
}

inline Poly derivative(const Poly& f) {
    Poly r(f.spec());
    if (f.degree() < 1) return r;
    const auto& d = f.spec().data();
    r.c_.assign(f.raw().size() - 1, 0);
    for (size_t i = 1; i < f.raw().size(); ++i) {
        uint64_t scale = FieldElem::from_int(f.spec(), static_cast<int64_t>(i % static_cast<uint64_t>(
                                                           f.spec().p())))
                             .index();
        r.c_[i - 1] = d.mul(f.raw()[i], scale);
    }
    r.trim();
    return r;
}

}  // namespace fibfq

#endif  // FIBFQ_POLY_HPP
