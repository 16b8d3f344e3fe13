#ifndef FIBFQ_QUOTIENT_HPP
#define FIBFQ_QUOTIENT_HPP

#include <memory>
#include <optional>
#include <utility>

#include "fibfq/factorize.hpp"
#include "fibfq/poly.hpp"

namespace fibfq {

namespace detail {

struct RingData {
    Poly modulus;  // monic, degree >= 1
};

}  // namespace detail

/// The residue ring F_q[x]/M. The modulus is normalized monic at
/// construction; rank, period and orders are unchanged by unit scaling.
class ResidueRing {
   public:
    ResidueRing() = default;

    static ResidueRing create(const Poly& M) {
        if (M.degree() < 1) raise(errc::precondition_violated, "ring modulus must be non-constant");
        ResidueRing r;
        r.d_ = std::make_shared<detail::RingData>(detail::RingData{monic(M)});
        return r;
    }

    const Poly& modulus() const { return d_->modulus; }
    int64_t degree() const { return d_->modulus.degree(); }
    const FieldSpec& field() const { return d_->modulus.spec(); }
    bool same(const ResidueRing& o) const {
        return d_ == o.d_ || (d_ && o.d_ && d_->modulus == o.d_->modulus);
    }
    bool valid() const { return static_cast<bool>(d_); }

   private:
    std::shared_ptr<const detail::RingData> d_;
};

/// Canonical residue: representative of degree < deg M.
class Residue {
   public:
    Residue() = default;
    Residue(ResidueRing ring, const Poly& value) : r_(std::move(ring)), rep_(value % r_.modulus()) {}

    static Residue zero(const ResidueRing& r) { return {r, Poly::zero(r.field())}; }
    static Residue one(const ResidueRing& r) { return {r, Poly::one(r.field())}; }

    const ResidueRing& ring() const { return r_; }
    const Poly& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }
    bool is_one() const { return rep_.is_one(); }

    Residue operator+(const Residue& o) const {
        check(o);
        return make(r_, rep_ + o.rep_);
    }
    Residue operator-(const Residue& o) const {
        check(o);
        return make(r_, rep_ - o.rep_);
    }
    Residue operator*(const Residue& o) const {
        check(o);
        return {r_, rep_ * o.rep_};
    }
    Residue inv() const { return make(r_, poly_invmod(rep_, r_.modulus())); }
    Residue pow(Int e) const {
        Residue r = one(r_), b = *this;
        while (e > 0) {
            if (boost::multiprecision::bit_test(e, 0)) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    bool operator==(const Residue& o) const { return r_.same(o.r_) && rep_ == o.rep_; }
    bool operator!=(const Residue& o) const { return !(*this == o); }

   private:
    static Residue make(const ResidueRing& r, Poly already_reduced) {
        Residue out;
        out.r_ = r;
        out.rep_ = std::move(already_reduced);
        return out;
    }
    void check(const Residue& o) const {
        if (!r_.same(o.r_)) raise(errc::spec_mismatch, "residues from different rings");
    }

    ResidueRing r_;
    Poly rep_;
};

/// 2x2 matrix over a residue ring, row-major.
struct Mat2 {
    Residue a, b, c, d;

    static Mat2 identity(const ResidueRing& r) {
        return {Residue::one(r), Residue::zero(r), Residue::zero(r), Residue::one(r)};
    }
    /// Companion matrix [[0, 1], [b, a]] of the recurrence.
    static Mat2 companion(const ResidueRing& r, const Poly& a_poly, const Poly& b_poly) {
        return {Residue::zero(r), Residue::one(r), Residue(r, b_poly), Residue(r, a_poly)};
    }

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
};

inline Mat2 mat2_pow(Mat2 base, Int n) {
    if (n < 0) raise(errc::precondition_violated, "matrix power needs a nonnegative exponent");
    Mat2 r = Mat2::identity(base.a.ring());
    while (n > 0) {
        if (boost::multiprecision::bit_test(n, 0)) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

/// The scalar s when m = s*I, absent otherwise.
inline std::optional<Residue> scalar_test(const Mat2& m) {
    if (!m.b.is_zero() || !m.c.is_zero() || m.a != m.d) return std::nullopt;
    return m.a;
}

/// Multiplicative order of g modulo M. The unit-group exponent bound
/// E = p^ceil(log_p e_max) * lcm_i (q^{d_i} - 1) is read off the prime
/// decomposition of M, factored over the integers, and reduced by divisor
/// descent; no linear scan.
inline Int mult_order(const Poly& g, const Poly& M) {
    if (M.degree() < 1) raise(errc::precondition_violated, "order modulus must be non-constant");
    if (poly_gcd(g, M).degree() != 0) raise(errc::not_coprime, "gcd(g, M) != 1");
    const FieldSpec& s = M.spec();
    Factorization fact = factor_poly(M);
    Int lcm_part = 1;
    int64_t e_max = 1;
    for (const auto& part : fact.parts) {
        lcm_part = int_lcm(lcm_part, int_pow(s.q_big(), static_cast<uint64_t>(part.prime.degree())) - 1);
        e_max = std::max(e_max, part.exponent);
    }
    Int p_part = 1;
    while (p_part < e_max) p_part *= s.p();  // p^ceil(log_p e_max)
    Int bound = p_part * lcm_part;
    ResidueRing ring = ResidueRing::create(M);
    Residue base(ring, g);
    if (!base.pow(bound).is_one())
        raise(errc::internal_mismatch, "unit-group exponent bound violated");
    Int n = bound;
    for (const Int& r : int_prime_divisors(bound)) {
        while (n % r == 0 && base.pow(n / r).is_one()) n /= r;
    }
    return n;
}

/// Order of a residue in its own ring's unit group.
inline Int residue_order(const Residue& r) { return mult_order(r.rep(), r.ring().modulus()); }

}  // namespace fibfq

#endif  // FIBFQ_QUOTIENT_HPP
