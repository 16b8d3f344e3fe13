#ifndef FIBFQ_FIBCORE_HPP
#define FIBFQ_FIBCORE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fibfq/quotient.hpp"

namespace fibfq {

/// The recurrence data F_0 = 0, F_1 = 1, F_n = a F_{n-1} + b F_{n-2} with
/// a, b in F_q[x], b != 0, together with cached classification flags:
/// the discriminant a^2 + 4b, whether it vanishes identically, whether
/// a^2/b is a constant, and whether both a and b are constants.
struct SeqParams {
    FieldSpec spec;
    Poly a, b;
    Poly delta;  // a^2 + 4b
    bool delta_is_zero = false;
    bool ratio_in_fq = false;
    bool constants_only = false;
    std::optional<FieldElem> ratio;  // a^2/b when ratio_in_fq

    static SeqParams create(const Poly& a, const Poly& b) {
        if (!a.spec().same(b.spec())) raise(errc::spec_mismatch, "a and b over different fields");
        if (b.is_zero()) raise(errc::precondition_violated, "b must be nonzero");
        SeqParams s;
        s.spec = a.spec();
        s.a = a;
        s.b = b;
        s.delta = a * a + b * FieldElem::from_int(s.spec, 4);
        s.delta_is_zero = s.delta.is_zero();
        auto [quot, rem] = divmod(a * a, b);
        if (rem.is_zero() && quot.is_constant()) {
            s.ratio_in_fq = true;
            s.ratio = quot.is_zero() ? FieldElem::zero(s.spec) : quot.leading();
        }
        s.constants_only = a.is_constant() && b.is_constant();
        return s;
    }
};

/// On-demand producer of F_0, F_1, F_2, ... modulo M with two residues of
/// state, (F_n, F_{n+1}). Residues are kept as flat index buffers so one
/// step costs a handful of coefficient multiply-adds.
class FibStream {
   public:
    FibStream(const SeqParams& params, const Poly& M) : spec_(params.spec), d_(&spec_.data()) {
        if (M.degree() < 1) raise(errc::precondition_violated, "stream modulus must be non-constant");
        if (!M.spec().same(spec_)) raise(errc::spec_mismatch, "modulus over a different field");
        Poly Mm = monic(M);
        mod_ = Mm.raw();
        deg_ = mod_.size() - 1;
        af_ = (params.a % Mm).raw();
        bf_ = (params.b % Mm).raw();
        cur_.assign(deg_, 0);
        next_.assign(deg_, 0);
        fresh_.assign(deg_, 0);
        scratch_.assign(2 * deg_, 0);
        if (deg_ > 0) next_[0] = 1;
        n_ = 0;  // (cur_, next_) = (F_0, F_1)
    }

    /// Index n of the residue in current(); starts at 0.
    uint64_t index() const { return n_; }

    bool current_is_zero() const { return all_zero(cur_); }
    bool next_is_one() const { return is_one(next_); }
    bool current_is_one() const { return is_one(cur_); }

    Poly current() const { return to_poly(cur_); }   // F_n mod M
    Poly next() const { return to_poly(next_); }     // F_{n+1} mod M

    void step() {
        std::fill(scratch_.begin(), scratch_.end(), 0);
        accumulate(af_, next_);
        accumulate(bf_, cur_);
        // reduce by the monic modulus
        for (size_t t = scratch_.size(); t-- > deg_;) {
            uint64_t c = scratch_[t];
            if (c == 0) continue;
            for (size_t j = 0; j < deg_; ++j)
                scratch_[t - deg_ + j] = d_->sub(scratch_[t - deg_ + j], d_->mul(c, mod_[j]));
            scratch_[t] = 0;
        }
        std::copy(scratch_.begin(), scratch_.begin() + static_cast<int64_t>(deg_), fresh_.begin());
        cur_.swap(next_);
        next_.swap(fresh_);
        ++n_;
    }

   private:
    void accumulate(const std::vector<uint64_t>& coef, const std::vector<uint64_t>& val) {
        for (size_t i = 0; i < coef.size(); ++i) {
            uint64_t ci = coef[i];
            if (ci == 0) continue;
            for (size_t j = 0; j < deg_; ++j) {
                if (val[j] == 0) continue;
                scratch_[i + j] = d_->add(scratch_[i + j], d_->mul(ci, val[j]));
            }
        }
    }
    static bool all_zero(const std::vector<uint64_t>& v) {
        for (uint64_t c : v)
            if (c) return false;
        return true;
    }
    static bool is_one(const std::vector<uint64_t>& v) {
        if (v.empty() || v[0] != 1) return false;
        for (size_t i = 1; i < v.size(); ++i)
            if (v[i]) return false;
        return true;
    }
    Poly to_poly(const std::vector<uint64_t>& v) const {
        std::vector<FieldElem> c;
        c.reserve(v.size());
        for (uint64_t idx : v) c.emplace_back(spec_, idx);
        return Poly::from_coeffs(spec_, c);
    }

    FieldSpec spec_;
    const detail::FieldData* d_;
    std::vector<uint64_t> mod_, af_, bf_;
    std::vector<uint64_t> cur_, next_, fresh_, scratch_;
    size_t deg_ = 0;
    uint64_t n_ = 0;
};

inline constexpr int64_t kDefaultDegreeCap = 20000;

/// The exact polynomial F_n, guarded by a degree cap.
inline Poly fib_exact(const SeqParams& params, const Int& n, int64_t degree_cap = kDefaultDegreeCap) {
    if (n < 0) raise(errc::precondition_violated, "sequence index must be nonnegative");
    int64_t term = 1;
    if (!params.a.is_zero()) term = std::max(term, params.a.degree());
    term = std::max(term, (params.b.degree() + 1) / 2);
    if (n > 1 && Int(term) * (n - 1) > degree_cap)
        raise(errc::degree_cap_exceeded, "exact term exceeds the configured degree cap");
    if (n == 0) return Poly::zero(params.spec);
    Poly prev = Poly::zero(params.spec);
    Poly cur = Poly::one(params.spec);
    for (Int i = 1; i < n; ++i) {
        Poly next = params.a * cur + params.b * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// (F_n mod M, F_{n+1} mod M) in O(log n) matrix multiplications, read off
/// the off-diagonal and lower-right entries of the companion-matrix power.
inline std::pair<Residue, Residue> fib_pair_at(const SeqParams& params, const Int& n,
                                               const ResidueRing& ring) {
    if (n < 0) raise(errc::precondition_violated, "sequence index must be nonnegative");
    Mat2 u = Mat2::companion(ring, params.a, params.b);
    Mat2 un = mat2_pow(u, n);
    return {un.b, un.d};
}

inline std::pair<Residue, Residue> fib_pair_at(const SeqParams& params, const Int& n, const Poly& M) {
    return fib_pair_at(params, n, ResidueRing::create(M));
}

/// Rank, period, their quotient and the scalar of U^alpha, all found by a
/// single scan of the consecutive-pair stream.
struct OracleReport {
    Int alpha;
    Int pi;
    Int beta;
    Residue s;  // U^alpha = s*I mod M; equals b*F_{alpha-1}
};

inline OracleReport oracle(const SeqParams& params, const Poly& M) {
    if (M.degree() < 1) raise(errc::precondition_violated, "modulus must be non-constant");
    if (poly_gcd(params.b, M).degree() != 0) raise(errc::b_not_coprime, "gcd(b, M) != 1");
    ResidueRing ring = ResidueRing::create(M);
    Int bound = int_pow(params.spec.q_big(), 2 * static_cast<uint64_t>(M.degree()));
    FibStream st(params, M);
    Int alpha = 0;
    Residue s;
    Int steps = 0;
    while (true) {
        st.step();
        if (st.current_is_zero()) {
            if (alpha == 0) {
                alpha = st.index();
                // F_{n+1} = a F_n + b F_{n-1} = b F_{n-1} at a zero term
                s = Residue(ring, st.next());
            }
            if (st.next_is_one()) {
                Int pi = st.index();
                if (pi % alpha != 0)
                    raise(errc::internal_mismatch, "period not a multiple of the rank");
                return {alpha, pi, pi / alpha, s};
            }
        }
        if (++steps > bound + 2) raise(errc::scan_bound_exceeded, "pair scan exceeded q^(2 deg M)");
    }
}

}  // namespace fibfq

#endif  // FIBFQ_FIBCORE_HPP
