#ifndef FIBFQ_PARSE_HPP
#define FIBFQ_PARSE_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "fibfq/poly.hpp"

namespace fibfq {

namespace detail {

/// Recursive-descent evaluator for polynomial expressions:
///   expr    := ['-'] term (('+'|'-') term)*
///   term    := factor ('*' factor)*
///   factor  := atom ['^' nat]
///   atom    := nat | var | 't' | '(' expr ')'
/// Integer literals reduce into the field; exponents are exact
/// nonnegative integers. The ring variable is configurable so field
/// moduli can be written in t.
class PolyParser {
   public:
    PolyParser(std::string_view src, FieldSpec spec, char var)
        : src_(src), spec_(std::move(spec)), var_(var) {}

    Poly parse() {
        Poly r = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("end of input");
        return r;
    }

   private:
    [[noreturn]] void fail(const std::string& expected) {
        raise(errc::parse_error,
              "at position " + std::to_string(pos_ + 1) + ": expected " + expected);
    }
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    Poly expr() {
        bool negate = eat('-');
        Poly r = term();
        if (negate) r = -r;
        while (true) {
            if (eat('+')) r = r + term();
            else if (eat('-')) r = r - term();
            else return r;
        }
    }

    Poly term() {
        Poly r = factor();
        while (eat('*')) r = r * factor();
        return r;
    }

    Poly factor() {
        Poly base = atom();
        if (eat('^')) {
            uint64_t e = nat();
            if (base.degree() > 0 && Int(base.degree()) * e > kParserDegreeCap)
                raise(errc::parse_error, "exponent makes the degree exceed " +
                                             std::to_string(kParserDegreeCap));
            return base.pow(e);
        }
        return base;
    }

    Poly atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly r = expr();
            if (!eat(')')) fail("')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            // reduce digit by digit so arbitrarily long literals stay exact mod p
            int64_t p = spec_.p();
            int64_t acc = 0;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                acc = (acc * 10 + (src_[pos_] - '0')) % p;
                ++pos_;
            }
            return Poly::constant(FieldElem::from_int(spec_, acc));
        }
        if (c == var_) {
            ++pos_;
            return Poly::x(spec_);
        }
        if (c == 't') {
            ++pos_;
            if (spec_.l() == 1)
                raise(errc::coeff_out_of_field,
                      "the extension generator t does not exist in a prime field");
            return Poly::constant(FieldElem::gen(spec_));
        }
        fail("a number, '" + std::string(1, var_) + "', 't' or '('");
    }

    uint64_t nat() {
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            fail("a nonnegative integer exponent");
        uint64_t v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            if (v > (UINT64_MAX - 9) / 10) fail("a smaller exponent");
            v = v * 10 + static_cast<uint64_t>(src_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    static constexpr int64_t kParserDegreeCap = 1 << 20;

    std::string_view src_;
    FieldSpec spec_;
    char var_;
    size_t pos_ = 0;
};

inline std::string elem_to_string(const FieldElem& e) {
    if (e.is_zero()) return "0";
    std::vector<int64_t> c = e.coeffs();
    std::string out;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) out += std::to_string(c[i]);
        else {
            if (c[i] != 1) out += std::to_string(c[i]) + "*";
            out += i == 1 ? "t" : "t^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace detail

/// Parse a polynomial in the ring variable (x by default) with
/// coefficients in F_q; the extension generator is spelled t.
inline Poly parse_poly(std::string_view src, const FieldSpec& spec, char var = 'x') {
    return detail::PolyParser(src, spec, var).parse();
}

/// Canonical text form, descending powers; extension coefficients are
/// parenthesized polynomials in t. format/parse round-trips exactly.
inline std::string format_poly(const Poly& f, char var = 'x') {
    if (f.is_zero()) return "0";
    std::string out;
    for (int64_t i = f.degree(); i >= 0; --i) {
        FieldElem c = f.coeff(i);
        if (c.is_zero()) continue;
        if (!out.empty()) out += "+";
        std::string cs = detail::elem_to_string(c);
        bool needs_parens = cs.find('+') != std::string::npos;
        if (i == 0) {
            out += cs;
            continue;
        }
        if (!c.is_one()) out += (needs_parens ? "(" + cs + ")" : cs) + "*";
        out += i == 1 ? std::string(1, var) : std::string(1, var) + "^" + std::to_string(i);
    }
    return out;
}

/// Parse an extension modulus written in t over F_p; returns the
/// little-endian integer coefficient vector.
inline std::vector<int64_t> parse_field_modulus(std::string_view src, int64_t p) {
    Poly g = parse_poly(src, FieldSpec::create(p), 't');
    std::vector<int64_t> out;
    for (int64_t i = 0; i <= g.degree(); ++i) out.push_back(g.coeff(i).coeffs()[0]);
    return out;
}

}  // namespace fibfq

#endif  // FIBFQ_PARSE_HPP
