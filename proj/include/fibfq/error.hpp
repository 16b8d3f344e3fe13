#ifndef FIBFQ_ERROR_HPP
#define FIBFQ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fibfq {

/// Error categories surfaced by the library. Each maps to one violated
/// precondition or internal-consistency failure; the CLI translates them
/// into exit codes.
enum class errc {
    division_by_zero,
    spec_mismatch,
    not_irreducible,
    constant_input,
    b_not_coprime,
    not_coprime,
    precondition_violated,
    degree_cap_exceeded,
    scan_bound_exceeded,
    internal_mismatch,
    parse_error,
    coeff_out_of_field,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::division_by_zero: return "DIVISION_BY_ZERO";
        case errc::spec_mismatch: return "SPEC_MISMATCH";
        case errc::not_irreducible: return "NOT_IRREDUCIBLE";
        case errc::constant_input: return "CONSTANT_INPUT";
        case errc::b_not_coprime: return "B_NOT_COPRIME";
        case errc::not_coprime: return "NOT_COPRIME";
        case errc::precondition_violated: return "PRECONDITION_VIOLATED";
        case errc::degree_cap_exceeded: return "DEGREE_CAP_EXCEEDED";
        case errc::scan_bound_exceeded: return "SCAN_BOUND_EXCEEDED";
        case errc::internal_mismatch: return "INTERNAL_MISMATCH";
        case errc::parse_error: return "PARSE_ERROR";
        case errc::coeff_out_of_field: return "COEFF_OUT_OF_FIELD";
    }
    return "UNKNOWN";
}

class Error : public std::runtime_error {
   public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

   private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace fibfq

#endif  // FIBFQ_ERROR_HPP
