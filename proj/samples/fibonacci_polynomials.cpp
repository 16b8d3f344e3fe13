// Ranks and periods of the classic Fibonacci polynomials (a = x, b = 1)
// over F_2, modulo the first few irreducible polynomials and their squares.
#include <iostream>

#include "fibfq/fibfq.hpp"
#include "fibfq/parse.hpp"

int main() {
    using namespace fibfq;
    FieldSpec f2 = FieldSpec::create(2);
    SeqParams fib = SeqParams::create(Poly::x(f2), Poly::one(f2));

    for (const char* src : {"x", "x+1", "x^2+x+1", "x^3+x+1", "x^3+x^2+1"}) {
        Poly prime = parse_poly(src, f2);
        Int alpha = rank_prime(fib, prime);
        Int pi = period_prime(fib, prime);
        Int alpha2 = lift_rank(fib, prime, 2);
        Int pi2 = lift_period(fib, prime, 2);
        std::cout << "P = " << format_poly(prime) << ": alpha(P) = " << alpha
                  << ", pi(P) = " << pi << ", alpha(P^2) = " << alpha2 << ", pi(P^2) = " << pi2
                  << "\n";
    }

    Poly m = parse_poly("x^3+x", f2);
    FullReport rep = report(fib, m);
    std::cout << "M = " << format_poly(m) << ": alpha = " << rep.alpha << ", pi = " << rep.pi
              << ", beta = " << rep.beta << "\n";
    return 0;
}
