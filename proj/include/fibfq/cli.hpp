#ifndef FIBFQ_CLI_HPP
#define FIBFQ_CLI_HPP

#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fibfq/fibfq.hpp"

namespace fibfq::cli {

using nlohmann::json;

namespace detail {

inline std::string dec(const Int& v) { return v.str(); }

inline FieldSpec make_field(int64_t p, int l, const std::string& g_src) {
    if (g_src.empty()) return FieldSpec::create(p, l);
    return FieldSpec::create(p, l, parse_field_modulus(g_src, p));
}

inline std::string modulus_string(const FieldSpec& f) {
    std::vector<FieldElem> c;
    FieldSpec fp = FieldSpec::create(f.p());
    Poly g = Poly::from_ints(fp, f.modulus());
    return format_poly(g, 't');
}

inline json field_json(const FieldSpec& f) {
    return json{{"p", std::to_string(f.p())},
                {"l", std::to_string(f.l())},
                {"modulus", modulus_string(f)}};
}

inline json factorization_json(const Factorization& fact) {
    json parts = json::array();
    for (const auto& part : fact.parts)
        parts.push_back(json{{"P", format_poly(part.prime)}, {"e", std::to_string(part.exponent)}});
    return json{{"unit", fibfq::detail::elem_to_string(fact.unit)}, {"parts", parts}};
}

inline std::string factorization_string(const Factorization& fact) {
    std::string out = fibfq::detail::elem_to_string(fact.unit);
    for (const auto& part : fact.parts) {
        out += " * (" + format_poly(part.prime) + ")";
        if (part.exponent != 1) out += "^" + std::to_string(part.exponent);
    }
    return out;
}

struct Instance {
    SeqParams params;
    Poly prime;
    int64_t e;
};

/// Seeded random instances over q in {2, 3, 4, 5, 9} for the equivalence
/// command; mirrors the randomized acceptance setup.
inline Instance random_instance(std::mt19937_64& rng, int64_t max_deg, int64_t max_e) {
    static const std::vector<FieldSpec> fields = {FieldSpec::create(2), FieldSpec::create(3),
                                                  FieldSpec::create(2, 2), FieldSpec::create(5),
                                                  FieldSpec::create(3, 2)};
    while (true) {
        const FieldSpec& f = fields[rng() % fields.size()];
        std::uniform_int_distribution<uint64_t> cdist(0, f.q() - 1);
        auto rand_poly = [&](int64_t lo, int64_t hi) {
            std::uniform_int_distribution<int64_t> ddist(lo, hi);
            int64_t deg = ddist(rng);
            std::vector<FieldElem> c;
            for (int64_t i = 0; i <= deg; ++i) c.emplace_back(f, cdist(rng));
            return Poly::from_coeffs(f, c);
        };
        Poly a = rand_poly(-1, max_deg);
        Poly b = rand_poly(0, max_deg);
        if (b.is_zero()) continue;
        std::uniform_int_distribution<int64_t> pdist(1, std::max<int64_t>(1, max_deg));
        int64_t pdeg = pdist(rng);
        Poly prime = monic(rand_poly(-1, pdeg - 1) + Poly::x(f).pow(static_cast<uint64_t>(pdeg)));
        if (!is_irreducible(prime) || poly_gcd(b, prime).degree() != 0) continue;
        std::uniform_int_distribution<int64_t> edist(1, max_e);
        return {SeqParams::create(a, b), prime, edist(rng)};
    }
}

}  // namespace detail

/// Command-line entry point; returns the process exit status.
/// 0 success, 1 domain error, 2 usage error, 3 internal mismatch.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"rank and period of generalized Fibonacci sequences of polynomials over F_q"};
    app.require_subcommand(1);
    bool as_json = false;
    uint64_t seed = 7;
    app.add_flag("--json", as_json, "emit machine-readable JSON");
    app.add_option("--seed", seed, "seed for randomized commands");

    int64_t p = 0;
    int l = 1;
    std::string g_src, a_src, b_src, m_src, p_src, f_src;
    int64_t upto = 5;
    int64_t trials = 50, max_deg = 3, max_e = 3;

    auto add_field_opts = [&](CLI::App* cmd) {
        cmd->add_option("--p", p, "field characteristic (prime)")->required();
        cmd->add_option("--l", l, "extension degree (default 1)");
        cmd->add_option("--g", g_src, "extension modulus, a polynomial in t");
    };
    auto add_ab_opts = [&](CLI::App* cmd) {
        cmd->add_option("--a", a_src, "recurrence coefficient a(x)")->required();
        cmd->add_option("--b", b_src, "recurrence coefficient b(x), nonzero")->required();
    };

    CLI::App* compute = app.add_subcommand("compute", "alpha, pi, beta via the structured path");
    add_field_opts(compute);
    add_ab_opts(compute);
    compute->add_option("--M", m_src, "modulus polynomial")->required();

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "alpha, pi, beta by brute-force scan");
    add_field_opts(oracle_cmd);
    add_ab_opts(oracle_cmd);
    oracle_cmd->add_option("--M", m_src, "modulus polynomial")->required();

    CLI::App* profile = app.add_subcommand("profile", "rank/period lifting exponents e_i, e_i'");
    add_field_opts(profile);
    add_ab_opts(profile);
    profile->add_option("--P", p_src, "monic irreducible polynomial")->required();
    profile->add_option("--upto", upto, "ladder depth (default 5)");

    CLI::App* verify = app.add_subcommand("verify", "randomized structured == oracle equivalence");
    verify->add_option("--trials", trials, "number of instances (default 50)");
    verify->add_option("--max-deg", max_deg, "max degree of a, b, P (default 3)");
    verify->add_option("--max-e", max_e, "max prime-power exponent (default 3)");

    CLI::App* factor = app.add_subcommand("factor", "factor a polynomial over F_q");
    add_field_opts(factor);
    factor->add_option("--f", f_src, "polynomial to factor")->required();

    CLI::App* order = app.add_subcommand("order", "multiplicative order of f modulo M");
    add_field_opts(order);
    order->add_option("--f", f_src, "the unit whose order is wanted")->required();
    order->add_option("--M", m_src, "modulus polynomial")->required();

    // the global flags (--json, --seed) may follow the subcommand name
    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*compute || *oracle_cmd) {
            FieldSpec f = detail::make_field(p, l, g_src);
            SeqParams params = SeqParams::create(parse_poly(a_src, f), parse_poly(b_src, f));
            Poly m = parse_poly(m_src, f);
            json j{{"field", detail::field_json(f)},
                   {"a", format_poly(params.a)},
                   {"b", format_poly(params.b)},
                   {"M", format_poly(m)}};
            if (*compute) {
                FullReport rep = report(params, m);
                json per = json::array();
                for (const auto& pp : rep.per_prime)
                    per.push_back(json{{"P", format_poly(pp.prime)},
                                       {"e", std::to_string(pp.exponent)},
                                       {"alpha", detail::dec(pp.alpha)},
                                       {"pi", detail::dec(pp.pi)}});
                j["factorization"] = detail::factorization_json(rep.factorization);
                j["per_prime"] = per;
                j["alpha"] = detail::dec(rep.alpha);
                j["pi"] = detail::dec(rep.pi);
                j["beta"] = detail::dec(rep.beta);
                j["ord_minus_b"] = detail::dec(rep.ord_minus_b);
                j["lcm_factor"] = std::to_string(rep.lcm_factor);
                if (as_json) {
                    out << j.dump(2) << "\n";
                } else {
                    out << "M = " << format_poly(m) << " = "
                        << detail::factorization_string(rep.factorization) << "\n";
                    for (const auto& pp : rep.per_prime)
                        out << "  P = " << format_poly(pp.prime) << ", e = " << pp.exponent
                            << ": alpha = " << pp.alpha << ", pi = " << pp.pi << "\n";
                    out << "alpha = " << rep.alpha << "\npi = " << rep.pi
                        << "\nbeta = " << rep.beta << "\nord(-b) = " << rep.ord_minus_b
                        << "\nlcm_factor = " << rep.lcm_factor << "\n";
                }
            } else {
                OracleReport rep = oracle(params, m);
                j["alpha"] = detail::dec(rep.alpha);
                j["pi"] = detail::dec(rep.pi);
                j["beta"] = detail::dec(rep.beta);
                j["s"] = format_poly(rep.s.rep());
                if (as_json) {
                    out << j.dump(2) << "\n";
                } else {
                    out << "alpha = " << rep.alpha << "\npi = " << rep.pi
                        << "\nbeta = " << rep.beta << "\ns = " << format_poly(rep.s.rep()) << "\n";
                }
            }
            return 0;
        }

        if (*profile) {
            FieldSpec f = detail::make_field(p, l, g_src);
            SeqParams params = SeqParams::create(parse_poly(a_src, f), parse_poly(b_src, f));
            Poly prime = parse_poly(p_src, f);
            RankProfile rank = rank_profile(params, prime);
            PeriodProfile per = period_profile(params, prime, upto);
            const char* case_names[] = {"A:no-rank-ladder", "B:e1'<e1", "C:delta-nonzero-mod-P",
                                        "D:odd-repeated-root", "E:char2-repeated-root"};
            const char* case_name = case_names[static_cast<int>(per.kase)];
            json j{{"field", detail::field_json(f)},
                   {"a", format_poly(params.a)},
                   {"b", format_poly(params.b)},
                   {"P", format_poly(prime)},
                   {"alpha_P", detail::dec(rank.alpha_p)},
                   {"pi_P", detail::dec(per.pi_p)},
                   {"rule", rank.rule == RankProfile::Rule::geometric_sum ? "geometric_sum"
                                                                          : "geometric"},
                   {"case", case_name},
                   {"e1_prime", std::to_string(per.e1p)}};
            bool repeated_case = per.kase == PeriodProfile::Case::d_odd_repeated ||
                                 per.kase == PeriodProfile::Case::e_char2_repeated;
            std::string m_str = per.m == kValInfinity ? "infinity" : std::to_string(per.m);
            j["e1"] = rank.e1 ? json(std::to_string(*rank.e1)) : json(nullptr);
            j["k"] = repeated_case ? json(detail::dec(per.k)) : json(nullptr);
            j["m"] = repeated_case ? json(m_str) : json(nullptr);
            j["j"] = per.j ? json(std::to_string(*per.j)) : json(nullptr);
            json mi = json::array(), ei = json::array(), eip = json::array();
            for (int64_t v : per.m_i) mi.push_back(std::to_string(v));
            for (int64_t i = 1; i <= upto; ++i) {
                ei.push_back(rank.e1 ? json(detail::dec(rank.e(i))) : json(nullptr));
                eip.push_back(detail::dec(per.e_prime(i)));
            }
            j["m_i"] = mi;
            j["e"] = ei;
            j["e_prime"] = eip;
            if (as_json) {
                out << j.dump(2) << "\n";
            } else {
                out << "alpha(P) = " << rank.alpha_p << ", pi(P) = " << per.pi_p << "\n";
                out << "case " << case_name << ", e1 = "
                    << (rank.e1 ? std::to_string(*rank.e1) : std::string("none"))
                    << ", e1' = " << per.e1p;
                if (repeated_case) out << ", k = " << per.k << ", m = " << m_str;
                if (per.j) out << ", j = " << *per.j;
                if (!per.m_i.empty()) {
                    out << ", m_i =";
                    for (int64_t v : per.m_i) out << " " << v;
                }
                out << "\n";
                for (int64_t i = 1; i <= upto; ++i) {
                    out << "i = " << i << ": e_i = "
                        << (rank.e1 ? rank.e(i).str() : std::string("-")) << ", e_i' = "
                        << per.e_prime(i) << "\n";
                }
            }
            return 0;
        }

        if (*verify) {
            std::mt19937_64 rng(seed);
            for (int64_t i = 0; i < trials; ++i) {
                detail::Instance inst = detail::random_instance(rng, max_deg, max_e);
                Poly m = inst.prime.pow(static_cast<uint64_t>(inst.e));
                OracleReport brute = oracle(inst.params, m);
                Int alpha = lift_rank(inst.params, inst.prime, inst.e);
                Int pi = lift_period(inst.params, inst.prime, inst.e);
                if (alpha != brute.alpha || pi != brute.pi ||
                    pi / alpha != brute.beta) {
                    err << "mismatch: q = " << inst.params.spec.q()
                        << ", a = " << format_poly(inst.params.a)
                        << ", b = " << format_poly(inst.params.b)
                        << ", P = " << format_poly(inst.prime) << ", e = " << inst.e
                        << ": structured (" << alpha << ", " << pi << ") vs oracle ("
                        << brute.alpha << ", " << brute.pi << ")\n";
                    return 3;
                }
            }
            if (as_json) out << json{{"trials", trials}, {"matched", trials}}.dump(2) << "\n";
            else out << trials << "/" << trials << " structured == oracle\n";
            return 0;
        }

        if (*factor) {
            FieldSpec f = detail::make_field(p, l, g_src);
            Factorization fact = factor_poly(parse_poly(f_src, f));
            if (as_json) out << detail::factorization_json(fact).dump(2) << "\n";
            else out << detail::factorization_string(fact) << "\n";
            return 0;
        }

        if (*order) {
            FieldSpec f = detail::make_field(p, l, g_src);
            Int ord = mult_order(parse_poly(f_src, f), parse_poly(m_src, f));
            if (as_json) out << json{{"order", detail::dec(ord)}}.dump(2) << "\n";
            else out << "order = " << ord << "\n";
            return 0;
        }
    } catch (const Error& e) {
        err << e.what() << "\n";
        return e.code() == errc::internal_mismatch ? 3 : 1;
    }
    return 2;
}

}  // namespace fibfq::cli

#endif  // FIBFQ_CLI_HPP
