// darboux: exact certificates for commuting derivation pairs of Q[x,y].
//
// Exit codes: 0 success, 1 parse/input errors, 2 domain precondition
// violations, 3 certificate verification failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "darboux/certificate.hpp"
#include "darboux/expr.hpp"
#include "darboux/pair.hpp"

namespace {

using namespace darboux;

// Derivation literal "P,Q": two polynomial expressions around a single comma.
Derivation parse_derivation(const std::string& src) {
    const std::size_t comma = src.find(',');
    if (comma == std::string::npos)
        throw parse_error(src.size(), "a ',' separating the two components", "end of input");
    const std::size_t extra = src.find(',', comma + 1);
    if (extra != std::string::npos) throw parse_error(extra, "end of input", "','");
    return {parse_poly(src.substr(0, comma)), parse_poly(src.substr(comma + 1))};
}

std::string format_derivation(const Derivation& d) {
    return format_poly(d.p) + "," + format_poly(d.q);
}

void print_outcome(const PairOutcome& outcome) {
    if (const auto* cd = std::get_if<CommonDarboux>(&outcome)) {
        std::cout << "kind: common_darboux\n"
                  << "f: " << format_poly(cd->f) << "\n"
                  << "lambda1: " << format_poly(cd->lambda1) << "\n"
                  << "lambda2: " << format_poly(cd->lambda2) << "\n"
                  << "branch: "
                  << (cd->branch == CertificateBranch::DeltaNonconstant ? "delta_nonconstant"
                                                                        : "degenerate_kernel")
                  << "\n";
        return;
    }
    const auto& jp = std::get<JacobianPair>(outcome);
    std::cout << "kind: jacobian_pair\n"
              << "u1: " << format_poly(jp.u1) << "\n"
              << "u2: " << format_poly(jp.u2) << "\n"
              << "c: " << rat_to_string(jp.c) << "\n";
}

int cmd_analyze(const std::string& d1_src, const std::string& d2_src, bool as_json,
                bool squarefree) {
    const Derivation d1 = parse_derivation(d1_src);
    const Derivation d2 = parse_derivation(d2_src);
    PairOutcome outcome = analyze(d1, d2);

    if (squarefree) {
        if (auto* cd = std::get_if<CommonDarboux>(&outcome)) {
            Poly f = squarefree_part(cd->f);
            auto cofactors = is_common_darboux(d1, d2, f);
            if (!cofactors)
                throw verification_failure("squarefree part lost the Darboux property");
            cd->f = std::move(f);
            cd->lambda1 = std::move(cofactors->first);
            cd->lambda2 = std::move(cofactors->second);
        }
    }

    if (!verify_outcome(d1, d2, outcome))
        throw verification_failure("certificate failed final verification");

    if (as_json)
        std::cout << certificate_to_json(d1, d2, outcome, true).dump(2) << "\n";
    else
        print_outcome(outcome);
    return 0;
}

int cmd_verify(const std::string& path) {
    nlohmann::json doc;
    if (path == "-") {
        doc = nlohmann::json::parse(std::cin);
    } else {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "error: cannot open " << path << "\n";
            return 1;
        }
        doc = nlohmann::json::parse(in);
    }
    const ParsedCertificate parsed = certificate_from_json(doc);
    if (!verify_outcome(parsed.d1, parsed.d2, parsed.outcome)) {
        std::cout << "invalid\n";
        return 3;
    }
    std::cout << "valid\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Darboux-polynomial certificates for commuting derivations of Q[x,y]"};
    app.require_subcommand(1);

    std::string d1_src, d2_src, d_src, f_src, lambda_src = "0", cert_path;
    unsigned max_degree = 0;
    bool as_json = false, squarefree = false;

    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "Decide the dichotomy for a commuting pair");
    analyze_cmd->add_option("--d1", d1_src, "first derivation \"P,Q\"")->required();
    analyze_cmd->add_option("--d2", d2_src, "second derivation \"P,Q\"")->required();
    analyze_cmd->add_flag("--json", as_json, "emit the JSON certificate schema");
    analyze_cmd->add_flag("--squarefree", squarefree,
                          "replace a common Darboux polynomial by its squarefree part");

    CLI::App* bracket_cmd = app.add_subcommand("bracket", "Lie bracket of two derivations");
    bracket_cmd->add_option("--d1", d1_src, "first derivation \"P,Q\"")->required();
    bracket_cmd->add_option("--d2", d2_src, "second derivation \"P,Q\"")->required();

    CLI::App* div_cmd = app.add_subcommand("div", "Divergence of a derivation");
    div_cmd->add_option("--d", d_src, "derivation \"P,Q\"")->required();

    CLI::App* delta_cmd = app.add_subcommand("delta", "Determinant P1*Q2 - Q1*P2 of a pair");
    delta_cmd->add_option("--d1", d1_src, "first derivation \"P,Q\"")->required();
    delta_cmd->add_option("--d2", d2_src, "second derivation \"P,Q\"")->required();

    CLI::App* reduce_cmd =
        app.add_subcommand("reduce", "Factor out the component gcd: d = mu * d0");
    reduce_cmd->add_option("--d", d_src, "derivation \"P,Q\"")->required();

    CLI::App* cofactor_cmd =
        app.add_subcommand("cofactor", "Cofactor of a Darboux polynomial candidate");
    cofactor_cmd->add_option("--d", d_src, "derivation \"P,Q\"")->required();
    cofactor_cmd->add_option("--f", f_src, "candidate polynomial")->required();

    CLI::App* solve_cmd =
        app.add_subcommand("solve", "Basis of bounded-degree solutions of d(F) = lambda*F");
    solve_cmd->add_option("--d", d_src, "derivation \"P,Q\"")->required();
    solve_cmd->add_option("--lambda", lambda_src, "fixed cofactor expression (default 0)");
    solve_cmd->add_option("--max-degree", max_degree, "total degree bound (>= 1)")->required();

    CLI::App* potential_cmd =
        app.add_subcommand("potential", "Potential u with d = -u_y d/dx + u_x d/dy");
    potential_cmd->add_option("--d", d_src, "divergence-free derivation \"P,Q\"")->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "Re-check a JSON certificate document");
    verify_cmd->add_option("certificate", cert_path, "certificate file ('-' for stdin)")
        ->required();

    try {
        app.parse(argc, argv);

        if (*analyze_cmd) return cmd_analyze(d1_src, d2_src, as_json, squarefree);
        if (*bracket_cmd) {
            std::cout << format_derivation(
                             bracket(parse_derivation(d1_src), parse_derivation(d2_src)))
                      << "\n";
        } else if (*div_cmd) {
            std::cout << format_poly(divergence(parse_derivation(d_src))) << "\n";
        } else if (*delta_cmd) {
            std::cout << format_poly(delta(parse_derivation(d1_src), parse_derivation(d2_src)))
                      << "\n";
        } else if (*reduce_cmd) {
            const ReducedForm r = reduce(parse_derivation(d_src));
            std::cout << "d0: " << format_derivation(r.d0) << "\n"
                      << "mu: " << format_poly(r.mu) << "\n";
        } else if (*cofactor_cmd) {
            const auto lambda = cofactor_of(parse_derivation(d_src), parse_poly(f_src));
            if (!lambda) {
                std::cerr << "not a Darboux polynomial of the given derivation\n";
                return 2;
            }
            std::cout << format_poly(*lambda) << "\n";
        } else if (*solve_cmd) {
            const auto basis = solve_fixed_cofactor(parse_derivation(d_src),
                                                    parse_poly(lambda_src), max_degree);
            for (const Poly& f : basis) std::cout << format_poly(f) << "\n";
        } else if (*potential_cmd) {
            std::cout << format_poly(potential(parse_derivation(d_src))) << "\n";
        } else if (*verify_cmd) {
            return cmd_verify(cert_path);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const certificate_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const verification_failure& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const darboux::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
