#pragma once

// Command-line front end. Exit codes: 0 on any verdict (including unknown
// and non-membership), 1 on internal errors, 2 on input or usage errors,
// 3 when an oracle search exceeds its guard.

#include "ivp_atoms/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace ivp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitGuard = 3;

/// Shape guard from IVP_ATOMS_GUARD, falling back to the default.
inline OracleLimits limits_from_environment() {
    OracleLimits limits;
    if (const char* env = std::getenv("IVP_ATOMS_GUARD")) {
        try {
            const long long value = std::stoll(env);
            if (value <= 0) throw std::invalid_argument("non-positive");
            limits.max_shapes = static_cast<std::uint64_t>(value);
        } catch (const std::exception&) {
            throw InputError(std::string("IVP_ATOMS_GUARD must be a positive integer, got '") + env + "'");
        }
    }
    return limits;
}

namespace detail {

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const GuardError& e) {
        err << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

inline StandardForm member_form(const std::string& expression) {
    const InputExpression expr = parse_expression(expression);
    if (expr.is_constant()) throw InputError("expression is constant; use 'analyze'");
    std::vector<std::string> warnings;
    StandardForm sf = standard_form_of(expr, warnings);
    if (!is_member(sf).is_member) throw InputError("expression is not a member of Int(Z)");
    return sf;
}

inline int analyze_one(const std::string& expression, const AnalyzeOptions& options, bool json, bool quiet,
                       std::ostream& out) {
    const AnalysisReport report = analyze(expression, options);
    if (json)
        out << (quiet ? to_json(report).dump() : to_json(report).dump(2)) << "\n";
    else
        out << to_text(report, quiet);
    return kExitOk;
}

inline int graph_command(const std::string& expression, const std::string& kind, const std::string& format,
                         std::ostream& out) {
    const StandardForm sf = member_form(expression);
    const ClassificationGrid grid = classify_all(sf.factors, relevant_primes(sf.numerator_product()));
    const bool essential = kind == "essential";
    const LabeledGraph g = essential ? essential_graph(grid) : quintessential_graph(grid);
    const auto names = ivp::detail::factor_names(sf);
    if (format == "dot")
        out << to_dot(g, names, kind);
    else
        out << to_json(g, essential ? FactorKind::essential : FactorKind::quintessential, names).dump(2) << "\n";
    return kExitOk;
}

inline int member_command(const std::string& expression, bool json, std::ostream& out) {
    AnalyzeOptions options;
    const InputExpression expr = parse_expression(expression);
    if (expr.is_constant()) {
        const AnalysisReport r = analyze(expression, options);
        if (json)
            out << Json{{"schema", kSchemaVersion}, {"input", expression}, {"membership", to_json(*r.membership)}}.dump(2)
                << "\n";
        else
            out << (r.is_member() ? "member" : "not a member") << "\n";
        return kExitOk;
    }
    std::vector<std::string> warnings;
    const StandardForm sf = standard_form_of(expr, warnings);
    const MembershipReport m = is_member(sf);
    if (json) {
        out << Json{{"schema", kSchemaVersion},
                    {"input", expression},
                    {"standard_form", to_json(sf)},
                    {"membership", to_json(m)}}
                   .dump(2)
            << "\n";
    } else {
        out << "standard form: " << to_expression(sf) << "\n";
        out << "member: " << (m.is_member ? "yes" : "no") << "\n";
        out << "image-primitive: " << (m.is_image_primitive ? "yes" : "no") << "\n";
        out << "fd(numerator): " << m.fd_numerator.str() << "\n";
        if (m.is_member) out << "fd(f): " << m.fd_of_f.str() << "\n";
    }
    return kExitOk;
}

inline IntPoly polynomial_argument(const std::string& text) {
    try {
        return parse_polynomial(text);
    } catch (const ParseError&) {
        const InputExpression expr = parse_expression(text);
        if (expr.denominator) throw InputError("fd expects a polynomial in Z[x], not a quotient");
        return expr.constant.value_or(Integer(1)) * product(expr.expanded_factors());
    }
}

inline int fd_command(const std::string& text, bool json, std::ostream& out) {
    const IntPoly g = polynomial_argument(text);
    if (g.is_zero()) throw InputError("fixed divisor of the zero polynomial is undefined");
    const Integer d = fixed_divisor(g);
    const auto factors = factor_integer(d);
    if (json) {
        out << Json{{"schema", kSchemaVersion},
                    {"polynomial", to_string(g)},
                    {"fixed_divisor", d.str()},
                    {"factors", factor_map_json(factors)}}
                   .dump(2)
            << "\n";
    } else {
        out << "fd(" << to_string(g) << ") = " << d.str() << " = " << ivp::detail::factor_list(factors) << "\n";
    }
    return kExitOk;
}

inline int oracle_command(const std::string& expression, unsigned power, bool json, const OracleLimits& limits,
                          std::ostream& out) {
    const StandardForm sf = member_form(expression);
    const MembershipReport m = is_member(sf);
    const StandardForm subject = ivp::detail::image_primitive_part(sf, m);
    if (power < 1 || power > limits.max_power)
        throw InputError("--power must be between 1 and " + std::to_string(limits.max_power));
    const DivisorLattice lattice(subject, power, limits);
    const auto factorizations = enumerate_factorizations(lattice);
    const bool atom = is_atom_bruteforce(subject, limits);
    const auto violations = verify_lemma_exponents(
        lattice, lattice.divisors(), classify_all(subject.factors, relevant_primes(subject.numerator_product())));
    const Factorization trivial{std::vector<DivisorShape>(power, lattice.base()), 1};

    std::vector<std::vector<std::string>> rendered;
    for (const auto& f : factorizations) {
        std::vector<std::string> atoms;
        for (const auto& a : f.atoms) atoms.push_back("[" + to_expression(lattice.to_standard_form(a)) + "]");
        rendered.push_back(std::move(atoms));
    }
    bool nonunique = false;
    for (const auto& f : factorizations) nonunique = nonunique || !essentially_same(f, trivial);

    if (json) {
        Json list = Json::array();
        for (const auto& atoms : rendered) list.push_back(atoms);
        out << Json{{"schema", kSchemaVersion},
                    {"input", expression},
                    {"subject", to_expression(subject)},
                    {"power", power},
                    {"is_atom", atom},
                    {"divisor_count", lattice.divisors().size()},
                    {"atom_count", lattice.atoms().size()},
                    {"factorizations", list},
                    {"essentially_different_from_power", atom && nonunique},
                    {"lemma_violations", violations.size()}}
                   .dump(2)
            << "\n";
        return kExitOk;
    }
    out << "subject: " << to_expression(subject) << "\n";
    out << "atom: " << (atom ? "yes" : "no") << "\n";
    out << "divisors of f^" << power << ": " << lattice.divisors().size() << "\n";
    out << "atoms dividing f^" << power << ": " << lattice.atoms().size() << "\n";
    out << "factorizations of f^" << power << ": " << factorizations.size() << "\n";
    for (const auto& atoms : rendered) out << "  " << ivp::detail::join(atoms, " * ") << "\n";
    if (atom)
        out << "f^" << power << " factors uniquely: " << (nonunique ? "no" : "yes") << "\n";
    out << "exponent lemma violations: " << violations.size() << "\n";
    return kExitOk;
}

inline int batch_command(const std::string& path, const AnalyzeOptions& options, bool json, bool quiet,
                         std::ostream& out, std::ostream& err) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open batch file '" + path + "'");
    int worst = kExitOk;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        if (line.back() == '\r') line.pop_back();
        if (!json && !quiet) out << "== line " << number << " ==\n";
        std::ostringstream line_err;
        const int code = guarded(line_err, [&] {
            if (json || !quiet) return analyze_one(line, options, json, json, out);
            const AnalysisReport r = analyze(line, options);
            out << line << "\t";
            if (r.is_member())
                out << to_string(r.irreducible->status) << "\t" << to_string(r.absolutely_irreducible->status) << "\n";
            else
                out << "not-a-member\n";
            return kExitOk;
        });
        if (code != kExitOk) err << "line " << number << ": " << line_err.str();
        worst = std::max(worst, code);
    }
    return worst;
}

} // namespace detail

/// Runs the tool; args[0] is the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Irreducibility and absolute irreducibility of integer-valued polynomials", "ivp-atoms"};
    app.require_subcommand(0, 1);

    std::string batch_file;
    bool batch_json = false;
    bool batch_quiet = false;
    unsigned batch_oracle = 0;
    app.add_option("--batch", batch_file, "Analyze one expression per line of FILE");
    app.add_flag("--json", batch_json, "JSON output (batch mode)");
    app.add_flag("--quiet", batch_quiet, "Verdicts only (batch mode)");
    app.add_option("--oracle", batch_oracle, "Oracle scan up to this power (batch mode)");

    std::string expression;
    bool json = false, quiet = false;
    unsigned oracle = 0;
    auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis of a factored expression");
    analyze_cmd->add_option("EXPR", expression, "e.g. \"(x^3-19)*(x^2+9)*(x^2+1)*(x-5)/15\"")->required();
    analyze_cmd->add_option("--oracle", oracle, "Brute-force scan of f^n for n up to N")
        ->check(CLI::Range(1u, 4u));
    analyze_cmd->add_flag("--json", json, "Emit the JSON report");
    analyze_cmd->add_flag("--quiet", quiet, "Verdicts only");

    std::string kind = "essential", format = "dot";
    auto* graph_cmd = app.add_subcommand("graph", "Essential or quintessential graph");
    graph_cmd->add_option("EXPR", expression)->required();
    graph_cmd->add_option("--kind", kind)->check(CLI::IsMember({"essential", "quintessential"}));
    graph_cmd->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));

    auto* member_cmd = app.add_subcommand("member", "Membership in Int(Z) and image-primitivity");
    member_cmd->add_option("EXPR", expression)->required();
    member_cmd->add_flag("--json", json);

    std::string poly;
    auto* fd_cmd = app.add_subcommand("fd", "Fixed divisor of a polynomial in Z[x]");
    fd_cmd->add_option("POLY", poly)->required();
    fd_cmd->add_flag("--json", json);

    unsigned power = 1;
    auto* oracle_cmd = app.add_subcommand("oracle", "Enumerate divisors and factorizations of f^N");
    oracle_cmd->add_option("EXPR", expression)->required();
    oracle_cmd->add_option("--power", power)->required();
    oracle_cmd->add_flag("--json", json);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInput;
    }

    return detail::guarded(err, [&]() -> int {
        AnalyzeOptions options;
        options.limits = limits_from_environment();
        if (analyze_cmd->parsed()) {
            if (oracle) options.oracle_power = oracle;
            return detail::analyze_one(expression, options, json, quiet, out);
        }
        if (graph_cmd->parsed()) return detail::graph_command(expression, kind, format, out);
        if (member_cmd->parsed()) return detail::member_command(expression, json, out);
        if (fd_cmd->parsed()) return detail::fd_command(poly, json, out);
        if (oracle_cmd->parsed()) return detail::oracle_command(expression, power, json, options.limits, out);
        if (!batch_file.empty()) {
            if (batch_oracle) {
                if (batch_oracle > options.limits.max_power) throw InputError("--oracle must be between 1 and 4");
                options.oracle_power = batch_oracle;
            }
            return detail::batch_command(batch_file, options, batch_json, batch_quiet, out, err);
        }
        out << app.help();
        return kExitInput;
    });
}

} // namespace ivp::cli
