#pragma once

// End-to-end analysis of a factored expression and its JSON / text
// renderings. JSON output follows the "ivp-atoms/1" schema shipped in
// schema/; integers are decimal strings.

#include "ivp_atoms/irreducibility.hpp"
#include "ivp_atoms/oracle.hpp"
#include "ivp_atoms/parser.hpp"

#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace ivp {

inline constexpr const char* kSchemaVersion = "ivp-atoms/1";

using Json = nlohmann::ordered_json;

struct AnalyzeOptions {
    /// Run the brute-force scan up to this power.
    std::optional<unsigned> oracle_power;
    OracleLimits limits;
};

struct OracleReport {
    /// Expression actually examined: the image-primitive part of f.
    std::string subject;
    bool is_atom = false;
    std::optional<ScanResult> scan;
    /// Atoms of the counterexample factorization, rendered.
    std::vector<std::string> counterexample_atoms;
};

struct AnalysisReport {
    std::string input;
    bool constant_input = false;
    /// For constant inputs that are integers.
    std::optional<Integer> constant_value;
    std::optional<StandardForm> form;
    std::optional<MembershipReport> membership;
    std::optional<ClassificationGrid> grid;
    std::optional<LabeledGraph> essential;
    std::optional<LabeledGraph> quintessential;
    std::optional<Verdict> irreducible;
    std::optional<Verdict> absolutely_irreducible;
    std::optional<FactorizationWitness> counterexample;
    std::optional<OracleReport> oracle;
    std::vector<std::string> warnings;

    bool is_member() const { return membership && membership->is_member; }
};

namespace detail {

inline std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
    return out;
}

inline std::vector<std::string> factor_names(const StandardForm& sf) {
    std::vector<std::string> names;
    for (const auto& g : sf.factors) names.push_back(to_string(g));
    return names;
}

/// Splits factors with rational roots and checks the rest; findings become
/// warnings.
inline std::vector<IntPoly> refine_factors(const StandardForm& sf, std::vector<std::string>& warnings) {
    std::vector<IntPoly> out;
    for (const auto& g : sf.factors) {
        const auto pieces = split_rational_roots(g);
        if (pieces.size() > 1) {
            std::vector<std::string> names;
            for (const auto& piece : pieces) names.push_back("(" + to_string(piece) + ")");
            warnings.push_back("factor (" + to_string(g) + ") has a rational root; split into " + join(names, "*"));
        }
        for (const auto& piece : pieces) {
            if (verify_irreducible_best_effort(piece) == IrreducibilityStatus::unknown)
                warnings.push_back("irreducibility of factor (" + to_string(piece) +
                                   ") is not verified; results assume it is irreducible");
            out.push_back(piece);
        }
    }
    return out;
}

inline StandardForm image_primitive_part(const StandardForm& sf, const MembershipReport& m) {
    StandardForm out = sf;
    out.constant = 1;
    out.denom = m.fd_numerator_factors;
    return out;
}

} // namespace detail

/// Normalised standard form of a parsed non-constant expression, with
/// factors refined by rational-root splitting.
inline StandardForm standard_form_of(const InputExpression& expr, std::vector<std::string>& warnings) {
    const auto raw = expr.expanded_factors();
    const StandardForm first =
        normalize(expr.constant.value_or(Integer(1)), raw, expr.denominator.value_or(Integer(1)));
    const auto refined = detail::refine_factors(first, warnings);
    return normalize(first.constant, refined, first.denominator());
}

inline OracleReport run_oracle(const StandardForm& sf, const MembershipReport& m, unsigned n_max,
                               const OracleLimits& limits) {
    OracleReport r;
    const StandardForm subject = detail::image_primitive_part(sf, m);
    r.subject = to_expression(subject);
    r.is_atom = is_atom_bruteforce(subject, limits);
    if (r.is_atom) {
        r.scan = absolute_irreducibility_scan(subject, n_max, limits);
        if (r.scan->factorization) {
            const DivisorLattice lattice(subject, *r.scan->disproven_at, limits);
            for (const auto& atom : r.scan->factorization->atoms)
                r.counterexample_atoms.push_back("[" + to_expression(lattice.to_standard_form(atom)) + "]");
        }
    }
    return r;
}

inline AnalysisReport analyze(std::string_view source, const AnalyzeOptions& options = {}) {
    AnalysisReport report;
    report.input = std::string(source);
    const InputExpression expr = parse_expression(source);

    if (expr.is_constant()) {
        report.constant_input = true;
        const Integer a = expr.constant.value_or(Integer(1));
        const Integer b = expr.denominator.value_or(Integer(1));
        MembershipReport m;
        m.is_member = a % b == 0;
        if (m.is_member) {
            const Integer c = a / b;
            report.constant_value = c;
            m.fd_of_f = abs(c);
            m.is_image_primitive = abs(c) == 1;
            report.irreducible = check_constant(c);
            report.absolutely_irreducible = report.irreducible;
        }
        report.membership = m;
        return report;
    }

    report.form = standard_form_of(expr, report.warnings);
    const StandardForm& sf = *report.form;
    report.membership = is_member(sf);
    if (!report.membership->is_member) return report;

    report.grid = classify_all(sf.factors, relevant_primes(sf.numerator_product()));
    report.essential = essential_graph(*report.grid);
    report.quintessential = quintessential_graph(*report.grid);
    report.irreducible = check_irreducible(sf, *report.grid);
    report.absolutely_irreducible = check_absolutely_irreducible(sf, *report.grid);
    for (const Verdict* v : {&*report.irreducible, &*report.absolutely_irreducible})
        if (!verify_verdict(sf, *v)) throw std::logic_error("certificate for rule " + v->rule + " failed to verify");
    if (const auto* split = std::get_if<Splitting>(&report.absolutely_irreducible->certificate))
        report.counterexample = split->witness;

    if (options.oracle_power) {
        if (!report.membership->is_image_primitive)
            report.warnings.push_back("oracle examined the image-primitive part f/fd(f)");
        report.oracle = run_oracle(sf, *report.membership, *options.oracle_power, options.limits);
    }
    return report;
}

// ---------------------------------------------------------------------------
// JSON

inline Json factor_map_json(const std::map<Prime, unsigned>& factors) {
    Json out = Json::array();
    for (const auto& [p, e] : factors) out.push_back(Json{{"prime", p.str()}, {"exponent", e}});
    return out;
}

inline Json to_json(const StandardForm& sf) {
    Json factors = Json::array();
    for (const auto& g : sf.factors) factors.push_back(to_string(g));
    return Json{{"expression", to_expression(sf)},
                {"constant", sf.constant.str()},
                {"denominator", sf.denominator().str()},
                {"denominator_factors", factor_map_json(sf.denom)},
                {"factors", factors}};
}

inline Json to_json(const MembershipReport& m) {
    Json out{{"is_member", m.is_member}, {"is_image_primitive", m.is_image_primitive}};
    out["fd_numerator"] = m.fd_numerator.str();
    out["fd_numerator_factors"] = factor_map_json(m.fd_numerator_factors);
    out["fd_of_f"] = m.is_member ? Json(m.fd_of_f.str()) : Json(nullptr);
    return out;
}

inline Json to_json(const LabeledGraph& g, FactorKind kind, const std::vector<std::string>& names) {
    Json vertices = Json::array();
    for (std::size_t v = 0; v < g.vertex_count; ++v)
        vertices.push_back(Json{{"id", v + 1}, {"label", v < names.size() ? names[v] : std::to_string(v + 1)}});
    Json edges = Json::array();
    for (const auto& [e, primes] : g.edges) {
        Json ps = Json::array();
        for (const auto& p : primes) ps.push_back(p.str());
        edges.push_back(Json{{"u", e.first + 1}, {"v", e.second + 1}, {"primes", ps}});
    }
    Json components = Json::array();
    for (const auto& c : connected_components(g)) {
        Json comp = Json::array();
        for (std::size_t v : c) comp.push_back(v + 1);
        components.push_back(comp);
    }
    return Json{{"kind", to_string(kind)},
                {"vertices", vertices},
                {"edges", edges},
                {"components", components},
                {"connected", components.size() == 1}};
}

inline Json to_json(const FactorizationWitness& w) {
    Json parts = Json::array();
    for (const auto& p : w.parts) parts.push_back(to_json(p));
    return Json{{"power", w.power}, {"parts", parts}, {"note", w.note}};
}

inline Json to_json(const Certificate& c) {
    return std::visit(
        [](const auto& cert) -> Json {
            using T = std::decay_t<decltype(cert)>;
            if constexpr (std::is_same_v<T, NoCertificate>)
                return Json{{"type", "none"}};
            else if constexpr (std::is_same_v<T, ConnectedGraph>)
                return Json{{"type", "connected-graph"}, {"graph", to_string(cert.kind)}};
            else if constexpr (std::is_same_v<T, Splitting>)
                return Json{{"type", "splitting"}, {"witness", to_json(cert.witness)}};
            else if constexpr (std::is_same_v<T, InessentialFactor>)
                return Json{{"type", "inessential-factor"},
                            {"factor", cert.index + 1},
                            {"witness", to_json(cert.witness)}};
            else
                return Json{{"type", "not-image-primitive"},
                            {"fd_of_f", cert.fd_of_f.str()},
                            {"factor", cert.factor.str()},
                            {"witness", to_json(cert.witness)}};
        },
        c);
}

inline Json to_json(const Verdict& v) {
    return Json{{"status", to_string(v.status)},
                {"rule", v.rule},
                {"reason", v.reason},
                {"certificate", to_json(v.certificate)}};
}

inline Json to_json(const OracleReport& r) {
    Json out{{"subject", r.subject}, {"is_atom", r.is_atom}};
    if (r.scan) {
        out["checked_up_to"] = r.scan->checked_up_to;
        out["disproven_at"] = r.scan->disproven_at ? Json(*r.scan->disproven_at) : Json(nullptr);
        Json atoms = Json::array();
        for (const auto& a : r.counterexample_atoms) atoms.push_back(a);
        out["counterexample_atoms"] = atoms;
    } else {
        out["checked_up_to"] = nullptr;
        out["disproven_at"] = nullptr;
        out["counterexample_atoms"] = Json::array();
    }
    return out;
}

template <typename T>
Json optional_json(const std::optional<T>& value) {
    return value ? to_json(*value) : Json(nullptr);
}

inline Json to_json(const AnalysisReport& r) {
    Json out;
    out["schema"] = kSchemaVersion;
    out["input"] = r.input;
    out["kind"] = r.constant_input ? "constant" : "polynomial";
    out["constant_value"] = r.constant_value ? Json(r.constant_value->str()) : Json(nullptr);
    out["standard_form"] = optional_json(r.form);
    out["membership"] = optional_json(r.membership);

    Json classifications = Json::array();
    if (r.grid)
        for (const auto& c : r.grid->entries)
            classifications.push_back(Json{{"factor", c.factor_index + 1},
                                           {"prime", c.prime.str()},
                                           {"kind", to_string(c.kind)},
                                           {"witness", c.witness ? Json(c.witness->str()) : Json(nullptr)}});
    out["classifications"] = classifications;

    if (r.essential && r.quintessential) {
        const auto names = detail::factor_names(*r.form);
        out["graphs"] = Json{{"essential", to_json(*r.essential, FactorKind::essential, names)},
                             {"quintessential", to_json(*r.quintessential, FactorKind::quintessential, names)}};
    } else {
        out["graphs"] = nullptr;
    }
    out["verdicts"] = r.irreducible ? Json{{"irreducible", to_json(*r.irreducible)},
                                           {"absolutely_irreducible", to_json(*r.absolutely_irreducible)}}
                                    : Json(nullptr);
    out["counterexample"] = optional_json(r.counterexample);
    out["oracle"] = optional_json(r.oracle);
    Json warnings = Json::array();
    for (const auto& w : r.warnings) warnings.push_back(w);
    out["warnings"] = warnings;
    return out;
}

// ---------------------------------------------------------------------------
// Text

namespace detail {

inline std::string factor_list(const std::map<Prime, unsigned>& factors) {
    std::vector<std::string> items;
    for (const auto& [p, e] : factors) items.push_back(e == 1 ? p.str() : p.str() + "^" + std::to_string(e));
    return items.empty() ? "1" : join(items, " * ");
}

inline std::string graph_text(const LabeledGraph& g) {
    std::vector<std::string> edges;
    for (const auto& [e, primes] : g.edges)
        edges.push_back(std::to_string(e.first + 1) + "-" + std::to_string(e.second + 1) + " [" +
                        join_primes(primes) + "]");
    std::vector<std::string> comps;
    const auto components = connected_components(g);
    for (const auto& c : components) {
        std::vector<std::string> ids;
        for (std::size_t v : c) ids.push_back(std::to_string(v + 1));
        comps.push_back("{" + join(ids, ",") + "}");
    }
    return "edges " + (edges.empty() ? std::string("(none)") : join(edges, ", ")) + "; components " +
           join(comps, " ") + "; " + (components.size() == 1 ? "connected" : "disconnected");
}

inline std::string verdict_text(const Verdict& v) {
    return std::string(to_string(v.status)) + " (" + v.rule + "): " + v.reason;
}

} // namespace detail

inline std::string to_text(const AnalysisReport& r, bool quiet = false) {
    std::ostringstream out;
    if (quiet) {
        if (!r.is_member()) {
            out << "not a member of Int(Z)\n";
        } else {
            out << "irreducible: " << to_string(r.irreducible->status) << "\n";
            out << "absolutely irreducible: " << to_string(r.absolutely_irreducible->status) << "\n";
        }
        return out.str();
    }
    out << "input: " << r.input << "\n";
    if (r.constant_input) {
        out << "kind: constant\n";
        if (!r.is_member()) {
            out << "membership: not a member of Int(Z) (not an integer)\n";
            return out.str();
        }
        out << "value: " << r.constant_value->str() << "\n";
        out << "irreducible: " << detail::verdict_text(*r.irreducible) << "\n";
        out << "absolutely irreducible: " << detail::verdict_text(*r.absolutely_irreducible) << "\n";
        return out.str();
    }
    const StandardForm& sf = *r.form;
    out << "standard form: " << to_expression(sf) << "\n";
    out << "  constant: " << sf.constant.str() << "\n";
    out << "  denominator: " << sf.denominator().str() << " = " << detail::factor_list(sf.denom) << "\n";
    out << "  factors:\n";
    for (std::size_t i = 0; i < sf.factors.size(); ++i)
        out << "    " << i + 1 << ": " << to_string(sf.factors[i]) << "\n";
    const MembershipReport& m = *r.membership;
    out << "membership: "
        << (m.is_member ? (m.is_image_primitive ? "member of Int(Z), image-primitive"
                                                : "member of Int(Z), not image-primitive")
                        : "not a member of Int(Z)")
        << "\n";
    out << "  fd(numerator) = " << m.fd_numerator.str() << " = " << detail::factor_list(m.fd_numerator_factors);
    if (m.is_member) out << ", fd(f) = " << m.fd_of_f.str();
    out << "\n";
    if (m.is_member) {
        out << "classification:\n";
        for (std::size_t pi = 0; pi < r.grid->primes.size(); ++pi) {
            std::vector<std::string> items;
            for (std::size_t i = 0; i < r.grid->factor_count; ++i) {
                const auto& c = r.grid->at(pi, i);
                std::string item = std::to_string(i + 1) + " " + to_string(c.kind);
                if (c.witness) item += " (w=" + c.witness->str() + ")";
                items.push_back(item);
            }
            out << "  p=" << r.grid->primes[pi].str() << ": " << detail::join(items, ", ") << "\n";
        }
        if (r.grid->primes.empty()) out << "  (no prime divides the fixed divisor of the numerator)\n";
        out << "essential graph: " << detail::graph_text(*r.essential) << "\n";
        out << "quintessential graph: " << detail::graph_text(*r.quintessential) << "\n";
        out << "irreducible: " << detail::verdict_text(*r.irreducible) << "\n";
        out << "absolutely irreducible: " << detail::verdict_text(*r.absolutely_irreducible) << "\n";
        if (r.counterexample) {
            out << "counterexample: f^" << r.counterexample->power << " = h1 * h2\n";
            for (std::size_t i = 0; i < r.counterexample->parts.size(); ++i)
                out << "  h" << i + 1 << " = " << to_expression(r.counterexample->parts[i]) << "\n";
        }
        if (r.oracle) {
            out << "oracle: subject " << r.oracle->subject << "\n";
            out << "  atom: " << (r.oracle->is_atom ? "yes" : "no") << "\n";
            if (r.oracle->scan) {
                if (r.oracle->scan->disproven_at) {
                    out << "  non-unique factorization of f^" << *r.oracle->scan->disproven_at << ": "
                        << detail::join(r.oracle->counterexample_atoms, " * ") << "\n";
                } else {
                    out << "  no counterexample up to n=" << r.oracle->scan->checked_up_to << "\n";
                }
            }
        }
    }
    out << "warnings: " << (r.warnings.empty() ? "none" : "") << "\n";
    for (const auto& w : r.warnings) out << "  - " << w << "\n";
    return out.str();
}

} // namespace ivp
