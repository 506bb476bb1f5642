#pragma once

// Irreducibility and absolute irreducibility verdicts for members of
// Int(Z), each carrying a certificate that can be re-checked mechanically.

#include "ivp_atoms/essential.hpp"

#include <string>
#include <type_traits>
#include <variant>
#include <vector>

namespace ivp {

enum class Status { proven, disproven, unknown };

inline const char* to_string(Status s) {
    switch (s) {
    case Status::proven: return "proven";
    case Status::disproven: return "disproven";
    case Status::unknown: return "unknown";
    }
    return "?";
}

/// f^power = product of parts, with every part a non-unit member of Int(Z)
/// and the parts not all equal to f.
struct FactorizationWitness {
    unsigned power = 1;
    std::vector<StandardForm> parts;
    std::string note;
};

struct NoCertificate {};

/// Which graph was found connected, and the graph itself.
struct ConnectedGraph {
    FactorKind kind = FactorKind::essential;
    LabeledGraph graph;
};

struct Splitting {
    FactorizationWitness witness;
};

/// Factor `index` is essential for no prime, so f = g_index * (f / g_index).
struct InessentialFactor {
    std::size_t index = 0;
    FactorizationWitness witness;
};

/// fd(f) != 1; `factor` is a non-unit constant dividing fd(f) (its
/// smallest prime factor whenever one is found) and f = factor * (f/factor).
struct NotImagePrimitive {
    Integer fd_of_f;
    Integer factor;
    FactorizationWitness witness;
};

using Certificate = std::variant<NoCertificate, ConnectedGraph, Splitting, InessentialFactor, NotImagePrimitive>;

struct Verdict {
    Status status = Status::unknown;
    std::string rule;
    Certificate certificate;
    /// Why no rule applied (unknown) or a short human summary.
    std::string reason;
};

namespace rules {
inline constexpr const char* kNotImagePrimitive = "not-image-primitive";
inline constexpr const char* kSingleFactor = "single-factor";
inline constexpr const char* kEssentialGraphConnected = "essential-graph-connected";
inline constexpr const char* kPrimeDenominator = "prime-denominator";
inline constexpr const char* kSquarefreeInessentialFactor = "squarefree-inessential-factor";
inline constexpr const char* kQuintessentialGraphConnected = "quintessential-graph-connected";
inline constexpr const char* kPrimeDenominatorQuintessential = "prime-denominator-quintessential";
inline constexpr const char* kSquarefreeDisconnected = "squarefree-disconnected-quintessential";
inline constexpr const char* kNotIrreducible = "not-irreducible";
inline constexpr const char* kNoRule = "no-rule";
inline constexpr const char* kConstant = "constant";
} // namespace rules

// ---------------------------------------------------------------------------
// Certificate checking

/// True when the parts multiply to f^power as elements of Q[x].
inline bool product_equals_power(const StandardForm& f, const FactorizationWitness& w) {
    IntPoly num = IntPoly::constant(1);
    Integer den = 1;
    for (const auto& part : w.parts) {
        num = num * part.numerator();
        den *= part.denominator();
    }
    const IntPoly lhs = pow(f.denominator(), w.power) * num;
    const IntPoly rhs = den * pow(f.numerator(), w.power);
    return lhs == rhs;
}

inline bool is_unit(const StandardForm& part) {
    return part.is_constant() && abs(part.constant) == 1 && part.denominator() == 1;
}

inline bool verify_witness(const StandardForm& f, const FactorizationWitness& w) {
    if (w.power == 0 || w.parts.empty()) return false;
    if (!product_equals_power(f, w)) return false;
    bool all_f = w.parts.size() == w.power;
    for (const auto& part : w.parts) {
        if (is_unit(part) || !is_member(part).is_member) return false;
        StandardForm positive = part;
        positive.constant = abs(positive.constant);
        StandardForm f_positive = f;
        f_positive.constant = abs(f_positive.constant);
        if (!(positive == f_positive)) all_f = false;
    }
    return !all_f;
}

// ---------------------------------------------------------------------------
// Verdicts

namespace detail {

inline void require_member(const StandardForm& sf) {
    if (sf.is_constant()) throw InputError("constant input: use check_constant");
    if (!is_member(sf).is_member) throw InputError("polynomial is not in Int(Z)");
}

inline ClassificationGrid grid_for(const StandardForm& sf) {
    return classify_all(sf.factors, relevant_primes(sf.numerator_product()));
}

/// Smallest prime factor of |n| > 1 found by trial division, else n.
inline Integer smallest_factor(const Integer& n) {
    const Integer m = abs(n);
    if (m % 2 == 0) return 2;
    for (std::uint32_t d = 3; d <= kTrialDivisionBound; d += 2) {
        if (Integer(d) * d > m) return m;
        if (m % d == 0) return d;
    }
    return m;
}

inline Verdict not_image_primitive(const StandardForm& sf, const MembershipReport& m) {
    // fd(f) = |a| * fd(G)/b; prefer a prime from fd(G)/b, which is small.
    const Integer quotient = m.fd_numerator / sf.denominator();
    const Integer factor = quotient != 1 ? smallest_factor(quotient) : smallest_factor(sf.constant);
    StandardForm constant_part;
    constant_part.constant = factor;
    StandardForm rest = sf;
    Integer denom = sf.denominator() * factor;
    rest.denom = factor_integer(denom);
    // cancel any common factor with the constant
    const Integer g = gcd(rest.constant, denom);
    if (g != 1) {
        rest.constant /= g;
        denom /= g;
        rest.denom = denom == 1 ? std::map<Prime, unsigned>{} : factor_integer(denom);
    }
    FactorizationWitness w{1, {constant_part, rest}, "f = " + factor.str() + " * (f/" + factor.str() + ")"};
    Verdict v{Status::disproven, rules::kNotImagePrimitive,
              NotImagePrimitive{m.fd_of_f, factor, std::move(w)},
              "fixed divisor of f is " + m.fd_of_f.str() + ", not 1"};
    return v;
}

inline FactorizationWitness split_off(const StandardForm& sf, std::size_t index) {
    StandardForm single;
    single.factors = {sf.factors[index]};
    StandardForm rest = sf;
    rest.factors.erase(rest.factors.begin() + static_cast<std::ptrdiff_t>(index));
    return FactorizationWitness{1, {single, rest},
                                "factor " + std::to_string(index + 1) + " is essential for no prime"};
}

} // namespace detail

/// Irreducibility of a non-constant member of Int(Z).
inline Verdict check_irreducible(const StandardForm& sf, const ClassificationGrid& grid) {
    detail::require_member(sf);
    const MembershipReport m = is_member(sf);
    if (!m.is_image_primitive) return detail::not_image_primitive(sf, m);

    const LabeledGraph eg = essential_graph(grid);
    if (sf.factors.size() == 1)
        return {Status::proven, rules::kSingleFactor, ConnectedGraph{FactorKind::essential, eg},
                "single numerator factor and image-primitive"};
    if (is_connected(eg))
        return {Status::proven, rules::kEssentialGraphConnected, ConnectedGraph{FactorKind::essential, eg},
                "essential graph is connected"};

    // b square-free and some factor essential for no prime: split it off.
    auto inessential = [&]() -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < sf.factors.size(); ++i) {
            bool essential_somewhere = false;
            for (std::size_t pi = 0; pi < grid.primes.size(); ++pi)
                essential_somewhere = essential_somewhere || grid.at(pi, i).at_least_essential();
            if (!essential_somewhere) return i;
        }
        return std::nullopt;
    };

    if (sf.denom.size() == 1 && sf.squarefree_denominator()) {
        // b = p: irreducible iff every factor is essential for p. When all are,
        // the essential graph is complete and was accepted above.
        const auto i = inessential();
        if (!i) throw std::logic_error("prime denominator with all factors essential but disconnected graph");
        return {Status::disproven, rules::kPrimeDenominator, InessentialFactor{*i, detail::split_off(sf, *i)},
                "prime denominator and factor " + std::to_string(*i + 1) + " is not essential"};
    }
    if (sf.squarefree_denominator()) {
        if (const auto i = inessential())
            return {Status::disproven, rules::kSquarefreeInessentialFactor,
                    InessentialFactor{*i, detail::split_off(sf, *i)},
                    "square-free denominator and factor " + std::to_string(*i + 1) + " is essential for no prime"};
    }
    return {Status::unknown, rules::kNoRule, NoCertificate{},
            "essential graph is disconnected and no splitting rule applies"};
}

inline Verdict check_irreducible(const StandardForm& sf) {
    detail::require_member(sf);
    return check_irreducible(sf, detail::grid_for(sf));
}

/// Essentially different factorization of f^3 for an image-primitive
/// member with square-free denominator and disconnected quintessential
/// graph. J1 is the component containing the first factor; primes with no
/// quintessential factor go to T1.
inline FactorizationWitness construct_counterexample(const StandardForm& sf, const ClassificationGrid& grid) {
    const MembershipReport m = is_member(sf);
    if (!m.is_member || !m.is_image_primitive)
        throw std::invalid_argument("counterexample needs an image-primitive member");
    if (!sf.squarefree_denominator()) throw std::invalid_argument("counterexample needs a square-free denominator");
    if (sf.factors.size() < 2) throw std::invalid_argument("counterexample needs at least two factors");
    const LabeledGraph qg = quintessential_graph(grid);
    const auto components = connected_components(qg);
    if (components.size() < 2) throw std::invalid_argument("quintessential graph is connected");

    std::vector<bool> in_j1(sf.factors.size(), false);
    for (std::size_t i : components.front()) in_j1[i] = true;

    std::vector<Prime> t1, t2;
    for (const auto& [p, e] : sf.denom) {
        const auto pi = grid.prime_index(p);
        bool j1 = false, j2 = false;
        if (pi)
            for (std::size_t i : grid.indices_at_least(*pi, FactorKind::quintessential))
                (in_j1[i] ? j1 : j2) = true;
        if (j1 && j2) throw std::logic_error("prime " + p.str() + " is quintessential on both sides of a cut");
        (j2 ? t2 : t1).push_back(p);
    }

    auto make_part = [&](bool doubled_j1) {
        StandardForm part;
        for (std::size_t i = 0; i < sf.factors.size(); ++i) {
            const unsigned copies = in_j1[i] == doubled_j1 ? 2 : 1;
            for (unsigned c = 0; c < copies; ++c) part.factors.push_back(sf.factors[i]);
        }
        for (const auto& p : t1) part.denom[p] = doubled_j1 ? 2 : 1;
        for (const auto& p : t2) part.denom[p] = doubled_j1 ? 1 : 2;
        return part;
    };

    FactorizationWitness w;
    w.power = 3;
    w.parts = {make_part(true), make_part(false)};
    w.note = "f^3 = h1 * h2 with h1, h2 not associated to powers of f; refining h1, h2 into atoms "
             "gives a factorization of f^3 essentially different from f*f*f";
    for (const auto& part : w.parts)
        if (!is_member(part).is_member) throw std::logic_error("counterexample part is not in Int(Z)");
    if (!product_equals_power(sf, w)) throw std::logic_error("counterexample parts do not multiply to f^3");
    return w;
}

inline FactorizationWitness construct_counterexample(const StandardForm& sf) {
    return construct_counterexample(sf, detail::grid_for(sf));
}

/// Absolute irreducibility via the square-free criterion (complete for
/// square-free b, sufficient condition otherwise).
inline Verdict check_absolutely_irreducible(const StandardForm& sf, const ClassificationGrid& grid) {
    detail::require_member(sf);
    const MembershipReport m = is_member(sf);
    if (!m.is_image_primitive) return detail::not_image_primitive(sf, m);

    const LabeledGraph qg = quintessential_graph(grid);
    if (is_connected(qg))
        return {Status::proven, rules::kQuintessentialGraphConnected, ConnectedGraph{FactorKind::quintessential, qg},
                "quintessential graph is connected"};
    if (!sf.squarefree_denominator())
        return {Status::unknown, rules::kNoRule, NoCertificate{},
                "quintessential graph is disconnected but the denominator is not square-free"};

    const Verdict irr = check_irreducible(sf, grid);
    if (irr.status == Status::disproven) {
        Verdict v = irr;
        v.rule = rules::kNotIrreducible;
        v.reason = "not irreducible: " + irr.reason;
        return v;
    }
    return {Status::disproven, rules::kSquarefreeDisconnected, Splitting{construct_counterexample(sf, grid)},
            "square-free denominator and disconnected quintessential graph"};
}

inline Verdict check_absolutely_irreducible(const StandardForm& sf) {
    detail::require_member(sf);
    return check_absolutely_irreducible(sf, detail::grid_for(sf));
}

/// Prime denominator b = p: absolutely irreducible iff fd(prod g) = p and
/// every factor is quintessential for p. Kept separate from the generic
/// path so the two can be cross-checked.
inline Verdict check_absolutely_irreducible_prime_denominator(const StandardForm& sf) {
    detail::require_member(sf);
    if (sf.denom.size() != 1 || !sf.squarefree_denominator())
        throw std::invalid_argument("denominator is not prime");
    const MembershipReport m = is_member(sf);
    if (!m.is_image_primitive) return detail::not_image_primitive(sf, m);
    const Prime& p = sf.denom.begin()->first;
    for (std::size_t i = 0; i < sf.factors.size(); ++i) {
        const Classification c = classify(sf.factors, p, i);
        if (c.kind != FactorKind::quintessential) {
            Verdict v{Status::disproven, rules::kPrimeDenominatorQuintessential, NoCertificate{},
                      "factor " + std::to_string(i + 1) + " is not quintessential for " + p.str()};
            const ClassificationGrid grid = detail::grid_for(sf);
            const Verdict irr = check_irreducible(sf, grid);
            if (irr.status == Status::disproven)
                v.certificate = irr.certificate;
            else
                v.certificate = Splitting{construct_counterexample(sf, grid)};
            return v;
        }
    }
    const ClassificationGrid grid = detail::grid_for(sf);
    return {Status::proven, rules::kPrimeDenominatorQuintessential,
            ConnectedGraph{FactorKind::quintessential, quintessential_graph(grid)},
            "every factor is quintessential for " + p.str()};
}

/// Constants c in Z: irreducible (and then absolutely irreducible) in
/// Int(Z) iff c = +-prime, since factors of c^n are constants by degree.
inline Verdict check_constant(const Integer& c) {
    bool prime = false;
    try {
        prime = is_prime(c);
    } catch (const InputError&) {
        return {Status::unknown, rules::kConstant, NoCertificate{}, "primality of the constant is not certified"};
    }
    if (prime) return {Status::proven, rules::kConstant, NoCertificate{}, "constant is +-prime"};
    return {Status::disproven, rules::kConstant, NoCertificate{},
            abs(c) <= 1 ? "constant is zero or a unit" : "constant is composite"};
}

/// Re-checks a verdict's certificate against f.
inline bool verify_verdict(const StandardForm& sf, const Verdict& v) {
    const ClassificationGrid grid = detail::grid_for(sf);
    return std::visit(
        [&](const auto& cert) -> bool {
            using T = std::decay_t<decltype(cert)>;
            if constexpr (std::is_same_v<T, NoCertificate>) {
                return v.status == Status::unknown;
            } else if constexpr (std::is_same_v<T, ConnectedGraph>) {
                const LabeledGraph expected =
                    cert.kind == FactorKind::essential ? essential_graph(grid) : quintessential_graph(grid);
                return v.status == Status::proven && cert.graph == expected && is_connected(cert.graph) &&
                       is_member(sf).is_image_primitive;
            } else {
                return v.status == Status::disproven && verify_witness(sf, cert.witness);
            }
        },
        v.certificate);
}

} // namespace ivp
