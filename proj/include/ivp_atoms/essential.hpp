#pragma once

// Essential / quintessential classification of numerator factors and the
// graphs built from it.
//
// A factor g_i is essential for p (p | fd(prod g)) when some w has
// p | g_i(w) while p does not divide any other g_j(w); quintessential when
// additionally v_p(g_i(w)) equals fd_p(prod g) exactly. Since g(w) mod p^k
// depends only on w mod p^k, the searches below run over residues mod p
// (essential) and mod p^(e+1) (quintessential) and are complete.

#include "ivp_atoms/standard_form.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ivp {

enum class FactorKind { not_essential, essential, quintessential };

inline const char* to_string(FactorKind k) {
    switch (k) {
    case FactorKind::not_essential: return "not-essential";
    case FactorKind::essential: return "essential";
    case FactorKind::quintessential: return "quintessential";
    }
    return "?";
}

/// factor_index is 0-based; reports render it 1-based.
struct Classification {
    std::size_t factor_index = 0;
    Prime prime{2};
    FactorKind kind = FactorKind::not_essential;
    std::optional<Integer> witness;

    bool at_least_essential() const { return kind != FactorKind::not_essential; }
};

namespace detail {

/// Least w in [0, modulus) with v_p(g_i(w)) accepted by `accept` and
/// p not dividing any other factor at w.
template <typename Accept>
std::optional<Integer> least_witness(std::span<const IntPoly> factors, std::size_t i, const Prime& p,
                                     const Integer& modulus, Accept accept) {
    const Integer& q = p.value();
    for (Integer w = 0; w < modulus; ++w) {
        if (!accept(factors[i].eval_mod(w, modulus))) continue;
        bool others_coprime = true;
        for (std::size_t j = 0; j < factors.size() && others_coprime; ++j)
            if (j != i && factors[j].eval_mod(w, q) == 0) others_coprime = false;
        if (others_coprime) return w;
    }
    return std::nullopt;
}

} // namespace detail

/// Strongest classification of factors[i] for p, with the least
/// non-negative witness. Throws std::invalid_argument unless p | fd(prod).
inline Classification classify(std::span<const IntPoly> factors, const Prime& p, std::size_t i) {
    if (i >= factors.size()) throw std::out_of_range("factor index out of range");
    const unsigned e = fixed_divisor_p(product(factors), p);
    if (e == 0)
        throw std::invalid_argument("prime " + p.str() + " does not divide the fixed divisor of the numerator");

    Classification c{i, p, FactorKind::not_essential, std::nullopt};
    const Integer& q = p.value();
    const Integer quint_modulus = pow(q, e + 1);
    const Integer exact = pow(q, e);
    // residue r of g_i(w) mod p^(e+1) has v_p = e exactly iff p^e | r and r != 0 mod p^(e+1)
    auto has_valuation_e = [&](const Integer& r) { return r != 0 && r % exact == 0 && r % (exact * q) != 0; };
    if (auto w = detail::least_witness(factors, i, p, quint_modulus, has_valuation_e)) {
        c.kind = FactorKind::quintessential;
        c.witness = std::move(*w);
        return c;
    }
    auto positive = [&](const Integer& r) { return r == 0; };
    if (auto w = detail::least_witness(factors, i, p, q, positive)) {
        c.kind = FactorKind::essential;
        c.witness = std::move(*w);
    }
    return c;
}

inline Classification classify(std::initializer_list<IntPoly> factors, const Prime& p, std::size_t i) {
    return classify(std::span<const IntPoly>(factors.begin(), factors.size()), p, i);
}

/// Re-checks a classification directly from the definition with exact
/// evaluation and valuations.
inline bool verify_classification(std::span<const IntPoly> factors, const Classification& c) {
    if (c.kind == FactorKind::not_essential) return !c.witness.has_value();
    if (!c.witness) return false;
    const unsigned e = fixed_divisor_p(product(factors), c.prime);
    if (e == 0) return false;
    const Valuation vi = padic_valuation(factors[c.factor_index](*c.witness), c.prime);
    if (c.kind == FactorKind::quintessential) {
        if (vi != Valuation(e)) return false;
    } else if (vi && *vi == 0) {
        return false;
    }
    for (std::size_t j = 0; j < factors.size(); ++j)
        if (j != c.factor_index && padic_valuation(factors[j](*c.witness), c.prime) != Valuation(0u)) return false;
    return true;
}

/// Classification of every (prime, factor) pair.
struct ClassificationGrid {
    std::size_t factor_count = 0;
    std::vector<Prime> primes;
    /// Row-major: entries[prime_index * factor_count + factor_index].
    std::vector<Classification> entries;

    const Classification& at(std::size_t prime_index, std::size_t factor_index) const {
        return entries.at(prime_index * factor_count + factor_index);
    }

    /// Factor indices of the given kind or stronger for primes[prime_index].
    std::vector<std::size_t> indices_at_least(std::size_t prime_index, FactorKind kind) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < factor_count; ++i)
            if (at(prime_index, i).kind >= kind) out.push_back(i);
        return out;
    }

    std::optional<std::size_t> prime_index(const Prime& p) const {
        auto it = std::find(primes.begin(), primes.end(), p);
        if (it == primes.end()) return std::nullopt;
        return static_cast<std::size_t>(it - primes.begin());
    }
};

inline ClassificationGrid classify_all(std::span<const IntPoly> factors, std::span<const Prime> primes) {
    ClassificationGrid grid;
    grid.factor_count = factors.size();
    grid.primes.assign(primes.begin(), primes.end());
    grid.entries.reserve(primes.size() * factors.size());
    for (const auto& p : primes)
        for (std::size_t i = 0; i < factors.size(); ++i) grid.entries.push_back(classify(factors, p, i));
    return grid;
}

/// Simple undirected graph on 0..vertex_count-1; each edge (u < v) carries
/// the ascending list of primes inducing it.
struct LabeledGraph {
    std::size_t vertex_count = 0;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Prime>> edges;

    bool has_edge(std::size_t u, std::size_t v) const {
        return edges.count({std::min(u, v), std::max(u, v)}) > 0;
    }

    friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
        return a.vertex_count == b.vertex_count && a.edges == b.edges;
    }
};

namespace detail {

inline LabeledGraph graph_from_grid(const ClassificationGrid& grid, FactorKind threshold) {
    LabeledGraph g;
    g.vertex_count = grid.factor_count;
    for (std::size_t pi = 0; pi < grid.primes.size(); ++pi) {
        const auto members = grid.indices_at_least(pi, threshold);
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                g.edges[{members[a], members[b]}].push_back(grid.primes[pi]);
    }
    return g;
}

} // namespace detail

inline LabeledGraph essential_graph(const ClassificationGrid& grid) {
    return detail::graph_from_grid(grid, FactorKind::essential);
}

inline LabeledGraph quintessential_graph(const ClassificationGrid& grid) {
    return detail::graph_from_grid(grid, FactorKind::quintessential);
}

inline LabeledGraph essential_graph(std::span<const IntPoly> factors, std::span<const Prime> primes) {
    return essential_graph(classify_all(factors, primes));
}

inline LabeledGraph quintessential_graph(std::span<const IntPoly> factors, std::span<const Prime> primes) {
    return quintessential_graph(classify_all(factors, primes));
}

/// Components as ascending index lists, ordered by their smallest vertex.
inline std::vector<std::vector<std::size_t>> connected_components(const LabeledGraph& g) {
    if (g.vertex_count == 0) throw std::invalid_argument("graph has no vertices");
    std::vector<std::size_t> parent(g.vertex_count);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& entry : g.edges) {
        const std::size_t a = find(entry.first.first), b = find(entry.first.second);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<std::size_t, std::vector<std::size_t>> by_root;
    for (std::size_t v = 0; v < g.vertex_count; ++v) by_root[find(v)].push_back(v);
    std::vector<std::vector<std::size_t>> out;
    for (auto& entry : by_root) out.push_back(std::move(entry.second));
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_connected(const LabeledGraph& g) { return connected_components(g).size() == 1; }

namespace detail {

inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

inline std::string join_primes(const std::vector<Prime>& primes) {
    std::string out;
    for (const auto& p : primes) {
        if (!out.empty()) out += ",";
        out += p.str();
    }
    return out;
}

} // namespace detail

/// DOT text with 1-based node ids, nodes in index order and edges in
/// lexicographic order, each edge labelled with its primes.
inline std::string to_dot(const LabeledGraph& g, const std::vector<std::string>& names,
                          const std::string& graph_name = "G") {
    if (names.size() != g.vertex_count) throw std::invalid_argument("one name per vertex required");
    std::string out = "graph " + graph_name + " {\n";
    for (std::size_t v = 0; v < g.vertex_count; ++v)
        out += "  " + std::to_string(v + 1) + " [label=\"" + detail::dot_escape(names[v]) + "\"];\n";
    for (const auto& [edge, primes] : g.edges)
        out += "  " + std::to_string(edge.first + 1) + " -- " + std::to_string(edge.second + 1) + " [label=\"" +
               detail::join_primes(primes) + "\"];\n";
    out += "}\n";
    return out;
}

} // namespace ivp
