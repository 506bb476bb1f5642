#include "test_support.hpp"

#include <gtest/gtest.h>

#include <queue>

using namespace ivp;

namespace {

// Definitional classifier: scans witnesses directly with plain valuations.
FactorKind brute_kind(const std::vector<IntPoly>& factors, const Prime& p, std::size_t i, long long range) {
    const unsigned fd_p = fixed_divisor_p(product(factors), p);
    FactorKind best = FactorKind::not_essential;
    for (long long w = 0; w < range; ++w) {
        bool others_coprime = true;
        for (std::size_t j = 0; j < factors.size(); ++j)
            if (j != i && mod(factors[j](Integer(w)), p.value()) == 0) others_coprime = false;
        if (!others_coprime) continue;
        const auto v = padic_valuation(factors[i](Integer(w)), p);
        if (v && *v == fd_p) return FactorKind::quintessential;
        if (!v || *v > 0) best = FactorKind::essential;
    }
    return best;
}

std::size_t bfs_component_count(const LabeledGraph& g) {
    std::vector<bool> seen(g.vertex_count, false);
    std::size_t count = 0;
    for (std::size_t s = 0; s < g.vertex_count; ++s) {
        if (seen[s]) continue;
        ++count;
        std::queue<std::size_t> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            const auto u = q.front();
            q.pop();
            for (std::size_t v = 0; v < g.vertex_count; ++v)
                if (!seen[v] && g.has_edge(u, v)) {
                    seen[v] = true;
                    q.push(v);
                }
        }
    }
    return count;
}

} // namespace

TEST(Essential, RunningExampleGrid) {
    const auto factors = test::example_factors();
    const std::vector<Prime> primes{Prime(3), Prime(5)};
    const auto grid = classify_all(factors, primes);
    using K = FactorKind;
    const K at3[] = {K::essential, K::essential, K::not_essential, K::quintessential};
    const K at5[] = {K::not_essential, K::quintessential, K::quintessential, K::quintessential};
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(grid.at(0, i).kind, at3[i]) << "g" << i + 1 << " at 3";
        EXPECT_EQ(grid.at(1, i).kind, at5[i]) << "g" << i + 1 << " at 5";
    }
    // Least witnesses, frozen from the definitional scan below.
    EXPECT_EQ(grid.at(0, 0).witness, Integer(1));
    EXPECT_EQ(grid.at(0, 1).witness, Integer(0));
    EXPECT_EQ(grid.at(0, 3).witness, Integer(2));
    EXPECT_EQ(grid.at(1, 1).witness, Integer(1));
    EXPECT_EQ(grid.at(1, 2).witness, Integer(2));
    EXPECT_EQ(grid.at(1, 3).witness, Integer(0));
    for (const auto& c : grid.entries) EXPECT_TRUE(verify_classification(factors, c));
}

TEST(Essential, RunningExampleGraphs) {
    const auto factors = test::example_factors();
    const std::vector<Prime> primes{Prime(3), Prime(5)};
    const auto e = essential_graph(factors, primes);
    const auto q = quintessential_graph(factors, primes);
    const std::vector<std::pair<std::size_t, std::size_t>> e_edges{{0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    const std::vector<std::pair<std::size_t, std::size_t>> q_edges{{1, 2}, {1, 3}, {2, 3}};
    EXPECT_EQ(e.edges.size(), e_edges.size());
    for (auto [u, v] : e_edges) EXPECT_TRUE(e.has_edge(u, v));
    EXPECT_EQ(q.edges.size(), q_edges.size());
    for (auto [u, v] : q_edges) EXPECT_TRUE(q.has_edge(u, v));
    EXPECT_EQ(e.edges.at({1, 3}), (std::vector<Prime>{Prime(3), Prime(5)}));
    EXPECT_TRUE(is_connected(e));
    const auto comps = connected_components(q);
    ASSERT_EQ(comps.size(), 2u);
    EXPECT_EQ(comps[0], (std::vector<std::size_t>{0}));
    EXPECT_EQ(comps[1], (std::vector<std::size_t>{1, 2, 3}));
}

TEST(Essential, ClassifyRequiresPrimeDividingFd) {
    const auto factors = test::example_factors();
    EXPECT_THROW(classify(factors, Prime(7), 0), std::invalid_argument);
}

TEST(Essential, DotExport) {
    LabeledGraph g;
    g.vertex_count = 2;
    g.edges[{0, 1}] = {Prime(2), Prime(3)};
    const std::string dot = to_dot(g, {"x", "x-1"}, "essential");
    EXPECT_NE(dot.find("graph essential {"), std::string::npos);
    EXPECT_NE(dot.find("  1 -- 2 [label=\"2,3\"];"), std::string::npos);
    EXPECT_NE(dot.find("  2 [label=\"x-1\"];"), std::string::npos);
}

TEST(EssentialProperty, AgreesWithDefinitionalScan) {
    std::mt19937_64 rng(31);
    int checked = 0;
    while (checked < 60) {
        const StandardForm sf = test::random_image_primitive(rng, 3, 3, 9);
        for (const auto& p : relevant_primes(sf.numerator_product())) {
            if (p.value() > 50) continue;
            const unsigned fd_p = fixed_divisor_p(sf.numerator_product(), p);
            const long long range = static_cast<long long>(pow(p.value(), fd_p + 1));
            if (range > 20000) continue;
            for (std::size_t i = 0; i < sf.factors.size(); ++i) {
                const auto c = classify(sf.factors, p, i);
                EXPECT_EQ(c.kind, brute_kind(sf.factors, p, i, range)) << to_expression(sf) << " p=" << p.str();
                EXPECT_TRUE(verify_classification(sf.factors, c));
            }
            ++checked;
        }
    }
}

TEST(EssentialProperty, GraphsAreNestedAndComponentsMatchBfs) {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 60; ++trial) {
        const StandardForm sf = test::random_image_primitive(rng, 4, 2, 9);
        const auto primes = relevant_primes(sf.numerator_product());
        const auto grid = classify_all(sf.factors, primes);
        const auto e = essential_graph(grid), q = quintessential_graph(grid);
        for (const auto& [edge, labels] : q.edges) EXPECT_TRUE(e.has_edge(edge.first, edge.second));
        EXPECT_EQ(connected_components(e).size(), bfs_component_count(e));
        EXPECT_EQ(connected_components(q).size(), bfs_component_count(q));
        EXPECT_GE(connected_components(q).size(), connected_components(e).size());
    }
}
