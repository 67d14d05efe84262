#include "doctest.h"

#include <optional>
#include <tuple>

#include "subdiv/coloring.hpp"
#include "subdiv/generators.hpp"
#include "subdiv/oracle.hpp"
#include "subdiv/secant.hpp"
#include "test_graphs.hpp"

using namespace subdiv;
using namespace testgraphs;

namespace {

// Independent all-pairs reference scan, kept deliberately dumb.
std::optional<std::tuple<int, int, int, int>> reference_scan(const UnderlyingGraph& g,
                                                             const Enumeration& n, int k) {
    std::optional<std::tuple<int, int, int, int>> best;
    auto edges = g.edges();
    for (auto e : edges)
        for (auto f : edges) {
            int i = std::min(n.index_of(e.first), n.index_of(e.second)) + 1;
            int j = std::max(n.index_of(e.first), n.index_of(e.second)) + 1;
            int r = std::min(n.index_of(f.first), n.index_of(f.second)) + 1;
            int l = std::max(n.index_of(f.first), n.index_of(f.second)) + 1;
            if (i < r && r < j && j < l && j - r >= k) {
                auto t = std::make_tuple(i, r, j, l);
                if (!best || t < *best) best = t;
            }
        }
    return best;
}

void check_pair_sound(const UnderlyingGraph& g, const Enumeration& n, const SecantPair& p) {
    CHECK(p.i < p.r);
    CHECK(p.r < p.j);
    CHECK(p.j < p.l);
    CHECK(p.j - p.r >= p.k);
    CHECK(g.has_edge(p.first_edge.first, p.first_edge.second));
    CHECK(g.has_edge(p.second_edge.first, p.second_edge.second));
    CHECK(n.index_of(p.first_edge.first) + 1 == p.i);
    CHECK(n.index_of(p.first_edge.second) + 1 == p.j);
    CHECK(n.index_of(p.second_edge.first) + 1 == p.r);
    CHECK(n.index_of(p.second_edge.second) + 1 == p.l);
}

}  // namespace

TEST_SUITE_BEGIN("secant");

TEST_CASE("the forced crossing on four vertices") {
    UnderlyingGraph g(4);
    g.add_edge(0, 2);
    g.add_edge(1, 3);
    auto p = find_k_secant(g, Enumeration::natural(4), 1);
    REQUIRE(p.has_value());
    CHECK(p->i == 1);
    CHECK(p->r == 2);
    CHECK(p->j == 3);
    CHECK(p->l == 4);
    check_pair_sound(g, Enumeration::natural(4), *p);
}

TEST_CASE("path graphs in path order have no crossing edges") {
    UnderlyingGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    for (int k = 1; k <= 4; ++k)
        CHECK_FALSE(find_k_secant(g, Enumeration::natural(4), k).has_value());
}

TEST_CASE("agrees with the reference scan on seeded graphs") {
    // includes the 12-vertex density-0.4 instance plus a sweep
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        int m = 4 + seed % 9;
        UnderlyingGraph g = random_graph(seed == 1 ? 12 : m, 0.4, seed);
        Enumeration n = Enumeration::natural(g.vertex_count());
        for (int k = 1; k <= 3; ++k) {
            auto mine = find_k_secant(g, n, k);
            auto ref = reference_scan(g, n, k);
            CHECK(mine.has_value() == ref.has_value());
            if (mine && ref) {
                CHECK(std::make_tuple(mine->i, mine->r, mine->j, mine->l) == *ref);
                check_pair_sound(g, n, *mine);
            }
        }
    }
}

TEST_CASE("input validation") {
    UnderlyingGraph g(3);
    CHECK_THROWS_AS(find_k_secant(g, Enumeration::natural(2), 1), PreconditionError);
    CHECK_THROWS_AS(find_k_secant(g, Enumeration::natural(3), 0), PreconditionError);
    CHECK_THROWS_AS(find_k_secant(g, Enumeration({0, 1, 3}), 1), PreconditionError);
}

TEST_CASE("low_degree_vertex on easy inputs") {
    UnderlyingGraph star(6);
    for (int leaf = 1; leaf < 6; ++leaf) star.add_edge(0, leaf);
    Vertex v = low_degree_vertex(star, Enumeration::natural(6), 1);
    CHECK(star.degree(v) <= 2);

    CHECK(low_degree_vertex(UnderlyingGraph(4), Enumeration::natural(4), 2) == 0);

    auto [banded, n] = banded_graph(25, 3, 0.9, Seed{5});
    Vertex w = low_degree_vertex(banded, n, 3);
    CHECK(banded.degree(w) <= 6);
}

TEST_CASE("low_degree_vertex reports a constructed pair when all degrees are large") {
    // K5 with k=1: every degree is 4 >= 2k+1
    UnderlyingGraph k5 = complete(5);
    try {
        low_degree_vertex(k5, Enumeration::natural(5), 1);
        FAIL("expected SecantFoundError");
    } catch (const SecantFoundError& e) {
        check_pair_sound(k5, Enumeration::natural(5), e.pair);
        CHECK(e.pair.k == 1);
    }
}

TEST_CASE("claim 1 construction across seeded dense graphs and enumerations") {
    int reported = 0;
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        int m = 7 + seed % 6;
        UnderlyingGraph g = random_graph(m, 0.85, seed);
        std::vector<Vertex> order(m);
        for (int i = 0; i < m; ++i) order[i] = i;
        SplitMix64 rng(seed * 99);
        for (int i = m - 1; i > 0; --i) std::swap(order[i], order[rng.next_below(i + 1)]);
        Enumeration n(order);
        int min_deg = m;
        for (Vertex v = 0; v < m; ++v) min_deg = std::min(min_deg, g.degree(v));
        if (min_deg < 3) continue;  // k=1 error path needs all degrees >= 3
        try {
            Vertex v = low_degree_vertex(g, n, 1);
            CHECK(g.degree(v) <= 2);
        } catch (const SecantFoundError& e) {
            check_pair_sound(g, n, e.pair);
            ++reported;
        }
    }
    CHECK(reported > 5);
}

TEST_CASE("secant-free coloring: tight, trivial, banded") {
    UnderlyingGraph k3 = complete(3);
    Coloring c = secant_free_coloring(k3, Enumeration::natural(3), 1);
    CHECK(is_proper(k3, c));
    CHECK(c.palette == 3);  // 2k+1, tight

    UnderlyingGraph single(1);
    Coloring one = secant_free_coloring(single, Enumeration::natural(1), 5);
    CHECK(one.palette == 1);

    UnderlyingGraph empty(0);
    CHECK(secant_free_coloring(empty, Enumeration::natural(0), 2).palette == 0);

    auto [banded, n] = banded_graph(30, 3, 1.0, Seed{11});
    Coloring bc = secant_free_coloring(banded, n, 3);
    CHECK(is_proper(banded, bc));
    CHECK(bc.palette <= 7);
}

TEST_CASE("coloring a graph that is not secant-free surfaces the pair") {
    // K8 in natural order has 1-secant pairs and minimum degree 7
    UnderlyingGraph k8 = complete(8);
    try {
        secant_free_coloring(k8, Enumeration::natural(8), 1);
        FAIL("expected SecantFoundError");
    } catch (const SecantFoundError& e) {
        check_pair_sound(k8, Enumeration::natural(8), e.pair);
    }
}

TEST_CASE("lemma property on seeded secant-free instances") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        int k = 1 + seed % 4;
        int m = 5 + seed % 20;
        auto [g, n] = banded_graph(m, k, 0.3 + 0.1 * (seed % 8), Seed{seed});
        REQUIRE_FALSE(find_k_secant(g, n, k).has_value());
        Coloring c = secant_free_coloring(g, n, k);
        CHECK(is_proper(g, c));
        CHECK(c.palette <= 2 * k + 1);
    }
}

TEST_CASE("corollary property, both directions") {
    // contrapositive: no pair found means chi <= 2k+1
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        int k = 1 + seed % 3;
        UnderlyingGraph g = random_graph(4 + seed % 7, 0.5, seed * 3);
        Enumeration n = Enumeration::natural(g.vertex_count());
        if (!find_k_secant(g, n, k)) {
            CHECK(chromatic_number(g).chi <= 2 * k + 1);
            CHECK(oracle::chromatic_bruteforce(g) <= 2 * k + 1);
        }
    }
    // direct: chi >= 2k+2 forces a pair under every enumeration
    for (int k = 1; k <= 3; ++k) {
        UnderlyingGraph g = complete(2 * k + 2);
        SplitMix64 rng(k);
        std::vector<Vertex> order(g.vertex_count());
        for (int i = 0; i < g.vertex_count(); ++i) order[i] = i;
        for (int rep = 0; rep < 20; ++rep) {
            for (int i = g.vertex_count() - 1; i > 0; --i)
                std::swap(order[i], order[rng.next_below(i + 1)]);
            CHECK(find_k_secant(g, Enumeration(order), k).has_value());
        }
    }
}

TEST_SUITE_END();
