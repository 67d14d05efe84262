#include "doctest.h"

#include <set>

#include "subdiv/coloring.hpp"
#include "subdiv/oracle.hpp"
#include "test_graphs.hpp"

using namespace subdiv;
using namespace testgraphs;

TEST_SUITE_BEGIN("coloring");

TEST_CASE("is_proper") {
    UnderlyingGraph k3 = complete(3);
    CHECK(is_proper(k3, {{1, 2, 3}, 3}));
    CHECK_FALSE(is_proper(k3, {{1, 1, 2}, 2}));
    CHECK(is_proper(UnderlyingGraph(3), {{1, 1, 1}, 1}));
    CHECK_THROWS_AS(is_proper(k3, Coloring{{1, 2}, 2}), PreconditionError);
    CHECK_THROWS_AS(is_proper(k3, Coloring{{1, 2, 4}, 3}), PreconditionError);
}

TEST_CASE("chromatic number of named graphs") {
    CHECK(chromatic_number(complete(7)).chi == 7);
    CHECK(chromatic_number(cycle(5)).chi == 3);

    // cross-checked against the brute-force oracle, which is the source of
    // the frozen value
    UnderlyingGraph pet = petersen();
    CHECK(oracle::chromatic_bruteforce(pet) == 3);
    CHECK(chromatic_number(pet).chi == 3);

    CHECK(chromatic_number(UnderlyingGraph(0)).chi == 0);
    CHECK(chromatic_number(UnderlyingGraph(4)).chi == 1);
}

TEST_CASE("witness uses exactly chi colors and is proper; no smaller coloring exists") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        UnderlyingGraph g = random_graph(3 + seed % 10, 0.45, seed);
        auto [chi, witness] = chromatic_number(g);
        CHECK(is_proper(g, witness));
        CHECK(witness.palette == chi);
        std::set<int> distinct(witness.colors.begin(), witness.colors.end());
        CHECK(static_cast<int>(distinct.size()) == chi);
        if (chi > 1) {
            long long nodes = 1'000'000;
            CHECK_FALSE(try_color_with(g, chi - 1, nodes).has_value());
        }
    }
}

TEST_CASE("complete shortcut and chi_at_least") {
    ChromaticBudget no_shortcut;
    no_shortcut.shortcut_complete = false;
    CHECK(chromatic_number(complete(12), no_shortcut).chi == 12);
    CHECK(chromatic_number(complete(12)).chi == 12);

    CHECK(chi_at_least(complete(6), 6));
    CHECK_FALSE(chi_at_least(complete(6), 7));
    CHECK(chi_at_least(cycle(5), 3));
    CHECK_FALSE(chi_at_least(cycle(5), 4));
    CHECK(chi_at_least(UnderlyingGraph(0), 0));
    CHECK_FALSE(chi_at_least(UnderlyingGraph(0), 1));
}

TEST_CASE("budget exhaustion carries bounds") {
    ChromaticBudget tiny;
    tiny.max_nodes = 3;
    tiny.shortcut_complete = false;
    try {
        chromatic_number(petersen(), tiny);
        FAIL("expected BudgetError");
    } catch (const BudgetError& e) {
        CHECK(e.lower_bound >= 2);
        CHECK(e.upper_bound >= e.lower_bound);
    }
}

TEST_CASE("product coloring on the K4 split example") {
    UnderlyingGraph k4 = complete(4);
    UnderlyingGraph matching(4);  // two disjoint edges
    matching.add_edge(0, 1);
    matching.add_edge(2, 3);
    UnderlyingGraph rest(4);  // the remaining 4-cycle
    rest.add_edge(0, 2);
    rest.add_edge(2, 1);
    rest.add_edge(1, 3);
    rest.add_edge(3, 0);

    Coloring c1{{1, 2, 1, 2}, 2};
    Coloring c2{{1, 1, 2, 2}, 2};
    REQUIRE(is_proper(matching, c1));
    REQUIRE(is_proper(rest, c2));
    Coloring gamma = product_coloring(k4, matching, rest, c1, c2);
    CHECK(is_proper(k4, gamma));
    CHECK(gamma.palette == 4);
}

TEST_CASE("product coloring degenerate splits") {
    UnderlyingGraph edgeless(3);
    Coloring one{{1, 1, 1}, 1};
    Coloring gamma = product_coloring(edgeless, UnderlyingGraph(3), UnderlyingGraph(3), one, one);
    CHECK(gamma.palette == 1);
    CHECK(is_proper(edgeless, gamma));

    UnderlyingGraph k3 = complete(3);
    Coloring c1{{1, 2, 3}, 3};
    Coloring whole = product_coloring(k3, k3, UnderlyingGraph(3), c1, one);
    CHECK(whole.palette == 3);
    CHECK(is_proper(k3, whole));
}

TEST_CASE("product coloring rejects bad inputs") {
    UnderlyingGraph k3 = complete(3);
    UnderlyingGraph partial(3);
    partial.add_edge(0, 1);
    Coloring c{{1, 2, 1}, 2};
    CHECK_THROWS_AS(product_coloring(k3, partial, UnderlyingGraph(3), c, c), PreconditionError);
    UnderlyingGraph other(3);
    other.add_edge(1, 2);
    other.add_edge(0, 2);
    Coloring bad{{1, 1, 1}, 1};
    CHECK_THROWS_AS(product_coloring(k3, partial, other, bad, c), PreconditionError);
}

TEST_CASE("incremental chromatic streams") {
    CHECK(incremental_chromatic(complete(5), {0, 1, 2, 3, 4}) ==
          std::vector<int>{1, 2, 3, 4, 5});
    CHECK(incremental_chromatic(complete(5), {3, 1, 4, 0, 2}) ==
          std::vector<int>{1, 2, 3, 4, 5});
    CHECK(incremental_chromatic(UnderlyingGraph(4), {0, 1, 2, 3}) ==
          std::vector<int>{1, 1, 1, 1});
    CHECK(incremental_chromatic(cycle(5), {0, 1, 2, 3, 4}) == std::vector<int>{1, 2, 2, 2, 3});
    CHECK_THROWS_AS(incremental_chromatic(cycle(5), {0, 0}), PreconditionError);
}

TEST_CASE("incremental deltas stay in {0,+1} and match full recomputation") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        UnderlyingGraph g = random_graph(10, 0.5, seed);
        std::vector<Vertex> prefix;
        SplitMix64 rng(seed * 13);
        for (Vertex v = 0; v < 10; ++v) prefix.push_back(v);
        for (int i = 9; i > 0; --i)
            std::swap(prefix[i], prefix[rng.next_below(i + 1)]);
        auto stream = incremental_chromatic(g, prefix);
        for (size_t i = 0; i < stream.size(); ++i) {
            if (i) CHECK((stream[i] == stream[i - 1] || stream[i] == stream[i - 1] + 1));
            std::vector<Vertex> cut(prefix.begin(), prefix.begin() + i + 1);
            CHECK(stream[i] == chromatic_number(induced_subgraph(g, cut)).chi);
        }
    }
}

TEST_SUITE_END();
