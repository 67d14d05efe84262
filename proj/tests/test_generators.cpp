#include "doctest.h"

#include "subdiv/coloring.hpp"
#include "subdiv/generators.hpp"
#include "subdiv/oracle.hpp"
#include "subdiv/secant.hpp"

using namespace subdiv;

TEST_SUITE_BEGIN("generators");

TEST_CASE("circulant tournaments") {
    auto [d3, w3] = circulant_tournament(3);
    CHECK(d3.arc_count() == 3);
    CHECK(d3.has_arc(0, 1));
    CHECK(d3.has_arc(1, 2));
    CHECK(d3.has_arc(2, 0));
    CHECK(verify_hamiltonian(d3, w3));

    auto [d7, w7] = circulant_tournament(7);
    CHECK(d7.arc_count() == 21);  // m(m-1)/2
    CHECK(w7.kind == WalkKind::circuit);
    CHECK(verify_hamiltonian(d7, w7));
    CHECK(d7.digon_count() == 0);
    CHECK(underlying(d7).is_complete());

    CHECK_THROWS_AS(circulant_tournament(4), PreconditionError);
    CHECK_THROWS_AS(circulant_tournament(1), PreconditionError);
}

TEST_CASE("transitive tournaments") {
    auto [d2, w2] = transitive_tournament(2);
    CHECK(d2.arc_count() == 1);
    CHECK(d2.has_arc(0, 1));
    CHECK(verify_hamiltonian(d2, w2));

    auto [d31, w31] = transitive_tournament(31);
    CHECK(d31.arc_count() == 465);  // C(31,2)
    CHECK(verify_hamiltonian(d31, w31));
    for (auto [u, v] : d31.arcs()) CHECK(u < v);  // acyclic by construction order

    auto [d1, w1] = transitive_tournament(1);
    CHECK(d1.arc_count() == 0);
    CHECK(w1.order.size() == 1);
}

TEST_CASE("random tournaments are reproducible and carry a verified path") {
    auto [a, wa] = random_tournament(10, Seed{42});
    auto [b, wb] = random_tournament(10, Seed{42});
    CHECK(a == b);
    CHECK(wa.order == wb.order);
    CHECK(verify_hamiltonian(a, wa));
    CHECK(underlying(a).is_complete());

    auto [c, wc] = random_tournament(10, Seed{43});
    CHECK(verify_hamiltonian(c, wc));
    CHECK_FALSE(a == c);  // smoke check, not an invariant

    auto [one, wone] = random_tournament(1, Seed{0});
    CHECK(one.vertex_count() == 1);
    CHECK(verify_hamiltonian(one, wone));
}

TEST_CASE("tournament chromatic numbers match the complete shortcut and the oracle") {
    for (int m : {3, 5, 7, 9, 11}) {
        auto [d, w] = circulant_tournament(m);
        CHECK(chromatic_number(underlying(d)).chi == m);
        if (m <= 9) CHECK(oracle::chromatic_bruteforce(underlying(d)) == m);
    }
    for (int m : {2, 6, 12}) {
        auto [d, w] = transitive_tournament(m);
        CHECK(chromatic_number(underlying(d)).chi == m);
        if (m <= 12) CHECK(oracle::chromatic_bruteforce(underlying(d)) == m);
    }
}

TEST_CASE("banded graphs") {
    auto [path_like, n1] = banded_graph(8, 1, 1.0, Seed{1});
    for (auto [u, v] : path_like.edges()) CHECK(v - u == 1);

    auto [full, n2] = banded_graph(30, 3, 1.0, Seed{2});
    CHECK_FALSE(find_k_secant(full, n2, 3).has_value());
    CHECK(full.edge_count() == 3 * 30 - 3 - 2 - 1);  // full band

    auto [empty, n3] = banded_graph(10, 2, 0.0, Seed{3});
    CHECK(empty.edge_count() == 0);

    auto [a, na] = banded_graph(20, 2, 0.6, Seed{7});
    auto [b, nb] = banded_graph(20, 2, 0.6, Seed{7});
    CHECK(a == b);

    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        int k = 1 + seed % 4;
        auto [g, n] = banded_graph(5 + seed % 30, k, 0.7, Seed{seed});
        CHECK_FALSE(find_k_secant(g, n, k).has_value());
    }

    CHECK_THROWS_AS(banded_graph(5, 0, 0.5, Seed{0}), PreconditionError);
    CHECK_THROWS_AS(banded_graph(5, 1, 1.5, Seed{0}), PreconditionError);
}

TEST_SUITE_END();
