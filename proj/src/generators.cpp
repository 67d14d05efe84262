#include "subdiv/generators.hpp"

#include <string>

#include "subdiv/secant.hpp"

namespace subdiv {

HamiltonianWitness tournament_insertion_path(const Digraph& d) {
    std::vector<Vertex> order;
    order.reserve(d.vertex_count());
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
        size_t at = order.size();
        for (size_t i = 0; i < order.size(); ++i)
            if (d.has_arc(v, order[i])) {
                at = i;
                break;
            }
        order.insert(order.begin() + at, v);
    }
    HamiltonianWitness w{WalkKind::path, std::move(order)};
    if (!verify_hamiltonian(d, w))
        throw InternalError("insertion method failed; input is not a tournament");
    return w;
}

std::pair<Digraph, HamiltonianWitness> circulant_tournament(int m) {
    if (m < 3 || m % 2 == 0)
        throw PreconditionError("circulant tournament needs odd m >= 3, got " + std::to_string(m));
    Digraph d(m);
    for (Vertex i = 0; i < m; ++i)
        for (int j = 1; j <= (m - 1) / 2; ++j) d.add_arc(i, (i + j) % m);
    HamiltonianWitness w{WalkKind::circuit, {}};
    w.order.resize(m);
    for (Vertex i = 0; i < m; ++i) w.order[i] = i;
    if (!verify_hamiltonian(d, w)) throw InternalError("circulant circuit failed verification");
    return {std::move(d), std::move(w)};
}

std::pair<Digraph, HamiltonianWitness> transitive_tournament(int m) {
    if (m < 1) throw PreconditionError("transitive tournament needs m >= 1");
    Digraph d(m);
    for (Vertex i = 0; i < m; ++i)
        for (Vertex j = i + 1; j < m; ++j) d.add_arc(i, j);
    HamiltonianWitness w{WalkKind::path, {}};
    w.order.resize(m);
    for (Vertex i = 0; i < m; ++i) w.order[i] = i;
    return {std::move(d), std::move(w)};
}

std::pair<Digraph, HamiltonianWitness> random_tournament(int m, Seed seed) {
    if (m < 1) throw PreconditionError("random tournament needs m >= 1");
    SplitMix64 rng(seed);
    Digraph d(m);
    for (Vertex i = 0; i < m; ++i)
        for (Vertex j = i + 1; j < m; ++j) {
            if (rng.next() & 1)
                d.add_arc(i, j);
            else
                d.add_arc(j, i);
        }
    HamiltonianWitness w = tournament_insertion_path(d);
    return {std::move(d), std::move(w)};
}

std::pair<UnderlyingGraph, Enumeration> banded_graph(int m, int k, double density, Seed seed) {
    if (m < 0) throw PreconditionError("banded graph needs m >= 0");
    if (k < 1) throw PreconditionError("band width k must be positive");
    if (density < 0.0 || density > 1.0) throw PreconditionError("density must lie in [0,1]");
    SplitMix64 rng(seed);
    UnderlyingGraph g(m);
    for (Vertex p = 0; p < m; ++p)
        for (Vertex q = p + 1; q < m && q - p <= k; ++q)
            if (rng.chance(density)) g.add_edge(p, q);
    Enumeration n = Enumeration::natural(m);
    if (find_k_secant(g, n, k).has_value())
        throw InternalError("banded graph produced a k-secant pair");
    return {std::move(g), std::move(n)};
}

}  // namespace subdiv
