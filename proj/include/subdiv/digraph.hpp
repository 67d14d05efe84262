#pragma once

#include <utility>
#include <vector>

#include "subdiv/errors.hpp"

namespace subdiv {

// Vertices are dense 0-based integers internally; the file formats are
// 1-based (DIMACS convention) and converted at the I/O boundary.
using Vertex = int;

// Directed graph. No self-loops, no duplicate arcs; (u,v) and (v,u) may
// coexist (a digon). Values are treated as immutable once built.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int vertex_count);

    int vertex_count() const { return n_; }
    int arc_count() const { return m_; }

    void add_arc(Vertex u, Vertex v);
    bool has_arc(Vertex u, Vertex v) const;

    const std::vector<Vertex>& out_neighbors(Vertex u) const;
    const std::vector<Vertex>& in_neighbors(Vertex v) const;

    // All arcs in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> arcs() const;

    // Number of vertex pairs joined in both directions.
    int digon_count() const;

    bool operator==(const Digraph& other) const;

private:
    void check_vertex(Vertex u) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<Vertex>> out_;  // sorted
    std::vector<std::vector<Vertex>> in_;   // sorted
};

// Simple undirected graph: the shape colorings live on.
class UnderlyingGraph {
public:
    UnderlyingGraph() = default;
    explicit UnderlyingGraph(int vertex_count);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    // Ignores duplicates, so digons collapse to one edge. Self-loops throw.
    void add_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const;

    int degree(Vertex u) const;
    const std::vector<Vertex>& neighbors(Vertex u) const;

    // All edges as (min,max) pairs in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    bool is_complete() const;

    bool operator==(const UnderlyingGraph& other) const;

private:
    void check_vertex(Vertex u) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<Vertex>> adj_;  // sorted
};

// An ordering N of distinct vertices. index_of is 0-based; the classical
// i_N(v) is index_of(v) + 1.
class Enumeration {
public:
    Enumeration() = default;
    explicit Enumeration(std::vector<Vertex> order);

    // 0, 1, ..., n-1.
    static Enumeration natural(int n);

    int size() const { return static_cast<int>(order_.size()); }
    Vertex at(int index) const;
    bool contains(Vertex v) const;
    int index_of(Vertex v) const;
    const std::vector<Vertex>& order() const { return order_; }

private:
    std::vector<Vertex> order_;
    std::vector<int> index_;  // vertex -> position, -1 when absent
};

enum class WalkKind { path, circuit };

// Claimed Hamiltonian path or circuit; validity is what verify_hamiltonian
// decides, never assumed.
struct HamiltonianWitness {
    WalkKind kind = WalkKind::path;
    std::vector<Vertex> order;
};

UnderlyingGraph underlying(const Digraph& d);

// Induced subdigraph with a retained local<->host id map, so witnesses found
// inside can be lifted back to the host digraph.
struct InducedSubdigraph {
    Digraph graph;
    std::vector<Vertex> to_host;  // local id -> host id
    std::vector<int> from_host;   // host id -> local id, -1 outside
};

// vertices must be distinct and within range; local ids follow their order.
InducedSubdigraph induced(const Digraph& d, const std::vector<Vertex>& vertices);

// Induced subgraph of an undirected graph, local ids following the given order.
UnderlyingGraph induced_subgraph(const UnderlyingGraph& g, const std::vector<Vertex>& vertices);

bool verify_hamiltonian(const Digraph& d, const HamiltonianWitness& w);

// The directed subpath of w from x to y, inclusive. Wraps around on circuit
// witnesses; on path witnesses x must not occur after y.
std::vector<Vertex> subpath(const HamiltonianWitness& w, Vertex x, Vertex y);

}  // namespace subdiv
