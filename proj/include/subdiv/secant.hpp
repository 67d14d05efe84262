#pragma once

#include <optional>
#include <utility>

#include "subdiv/coloring.hpp"
#include "subdiv/digraph.hpp"

namespace subdiv {

// Two crossing edges v_i v_j and v_r v_l with 1-based enumeration positions
// i < r < j < l and j - r >= k.
struct SecantPair {
    std::pair<Vertex, Vertex> first_edge;   // (v_i, v_j)
    std::pair<Vertex, Vertex> second_edge;  // (v_r, v_l)
    int i = 0, r = 0, j = 0, l = 0;
    int k = 0;
};

// Raised when an operation whose contract demands a k-secant-free input runs
// into a pair anyway; carries the offending pair.
struct SecantFoundError : PreconditionError {
    explicit SecantFoundError(SecantPair found);
    SecantPair pair;
};

// Exhaustive O(m^2) scan over edge pairs; returns the lexicographically least
// valid pair by (i, r, j, l), or nothing.
std::optional<SecantPair> find_k_secant(const UnderlyingGraph& g, const Enumeration& n, int k);

// A vertex of degree at most 2k, which must exist when g has no k-secant
// pair w.r.t. n. When every degree is >= 2k+1 the right/left argument
// produces a concrete k-secant pair and a SecantFoundError carries it.
Vertex low_degree_vertex(const UnderlyingGraph& g, const Enumeration& n, int k);

// Proper coloring with at most 2k+1 colors for a k-secant-free input, built
// by iterated low-degree elimination and greedy re-insertion. If the
// elimination gets stuck a SecantFoundError reports the pair that proves the
// precondition false.
Coloring secant_free_coloring(const UnderlyingGraph& g, const Enumeration& n, int k);

}  // namespace subdiv
