#pragma once

#include <vector>

#include "subdiv/digraph.hpp"
#include "subdiv/pattern.hpp"

namespace subdiv {

// One block of a subdivision witness, listed in cyclic traversal order from
// its opening branch vertex to the next block's opening branch vertex. For a
// forward block, (vertices[i], vertices[i+1]) must be a host arc; for a
// backward block the arc is (vertices[i+1], vertices[i]).
struct BlockPath {
    std::vector<Vertex> vertices;
    bool forward = true;

    int length() const { return static_cast<int>(vertices.size()) - 1; }
};

// Per-block internally disjoint directed paths realizing a cycle pattern
// inside a host digraph. Machine-checkable via verify_subdivision without
// knowing how it was found.
struct SubdivisionWitness {
    CyclePattern pattern;
    std::vector<BlockPath> blocks;
};

}  // namespace subdiv
