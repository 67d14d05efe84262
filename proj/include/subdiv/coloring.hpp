#pragma once

#include <optional>
#include <vector>

#include "subdiv/digraph.hpp"

namespace subdiv {

// Vertex coloring with colors 1..palette. Properness is checked by
// is_proper, never assumed.
struct Coloring {
    std::vector<int> colors;  // indexed by vertex
    int palette = 0;
};

struct ChromaticBudget {
    long long max_nodes = 10'000'000;  // backtracking node limit per call
    bool shortcut_complete = true;     // answer n without search on complete graphs
};

struct ChromaticResult {
    int chi;
    Coloring witness;
};

// True iff no edge is monochromatic. Throws when the coloring does not cover
// every vertex of g with a color in 1..palette.
bool is_proper(const UnderlyingGraph& g, const Coloring& c);

// Exact chromatic number with a proper witness using exactly chi colors.
// Iterative deepening on k-colorability with a greedy clique lower bound and
// largest-degree-first ordering. Exceeding the budget throws BudgetError
// carrying the bounds established so far.
ChromaticResult chromatic_number(const UnderlyingGraph& g, const ChromaticBudget& budget = {});

// Exact test chi(g) >= threshold (decides (threshold-1)-colorability).
bool chi_at_least(const UnderlyingGraph& g, int threshold, const ChromaticBudget& budget = {});

// Exact k-colorability; nodes is decremented as the search runs and a
// BudgetError is thrown when it hits zero.
std::optional<Coloring> try_color_with(const UnderlyingGraph& g, int k, long long& nodes);

// The pair coloring Gamma(x) = (c1(x), c2(x)) flattened to {1,...,k1*k2}.
// e1 and e2 must jointly cover E(g), and c1/c2 must be proper on them.
Coloring product_coloring(const UnderlyingGraph& g, const UnderlyingGraph& e1,
                          const UnderlyingGraph& e2, const Coloring& c1, const Coloring& c2);

// chi of each successive induced prefix g[{prefix[0..i]}]. Consecutive values
// differ by 0 or +1 (self-checked).
std::vector<int> incremental_chromatic(const UnderlyingGraph& g, const std::vector<Vertex>& prefix,
                                       const ChromaticBudget& budget = {});

// Exact chi of a growing induced subgraph, one vertex at a time. Keeps the
// previous proper coloring as a hint: when the new vertex fits an existing
// color class the answer is immediate, otherwise the exact solver decides
// between chi and chi+1. Complete prefixes are recognized and shortcut.
class PrefixChroma {
public:
    explicit PrefixChroma(const UnderlyingGraph& host, const ChromaticBudget& budget = {});

    int add(Vertex v);  // returns the new exact chi

    int chi() const { return chi_; }
    int size() const { return static_cast<int>(members_.size()); }
    const std::vector<Vertex>& members() const { return members_; }

private:
    const UnderlyingGraph* host_;
    ChromaticBudget budget_;
    std::vector<Vertex> members_;
    std::vector<int> colors_;  // parallel to members_
    int chi_ = 0;
    bool complete_ = true;
};

}  // namespace subdiv
