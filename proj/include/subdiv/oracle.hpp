#pragma once

#include <optional>

#include "subdiv/digraph.hpp"
#include "subdiv/pattern.hpp"
#include "subdiv/witness.hpp"

namespace subdiv {
namespace oracle {

// Brute-force ground truth for cross-validating the constructive finders on
// small instances. Deliberately shares no search code with them.
struct SearchLimit {
    int max_vertices = 12;
    long long max_steps = 50'000'000;
};

// Exhaustive search for any subdivision of c in d: backtracking over branch
// vertex placements, then vertex-disjoint directed path systems. Returns a
// verified witness or nothing.
std::optional<SubdivisionWitness> contains_subdivision(const Digraph& d, const CyclePattern& c,
                                                       const SearchLimit& lim = {});

// Exact chi by testing k = 1, 2, ... with plain backtracking in natural
// vertex order.
int chromatic_bruteforce(const UnderlyingGraph& g, const SearchLimit& lim = {});

// Backtracking Hamiltonian search; tournaments of any size get a path via
// the insertion method without touching the limit.
std::optional<HamiltonianWitness> find_hamiltonian(const Digraph& d, WalkKind kind,
                                                   const SearchLimit& lim = {});

}  // namespace oracle
}  // namespace subdiv
