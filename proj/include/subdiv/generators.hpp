#pragma once

#include <utility>

#include "subdiv/digraph.hpp"
#include "subdiv/rng.hpp"

namespace subdiv {

// Instance families with known structure. Every generator is a pure function
// of (parameters, seed), identical across platforms.

// Arcs i -> i+1, ..., i+(m-1)/2 (mod m) for odd m >= 3. Strongly connected,
// digon-free, underlying graph complete; returns the circuit (0,...,m-1).
std::pair<Digraph, HamiltonianWitness> circulant_tournament(int m);

// Arcs i -> j for all i < j; acyclic; returns the path (0,...,m-1). m >= 1.
std::pair<Digraph, HamiltonianWitness> transitive_tournament(int m);

// Every unordered pair oriented by the seeded stream; returns a Hamiltonian
// path built by the insertion method and verified.
std::pair<Digraph, HamiltonianWitness> random_tournament(int m, Seed seed);

// Edges only between positions at distance <= k, kept with the given
// probability. No edge spans more than k positions, so no k-secant pair can
// exist w.r.t. the natural enumeration; asserted before returning.
std::pair<UnderlyingGraph, Enumeration> banded_graph(int m, int k, double density, Seed seed);

// Hamiltonian path of a tournament by insertion: each vertex goes in front of
// the first already-placed vertex it beats.
HamiltonianWitness tournament_insertion_path(const Digraph& d);

}  // namespace subdiv
