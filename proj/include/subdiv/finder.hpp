#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "subdiv/coloring.hpp"
#include "subdiv/digraph.hpp"
#include "subdiv/pattern.hpp"
#include "subdiv/secant.hpp"
#include "subdiv/witness.hpp"

namespace subdiv {

enum class PartitionMode { reach_target, stop_below_target };

struct Segment {
    std::vector<Vertex> vertices;  // host ids, contiguous along the witness
    int target = 0;
    int achieved_chi = 0;
};

// Contiguous chromatic-threshold segments along a Hamiltonian order.
struct SegmentPartition {
    std::vector<Segment> segments;
    PartitionMode mode = PartitionMode::reach_target;
    int consumed = 0;  // vertices of the order used by the segments
};

// reach_target: grow each segment until its exact chi equals the next target
// (target 0 yields an empty segment); vertices running out first is a
// precondition error. With merge_leftovers, order vertices left after the
// last target join the final segment.
// stop_below_target: one target, repeated; each segment stops one vertex
// short of reaching it, the omitted vertex starting the next segment. The
// final segment keeps whatever remains. Consumes the whole order.
SegmentPartition partition_segments(const Digraph& d, const HamiltonianWitness& w,
                                    const std::vector<int>& targets, PartitionMode mode,
                                    const ChromaticBudget& budget = {},
                                    bool merge_leftovers = false);

// Segments contracted to single vertices; edges are host arcs running
// between different segments (intra-segment arcs are excluded).
struct ContractedGraph {
    UnderlyingGraph graph;                // vertex i = segment i (0-based)
    std::vector<int> odd_segments;        // segment indices at odd 1-based positions
    std::vector<int> even_segments;
    // (a,b) -> lexicographically least host arc from segment a to segment b.
    std::map<std::pair<int, int>, std::pair<Vertex, Vertex>> provenance;
};

ContractedGraph contract_segments(const Digraph& host, const SegmentPartition& parts);

// How the lifted 1-secant pair was classified and where the chromatic
// threshold segments sit. Segment indices m1/m2 are 1-based.
struct CaseSelection {
    enum class Tag { backward_arc, both_forward };
    Tag tag = Tag::both_forward;
    Vertex u_i = -1, u_r = -1, u_j = -1, u_s = -1;
    int m1 = 0, m2 = 0;
    Vertex x = -1;   // first vertex of the segment after H_{m1}
    int parity = 0;  // 1: pair found among odd segments, 2: among even
};

// Raised when neither parity class of the contracted graph has a 1-secant
// pair. Both classes are then 3-colorable, which caps the host's chromatic
// number at 6(2n-1) and contradicts the caller's precondition, so this is a
// bug detector, not an expected outcome.
struct InconsistencyError : InternalError {
    InconsistencyError(Coloring odd, Coloring even, int bound);
    Coloring odd_class_coloring;
    Coloring even_class_coloring;
    int chromatic_bound;
};

// True iff w realizes pattern c inside d: matching block count, sign and
// alternation, block lengths >= k_i, internal disjointness, and every step an
// arc of d in the block's direction.
bool verify_subdivision(const Digraph& d, const CyclePattern& c, const SubdivisionWitness& w);

// The circuit construction: partition the circuit into chromatic-threshold
// segments, harvest k_i-secant arcs from the even ones, and splice them with
// circuit subpaths into a verified subdivision of c. Requires a valid circuit
// witness and exact chi >= 2 * order(c).
SubdivisionWitness find_in_hamiltonian(const Digraph& d, const HamiltonianWitness& circuit,
                                       const CyclePattern& c, const ChromaticBudget& budget = {});

struct PathSearchResult {
    SubdivisionWitness witness;
    CaseSelection selection;
};

// The Hamiltonian-path construction: segment the path at threshold 2n,
// contract, find a 1-secant pair in a parity class, and either close a
// Hamiltonian sub-digraph with a backward arc (delegating to
// find_in_hamiltonian) or assemble the two-path witness directly. Requires a
// valid path witness, a pattern with >= 2 blocks, and exact chi >= 12n-5.
PathSearchResult find_with_hamiltonian_path(const Digraph& d, const HamiltonianWitness& path,
                                            const CyclePattern& c,
                                            const ChromaticBudget& budget = {});

}  // namespace subdiv
