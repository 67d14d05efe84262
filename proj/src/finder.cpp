#include "subdiv/finder.hpp"

#include <algorithm>
#include <string>

namespace subdiv {

namespace {

// One traversal step of the witness cycle. The underlying arc is (from,to)
// when forward, (to,from) otherwise. core tags the pattern block whose body
// the step belongs to; 0 marks glue arcs, which attach to whichever
// neighboring block their orientation dictates.
struct Step {
    Vertex from;
    Vertex to;
    bool forward;
    int core;
};

Step arc_step(const Digraph& d, Vertex from, Vertex to, int core) {
    if (d.has_arc(from, to)) return {from, to, true, core};
    if (d.has_arc(to, from)) return {from, to, false, core};
    throw InternalError("no arc between " + std::to_string(from) + " and " + std::to_string(to));
}

// Cuts a chained cyclic step sequence into maximal same-direction runs and
// matches them to pattern blocks via the core tags.
std::vector<BlockPath> split_into_blocks(const std::vector<Step>& steps, int block_count) {
    int s = static_cast<int>(steps.size());
    if (s == 0) throw InternalError("empty step cycle");
    for (int i = 0; i < s; ++i)
        if (steps[i].to != steps[(i + 1) % s].from)
            throw InternalError("step cycle is not chained");
    int first = -1;
    for (int i = 0; i < s; ++i)
        if (steps[i].forward != steps[(i + s - 1) % s].forward) {
            first = i;
            break;
        }
    if (first == -1) throw InternalError("step cycle runs in a single direction");

    struct Run {
        std::vector<Step> steps;
        int tag = 0;
    };
    std::vector<Run> runs;
    for (int idx = 0; idx < s; ++idx) {
        const Step& st = steps[(first + idx) % s];
        if (runs.empty() || runs.back().steps.back().forward != st.forward) runs.emplace_back();
        runs.back().steps.push_back(st);
    }
    if (static_cast<int>(runs.size()) != block_count)
        throw InternalError("expected " + std::to_string(block_count) + " blocks, assembled " +
                            std::to_string(runs.size()));
    for (Run& run : runs) {
        for (const Step& st : run.steps) {
            if (st.core == 0) continue;
            if (run.tag == 0)
                run.tag = st.core;
            else if (run.tag != st.core)
                throw InternalError("two block cores merged into one run");
        }
        if (run.tag == 0) throw InternalError("assembled run carries no block core");
    }
    int at = -1;
    for (int i = 0; i < block_count; ++i)
        if (runs[i].tag == 1) at = i;
    if (at == -1) throw InternalError("no run carries block 1");

    std::vector<BlockPath> blocks(block_count);
    for (int q = 0; q < block_count; ++q) {
        const Run& run = runs[(at + q) % block_count];
        if (run.tag != q + 1) throw InternalError("assembled blocks out of cyclic order");
        BlockPath& b = blocks[q];
        b.forward = run.steps.front().forward;
        b.vertices.push_back(run.steps.front().from);
        for (const Step& st : run.steps) b.vertices.push_back(st.to);
    }
    return blocks;
}

// Reading the witness in the opposite rotational direction: blocks reverse
// order, every block flips.
SubdivisionWitness reversed_witness(const SubdivisionWitness& w, CyclePattern target) {
    int l = static_cast<int>(w.blocks.size());
    SubdivisionWitness out{std::move(target), {}};
    out.blocks.resize(l);
    for (int i = 0; i < l; ++i) {
        const BlockPath& src = w.blocks[l - 1 - i];
        out.blocks[i].forward = !src.forward;
        out.blocks[i].vertices.assign(src.vertices.rbegin(), src.vertices.rend());
    }
    return out;
}

// Restarting the block listing one block earlier (undoes the minus-to-plus
// rotation).
SubdivisionWitness rotated_right_witness(const SubdivisionWitness& w, CyclePattern target) {
    int l = static_cast<int>(w.blocks.size());
    SubdivisionWitness out{std::move(target), {}};
    out.blocks.resize(l);
    for (int i = 0; i < l; ++i) out.blocks[i] = w.blocks[(i + l - 1) % l];
    return out;
}

// Chromatic targets of the segment lists: k_i - 1 at odd 1-based positions,
// 2k_i + 2 at even ones.
std::vector<int> theorem_targets(const std::vector<int>& blocks, int limit) {
    std::vector<int> out;
    out.reserve(limit);
    for (int idx = 0; idx < limit; ++idx)
        out.push_back(idx % 2 == 0 ? blocks[idx] - 1 : 2 * blocks[idx] + 2);
    return out;
}

// Host endpoints of a k-secant arc pair inside one even segment. e spans
// enumeration positions (xe..ye), f spans (xf..yf), xe < xf < ye < yf.
struct SegmentSecant {
    Vertex xe = -1, ye = -1, xf = -1, yf = -1;
};

SegmentSecant harvest_secant(const Digraph& host, const std::vector<Vertex>& segment, int k) {
    InducedSubdigraph sub = induced(host, segment);
    UnderlyingGraph g = underlying(sub.graph);
    auto pair = find_k_secant(g, Enumeration::natural(g.vertex_count()), k);
    if (!pair)
        throw InternalError("segment with chi = 2k+2 lacks a k-secant pair (k = " +
                            std::to_string(k) + ")");
    SegmentSecant out;
    out.xe = segment[pair->i - 1];
    out.ye = segment[pair->j - 1];
    out.xf = segment[pair->r - 1];
    out.yf = segment[pair->l - 1];
    return out;
}

CyclePattern rotate_left_to_plus(const CyclePattern& c) {
    std::vector<int> blocks(c.blocks().begin() + 1, c.blocks().end());
    blocks.push_back(c.blocks().front());
    return CyclePattern(Sign::plus, std::move(blocks));
}

// The circuit assembly on a canonical C^+ pattern: secant arc, middle of the
// even segment walked against the circuit, second secant arc, then the
// circuit itself through the odd segment to the next even one.
SubdivisionWitness build_circuit_witness(const Digraph& d, const HamiltonianWitness& circuit,
                                         const CyclePattern& pat, const ChromaticBudget& budget) {
    int l = pat.block_count();
    SegmentPartition parts = partition_segments(d, circuit, theorem_targets(pat.blocks(), l),
                                                PartitionMode::reach_target, budget, false);
    const std::vector<Vertex>& circ = circuit.order;
    int s = static_cast<int>(circ.size());
    std::vector<int> pos(d.vertex_count(), -1);
    for (int i = 0; i < s; ++i) pos[circ[i]] = i;

    std::vector<SegmentSecant> secants(l);
    for (int idx = 1; idx < l; idx += 2)
        secants[idx] = harvest_secant(d, parts.segments[idx].vertices, pat.blocks()[idx]);

    auto fwd_run = [&](std::vector<Step>& steps, Vertex from, Vertex to, int core) {
        for (int p = pos[from]; p != pos[to]; p = (p + 1) % s)
            steps.push_back({circ[p], circ[(p + 1) % s], true, core});
    };
    auto bwd_run = [&](std::vector<Step>& steps, Vertex from, Vertex to, int core) {
        for (int p = pos[from]; p != pos[to]; p = (p + s - 1) % s)
            steps.push_back({circ[p], circ[(p + s - 1) % s], false, core});
    };

    std::vector<Step> steps;
    for (int idx = 0; idx < l; ++idx) {
        if (idx % 2 == 0) {
            const SegmentSecant& prev = secants[(idx + l - 1) % l];
            const SegmentSecant& next = secants[idx + 1];
            fwd_run(steps, prev.yf, next.xe, idx + 1);
            steps.push_back(arc_step(d, next.xe, next.ye, 0));
        } else {
            const SegmentSecant& cur = secants[idx];
            bwd_run(steps, cur.ye, cur.xf, idx + 1);
            steps.push_back(arc_step(d, cur.xf, cur.yf, 0));
        }
    }
    SubdivisionWitness w{pat, split_into_blocks(steps, l)};
    if (!verify_subdivision(d, pat, w)) throw InternalError("circuit assembly failed verification");
    return w;
}

// The two-path assembly of the Hamiltonian-path theorem, case 2, on a
// canonical C^+ pattern. P_1 runs from u_i through the sub-partitioned
// threshold segment to u_r and across to u_s; P_2 is the direct u_i -> u_j
// -> u_s route, traversed against its arcs as the final block.
SubdivisionWitness build_path_witness(const Digraph& d, const HamiltonianWitness& path,
                                      const CyclePattern& pat, const ChromaticBudget& budget,
                                      const std::vector<Vertex>& threshold_segment, Vertex ui,
                                      Vertex ur, Vertex uj, Vertex us) {
    int l = pat.block_count();
    std::vector<int> ppos(d.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(path.order.size()); ++i) ppos[path.order[i]] = i;

    auto fwd_run = [&](std::vector<Step>& steps, Vertex from, Vertex to, int core) {
        for (int p = ppos[from]; p < ppos[to]; ++p)
            steps.push_back({path.order[p], path.order[p + 1], true, core});
    };
    auto bwd_run = [&](std::vector<Step>& steps, Vertex from, Vertex to, int core) {
        for (int p = ppos[from]; p > ppos[to]; --p)
            steps.push_back({path.order[p], path.order[p - 1], false, core});
    };

    std::vector<Step> steps;
    if (l == 2) {
        fwd_run(steps, ui, ur, 1);
        steps.push_back(arc_step(d, ur, us, 0));
        bwd_run(steps, us, uj, 2);
        steps.push_back(arc_step(d, uj, ui, 0));
    } else {
        InducedSubdigraph sub = induced(d, threshold_segment);
        HamiltonianWitness local_path{WalkKind::path, {}};
        local_path.order.resize(sub.graph.vertex_count());
        for (int i = 0; i < sub.graph.vertex_count(); ++i) local_path.order[i] = i;
        SegmentPartition subparts;
        try {
            subparts = partition_segments(sub.graph, local_path,
                                          theorem_targets(pat.blocks(), l - 1),
                                          PartitionMode::reach_target, budget, true);
        } catch (const PreconditionError& e) {
            throw InternalError(std::string("threshold segment cannot host the sub-partition: ") +
                                e.what());
        }
        std::vector<SegmentSecant> secants(l - 1);
        for (int idx = 1; idx < l - 1; idx += 2) {
            std::vector<Vertex> host_segment;
            host_segment.reserve(subparts.segments[idx].vertices.size());
            for (Vertex v : subparts.segments[idx].vertices)
                host_segment.push_back(sub.to_host[v]);
            secants[idx] = harvest_secant(d, host_segment, pat.blocks()[idx]);
        }
        fwd_run(steps, ui, secants[1].xe, 1);
        steps.push_back(arc_step(d, secants[1].xe, secants[1].ye, 0));
        for (int idx = 1; idx < l - 1; idx += 2) {
            const SegmentSecant& cur = secants[idx];
            bwd_run(steps, cur.ye, cur.xf, idx + 1);
            steps.push_back(arc_step(d, cur.xf, cur.yf, 0));
            if (idx + 2 < l - 1) {
                const SegmentSecant& next = secants[idx + 2];
                fwd_run(steps, cur.yf, next.xe, idx + 2);
                steps.push_back(arc_step(d, next.xe, next.ye, 0));
            } else {
                fwd_run(steps, cur.yf, ur, idx + 2);
                steps.push_back(arc_step(d, ur, us, 0));
            }
        }
        bwd_run(steps, us, uj, l);
        steps.push_back(arc_step(d, uj, ui, 0));
    }
    SubdivisionWitness w{pat, split_into_blocks(steps, l)};
    if (!verify_subdivision(d, pat, w)) throw InternalError("path assembly failed verification");
    return w;
}

struct LiftedEdge {
    std::optional<std::pair<Vertex, Vertex>> fwd;  // arc into the later segment
    std::optional<std::pair<Vertex, Vertex>> bwd;  // arc back into the earlier one
};

LiftedEdge lift_edge(const ContractedGraph& cg, int a, int b) {
    LiftedEdge out;
    if (auto it = cg.provenance.find({a, b}); it != cg.provenance.end()) out.fwd = it->second;
    if (auto it = cg.provenance.find({b, a}); it != cg.provenance.end()) out.bwd = it->second;
    return out;
}

SubdivisionWitness lift_witness(const SubdivisionWitness& w, const std::vector<Vertex>& to_host) {
    SubdivisionWitness out = w;
    for (BlockPath& b : out.blocks)
        for (Vertex& v : b.vertices) v = to_host[v];
    return out;
}

}  // namespace

InconsistencyError::InconsistencyError(Coloring odd, Coloring even, int bound)
    : InternalError("no 1-secant pair in either parity class; both are 3-colorable, which caps "
                    "the host chromatic number at " +
                    std::to_string(bound) + " and contradicts the precondition"),
      odd_class_coloring(std::move(odd)),
      even_class_coloring(std::move(even)),
      chromatic_bound(bound) {}

bool verify_subdivision(const Digraph& d, const CyclePattern& c, const SubdivisionWitness& w) {
    if (!(w.pattern == c)) return false;
    int l = c.block_count();
    if (static_cast<int>(w.blocks.size()) != l) return false;
    for (const BlockPath& b : w.blocks) {
        if (b.vertices.size() < 2) return false;
        for (Vertex v : b.vertices)
            if (v < 0 || v >= d.vertex_count()) return false;
    }
    if (l == 1) {
        const BlockPath& b = w.blocks[0];
        if (!b.forward) return false;
        if (b.vertices.front() != b.vertices.back()) return false;
        if (b.length() < std::max(c.blocks()[0], 2)) return false;
    } else {
        bool first_forward = c.sign() == Sign::plus;
        for (int i = 0; i < l; ++i) {
            const BlockPath& b = w.blocks[i];
            bool expected = i % 2 == 0 ? first_forward : !first_forward;
            if (b.forward != expected) return false;
            if (b.length() < c.blocks()[i]) return false;
            if (b.vertices.back() != w.blocks[(i + 1) % l].vertices.front()) return false;
        }
        // Two length-1 blocks of a 2-block cycle would be one arc used twice.
        if (l == 2 && w.blocks[0].length() + w.blocks[1].length() < 3) return false;
    }
    std::vector<bool> seen(d.vertex_count(), false);
    for (const BlockPath& b : w.blocks)
        for (size_t i = 0; i + 1 < b.vertices.size(); ++i) {
            if (seen[b.vertices[i]]) return false;
            seen[b.vertices[i]] = true;
        }
    for (const BlockPath& b : w.blocks)
        for (size_t i = 0; i + 1 < b.vertices.size(); ++i) {
            Vertex from = b.vertices[i], to = b.vertices[i + 1];
            if (b.forward ? !d.has_arc(from, to) : !d.has_arc(to, from)) return false;
        }
    return true;
}

SegmentPartition partition_segments(const Digraph& d, const HamiltonianWitness& w,
                                    const std::vector<int>& targets, PartitionMode mode,
                                    const ChromaticBudget& budget, bool merge_leftovers) {
    if (!verify_hamiltonian(d, w)) throw PreconditionError("invalid hamiltonian witness");
    if (targets.empty()) throw PreconditionError("need at least one chromatic target");
    UnderlyingGraph g = underlying(d);
    const std::vector<Vertex>& order = w.order;
    int n = static_cast<int>(order.size());
    SegmentPartition out;
    out.mode = mode;
    int at = 0;

    if (mode == PartitionMode::reach_target) {
        for (size_t t = 0; t < targets.size(); ++t) {
            int target = targets[t];
            if (target < 0) throw PreconditionError("chromatic targets must be >= 0");
            PrefixChroma pc(g, budget);
            while (pc.chi() < target) {
                if (at == n)
                    throw PreconditionError("vertices exhausted before segment " +
                                            std::to_string(t + 1) + " reached chi " +
                                            std::to_string(target));
                if (pc.add(order[at++]) > target)
                    throw InternalError("chromatic growth overshot its target");
            }
            Segment seg;
            seg.target = target;
            seg.vertices = pc.members();
            seg.achieved_chi = pc.chi();
            out.segments.push_back(std::move(seg));
        }
        if (merge_leftovers && at < n) {
            PrefixChroma pc(g, budget);
            for (Vertex v : out.segments.back().vertices) pc.add(v);
            while (at < n) pc.add(order[at++]);
            out.segments.back().vertices = pc.members();
            out.segments.back().achieved_chi = pc.chi();
        }
    } else {
        if (targets.size() != 1)
            throw PreconditionError("stop_below_target repeats a single target");
        if (merge_leftovers)
            throw PreconditionError("merge_leftovers applies to reach_target only");
        int target = targets[0];
        if (target < 2) throw PreconditionError("stop_below_target needs target >= 2");
        while (at < n) {
            PrefixChroma pc(g, budget);
            while (at < n) {
                PrefixChroma probe = pc;
                if (probe.add(order[at]) == target) break;  // omit; it opens the next segment
                pc = std::move(probe);
                ++at;
            }
            if (pc.size() == 0) throw InternalError("empty segment in stop_below_target growth");
            Segment seg;
            seg.target = target;
            seg.vertices = pc.members();
            seg.achieved_chi = pc.chi();
            out.segments.push_back(std::move(seg));
        }
    }
    out.consumed = at;
    return out;
}

ContractedGraph contract_segments(const Digraph& host, const SegmentPartition& parts) {
    int count = static_cast<int>(parts.segments.size());
    std::vector<int> seg_of(host.vertex_count(), -1);
    for (int s = 0; s < count; ++s)
        for (Vertex v : parts.segments[s].vertices) {
            if (seg_of[v] != -1) throw PreconditionError("segments overlap");
            seg_of[v] = s;
        }
    ContractedGraph out;
    out.graph = UnderlyingGraph(count);
    for (auto [u, v] : host.arcs()) {
        int a = seg_of[u], b = seg_of[v];
        if (a == -1 || b == -1 || a == b) continue;
        out.graph.add_edge(a, b);
        auto key = std::make_pair(a, b);
        auto it = out.provenance.find(key);
        if (it == out.provenance.end() || std::make_pair(u, v) < it->second)
            out.provenance.insert_or_assign(key, std::make_pair(u, v));
    }
    for (int s = 0; s < count; ++s)
        (s % 2 == 0 ? out.odd_segments : out.even_segments).push_back(s);
    return out;
}

SubdivisionWitness find_in_hamiltonian(const Digraph& d, const HamiltonianWitness& circuit,
                                       const CyclePattern& c, const ChromaticBudget& budget) {
    if (circuit.kind != WalkKind::circuit)
        throw PreconditionError("find_in_hamiltonian needs a circuit witness");
    if (!verify_hamiltonian(d, circuit)) throw PreconditionError("invalid hamiltonian circuit");
    int n = c.order();
    if (!chi_at_least(underlying(d), 2 * n, budget))
        throw PreconditionError("chromatic number below 2n = " + std::to_string(2 * n));

    if (c.is_directed_cycle()) {
        // The circuit is at least 2n long, so it subdivides the directed
        // cycle of order n all by itself.
        SubdivisionWitness w{c, {}};
        BlockPath block;
        block.vertices = circuit.order;
        block.vertices.push_back(circuit.order.front());
        block.forward = true;
        w.blocks.push_back(std::move(block));
        if (!verify_subdivision(d, c, w))
            throw InternalError("hamiltonian circuit failed as directed-cycle witness");
        return w;
    }

    bool rotated = c.sign() == Sign::minus;
    CyclePattern plus_form = rotated ? rotate_left_to_plus(c) : c;
    CanonicalizedPattern canon = canonicalize_pattern(plus_form);
    SubdivisionWitness w = build_circuit_witness(d, circuit, canon.pattern, budget);
    if (canon.reversed) w = reversed_witness(w, plus_form);
    if (rotated)
        w = rotated_right_witness(w, c);
    else
        w.pattern = c;
    if (!verify_subdivision(d, c, w)) throw InternalError("final circuit witness failed verification");
    return w;
}

PathSearchResult find_with_hamiltonian_path(const Digraph& d, const HamiltonianWitness& path,
                                            const CyclePattern& c, const ChromaticBudget& budget) {
    if (c.block_count() < 2)
        throw PreconditionError("one-block patterns are outside the path construction");
    if (path.kind != WalkKind::path)
        throw PreconditionError("find_with_hamiltonian_path needs a path witness");
    if (!verify_hamiltonian(d, path)) throw PreconditionError("invalid hamiltonian path");
    int n = c.order();
    if (!chi_at_least(underlying(d), 12 * n - 5, budget))
        throw PreconditionError("chromatic number below 12n-5 = " + std::to_string(12 * n - 5));

    SegmentPartition parts = partition_segments(d, path, {2 * n},
                                                PartitionMode::stop_below_target, budget);
    ContractedGraph cg = contract_segments(d, parts);

    std::optional<SecantPair> pair;
    const std::vector<int>* cls = nullptr;
    int parity = 0;
    for (auto [indices, tag] : {std::make_pair(&cg.odd_segments, 1),
                                std::make_pair(&cg.even_segments, 2)}) {
        UnderlyingGraph sub = induced_subgraph(cg.graph, *indices);
        pair = find_k_secant(sub, Enumeration::natural(sub.vertex_count()), 1);
        if (pair) {
            cls = indices;
            parity = tag;
            break;
        }
    }
    if (!pair) {
        UnderlyingGraph odd = induced_subgraph(cg.graph, cg.odd_segments);
        UnderlyingGraph even = induced_subgraph(cg.graph, cg.even_segments);
        Coloring odd_coloring =
            secant_free_coloring(odd, Enumeration::natural(odd.vertex_count()), 1);
        Coloring even_coloring =
            secant_free_coloring(even, Enumeration::natural(even.vertex_count()), 1);
        throw InconsistencyError(odd_coloring, even_coloring, 6 * (2 * n - 1));
    }

    // 0-based segment indices si < sr < sj < sl of the pair's endpoints.
    int si = (*cls)[pair->i - 1];
    int sr = (*cls)[pair->r - 1];
    int sj = (*cls)[pair->j - 1];
    int sl = (*cls)[pair->l - 1];

    LiftedEdge e1 = lift_edge(cg, si, sj);
    LiftedEdge e2 = lift_edge(cg, sr, sl);
    if ((!e1.fwd && !e1.bwd) || (!e2.fwd && !e2.bwd))
        throw InternalError("contracted edge has no recorded host arc");

    CaseSelection sel;
    sel.parity = parity;
    sel.m1 = si + 2;  // 1-based index of the segment strictly between si and sr
    sel.m2 = sj + 2;
    sel.x = parts.segments[si + 2].vertices.front();
    if (e1.bwd) {
        sel.u_i = e1.bwd->second;
        sel.u_j = e1.bwd->first;
    } else {
        sel.u_i = e1.fwd->first;
        sel.u_j = e1.fwd->second;
    }
    if (e2.bwd && !e2.fwd) {
        sel.u_r = e2.bwd->second;
        sel.u_s = e2.bwd->first;
    } else if (e2.fwd) {
        sel.u_r = e2.fwd->first;
        sel.u_s = e2.fwd->second;
    }

    std::vector<int> ppos(d.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(path.order.size()); ++i) ppos[path.order[i]] = i;

    if (e1.bwd || e2.bwd) {
        sel.tag = CaseSelection::Tag::backward_arc;
        // Close the interval under the backward arc into a Hamiltonian
        // sub-digraph and delegate to the circuit theorem. Preferring the
        // first pair keeps results deterministic.
        Vertex early, late;
        int m0;  // 0-based index of the threshold segment inside the interval
        if (e1.bwd) {
            early = e1.bwd->second;
            late = e1.bwd->first;
            m0 = si + 1;
        } else {
            early = e2.bwd->second;
            late = e2.bwd->first;
            m0 = sj + 1;
        }
        int pa = ppos[early], pb = ppos[late];
        if (pa >= pb) throw InternalError("backward arc endpoints out of path order");
        std::vector<Vertex> interval(path.order.begin() + pa, path.order.begin() + pb + 1);

        // The threshold segment plus its boundary vertex pins chi(D) >= 2n.
        Vertex boundary = parts.segments[m0 + 1].vertices.front();
        for (Vertex v : parts.segments[m0].vertices)
            if (ppos[v] < pa || ppos[v] > pb)
                throw InternalError("threshold segment escapes the closed interval");
        if (ppos[boundary] < pa || ppos[boundary] > pb)
            throw InternalError("threshold boundary escapes the closed interval");

        InducedSubdigraph sub = induced(d, interval);
        HamiltonianWitness circ{WalkKind::circuit, {}};
        circ.order.resize(sub.graph.vertex_count());
        for (int i = 0; i < sub.graph.vertex_count(); ++i) circ.order[i] = i;
        SubdivisionWitness local = find_in_hamiltonian(sub.graph, circ, c, budget);
        SubdivisionWitness w = lift_witness(local, sub.to_host);
        if (!verify_subdivision(d, c, w))
            throw InternalError("lifted circuit witness failed verification");
        return {std::move(w), sel};
    }

    sel.tag = CaseSelection::Tag::both_forward;
    bool rotated = c.sign() == Sign::minus;
    CyclePattern plus_form = rotated ? rotate_left_to_plus(c) : c;
    CanonicalizedPattern canon = canonicalize_pattern(plus_form);
    const std::vector<Vertex>& threshold_segment = parts.segments[si + 1].vertices;
    SubdivisionWitness w = build_path_witness(d, path, canon.pattern, budget, threshold_segment,
                                              sel.u_i, sel.u_r, sel.u_j, sel.u_s);
    if (canon.reversed) w = reversed_witness(w, plus_form);
    if (rotated)
        w = rotated_right_witness(w, c);
    else
        w.pattern = c;
    if (!verify_subdivision(d, c, w)) throw InternalError("final path witness failed verification");
    return {std::move(w), sel};
}

}  // namespace subdiv
