#include "subdiv/oracle.hpp"

#include <algorithm>
#include <string>

#include "subdiv/finder.hpp"
#include "subdiv/generators.hpp"

namespace subdiv {
namespace oracle {

namespace {

void check_size(int n, const SearchLimit& lim, const char* what) {
    if (n > lim.max_vertices)
        throw PreconditionError(std::string(what) + ": instance has " + std::to_string(n) +
                                " vertices, limit is " + std::to_string(lim.max_vertices));
}

struct StepCounter {
    long long left;
    void tick() {
        if (--left < 0) throw BudgetError(0, 0, "oracle step limit exhausted");
    }
};

// Backtracking over branch-vertex placements, then over vertex-disjoint
// directed paths realizing each block in order.
struct SubdivSearch {
    const Digraph& d;
    const CyclePattern& pat;
    StepCounter steps;
    int n;
    int l;
    std::vector<Vertex> branch;
    std::vector<bool> used;
    std::vector<BlockPath> blocks;

    SubdivSearch(const Digraph& digraph, const CyclePattern& pattern, long long max_steps)
        : d(digraph), pat(pattern), steps{max_steps}, n(digraph.vertex_count()),
          l(pattern.block_count()), branch(l, -1), used(n, false), blocks(l) {}

    bool block_forward(int b) const {
        bool even = b % 2 == 0;
        return pat.sign() == Sign::plus ? even : !even;
    }

    bool place_branches(int b) {
        if (b == l) return realize_block(0);
        for (Vertex v = 0; v < n; ++v) {
            if (used[v]) continue;
            steps.tick();
            used[v] = true;
            branch[b] = v;
            if (place_branches(b + 1)) return true;
            used[v] = false;
        }
        return false;
    }

    bool realize_block(int b) {
        if (b == l) {
            // Two length-1 blocks of a 2-block cycle would reuse one arc.
            if (l == 2 && blocks[0].length() == 1 && blocks[1].length() == 1) return false;
            return true;
        }
        bool fwd = block_forward(b);
        Vertex src = fwd ? branch[b] : branch[(b + 1) % l];
        Vertex dst = fwd ? branch[(b + 1) % l] : branch[b];
        std::vector<Vertex> path{src};
        return extend(b, src, dst, path, fwd);
    }

    bool extend(int b, Vertex cur, Vertex dst, std::vector<Vertex>& path, bool fwd) {
        if (d.has_arc(cur, dst) && static_cast<int>(path.size()) >= pat.blocks()[b]) {
            steps.tick();
            path.push_back(dst);
            blocks[b].forward = fwd;
            blocks[b].vertices = path;
            if (!fwd) std::reverse(blocks[b].vertices.begin(), blocks[b].vertices.end());
            if (realize_block(b + 1)) return true;
            path.pop_back();
        }
        for (Vertex nxt : d.out_neighbors(cur)) {
            if (nxt == dst || used[nxt]) continue;
            steps.tick();
            used[nxt] = true;
            path.push_back(nxt);
            if (extend(b, nxt, dst, path, fwd)) return true;
            path.pop_back();
            used[nxt] = false;
        }
        return false;
    }
};

// Directed cycle of length >= min_len through `start`, avoiding nothing else.
struct CycleSearch {
    const Digraph& d;
    int min_len;
    StepCounter steps;
    std::vector<bool> used;
    std::vector<Vertex> path;

    bool extend(Vertex cur, Vertex start) {
        if (d.has_arc(cur, start) && static_cast<int>(path.size()) >= min_len) return true;
        for (Vertex nxt : d.out_neighbors(cur)) {
            if (used[nxt]) continue;
            steps.tick();
            used[nxt] = true;
            path.push_back(nxt);
            if (extend(nxt, start)) return true;
            path.pop_back();
            used[nxt] = false;
        }
        return false;
    }
};

bool brute_colorable(const UnderlyingGraph& g, int k, Vertex v, std::vector<int>& color,
                     int max_used, StepCounter& steps) {
    if (v == g.vertex_count()) return true;
    int cap = std::min(k, max_used + 1);
    for (int cand = 1; cand <= cap; ++cand) {
        steps.tick();
        bool conflict = false;
        for (Vertex u : g.neighbors(v))
            if (color[u] == cand) {
                conflict = true;
                break;
            }
        if (conflict) continue;
        color[v] = cand;
        if (brute_colorable(g, k, v + 1, color, std::max(max_used, cand), steps)) return true;
        color[v] = 0;
    }
    return false;
}

bool is_tournament(const Digraph& d) {
    for (Vertex i = 0; i < d.vertex_count(); ++i)
        for (Vertex j = i + 1; j < d.vertex_count(); ++j)
            if (!d.has_arc(i, j) && !d.has_arc(j, i)) return false;
    return true;
}

struct HamSearch {
    const Digraph& d;
    WalkKind kind;
    StepCounter steps;
    std::vector<bool> used;
    std::vector<Vertex> order;

    bool go(Vertex cur) {
        if (static_cast<int>(order.size()) == d.vertex_count())
            return kind == WalkKind::path || d.has_arc(cur, order[0]);
        for (Vertex nxt : d.out_neighbors(cur)) {
            if (used[nxt]) continue;
            steps.tick();
            used[nxt] = true;
            order.push_back(nxt);
            if (go(nxt)) return true;
            order.pop_back();
            used[nxt] = false;
        }
        return false;
    }
};

}  // namespace

std::optional<SubdivisionWitness> contains_subdivision(const Digraph& d, const CyclePattern& c,
                                                       const SearchLimit& lim) {
    check_size(d.vertex_count(), lim, "contains_subdivision");
    std::optional<SubdivisionWitness> found;
    if (c.is_directed_cycle()) {
        int min_len = std::max(c.blocks()[0], 2);
        for (Vertex start = 0; start < d.vertex_count() && !found; ++start) {
            CycleSearch cs{d, min_len, {lim.max_steps}, std::vector<bool>(d.vertex_count(), false),
                           {start}};
            cs.used[start] = true;
            if (cs.extend(start, start)) {
                SubdivisionWitness w{c, {}};
                BlockPath block;
                block.vertices = cs.path;
                block.vertices.push_back(start);
                block.forward = true;
                w.blocks.push_back(std::move(block));
                found = std::move(w);
            }
        }
    } else {
        SubdivSearch search(d, c, lim.max_steps);
        if (search.place_branches(0)) found = SubdivisionWitness{c, search.blocks};
    }
    if (found && !verify_subdivision(d, c, *found))
        throw InternalError("oracle produced a witness that fails verification");
    return found;
}

int chromatic_bruteforce(const UnderlyingGraph& g, const SearchLimit& lim) {
    check_size(g.vertex_count(), lim, "chromatic_bruteforce");
    if (g.vertex_count() == 0) return 0;
    StepCounter steps{lim.max_steps};
    for (int k = 1; k <= g.vertex_count(); ++k) {
        std::vector<int> color(g.vertex_count(), 0);
        if (brute_colorable(g, k, 0, color, 0, steps)) return k;
    }
    throw InternalError("graph not colorable with n colors");
}

std::optional<HamiltonianWitness> find_hamiltonian(const Digraph& d, WalkKind kind,
                                                   const SearchLimit& lim) {
    int n = d.vertex_count();
    if (n == 0) return HamiltonianWitness{kind, {}};
    if (kind == WalkKind::path && is_tournament(d)) return tournament_insertion_path(d);
    check_size(n, lim, "find_hamiltonian");

    std::optional<HamiltonianWitness> found;
    if (kind == WalkKind::circuit) {
        // Every Hamiltonian circuit passes through vertex 0.
        HamSearch hs{d, kind, {lim.max_steps}, std::vector<bool>(n, false), {0}};
        hs.used[0] = true;
        if (hs.go(0)) found = HamiltonianWitness{kind, hs.order};
    } else {
        StepCounter shared{lim.max_steps};
        for (Vertex start = 0; start < n && !found; ++start) {
            HamSearch hs{d, kind, shared, std::vector<bool>(n, false), {start}};
            hs.used[start] = true;
            if (hs.go(start)) found = HamiltonianWitness{kind, hs.order};
            shared = hs.steps;
        }
    }
    if (found && !verify_hamiltonian(d, *found))
        throw InternalError("oracle produced an invalid hamiltonian witness");
    return found;
}

}  // namespace oracle
}  // namespace subdiv
