#include "subdiv/secant.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <tuple>

namespace subdiv {

namespace {

void check_inputs(const UnderlyingGraph& g, const Enumeration& n, int k) {
    if (k < 1) throw PreconditionError("k must be positive");
    if (n.size() != g.vertex_count())
        throw PreconditionError("enumeration has " + std::to_string(n.size()) +
                                " vertices, graph has " + std::to_string(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!n.contains(v))
            throw PreconditionError("enumeration misses vertex " + std::to_string(v));
}

// Live view of g restricted to the not-yet-eliminated vertices.
struct Residual {
    const UnderlyingGraph* g;
    std::vector<bool> alive;
    std::vector<int> degree;

    explicit Residual(const UnderlyingGraph& graph)
        : g(&graph), alive(graph.vertex_count(), true), degree(graph.vertex_count()) {
        for (Vertex v = 0; v < graph.vertex_count(); ++v) degree[v] = graph.degree(v);
    }

    void remove(Vertex v) {
        alive[v] = false;
        for (Vertex u : g->neighbors(v))
            if (alive[u]) --degree[u];
    }
};

// The constructive half of Claim 1: when every live vertex has residual
// degree >= 2k+1, picking for each vertex a neighbor at index distance
// >= k+1 and splitting into right/left pointers forces a k-secant pair.
// Positions in the returned pair are w.r.t. the original enumeration.
SecantPair claim1_pair(const UnderlyingGraph& g, const Enumeration& n, int k,
                       const Residual& res) {
    std::vector<Vertex> live;  // in enumeration order
    for (int idx = 0; idx < n.size(); ++idx)
        if (res.alive[n.at(idx)]) live.push_back(n.at(idx));
    int s = static_cast<int>(live.size());
    std::vector<int> live_pos(g.vertex_count(), -1);
    for (int p = 0; p < s; ++p) live_pos[live[p]] = p;

    // tilde[v]: live neighbor farthest away in live positions.
    std::vector<Vertex> tilde(g.vertex_count(), -1);
    for (int p = 0; p < s; ++p) {
        Vertex v = live[p];
        int best_dist = -1;
        Vertex best = -1;
        for (Vertex u : g.neighbors(v)) {
            if (!res.alive[u]) continue;
            int dist = std::abs(live_pos[u] - p);
            if (best == -1 || dist > best_dist ||
                (dist == best_dist && live_pos[u] < live_pos[best])) {
                best_dist = dist;
                best = u;
            }
        }
        if (best_dist < k + 1)
            throw InternalError("claim 1 construction needs all degrees >= 2k+1");
        tilde[v] = best;
    }

    int j_star = -1;  // max live position whose tilde points right
    for (int p = 0; p < s; ++p)
        if (live_pos[tilde[live[p]]] > p) j_star = p;
    if (j_star < 0 || j_star + k >= s)
        throw InternalError("right/left split degenerated in claim 1 construction");

    Vertex a = live[j_star];
    Vertex w = live[j_star + k];
    Vertex ta = tilde[a];  // live position >= j_star + k + 1
    Vertex tw = tilde[w];  // live position <= j_star - 1
    if (live_pos[ta] < j_star + k + 1 || live_pos[tw] > j_star - 1)
        throw InternalError("claim 1 pointers out of place");

    SecantPair pair;
    pair.k = k;
    pair.first_edge = {tw, w};
    pair.second_edge = {a, ta};
    pair.i = n.index_of(tw) + 1;
    pair.r = n.index_of(a) + 1;
    pair.j = n.index_of(w) + 1;
    pair.l = n.index_of(ta) + 1;
    if (!(pair.i < pair.r && pair.r < pair.j && pair.j < pair.l && pair.j - pair.r >= k))
        throw InternalError("claim 1 produced an invalid secant pair");
    return pair;
}

Vertex min_degree_live(const Residual& res) {
    Vertex best = -1;
    for (Vertex v = 0; v < static_cast<int>(res.alive.size()); ++v)
        if (res.alive[v] && (best == -1 || res.degree[v] < res.degree[best])) best = v;
    return best;
}

}  // namespace

SecantFoundError::SecantFoundError(SecantPair found)
    : PreconditionError("k-secant pair at positions (" + std::to_string(found.i) + "," +
                        std::to_string(found.r) + "," + std::to_string(found.j) + "," +
                        std::to_string(found.l) + ")"),
      pair(found) {}

std::optional<SecantPair> find_k_secant(const UnderlyingGraph& g, const Enumeration& n, int k) {
    check_inputs(g, n, k);
    struct PosEdge {
        int lo, hi;  // 1-based positions, lo < hi
    };
    std::vector<PosEdge> edges;
    edges.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) {
        int pu = n.index_of(u) + 1, pv = n.index_of(v) + 1;
        edges.push_back({std::min(pu, pv), std::max(pu, pv)});
    }
    std::optional<std::tuple<int, int, int, int>> best;
    for (const PosEdge& e : edges)
        for (const PosEdge& f : edges) {
            if (e.lo < f.lo && f.lo < e.hi && e.hi < f.hi && e.hi - f.lo >= k) {
                auto tuple = std::make_tuple(e.lo, f.lo, e.hi, f.hi);
                if (!best || tuple < *best) best = tuple;
            }
        }
    if (!best) return std::nullopt;
    auto [i, r, j, l] = *best;
    SecantPair pair;
    pair.i = i;
    pair.r = r;
    pair.j = j;
    pair.l = l;
    pair.k = k;
    pair.first_edge = {n.at(i - 1), n.at(j - 1)};
    pair.second_edge = {n.at(r - 1), n.at(l - 1)};
    return pair;
}

Vertex low_degree_vertex(const UnderlyingGraph& g, const Enumeration& n, int k) {
    check_inputs(g, n, k);
    if (g.vertex_count() == 0) throw PreconditionError("empty graph has no vertices");
    Residual res(g);
    Vertex v = min_degree_live(res);
    if (res.degree[v] <= 2 * k) return v;
    throw SecantFoundError(claim1_pair(g, n, k, res));
}

Coloring secant_free_coloring(const UnderlyingGraph& g, const Enumeration& n, int k) {
    check_inputs(g, n, k);
    Residual res(g);

    // Elimination phase: the Lemma's induction, run as a stack instead of
    // recursion. Deleting a vertex can only erase secant pairs, so if the
    // input was k-secant-free every round finds a degree <= 2k vertex.
    struct Eliminated {
        Vertex v;
        std::vector<Vertex> live_neighbors;
    };
    std::vector<Eliminated> stack;
    stack.reserve(g.vertex_count());
    for (int round = 0; round < g.vertex_count(); ++round) {
        Vertex v = min_degree_live(res);
        if (res.degree[v] > 2 * k) throw SecantFoundError(claim1_pair(g, n, k, res));
        Eliminated e;
        e.v = v;
        for (Vertex u : g.neighbors(v))
            if (res.alive[u]) e.live_neighbors.push_back(u);
        res.remove(v);
        stack.push_back(std::move(e));
    }

    // Re-insertion phase: each vertex rejoins with at most 2k colored
    // neighbors, so a color in 1..2k+1 is always free.
    Coloring c;
    c.colors.assign(g.vertex_count(), 0);
    while (!stack.empty()) {
        Eliminated e = std::move(stack.back());
        stack.pop_back();
        std::vector<bool> used(2 * k + 2, false);
        for (Vertex u : e.live_neighbors) used[c.colors[u]] = true;
        int color = 1;
        while (color <= 2 * k + 1 && used[color]) ++color;
        if (color > 2 * k + 1) throw InternalError("no free color among 2k+1 at re-insertion");
        c.colors[e.v] = color;
        c.palette = std::max(c.palette, color);
    }
    return c;
}

}  // namespace subdiv
