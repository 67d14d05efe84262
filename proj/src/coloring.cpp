#include "subdiv/coloring.hpp"

#include <algorithm>
#include <string>

namespace subdiv {

namespace {

void check_coverage(const UnderlyingGraph& g, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != g.vertex_count())
        throw PreconditionError("coloring covers " + std::to_string(c.colors.size()) +
                                " vertices, graph has " + std::to_string(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (c.colors[v] < 1 || c.colors[v] > c.palette)
            throw PreconditionError("vertex " + std::to_string(v) +
                                    " has no color in 1.." + std::to_string(c.palette));
}

// Vertices by descending degree, ids breaking ties. Deterministic.
std::vector<Vertex> degree_order(const UnderlyingGraph& g) {
    std::vector<Vertex> order(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    return order;
}

std::vector<Vertex> greedy_clique(const UnderlyingGraph& g) {
    std::vector<Vertex> clique;
    for (Vertex v : degree_order(g)) {
        bool fits = true;
        for (Vertex u : clique)
            if (!g.has_edge(u, v)) {
                fits = false;
                break;
            }
        if (fits) clique.push_back(v);
    }
    return clique;
}

Coloring greedy_coloring(const UnderlyingGraph& g) {
    Coloring c;
    c.colors.assign(g.vertex_count(), 0);
    for (Vertex v : degree_order(g)) {
        std::vector<bool> used(g.degree(v) + 2, false);
        for (Vertex u : g.neighbors(v)) {
            int cu = c.colors[u];
            if (cu >= 1 && cu < static_cast<int>(used.size())) used[cu] = true;
        }
        int color = 1;
        while (used[color]) ++color;
        c.colors[v] = color;
        c.palette = std::max(c.palette, color);
    }
    return c;
}

// Search order for the exact solver: a greedy clique first, then the rest by
// descending degree. Together with the "at most one fresh color" rule this
// pins clique vertices to distinct colors up front.
std::vector<Vertex> solver_order(const UnderlyingGraph& g) {
    std::vector<Vertex> clique = greedy_clique(g);
    std::vector<bool> in_clique(g.vertex_count(), false);
    for (Vertex v : clique) in_clique[v] = true;
    std::vector<Vertex> order = clique;
    for (Vertex v : degree_order(g))
        if (!in_clique[v]) order.push_back(v);
    return order;
}

}  // namespace

bool is_proper(const UnderlyingGraph& g, const Coloring& c) {
    check_coverage(g, c);
    for (auto [u, v] : g.edges())
        if (c.colors[u] == c.colors[v]) return false;
    return true;
}

namespace {

// Backtracking over a fixed order; candidate colors are capped at one past
// the maximum color used so far, which removes color-class symmetry.
bool extend_coloring(const UnderlyingGraph& g, const std::vector<Vertex>& order,
                     std::vector<int>& color, int k, int pos, int max_used, long long& nodes) {
    if (pos == static_cast<int>(order.size())) return true;
    Vertex v = order[pos];
    int cap = std::min(k, max_used + 1);
    for (int cand = 1; cand <= cap; ++cand) {
        if (--nodes < 0) throw BudgetError(0, 0, "chromatic search budget exhausted");
        bool conflict = false;
        for (Vertex u : g.neighbors(v))
            if (color[u] == cand) {
                conflict = true;
                break;
            }
        if (conflict) continue;
        color[v] = cand;
        if (extend_coloring(g, order, color, k, pos + 1, std::max(max_used, cand), nodes))
            return true;
        color[v] = 0;
    }
    return false;
}

}  // namespace

std::optional<Coloring> try_color_with(const UnderlyingGraph& g, int k, long long& nodes) {
    int n = g.vertex_count();
    if (n == 0) return Coloring{{}, k};
    if (k < 1) return std::nullopt;
    std::vector<Vertex> order = solver_order(g);
    std::vector<int> color(n, 0);
    if (!extend_coloring(g, order, color, k, 0, 0, nodes)) return std::nullopt;
    Coloring c;
    c.colors = std::move(color);
    c.palette = k;
    return c;
}

ChromaticResult chromatic_number(const UnderlyingGraph& g, const ChromaticBudget& budget) {
    int n = g.vertex_count();
    if (n == 0) return {0, Coloring{}};
    if (budget.shortcut_complete && g.is_complete()) {
        Coloring c;
        c.colors.resize(n);
        for (Vertex v = 0; v < n; ++v) c.colors[v] = v + 1;
        c.palette = n;
        return {n, c};
    }
    int lower = static_cast<int>(greedy_clique(g).size());
    Coloring best = greedy_coloring(g);
    int upper = best.palette;
    if (lower == upper) return {upper, best};

    long long nodes = budget.max_nodes;
    for (int k = lower; k < upper; ++k) {
        std::optional<Coloring> found;
        try {
            found = try_color_with(g, k, nodes);
        } catch (const BudgetError&) {
            throw BudgetError(k, upper,
                              "chromatic budget exhausted; chi in [" + std::to_string(k) + "," +
                                  std::to_string(upper) + "]");
        }
        if (found) return {k, *found};
    }
    return {upper, best};
}

bool chi_at_least(const UnderlyingGraph& g, int threshold, const ChromaticBudget& budget) {
    if (threshold <= 0) return true;
    if (threshold == 1) return g.vertex_count() >= 1;
    if (budget.shortcut_complete && g.is_complete()) return g.vertex_count() >= threshold;
    if (static_cast<int>(greedy_clique(g).size()) >= threshold) return true;
    long long nodes = budget.max_nodes;
    try {
        return !try_color_with(g, threshold - 1, nodes).has_value();
    } catch (const BudgetError&) {
        throw BudgetError(0, threshold,
                          "chromatic budget exhausted deciding chi >= " + std::to_string(threshold));
    }
}

Coloring product_coloring(const UnderlyingGraph& g, const UnderlyingGraph& e1,
                          const UnderlyingGraph& e2, const Coloring& c1, const Coloring& c2) {
    if (e1.vertex_count() != g.vertex_count() || e2.vertex_count() != g.vertex_count())
        throw PreconditionError("edge sets must span the vertices of g");
    for (auto [u, v] : g.edges())
        if (!e1.has_edge(u, v) && !e2.has_edge(u, v))
            throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") covered by neither edge set");
    if (!is_proper(e1, c1)) throw PreconditionError("c1 is not proper on its edge set");
    if (!is_proper(e2, c2)) throw PreconditionError("c2 is not proper on its edge set");

    Coloring out;
    out.palette = c1.palette * c2.palette;
    out.colors.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        out.colors[v] = (c1.colors[v] - 1) * c2.palette + c2.colors[v];
    if (!is_proper(g, out)) throw InternalError("product coloring failed its own guarantee");
    return out;
}

PrefixChroma::PrefixChroma(const UnderlyingGraph& host, const ChromaticBudget& budget)
    : host_(&host), budget_(budget) {}

int PrefixChroma::add(Vertex v) {
    if (v < 0 || v >= host_->vertex_count())
        throw PreconditionError("vertex " + std::to_string(v) + " not in host graph");
    int adjacent = 0;
    std::vector<bool> used(chi_ + 1, false);
    for (size_t i = 0; i < members_.size(); ++i)
        if (host_->has_edge(v, members_[i])) {
            ++adjacent;
            used[colors_[i]] = true;
        }
    complete_ = complete_ && adjacent == static_cast<int>(members_.size());
    members_.push_back(v);
    if (complete_) {
        colors_.push_back(static_cast<int>(members_.size()));
        chi_ = static_cast<int>(members_.size());
        return chi_;
    }
    for (int c = 1; c <= chi_; ++c)
        if (!used[c]) {
            colors_.push_back(c);
            return chi_;
        }
    // The hint failed; decide exactly between chi and chi + 1.
    UnderlyingGraph sub = induced_subgraph(*host_, members_);
    long long nodes = budget_.max_nodes;
    std::optional<Coloring> same;
    try {
        same = try_color_with(sub, chi_, nodes);
    } catch (const BudgetError&) {
        throw BudgetError(chi_, chi_ + 1, "chromatic budget exhausted growing prefix");
    }
    if (same) {
        colors_ = same->colors;
        return chi_;
    }
    colors_.push_back(++chi_);
    return chi_;
}

std::vector<int> incremental_chromatic(const UnderlyingGraph& g, const std::vector<Vertex>& prefix,
                                       const ChromaticBudget& budget) {
    std::vector<bool> seen(g.vertex_count(), false);
    for (Vertex v : prefix) {
        if (v < 0 || v >= g.vertex_count())
            throw PreconditionError("prefix vertex " + std::to_string(v) + " not in graph");
        if (seen[v]) throw PreconditionError("prefix repeats vertex " + std::to_string(v));
        seen[v] = true;
    }
    PrefixChroma pc(g, budget);
    std::vector<int> out;
    out.reserve(prefix.size());
    for (Vertex v : prefix) {
        int chi = pc.add(v);
        if (!out.empty() && chi != out.back() && chi != out.back() + 1)
            throw InternalError("chromatic step changed by more than one");
        out.push_back(chi);
    }
    return out;
}

}  // namespace subdiv
