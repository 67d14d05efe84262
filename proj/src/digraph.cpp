#include "subdiv/digraph.hpp"

#include <algorithm>
#include <string>

namespace subdiv {

namespace {

bool sorted_contains(const std::vector<Vertex>& v, Vertex x) {
    return std::binary_search(v.begin(), v.end(), x);
}

void sorted_insert(std::vector<Vertex>& v, Vertex x) {
    v.insert(std::upper_bound(v.begin(), v.end(), x), x);
}

}  // namespace

Digraph::Digraph(int vertex_count) : n_(vertex_count), out_(vertex_count), in_(vertex_count) {
    if (vertex_count < 0) throw PreconditionError("negative vertex count");
}

void Digraph::check_vertex(Vertex u) const {
    if (u < 0 || u >= n_)
        throw PreconditionError("vertex " + std::to_string(u) + " out of range [0," +
                                std::to_string(n_) + ")");
}

void Digraph::add_arc(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    if (has_arc(u, v))
        throw PreconditionError("duplicate arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
    sorted_insert(out_[u], v);
    sorted_insert(in_[v], u);
    ++m_;
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    return sorted_contains(out_[u], v);
}

const std::vector<Vertex>& Digraph::out_neighbors(Vertex u) const {
    check_vertex(u);
    return out_[u];
}

const std::vector<Vertex>& Digraph::in_neighbors(Vertex v) const {
    check_vertex(v);
    return in_[v];
}

std::vector<std::pair<Vertex, Vertex>> Digraph::arcs() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : out_[u]) out.emplace_back(u, v);
    return out;
}

int Digraph::digon_count() const {
    int count = 0;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : out_[u])
            if (u < v && has_arc(v, u)) ++count;
    return count;
}

bool Digraph::operator==(const Digraph& other) const {
    return n_ == other.n_ && out_ == other.out_;
}

UnderlyingGraph::UnderlyingGraph(int vertex_count) : n_(vertex_count), adj_(vertex_count) {
    if (vertex_count < 0) throw PreconditionError("negative vertex count");
}

void UnderlyingGraph::check_vertex(Vertex u) const {
    if (u < 0 || u >= n_)
        throw PreconditionError("vertex " + std::to_string(u) + " out of range [0," +
                                std::to_string(n_) + ")");
}

void UnderlyingGraph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v)) return;
    sorted_insert(adj_[u], v);
    sorted_insert(adj_[v], u);
    ++m_;
}

bool UnderlyingGraph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    return sorted_contains(adj_[u], v);
}

int UnderlyingGraph::degree(Vertex u) const {
    check_vertex(u);
    return static_cast<int>(adj_[u].size());
}

const std::vector<Vertex>& UnderlyingGraph::neighbors(Vertex u) const {
    check_vertex(u);
    return adj_[u];
}

std::vector<std::pair<Vertex, Vertex>> UnderlyingGraph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool UnderlyingGraph::is_complete() const {
    return 2 * m_ == n_ * (n_ - 1);
}

bool UnderlyingGraph::operator==(const UnderlyingGraph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
}

Enumeration::Enumeration(std::vector<Vertex> order) : order_(std::move(order)) {
    Vertex max_id = -1;
    for (Vertex v : order_) {
        if (v < 0) throw PreconditionError("negative vertex in enumeration");
        max_id = std::max(max_id, v);
    }
    index_.assign(max_id + 1, -1);
    for (int i = 0; i < static_cast<int>(order_.size()); ++i) {
        Vertex v = order_[i];
        if (index_[v] != -1)
            throw PreconditionError("vertex " + std::to_string(v) + " repeated in enumeration");
        index_[v] = i;
    }
}

Enumeration Enumeration::natural(int n) {
    std::vector<Vertex> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    return Enumeration(std::move(order));
}

Vertex Enumeration::at(int index) const {
    if (index < 0 || index >= size())
        throw PreconditionError("enumeration index " + std::to_string(index) + " out of range");
    return order_[index];
}

bool Enumeration::contains(Vertex v) const {
    return v >= 0 && v < static_cast<int>(index_.size()) && index_[v] != -1;
}

int Enumeration::index_of(Vertex v) const {
    if (!contains(v))
        throw PreconditionError("vertex " + std::to_string(v) + " not in enumeration");
    return index_[v];
}

UnderlyingGraph underlying(const Digraph& d) {
    UnderlyingGraph g(d.vertex_count());
    for (auto [u, v] : d.arcs()) g.add_edge(u, v);
    return g;
}

InducedSubdigraph induced(const Digraph& d, const std::vector<Vertex>& vertices) {
    InducedSubdigraph sub;
    sub.from_host.assign(d.vertex_count(), -1);
    sub.to_host = vertices;
    for (int local = 0; local < static_cast<int>(vertices.size()); ++local) {
        Vertex host = vertices[local];
        if (host < 0 || host >= d.vertex_count())
            throw PreconditionError("vertex " + std::to_string(host) + " not in host digraph");
        if (sub.from_host[host] != -1)
            throw PreconditionError("vertex " + std::to_string(host) + " repeated in induced set");
        sub.from_host[host] = local;
    }
    sub.graph = Digraph(static_cast<int>(vertices.size()));
    for (int local = 0; local < static_cast<int>(vertices.size()); ++local)
        for (Vertex w : d.out_neighbors(vertices[local]))
            if (sub.from_host[w] != -1) sub.graph.add_arc(local, sub.from_host[w]);
    return sub;
}

UnderlyingGraph induced_subgraph(const UnderlyingGraph& g, const std::vector<Vertex>& vertices) {
    std::vector<int> local_of(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
        Vertex host = vertices[i];
        if (host < 0 || host >= g.vertex_count())
            throw PreconditionError("vertex " + std::to_string(host) + " not in host graph");
        if (local_of[host] != -1)
            throw PreconditionError("vertex " + std::to_string(host) + " repeated in induced set");
        local_of[host] = i;
    }
    UnderlyingGraph sub(static_cast<int>(vertices.size()));
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
        for (Vertex w : g.neighbors(vertices[i]))
            if (local_of[w] > i) sub.add_edge(i, local_of[w]);
    return sub;
}

bool verify_hamiltonian(const Digraph& d, const HamiltonianWitness& w) {
    int n = d.vertex_count();
    if (static_cast<int>(w.order.size()) != n) return false;
    std::vector<bool> seen(n, false);
    for (Vertex v : w.order) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = true;
    }
    for (int i = 0; i + 1 < n; ++i)
        if (!d.has_arc(w.order[i], w.order[i + 1])) return false;
    if (w.kind == WalkKind::circuit && n > 0 && !d.has_arc(w.order[n - 1], w.order[0]))
        return false;
    return true;
}

std::vector<Vertex> subpath(const HamiltonianWitness& w, Vertex x, Vertex y) {
    int n = static_cast<int>(w.order.size());
    int px = -1, py = -1;
    for (int i = 0; i < n; ++i) {
        if (w.order[i] == x) px = i;
        if (w.order[i] == y) py = i;
    }
    if (px == -1) throw PreconditionError("vertex " + std::to_string(x) + " not on witness");
    if (py == -1) throw PreconditionError("vertex " + std::to_string(y) + " not on witness");
    std::vector<Vertex> out;
    if (w.kind == WalkKind::path) {
        if (px > py)
            throw PreconditionError("vertex " + std::to_string(x) + " occurs after " +
                                    std::to_string(y) + " on path witness");
        for (int i = px; i <= py; ++i) out.push_back(w.order[i]);
    } else {
        int i = px;
        out.push_back(w.order[i]);
        while (i != py) {
            i = (i + 1) % n;
            out.push_back(w.order[i]);
        }
    }
    return out;
}

}  // namespace subdiv
