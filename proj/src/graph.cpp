#include "knotcalc/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace knotcalc {

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// adjacency[vertex index] = list of (edge index, neighbor vertex index)
std::vector<std::vector<std::pair<int, int>>> adjacency(const SignedMultigraph& g) {
    std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count());
    const auto& edges = g.edges();
    for (int e = 0; e < g.edge_count(); ++e) {
        int ui = g.vertex_index(edges[e].u);
        int vi = g.vertex_index(edges[e].v);
        adj[ui].push_back({e, vi});
        adj[vi].push_back({e, ui});
    }
    return adj;
}

}  // namespace

SignedMultigraph::SignedMultigraph(std::vector<int> vertices, std::vector<SignedEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) vertex_index_[vertices_[i]] = i;
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        const auto& edge = edges_[e];
        if (edge.u == edge.v)
            throw KnotError(ErrorKind::loop_detected,
                            "edge " + std::to_string(edge.id) + " joins vertex " +
                                std::to_string(edge.u) + " to itself");
        if (!vertex_index_.count(edge.u) || !vertex_index_.count(edge.v))
            throw KnotError(ErrorKind::index_out_of_range,
                            "edge " + std::to_string(edge.id) + " references an unknown vertex");
        if (!edge_index_.emplace(edge.id, e).second)
            throw KnotError(ErrorKind::index_out_of_range,
                            "duplicate edge id " + std::to_string(edge.id));
    }
}

const SignedEdge& SignedMultigraph::edge(int id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end())
        throw KnotError(ErrorKind::index_out_of_range, "no edge with id " + std::to_string(id));
    return edges_[it->second];
}

int SignedMultigraph::vertex_index(int vertex_id) const {
    auto it = vertex_index_.find(vertex_id);
    if (it == vertex_index_.end())
        throw KnotError(ErrorKind::index_out_of_range,
                        "no vertex with id " + std::to_string(vertex_id));
    return it->second;
}

std::vector<std::vector<int>> components(const SignedMultigraph& g) {
    UnionFind uf(g.vertex_count());
    for (const auto& edge : g.edges()) uf.unite(g.vertex_index(edge.u), g.vertex_index(edge.v));
    std::vector<std::vector<int>> by_root(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) by_root[uf.find(i)].push_back(g.vertices()[i]);
    std::vector<std::vector<int>> parts;
    for (auto& part : by_root)
        if (!part.empty()) parts.push_back(std::move(part));
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return parts;
}

SignedMultigraph sign_restrict(const SignedMultigraph& g, Sign sign) {
    std::vector<SignedEdge> kept;
    for (const auto& edge : g.edges())
        if (edge.sign == sign) kept.push_back(edge);
    return SignedMultigraph(g.vertices(), std::move(kept));
}

BlockDecomposition blocks(const SignedMultigraph& g) {
    const auto adj = adjacency(g);
    const int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<char> cut(n, 0);
    std::vector<int> edge_stack;
    BlockDecomposition result;
    int timer = 0;

    struct Frame {
        int vertex;
        int parent_edge;  // edge index used to enter, -1 at roots
        size_t next = 0;
    };

    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        int root_children = 0;
        std::vector<Frame> stack{{root, -1}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& frame = stack.back();
            const int v = frame.vertex;
            if (frame.next < adj[v].size()) {
                auto [e, w] = adj[v][frame.next++];
                if (e == frame.parent_edge) continue;  // the one tree edge back up
                if (disc[w] == -1) {
                    edge_stack.push_back(e);
                    disc[w] = low[w] = timer++;
                    if (v == root) ++root_children;
                    stack.push_back({w, e});
                } else if (disc[w] < disc[v]) {
                    // back edge; parallel edges land here and form 2-cycles
                    edge_stack.push_back(e);
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                const int entry_edge = frame.parent_edge;
                stack.pop_back();
                if (stack.empty()) break;
                Frame& parent = stack.back();
                low[parent.vertex] = std::min(low[parent.vertex], low[v]);
                if (low[v] >= disc[parent.vertex]) {
                    // pop one block: everything pushed since (and including)
                    // the tree edge into v
                    std::vector<int> block;
                    while (true) {
                        int e = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(g.edges()[e].id);
                        if (e == entry_edge) break;
                    }
                    std::sort(block.begin(), block.end());
                    result.blocks.push_back(std::move(block));
                    if (parent.vertex != root) cut[parent.vertex] = 1;
                }
            }
        }
        if (root_children >= 2) cut[root] = 1;
    }

    for (int i = 0; i < n; ++i)
        if (cut[i]) result.cut_vertices.push_back(g.vertices()[i]);
    std::sort(result.blocks.begin(), result.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return result;
}

HomogeneityResult is_homogeneous(const SignedMultigraph& g) {
    for (auto& block : blocks(g).blocks) {
        bool has_plus = false, has_minus = false;
        for (int id : block) (g.edge(id).sign == Sign::plus ? has_plus : has_minus) = true;
        if (has_plus && has_minus) return {false, std::move(block)};
    }
    return {true, {}};
}

namespace {

// Shortest path between two vertex indices using only the given edge
// indices, with one vertex banned; returns edge ids in path order.
std::optional<std::vector<int>> bfs_path(const SignedMultigraph& g, const std::vector<int>& edge_ids,
                                         int from, int to, int banned) {
    if (from == to) return std::vector<int>{};
    std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count());
    for (int id : edge_ids) {
        const auto& edge = g.edge(id);
        int ui = g.vertex_index(edge.u), vi = g.vertex_index(edge.v);
        adj[ui].push_back({id, vi});
        adj[vi].push_back({id, ui});
    }
    std::vector<std::pair<int, int>> via(g.vertex_count(), {-1, -1});  // (edge id, previous vertex)
    std::deque<int> queue{from};
    std::vector<char> seen(g.vertex_count(), 0);
    seen[from] = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (auto [id, w] : adj[v]) {
            if (w == banned || seen[w]) continue;
            seen[w] = 1;
            via[w] = {id, v};
            if (w == to) {
                std::vector<int> path;
                for (int x = to; x != from; x = via[x].second) path.push_back(via[x].first);
                std::reverse(path.begin(), path.end());
                return path;
            }
            queue.push_back(w);
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> mixed_cycle(const SignedMultigraph& g) {
    const auto result = is_homogeneous(g);
    if (result.homogeneous) return std::nullopt;
    const auto& block = result.offending_block;

    // Some vertex of the block meets both signs: walk any +/- edge pair of
    // the block and signs must switch at some shared endpoint.
    std::unordered_map<int, std::vector<int>> incident;  // vertex id -> block edge ids
    for (int id : block) {
        const auto& edge = g.edge(id);
        incident[edge.u].push_back(id);
        incident[edge.v].push_back(id);
    }
    for (auto& [vertex, ids] : incident) {
        int plus_edge = -1, minus_edge = -1;
        for (int id : ids) (g.edge(id).sign == Sign::plus ? plus_edge : minus_edge) = id;
        if (plus_edge == -1 || minus_edge == -1) continue;

        const auto& ep = g.edge(plus_edge);
        const auto& em = g.edge(minus_edge);
        const int a = ep.u == vertex ? ep.v : ep.u;
        const int b = em.u == vertex ? em.v : em.u;
        // Within a block there is always a path a..b avoiding the shared
        // vertex (no cut-vertices inside a block).
        auto path = bfs_path(g, block, g.vertex_index(a), g.vertex_index(b), g.vertex_index(vertex));
        if (!path) continue;
        std::vector<int> cycle{plus_edge};
        cycle.insert(cycle.end(), path->begin(), path->end());
        cycle.push_back(minus_edge);
        return cycle;
    }
    throw KnotError(ErrorKind::cross_check_mismatch,
                    "block reported mixed but no mixed cycle was found");
}

DeltaGraph delta_graph(const SignedMultigraph& g) {
    DeltaGraph d;
    d.plus_components = components(sign_restrict(g, Sign::plus));
    d.minus_components = components(sign_restrict(g, Sign::minus));
    d.plus_count = static_cast<int>(d.plus_components.size());
    d.minus_count = static_cast<int>(d.minus_components.size());

    std::unordered_map<int, int> plus_of, minus_of;
    for (int c = 0; c < d.plus_count; ++c)
        for (int v : d.plus_components[c]) plus_of[v] = c;
    for (int c = 0; c < d.minus_count; ++c)
        for (int v : d.minus_components[c]) minus_of[v] = c;

    d.edges.reserve(g.vertex_count());
    for (int v : g.vertices()) d.edges.push_back({plus_of[v], d.plus_count + minus_of[v], v});
    return d;
}

int betti1(const SignedMultigraph& g) {
    return g.edge_count() - g.vertex_count() + static_cast<int>(components(g).size());
}

int betti1(const DeltaGraph& d) {
    UnionFind uf(d.vertex_count());
    for (const auto& edge : d.edges) uf.unite(edge.plus_vertex, edge.minus_vertex);
    int b0 = 0;
    for (int i = 0; i < d.vertex_count(); ++i)
        if (uf.find(i) == i) ++b0;
    return d.edge_count() - d.vertex_count() + b0;
}

std::optional<std::vector<int>> find_cycle(const DeltaGraph& d) {
    // DFS over the bipartite derived graph; the first back edge closes a cycle.
    std::vector<std::vector<std::pair<int, int>>> adj(d.vertex_count());
    for (int e = 0; e < d.edge_count(); ++e) {
        adj[d.edges[e].plus_vertex].push_back({e, d.edges[e].minus_vertex});
        adj[d.edges[e].minus_vertex].push_back({e, d.edges[e].plus_vertex});
    }
    std::vector<int> state(d.vertex_count(), 0);
    std::vector<std::pair<int, int>> via(d.vertex_count(), {-1, -1});
    struct Frame {
        int vertex;
        int parent_edge;
        size_t next = 0;
    };
    for (int root = 0; root < d.vertex_count(); ++root) {
        if (state[root]) continue;
        std::vector<Frame> stack{{root, -1}};
        state[root] = 1;
        while (!stack.empty()) {
            Frame& frame = stack.back();
            const int v = frame.vertex;
            if (frame.next == adj[v].size()) {
                stack.pop_back();
                continue;
            }
            auto [e, w] = adj[v][frame.next++];
            if (e == frame.parent_edge) continue;
            if (!state[w]) {
                state[w] = 1;
                via[w] = {e, v};
                stack.push_back({w, e});
            } else {
                // w is an ancestor on the DFS stack (the graph walk only
                // reaches visited vertices along the current path here)
                std::vector<int> cycle{e};
                for (int x = v; x != w; x = via[x].second) cycle.push_back(via[x].first);
                std::reverse(cycle.begin(), cycle.end());
                return cycle;
            }
        }
    }
    return std::nullopt;
}

namespace {

// Orients an edge-id cycle of the derived graph into a vertex sequence
// v[0..n-1] with edge i joining v[i] and v[i+1 mod n]. NotACycle if the
// edges do not chain into one simple cycle.
std::vector<int> orient_delta_cycle(const DeltaGraph& d, const std::vector<int>& cycle) {
    const int n = static_cast<int>(cycle.size());
    if (n < 2) throw KnotError(ErrorKind::not_a_cycle, "a cycle needs at least two edges");
    std::set<int> distinct(cycle.begin(), cycle.end());
    if (static_cast<int>(distinct.size()) != n)
        throw KnotError(ErrorKind::not_a_cycle, "cycle repeats an edge");
    for (int e : cycle)
        if (e < 0 || e >= d.edge_count())
            throw KnotError(ErrorKind::not_a_cycle, "unknown derived-graph edge " + std::to_string(e));

    auto endpoints = [&](int e) {
        return std::pair<int, int>{d.edges[e].plus_vertex, d.edges[e].minus_vertex};
    };

    std::vector<int> vertex_seq(n);
    auto [p0, m0] = endpoints(cycle[0]);
    auto [p1, m1] = endpoints(cycle[1]);
    // v[1] is the endpoint the first two edges share.
    int shared = (p0 == p1 || p0 == m1) ? p0 : ((m0 == p1 || m0 == m1) ? m0 : -1);
    if (shared == -1) throw KnotError(ErrorKind::not_a_cycle, "consecutive edges do not touch");
    vertex_seq[0] = p0 == shared ? m0 : p0;
    vertex_seq[1] = shared;
    for (int i = 1; i < n; ++i) {
        auto [p, m] = endpoints(cycle[i]);
        if (p != vertex_seq[i] && m != vertex_seq[i])
            throw KnotError(ErrorKind::not_a_cycle, "consecutive edges do not touch");
        int other = p == vertex_seq[i] ? m : p;
        if (i + 1 < n)
            vertex_seq[i + 1] = other;
        else if (other != vertex_seq[0])
            throw KnotError(ErrorKind::not_a_cycle, "edge sequence does not close up");
    }
    std::set<int> seen(vertex_seq.begin(), vertex_seq.end());
    if (static_cast<int>(seen.size()) != n)
        throw KnotError(ErrorKind::not_a_cycle, "cycle repeats a vertex");
    return vertex_seq;
}

}  // namespace

std::vector<int> delta_cycle_to_mixed_cycle(const SignedMultigraph& g, const DeltaGraph& d,
                                            const std::vector<int>& delta_edge_cycle) {
    const auto vertex_seq = orient_delta_cycle(d, delta_edge_cycle);
    const int n = static_cast<int>(delta_edge_cycle.size());

    // Closed walk in g: the vertex of edge i is joined to the vertex of
    // edge i+1 by a simple path inside their shared component.
    std::vector<int> walk_edges;
    for (int i = 0; i < n; ++i) {
        const int from = d.edges[delta_edge_cycle[i]].g_vertex;
        const int to = d.edges[delta_edge_cycle[(i + 1) % n]].g_vertex;
        const int comp = vertex_seq[(i + 1) % n];
        const bool in_plus = comp < d.plus_count;
        const auto& members =
            in_plus ? d.plus_components[comp] : d.minus_components[comp - d.plus_count];
        std::set<int> allowed(members.begin(), members.end());
        std::vector<int> comp_edges;
        for (const auto& edge : g.edges())
            if (edge.sign == (in_plus ? Sign::plus : Sign::minus) && allowed.count(edge.u) &&
                allowed.count(edge.v))
                comp_edges.push_back(edge.id);
        auto path = bfs_path(g, comp_edges, g.vertex_index(from), g.vertex_index(to), -1);
        if (!path)
            throw KnotError(ErrorKind::cross_check_mismatch,
                            "no path inside a derived-graph component");
        walk_edges.insert(walk_edges.end(), path->begin(), path->end());
    }

    // Extract the first simple cycle scanned along the walk.
    const int start = d.edges[delta_edge_cycle[0]].g_vertex;
    std::vector<int> stack_vertices{g.vertex_index(start)};
    std::vector<int> stack_edges;
    std::unordered_map<int, int> position{{g.vertex_index(start), 0}};
    for (int id : walk_edges) {
        const auto& edge = g.edge(id);
        const int prev = stack_vertices.back();
        const int next =
            g.vertex_index(edge.u) == prev ? g.vertex_index(edge.v) : g.vertex_index(edge.u);
        auto it = position.find(next);
        if (it != position.end()) {
            std::vector<int> cycle(stack_edges.begin() + it->second, stack_edges.end());
            cycle.push_back(id);
            bool has_plus = false, has_minus = false;
            for (int e : cycle) (g.edge(e).sign == Sign::plus ? has_plus : has_minus) = true;
            if (!has_plus || !has_minus)
                throw KnotError(ErrorKind::cross_check_mismatch,
                                "extracted cycle is not mixed");
            return cycle;
        }
        position[next] = static_cast<int>(stack_vertices.size());
        stack_vertices.push_back(next);
        stack_edges.push_back(id);
    }
    throw KnotError(ErrorKind::cross_check_mismatch, "walk closed without yielding a cycle");
}

std::string to_debug_text(const SignedMultigraph& g) {
    std::ostringstream out;
    out << "vertices:";
    for (int v : g.vertices()) out << ' ' << v;
    out << '\n';
    auto edges = g.edges();
    std::sort(edges.begin(), edges.end(),
              [](const SignedEdge& a, const SignedEdge& b) { return a.id < b.id; });
    for (const auto& edge : edges)
        out << edge.u << " -- " << edge.v << " [" << sign_char(edge.sign) << "]\n";
    return out.str();
}

}  // namespace knotcalc
