#pragma once

// Signed multigraph algorithms: connected components, biconnected blocks,
// Betti numbers, sign-restricted subgraphs, the derived component graph, and
// the three equivalent homogeneity tests built on them.

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "knotcalc/codec.hpp"  // Sign
#include "knotcalc/errors.hpp"

namespace knotcalc {

struct SignedEdge {
    int u = 0;
    int v = 0;
    Sign sign = Sign::plus;
    int id = 0;

    bool operator==(const SignedEdge&) const = default;
};

// Loopless multigraph with +/- labeled edges. Parallel edges are kept
// distinct: two parallel edges of opposite sign form a mixed 2-cycle.
// Loops are rejected at construction; a Seifert graph never has one, so a
// loop signals an upstream bug.
class SignedMultigraph {
public:
    SignedMultigraph() = default;
    SignedMultigraph(std::vector<int> vertices, std::vector<SignedEdge> edges);

    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<SignedEdge>& edges() const { return edges_; }
    const SignedEdge& edge(int id) const;
    int vertex_index(int vertex_id) const;
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

private:
    std::vector<int> vertices_;  // sorted, unique
    std::vector<SignedEdge> edges_;
    std::unordered_map<int, int> vertex_index_;
    std::unordered_map<int, int> edge_index_;
};

struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;  // edge-id sets, each sorted; partition of the edges
    std::vector<int> cut_vertices;         // sorted vertex ids
};

struct HomogeneityResult {
    bool homogeneous = true;
    std::vector<int> offending_block;  // edge ids of a block carrying both signs
};

// Vertices are the connected components of the + and - restrictions; each
// vertex of the underlying graph contributes exactly one edge, joining the
// two components it belongs to. Always bipartite and loop-free.
struct DeltaGraph {
    struct Edge {
        int plus_vertex = 0;   // index into plus side, 0..plus_count-1
        int minus_vertex = 0;  // plus_count..plus_count+minus_count-1
        int g_vertex = 0;      // the underlying graph vertex this edge came from
    };

    int plus_count = 0;
    int minus_count = 0;
    std::vector<Edge> edges;  // one per vertex of the source graph, edge id = index
    std::vector<std::vector<int>> plus_components;   // source vertex ids per + component
    std::vector<std::vector<int>> minus_components;  // source vertex ids per - component

    int vertex_count() const { return plus_count + minus_count; }
    int edge_count() const { return static_cast<int>(edges.size()); }
};

// Connected-component partition of the vertex ids, isolated vertices
// included. Parts sorted by smallest member.
std::vector<std::vector<int>> components(const SignedMultigraph& g);

// Keeps all vertices and only the edges of the given sign.
SignedMultigraph sign_restrict(const SignedMultigraph& g, Sign sign);

// Biconnected decomposition; parallel edges form a 2-cycle and share a
// block, a bridge is a singleton block.
BlockDecomposition blocks(const SignedMultigraph& g);

// True iff every block's edges carry one sign; otherwise reports a block
// containing both.
HomogeneityResult is_homogeneous(const SignedMultigraph& g);

// A simple cycle containing at least one edge of each sign, as an edge-id
// sequence in cycle order, or nullopt exactly when the graph is homogeneous.
std::optional<std::vector<int>> mixed_cycle(const SignedMultigraph& g);

DeltaGraph delta_graph(const SignedMultigraph& g);

// First Betti number |E| - |V| + b0.
int betti1(const SignedMultigraph& g);
int betti1(const DeltaGraph& d);

// Any simple cycle of the derived graph, as a sequence of its edge ids in
// cycle order, or nullopt if it is a forest.
std::optional<std::vector<int>> find_cycle(const DeltaGraph& d);

// Lifts a cycle of the derived graph back to a mixed simple cycle of g:
// consecutive cycle edges are joined by simple paths inside the shared
// component, and a simple cycle is extracted from the resulting closed walk
// (first repeat wins). NotACycle if the edge sequence is not a simple cycle.
std::vector<int> delta_cycle_to_mixed_cycle(const SignedMultigraph& g, const DeltaGraph& d,
                                            const std::vector<int>& delta_edge_cycle);

// Debug rendering: one `vertices:` line, then one `u -- v [sign]` line per
// edge in id order.
std::string to_debug_text(const SignedMultigraph& g);

}  // namespace knotcalc
