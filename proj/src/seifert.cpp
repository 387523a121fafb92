#include "knotcalc/seifert.hpp"

#include <algorithm>
#include <map>
#include <numeric>

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

    int class_count() {
        int count = 0;
        for (int i = 0; i < static_cast<int>(parent.size()); ++i)
            if (find(i) == i) ++count;
        return count;
    }
};

// positions[crossing id] = the two 0-based positions where it is visited.
std::map<int, std::pair<int, int>> crossing_positions(const SignedGaussCode& code) {
    std::map<int, std::pair<int, int>> positions;
    for (int p = 0; p < static_cast<int>(code.visits.size()); ++p) {
        auto [it, fresh] = positions.try_emplace(code.visits[p].crossing, std::pair{p, -1});
        if (!fresh) it->second.second = p;
    }
    return positions;
}

// Oriented smoothing at a crossing visited at positions i and j reconnects
// the strand entering at i to the one leaving j, and vice versa: in arc
// terms, arc i joins arc j+1 and arc j joins arc i+1.
void unite_smoothed(UnionFind& uf, int i, int j, int total) {
    uf.unite(i, (j + 1) % total);
    uf.unite(j, (i + 1) % total);
}

// A crossing left in place connects all four incident arcs in the shadow.
void unite_surviving(UnionFind& uf, int i, int j, int total) {
    uf.unite(i, (i + 1) % total);
    uf.unite(j, (j + 1) % total);
    uf.unite(i, j);
}

}  // namespace

std::vector<std::vector<int>> seifert_circles(const SignedGaussCode& code) {
    const int total = static_cast<int>(code.visits.size());
    if (total == 0) return {{}};

    UnionFind uf(total);
    for (const auto& [id, pos] : crossing_positions(code))
        unite_smoothed(uf, pos.first, pos.second, total);

    std::map<int, std::vector<int>> by_root;
    for (int p = 0; p < total; ++p) by_root[uf.find(p)].push_back(p + 1);  // 1-based arcs
    std::vector<std::vector<int>> circles;
    for (auto& [root, arcs] : by_root) circles.push_back(std::move(arcs));
    std::sort(circles.begin(), circles.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return circles;
}

SignedMultigraph seifert_graph(const SignedGaussCode& code) {
    const auto circles = seifert_circles(code);
    const int total = static_cast<int>(code.visits.size());

    std::vector<int> circle_of(total + 1, 0);
    std::vector<int> vertex_ids;
    for (int c = 0; c < static_cast<int>(circles.size()); ++c) {
        vertex_ids.push_back(c + 1);
        for (int arc : circles[c]) circle_of[arc] = c + 1;
    }

    std::vector<SignedEdge> edges;
    for (const auto& [id, pos] : crossing_positions(code)) {
        const int cu = circle_of[pos.first + 1];
        const int cv = circle_of[pos.second + 1];
        if (cu == cv)
            throw KnotError(ErrorKind::loop_detected,
                            "crossing " + std::to_string(id) +
                                " joins a Seifert circle to itself; the code is not realizable");
        edges.push_back({cu, cv, code.visits[pos.first].sign, id});
    }
    return SignedMultigraph(std::move(vertex_ids), std::move(edges));
}

int count_o_signed(const SignedGaussCode& code, Sign sign) {
    const int total = static_cast<int>(code.visits.size());

    int shadow_count = 1;
    if (total > 0) {
        UnionFind uf(total);
        for (const auto& [id, pos] : crossing_positions(code)) {
            if (code.visits[pos.first].sign == sign)
                unite_surviving(uf, pos.first, pos.second, total);
            else
                unite_smoothed(uf, pos.first, pos.second, total);
        }
        shadow_count = uf.class_count();
    }

    const int graph_count =
        static_cast<int>(components(sign_restrict(seifert_graph(code), sign)).size());
    if (shadow_count != graph_count)
        throw KnotError(ErrorKind::cross_check_mismatch,
                        "smoothed-shadow component count " + std::to_string(shadow_count) +
                            " disagrees with sign-restricted graph count " +
                            std::to_string(graph_count));
    return shadow_count;
}

SeifertDecomposition decompose(const SignedGaussCode& code) {
    SeifertDecomposition dec;
    dec.circles = seifert_circles(code);

    const auto graph = seifert_graph(code);
    for (const auto& edge : graph.edges())
        dec.incidence.push_back({edge.id, {edge.u, edge.v}, edge.sign});
    std::sort(dec.incidence.begin(), dec.incidence.end(),
              [](const CrossingIncidence& a, const CrossingIncidence& b) {
                  return a.crossing < b.crossing;
              });

    auto& counts = dec.counts;
    counts.c = code.crossing_count();
    counts.w = writhe(code);
    counts.n_plus = (counts.c + counts.w) / 2;
    counts.n_minus = (counts.c - counts.w) / 2;
    counts.o = static_cast<int>(dec.circles.size());
    counts.o_plus = count_o_signed(code, Sign::plus);
    counts.o_minus = count_o_signed(code, Sign::minus);
    counts.delta = counts.o + 1 - counts.o_plus - counts.o_minus;

    const int b1 = betti1(delta_graph(graph));
    if (counts.delta != b1)
        throw KnotError(ErrorKind::cross_check_mismatch,
                        "delta count " + std::to_string(counts.delta) +
                            " disagrees with first Betti number " + std::to_string(b1) +
                            " of the derived graph");
    return dec;
}

}  // namespace knotcalc
