#include "ecclab/transforms.hpp"

#include <algorithm>
#include <numeric>

#include "ecclab/error.hpp"

namespace ecclab {

std::vector<PendantPath> pendant_paths_at(const Graph& g, Vertex w) {
    if (w < 0 || w >= g.order()) throw InvalidArgument("anchor out of range");
    std::vector<PendantPath> out;
    for (Vertex first : g.neighbors(w)) {
        PendantPath path{w, {first}};
        Vertex prev = w, cur = first;
        bool pendant = true;
        while (g.degree(cur) == 2) {
            auto row = g.neighbors(cur);
            Vertex next = row[0] == prev ? row[1] : row[0];
            if (next == w) {
                pendant = false;  // closes a cycle through w
                break;
            }
            prev = cur;
            cur = next;
            path.vertices.push_back(cur);
        }
        if (pendant && g.degree(cur) == 1) out.push_back(std::move(path));
    }
    std::stable_sort(out.begin(), out.end(), [](const PendantPath& a, const PendantPath& b) { return a.length() > b.length(); });
    return out;
}

namespace {

bool same_path(const PendantPath& a, const PendantPath& b) {
    return a.anchor == b.anchor && a.vertices == b.vertices;
}

}  // namespace

Graph pi_transform(const Graph& g, Vertex w, const PendantPath& longer, const PendantPath& shorter) {
    if (longer.anchor != w || shorter.anchor != w) throw InvalidArgument("pi_transform: paths must be anchored at w");
    auto actual = pendant_paths_at(g, w);
    auto present = [&](const PendantPath& p) {
        return std::any_of(actual.begin(), actual.end(), [&](const PendantPath& a) { return same_path(a, p); });
    };
    if (!present(longer) || !present(shorter)) throw InvalidArgument("pi_transform: not a pendant path of the graph at w");
    if (longer.vertices.front() == shorter.vertices.front()) throw InvalidArgument("pi_transform: paths are not disjoint");
    if (shorter.length() < 1 || longer.length() < shorter.length())
        throw InvalidArgument("pi_transform: requires p >= q >= 1");
    auto row = g.neighbors(w);
    bool residual = std::any_of(row.begin(), row.end(), [&](Vertex x) {
        return x != longer.vertices.front() && x != shorter.vertices.front();
    });
    if (!residual) throw InvalidArgument("pi_transform: graph outside the two paths is trivial");

    const Vertex moved = shorter.leaf();
    const Vertex old_parent = shorter.length() == 1 ? w : shorter.vertices[shorter.length() - 2];
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (!(e == Edge{std::min(moved, old_parent), std::max(moved, old_parent)})) edges.push_back(e);
    edges.push_back({longer.leaf(), moved});
    return Graph::from_edges(g.order(), edges);
}

Graph sigma_transform(const Graph& g, Edge bridge) {
    auto [u, v] = bridge;
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v))
        throw InvalidArgument("sigma_transform: not an edge");
    auto all = bridges(g);
    Edge key{std::min(u, v), std::max(u, v)};
    if (!std::binary_search(all.begin(), all.end(), key)) throw InvalidArgument("sigma_transform: edge is not a bridge");

    // Side sizes: BFS from v without crossing the bridge.
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<Vertex> stack{v};
    seen[v] = 1;
    seen[u] = 1;
    int side_v = 0;
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        ++side_v;
        for (Vertex y : g.neighbors(x))
            if (!seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
    }
    const int side_u = g.order() - side_v;
    if (side_u < 2 || side_v < 2) throw InvalidArgument("sigma_transform: trivial component on one side of the bridge");

    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (e == key) {
            edges.push_back(e);
        } else if (e.u == v || e.v == v) {
            Vertex other = e.u == v ? e.v : e.u;
            edges.push_back({u, other});
        } else {
            edges.push_back(e);
        }
    }
    return Graph::from_edges(g.order(), edges);
}

IntegerPartitionPair::IntegerPartitionPair(std::vector<int> x, std::vector<int> y) : x_(std::move(x)), y_(std::move(y)) {
    if (x_.size() != y_.size() || x_.empty()) throw InvalidArgument("partition pair: arrays must have equal nonzero length");
    for (const auto* arr : {&x_, &y_}) {
        if (std::any_of(arr->begin(), arr->end(), [](int a) { return a < 1; }))
            throw InvalidArgument("partition pair: entries must be positive");
        if (!std::is_sorted(arr->begin(), arr->end(), std::greater<>()))
            throw InvalidArgument("partition pair: arrays must be nonincreasing");
    }
    if (std::accumulate(x_.begin(), x_.end(), 0L) != std::accumulate(y_.begin(), y_.end(), 0L))
        throw InvalidArgument("partition pair: sums differ");
}

bool majorizes(const IntegerPartitionPair& pair) {
    long px = 0, py = 0;
    for (std::size_t i = 0; i < pair.x().size(); ++i) {
        px += pair.x()[i];
        py += pair.y()[i];
        if (px < py) return false;
    }
    return true;
}

namespace {

bool removal_preserves_eccentricities(const Graph& t, const std::vector<int>& ecc, Vertex v) {
    Graph rest = t.with_vertex_removed(v);
    auto after = eccentricity_profile(rest).ecc;
    for (int u = 0; u < t.order(); ++u) {
        if (u == v) continue;
        if (after[u > v ? u - 1 : u] != ecc[u]) return false;
    }
    return true;
}

}  // namespace

Vertex removable_pendant(const Graph& tree) {
    if (!is_tree(tree)) throw InvalidArgument("removable_pendant: input is not a tree");
    if (tree.max_degree() <= 2) throw InvalidArgument("removable_pendant: path excluded");

    const auto pendants = pendant_vertices(tree);
    std::vector<int> indegree(static_cast<std::size_t>(tree.order()), 0);
    for (Vertex p : pendants) {
        auto dist = bfs_distances(tree, p);
        int far = *std::max_element(dist.begin(), dist.end());
        if (std::count(dist.begin(), dist.end(), far) == 1) {
            Vertex q = static_cast<Vertex>(std::find(dist.begin(), dist.end(), far) - dist.begin());
            ++indegree[q];
        }
    }
    for (Vertex p : pendants)
        if (indegree[p] == 0) return p;

    auto ecc = eccentricity_profile(tree).ecc;
    for (Vertex p : pendants)
        if (removal_preserves_eccentricities(tree, ecc, p)) return p;
    throw Error("removable_pendant: no pendant preserves eccentricities");
}

}  // namespace ecclab
