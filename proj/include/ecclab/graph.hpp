#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ecclab/rational.hpp"

namespace ecclab {

using Vertex = int;

/// Undirected edge; Graph always hands these out with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored in compressed rows with every neighbor list sorted.
/// Connectivity is computed once at construction.
class Graph {
public:
    /// Builds a graph from an edge list. Self-loops and out-of-range indices
    /// throw InvalidArgument; repeated edges are collapsed and remembered in
    /// had_duplicate_edges().
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

    int order() const { return n_; }
    std::size_t size() const { return targets_.size() / 2; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    int degree(Vertex v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }
    bool adjacent(Vertex u, Vertex v) const;

    int min_degree() const;
    int max_degree() const;

    bool connected() const { return connected_; }
    bool had_duplicate_edges() const { return duplicates_; }

    /// All edges with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    /// Graph with vertex v renamed to perm[v].
    Graph relabeled(std::span<const Vertex> perm) const;
    Graph complement() const;
    Graph with_edge_added(Vertex u, Vertex v) const;
    Graph with_vertex_removed(Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.offsets_ == b.offsets_ && a.targets_ == b.targets_;
    }

private:
    Graph() = default;

    int n_ = 0;
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> targets_;
    bool connected_ = false;
    bool duplicates_ = false;
};

inline constexpr int kUnreachable = -1;

/// Hop distances from source; unreachable vertices hold kUnreachable.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

struct EccentricityProfile {
    std::vector<int> ecc;
    int radius = 0;
    int diameter = 0;
    std::vector<Vertex> center;
    Rational average;
};

/// One BFS per vertex. Throws DisconnectedGraph.
EccentricityProfile eccentricity_profile(const Graph& g);

/// Shorthand for eccentricity_profile(g).average.
Rational average_eccentricity(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_unicyclic(const Graph& g);
std::vector<Edge> bridges(const Graph& g);
std::vector<Vertex> pendant_vertices(const Graph& g);

// graph6 (one graph per string, no trailing newline).
inline constexpr std::int64_t kGraph6MaxOrder = 68719476735LL;
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view text);

// Plain edge list: "n m" followed by m lines "u v".
std::string write_edge_list(const Graph& g);
Graph read_edge_list(std::istream& in);

}  // namespace ecclab
