#pragma once

#include <vector>

#include "ecclab/graph.hpp"

namespace ecclab {

/// A pendant path hanging off `anchor`: vertices run from the anchor's
/// neighbour to a leaf, every vertex but the last has degree 2.
struct PendantPath {
    Vertex anchor = 0;
    std::vector<Vertex> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
    Vertex leaf() const { return vertices.back(); }
};

/// All maximal pendant paths at w, longest first (ties by first vertex).
std::vector<PendantPath> pendant_paths_at(const Graph& g, Vertex w);

/// Moves the leaf of `shorter` to the end of `longer`, turning G(p,q) into
/// G(p+1,q-1). Vertex numbering is preserved. Requires p >= q >= 1, both
/// paths anchored at w and disjoint, and some neighbour of w outside both
/// paths.
Graph pi_transform(const Graph& g, Vertex w, const PendantPath& longer, const PendantPath& shorter);

/// Contracts the bridge uv into u and re-attaches v as a pendant of u.
/// Requires uv to be a bridge with at least two vertices on each side.
Graph sigma_transform(const Graph& g, Edge bridge);

/// Two nonincreasing positive arrays of equal length and equal sum.
class IntegerPartitionPair {
public:
    IntegerPartitionPair(std::vector<int> x, std::vector<int> y);

    const std::vector<int>& x() const { return x_; }
    const std::vector<int>& y() const { return y_; }

private:
    std::vector<int> x_, y_;
};

/// True iff every prefix sum of x is at least the matching prefix of y.
bool majorizes(const IntegerPartitionPair& pair);

/// A pendant vertex of a non-path tree whose deletion leaves every other
/// eccentricity unchanged. Built from the digraph on pendants with an arc
/// p -> q whenever q is the unique farthest vertex from p; returns the
/// smallest pendant of indegree 0, otherwise the first pendant that passes
/// direct verification.
Vertex removable_pendant(const Graph& tree);

}  // namespace ecclab
