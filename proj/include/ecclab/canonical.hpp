#pragma once

#include <string>
#include <vector>

#include "ecclab/graph.hpp"

namespace ecclab {

/// Canonical labeling by colour refinement plus individualization, with
/// orbit pruning from automorphisms discovered at the leaves. The canonical
/// form is the relabeling whose upper-triangle adjacency bit string (graph6
/// order) is lexicographically smallest among all explored leaves.
///
/// Limited to 64 vertices; intended for n <= ~14.
struct CanonicalResult {
    std::vector<Vertex> labeling;  // vertex -> canonical position
    Graph form;
    std::string certificate;  // graph6 of `form`
    std::size_t leaves_visited = 0;
};

CanonicalResult canonical_form(const Graph& g);

/// Equal for two graphs iff they are isomorphic.
std::string canonical_certificate(const Graph& g);

inline bool isomorphic(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.size() == b.size() && canonical_certificate(a) == canonical_certificate(b);
}

}  // namespace ecclab
