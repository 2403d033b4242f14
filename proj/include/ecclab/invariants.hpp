#pragma once

#include <cstdint>
#include <optional>

#include "ecclab/graph.hpp"
#include "ecclab/rational.hpp"

namespace ecclab {

/// Sum over vertices of deg(v) * ecc(v). Throws DisconnectedGraph.
std::int64_t eccentric_connectivity_index(const Graph& g);

/// Sum of d(u,v) over unordered pairs. Throws DisconnectedGraph.
std::int64_t wiener_index(const Graph& g);

/// General Randic index: sum over edges of (deg u * deg v)^exponent, summed
/// pairwise. Throws InvalidArgument if some vertex is isolated.
double randic_index(const Graph& g, double exponent = -0.5);

// Exact NP-hard invariants. All of these work on 64-bit vertex masks and
// throw ComputationLimit above 64 vertices.
int independence_number(const Graph& g);
int clique_number(const Graph& g);
/// Throws DisconnectedGraph (the quantity is only used on connected inputs).
int domination_number(const Graph& g);
int chromatic_number(const Graph& g);

struct SpectralOptions {
    double tolerance = 1e-10;
    long max_iterations = 1'000'000;
};

/// Largest adjacency eigenvalue by power iteration on A + I from the all-ones
/// vector. The shift keeps bipartite graphs (spectrum symmetric about 0) from
/// oscillating. Stops when ||Ax - rho x|| <= tolerance.
double spectral_radius(const Graph& g, SpectralOptions options = {});

struct InvariantReport {
    int n = 0;
    std::int64_t m = 0;
    int min_degree = 0;
    int max_degree = 0;
    int radius = 0;
    int diameter = 0;
    Rational average_eccentricity;
    std::int64_t eccentric_connectivity = 0;
    std::int64_t wiener = 0;
    std::optional<double> randic;  // absent when some vertex is isolated (K_1)
    std::optional<int> independence;
    std::optional<int> clique;
    std::optional<int> domination;
    std::optional<int> chromatic;
    double spectral_radius = 0.0;
};

/// Full report for a connected graph. The exponential invariants are left
/// empty above 64 vertices.
InvariantReport compute_invariant_report(const Graph& g);

}  // namespace ecclab
