#pragma once

#include <vector>

#include "ecclab/graph.hpp"

namespace ecclab {

/// Reference kernel: one BFS per vertex. Used as the oracle for the
/// parallel kernel and in the benchmarks.
std::vector<int> eccentricities_serial(const Graph& g);

/// Bit-parallel BFS from 256 sources at once (one bit per source in each
/// vertex's frontier word), OpenMP-parallel over source batches. Graphs whose
/// diameter makes batches * levels exceed n fall back to one BFS per source,
/// parallel over sources. threads <= 0 uses the OpenMP default. Requires a
/// connected graph.
std::vector<int> eccentricities_parallel(const Graph& g, int threads = 0);

}  // namespace ecclab
