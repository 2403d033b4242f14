#include "ecclab/kernels.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>

#include "ecclab/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ecclab {

namespace {

constexpr int kWords = 4;
constexpr int kBatch = 64 * kWords;

using Block = std::array<std::uint64_t, kWords>;

#if defined(__GNUC__) && !defined(__clang__) && defined(__x86_64__)
#define ECCLAB_CLONES __attribute__((target_clones("avx2", "default")))
#else
#define ECCLAB_CLONES
#endif

ECCLAB_CLONES void batch_eccentricities(const Graph& g, int first_source, std::vector<int>& ecc) {
    const int n = g.order();
    const int count = std::min(kBatch, n - first_source);
    std::vector<Block> visited(static_cast<std::size_t>(n), Block{});
    std::vector<Block> frontier(static_cast<std::size_t>(n), Block{});
    std::vector<Block> next(static_cast<std::size_t>(n), Block{});
    for (int s = 0; s < count; ++s) {
        const int v = first_source + s;
        visited[v][s / 64] |= std::uint64_t{1} << (s % 64);
        frontier[v][s / 64] |= std::uint64_t{1} << (s % 64);
        ecc[v] = 0;
    }

    for (int level = 1;; ++level) {
        Block reached{};
        for (int v = 0; v < n; ++v) {
            Block acc{};
            for (Vertex w : g.neighbors(v))
                for (int k = 0; k < kWords; ++k) acc[k] |= frontier[w][k];
            for (int k = 0; k < kWords; ++k) {
                acc[k] &= ~visited[v][k];
                visited[v][k] |= acc[k];
                reached[k] |= acc[k];
            }
            next[v] = acc;
        }
        bool any = false;
        for (int k = 0; k < kWords; ++k) {
            any = any || reached[k] != 0;
            for (std::uint64_t bits = reached[k]; bits; bits &= bits - 1)
                ecc[first_source + 64 * k + std::countr_zero(bits)] = level;
        }
        if (!any) break;
        std::swap(frontier, next);
    }
}

}  // namespace

std::vector<int> eccentricities_serial(const Graph& g) {
    if (!g.connected()) throw DisconnectedGraph("eccentricity requires a connected graph");
    std::vector<int> ecc(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
        auto dist = bfs_distances(g, v);
        ecc[v] = *std::max_element(dist.begin(), dist.end());
    }
    return ecc;
}

std::vector<int> eccentricities_parallel(const Graph& g, [[maybe_unused]] int threads) {
    if (!g.connected()) throw DisconnectedGraph("eccentricity requires a connected graph");
    const int n = g.order();
    std::vector<int> ecc(static_cast<std::size_t>(n), 0);
    const int batches = (n + kBatch - 1) / kBatch;
    // A batch sweeps every vertex once per level, so long-diameter graphs are
    // cheaper with one ordinary BFS per source.
    auto probe = bfs_distances(g, 0);
    const long long levels = *std::max_element(probe.begin(), probe.end()) + 1;
    const bool bit_parallel = static_cast<long long>(batches) * levels <= n;
#ifdef _OPENMP
    const int workers = threads > 0 ? threads : omp_get_max_threads();
#endif
    if (bit_parallel) {
        if (batches == 1) {
            batch_eccentricities(g, 0, ecc);
            return ecc;
        }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
#endif
        for (int b = 0; b < batches; ++b) batch_eccentricities(g, b * kBatch, ecc);
        return ecc;
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(workers)
#endif
    for (int v = 0; v < n; ++v) {
        auto dist = bfs_distances(g, v);
        ecc[v] = *std::max_element(dist.begin(), dist.end());
    }
    return ecc;
}

}  // namespace ecclab
