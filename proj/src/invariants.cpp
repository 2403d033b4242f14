#include "ecclab/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <vector>

#include "ecclab/error.hpp"

namespace ecclab {

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

std::vector<Mask> adjacency_masks(const Graph& g, const char* what) {
    if (g.order() > 64) throw ComputationLimit(std::string(what) + " is limited to 64 vertices");
    std::vector<Mask> rows(static_cast<std::size_t>(g.order()), 0);
    for (int v = 0; v < g.order(); ++v)
        for (Vertex w : g.neighbors(v)) rows[v] |= bit(w);
    return rows;
}

double pairwise_sum(std::span<const double> xs) {
    if (xs.size() <= 8) {
        double s = 0.0;
        for (double x : xs) s += x;
        return s;
    }
    auto half = xs.size() / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

// ---------------------------------------------------------------------------
// Maximum independent set: branch on a max-degree vertex, bound by a greedy
// clique cover of the remaining candidates.

class IndependentSetSolver {
public:
    explicit IndependentSetSolver(std::vector<Mask> rows) : rows_(std::move(rows)) {}

    int solve(Mask candidates) {
        best_ = 0;
        expand(candidates, 0);
        return best_;
    }

private:
    int clique_cover_bound(Mask p) const {
        int cliques = 0;
        while (p) {
            Mask clique_candidates = p;
            while (clique_candidates) {
                int v = std::countr_zero(clique_candidates);
                clique_candidates &= rows_[v];
                p &= ~bit(v);
            }
            ++cliques;
        }
        return cliques;
    }

    void expand(Mask p, int size) {
        // Vertices of degree <= 1 inside p can always be taken.
        bool changed = true;
        while (changed && p) {
            changed = false;
            for (Mask scan = p; scan;) {
                int v = std::countr_zero(scan);
                scan &= scan - 1;
                if (!(p & bit(v))) continue;
                if (std::popcount(rows_[v] & p) <= 1) {
                    ++size;
                    p &= ~(rows_[v] | bit(v));
                    changed = true;
                }
            }
        }
        if (!p) {
            best_ = std::max(best_, size);
            return;
        }
        if (size + clique_cover_bound(p) <= best_) return;

        int pivot = -1, pivot_degree = -1;
        for (Mask scan = p; scan; scan &= scan - 1) {
            int v = std::countr_zero(scan);
            int d = std::popcount(rows_[v] & p);
            if (d > pivot_degree) {
                pivot = v;
                pivot_degree = d;
            }
        }
        expand(p & ~(rows_[pivot] | bit(pivot)), size + 1);
        expand(p & ~bit(pivot), size);
    }

    std::vector<Mask> rows_;
    int best_ = 0;
};

Mask all_vertices(int n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }

// ---------------------------------------------------------------------------
// Minimum dominating set as set cover over closed neighbourhoods.

class DominationSolver {
public:
    explicit DominationSolver(const std::vector<Mask>& rows) : n_(static_cast<int>(rows.size())) {
        closed_.resize(rows.size());
        for (int v = 0; v < n_; ++v) closed_[v] = rows[v] | bit(v);
        for (int v = 0; v < n_; ++v) max_cover_ = std::max(max_cover_, std::popcount(closed_[v]));
    }

    int solve() {
        best_ = greedy();
        expand(all_vertices(n_), 0);
        return best_;
    }

private:
    int greedy() const {
        Mask open = all_vertices(n_);
        int used = 0;
        while (open) {
            int pick = 0, gain = -1;
            for (int v = 0; v < n_; ++v) {
                int gv = std::popcount(closed_[v] & open);
                if (gv > gain) {
                    gain = gv;
                    pick = v;
                }
            }
            open &= ~closed_[pick];
            ++used;
        }
        return used;
    }

    void expand(Mask undominated, int used) {
        if (!undominated) {
            best_ = std::min(best_, used);
            return;
        }
        int remaining = std::popcount(undominated);
        if (used + (remaining + max_cover_ - 1) / max_cover_ >= best_) return;

        // The undominated vertex with the fewest possible dominators.
        int target = -1, options = n_ + 1;
        for (Mask scan = undominated; scan; scan &= scan - 1) {
            int u = std::countr_zero(scan);
            int c = std::popcount(closed_[u]);
            if (c < options) {
                options = c;
                target = u;
            }
        }
        std::vector<int> choices;
        for (Mask scan = closed_[target]; scan; scan &= scan - 1) choices.push_back(std::countr_zero(scan));
        std::sort(choices.begin(), choices.end(), [&](int a, int b) {
            return std::popcount(closed_[a] & undominated) > std::popcount(closed_[b] & undominated);
        });
        for (int w : choices) expand(undominated & ~closed_[w], used + 1);
    }

    int n_;
    std::vector<Mask> closed_;
    int max_cover_ = 1;
    int best_ = 0;
};

// ---------------------------------------------------------------------------
// k-colourability with saturation-ordered backtracking.

class ColouringSolver {
public:
    explicit ColouringSolver(const Graph& g) : g_(g), colour_(static_cast<std::size_t>(g.order()), -1) {}

    bool colourable(int k) {
        k_ = k;
        std::fill(colour_.begin(), colour_.end(), -1);
        return assign(0, 0);
    }

    /// Colours used by a DSATUR greedy pass.
    int greedy_upper_bound() {
        std::fill(colour_.begin(), colour_.end(), -1);
        int used = 0;
        for (int step = 0; step < g_.order(); ++step) {
            int v = pick();
            auto forbidden = forbidden_colours(v);
            int c = 0;
            while (c < static_cast<int>(forbidden.size()) && forbidden[c]) ++c;
            colour_[v] = c;
            used = std::max(used, c + 1);
        }
        return used;
    }

private:
    std::vector<char> forbidden_colours(Vertex v) const {
        std::vector<char> forbidden(static_cast<std::size_t>(g_.order()) + 1, 0);
        for (Vertex w : g_.neighbors(v))
            if (colour_[w] >= 0) forbidden[colour_[w]] = 1;
        return forbidden;
    }

    int saturation(Vertex v) const {
        auto f = forbidden_colours(v);
        return static_cast<int>(std::count(f.begin(), f.end(), 1));
    }

    int pick() const {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < g_.order(); ++v) {
            if (colour_[v] >= 0) continue;
            int s = saturation(v), d = g_.degree(v);
            if (s > best_sat || (s == best_sat && d > best_deg)) {
                best = v;
                best_sat = s;
                best_deg = d;
            }
        }
        return best;
    }

    bool assign(int coloured, int used) {
        if (coloured == g_.order()) return true;
        int v = pick();
        auto forbidden = forbidden_colours(v);
        int limit = std::min(k_, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (forbidden[c]) continue;
            colour_[v] = c;
            if (assign(coloured + 1, std::max(used, c + 1))) return true;
        }
        colour_[v] = -1;
        return false;
    }

    const Graph& g_;
    std::vector<int> colour_;
    int k_ = 0;
};

}  // namespace

std::int64_t eccentric_connectivity_index(const Graph& g) {
    auto profile = eccentricity_profile(g);
    std::int64_t total = 0;
    for (int v = 0; v < g.order(); ++v) total += static_cast<std::int64_t>(g.degree(v)) * profile.ecc[v];
    return total;
}

std::int64_t wiener_index(const Graph& g) {
    if (!g.connected()) throw DisconnectedGraph("Wiener index requires a connected graph");
    std::int64_t total = 0;
    for (int v = 0; v < g.order(); ++v) {
        auto dist = bfs_distances(g, v);
        for (int u = v + 1; u < g.order(); ++u) total += dist[u];
    }
    return total;
}

double randic_index(const Graph& g, double exponent) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) throw InvalidArgument("Randic index undefined with isolated vertex " + std::to_string(v));
    std::vector<double> terms;
    terms.reserve(g.size());
    for (const Edge& e : g.edges())
        terms.push_back(std::pow(static_cast<double>(g.degree(e.u)) * g.degree(e.v), exponent));
    return pairwise_sum(terms);
}

int independence_number(const Graph& g) {
    IndependentSetSolver solver(adjacency_masks(g, "independence number"));
    return solver.solve(all_vertices(g.order()));
}

int clique_number(const Graph& g) {
    if (g.order() > 64) throw ComputationLimit("clique number is limited to 64 vertices");
    return independence_number(g.complement());
}

int domination_number(const Graph& g) {
    if (!g.connected()) throw DisconnectedGraph("domination number requires a connected graph");
    DominationSolver solver(adjacency_masks(g, "domination number"));
    return solver.solve();
}

int chromatic_number(const Graph& g) {
    if (g.order() > 64) throw ComputationLimit("chromatic number is limited to 64 vertices");
    if (g.size() == 0) return 1;
    ColouringSolver solver(g);
    int upper = solver.greedy_upper_bound();
    int k = std::max(clique_number(g), 2);
    while (k < upper && !solver.colourable(k)) ++k;
    return k;
}

double spectral_radius(const Graph& g, SpectralOptions options) {
    if (!g.connected()) throw DisconnectedGraph("spectral radius requires a connected graph");
    if (!(options.tolerance > 0)) throw InvalidArgument("spectral tolerance must be positive");
    const int n = g.order();
    std::vector<double> x(static_cast<std::size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(static_cast<std::size_t>(n));
    for (long it = 0; it < options.max_iterations; ++it) {
        for (int v = 0; v < n; ++v) {
            double s = 0.0;
            for (Vertex w : g.neighbors(v)) s += x[w];
            y[v] = s;
        }
        double rho = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
        double residual = 0.0;
        for (int v = 0; v < n; ++v) residual += (y[v] - rho * x[v]) * (y[v] - rho * x[v]);
        if (std::sqrt(residual) <= options.tolerance) return rho;
        double norm = 0.0;
        for (int v = 0; v < n; ++v) {
            y[v] += x[v];
            norm += y[v] * y[v];
        }
        norm = std::sqrt(norm);
        for (int v = 0; v < n; ++v) x[v] = y[v] / norm;
    }
    throw ComputationLimit("power iteration did not reach tolerance; tolerance too tight");
}

InvariantReport compute_invariant_report(const Graph& g) {
    auto profile = eccentricity_profile(g);
    InvariantReport r;
    r.n = g.order();
    r.m = static_cast<std::int64_t>(g.size());
    r.min_degree = g.min_degree();
    r.max_degree = g.max_degree();
    r.radius = profile.radius;
    r.diameter = profile.diameter;
    r.average_eccentricity = profile.average;
    for (int v = 0; v < g.order(); ++v) r.eccentric_connectivity += static_cast<std::int64_t>(g.degree(v)) * profile.ecc[v];
    r.wiener = wiener_index(g);
    if (g.min_degree() > 0) r.randic = randic_index(g);
    if (g.order() <= 64) {
        r.independence = independence_number(g);
        r.clique = clique_number(g);
        r.domination = domination_number(g);
        r.chromatic = chromatic_number(g);
    }
    r.spectral_radius = spectral_radius(g);
    return r;
}

}  // namespace ecclab
