#include "ecclab/graph.hpp"

#include <algorithm>
#include <istream>
#include <queue>
#include <sstream>

#include "ecclab/error.hpp"
#include "ecclab/kernels.hpp"

namespace ecclab {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    if (n <= 0) throw InvalidArgument("graph must have at least one vertex");
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw InvalidArgument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") out of range for n=" + std::to_string(n));
        if (e.u == e.v) throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }

    Graph g;
    g.n_ = n;
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v) {
        auto& row = adj[v];
        std::sort(row.begin(), row.end());
        auto last = std::unique(row.begin(), row.end());
        if (last != row.end()) g.duplicates_ = true;
        row.erase(last, row.end());
        g.offsets_[v + 1] = g.offsets_[v] + row.size();
    }
    g.targets_.reserve(g.offsets_.back());
    for (const auto& row : adj) g.targets_.insert(g.targets_.end(), row.begin(), row.end());

    auto dist = bfs_distances(g, 0);
    g.connected_ = std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    std::vector<Edge> list;
    list.reserve(edges.size());
    for (auto [u, v] : edges) list.push_back({u, v});
    return from_edges(n, list);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    auto row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
}

int Graph::min_degree() const {
    int best = degree(0);
    for (int v = 1; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

int Graph::max_degree() const {
    int best = degree(0);
    for (int v = 1; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(size());
    for (int u = 0; u < n_; ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.push_back({u, v});
    return out;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw InvalidArgument("permutation length does not match order");
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    for (Vertex p : perm) {
        if (p < 0 || p >= n_ || seen[p]) throw InvalidArgument("not a permutation");
        seen[p] = 1;
    }
    std::vector<Edge> mapped;
    mapped.reserve(size());
    for (const Edge& e : edges()) mapped.push_back({perm[e.u], perm[e.v]});
    return from_edges(n_, mapped);
}

Graph Graph::complement() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adjacent(u, v)) out.push_back({u, v});
    return from_edges(n_, out);
}

Graph Graph::with_edge_added(Vertex u, Vertex v) const {
    auto list = edges();
    list.push_back({u, v});
    return from_edges(n_, list);
}

Graph Graph::with_vertex_removed(Vertex v) const {
    if (v < 0 || v >= n_) throw InvalidArgument("vertex out of range");
    if (n_ == 1) throw InvalidArgument("cannot remove the only vertex");
    std::vector<Edge> out;
    auto shift = [v](Vertex x) { return x > v ? x - 1 : x; };
    for (const Edge& e : edges())
        if (e.u != v && e.v != v) out.push_back({shift(e.u), shift(e.v)});
    return from_edges(n_ - 1, out);
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    if (source < 0 || source >= g.order()) throw InvalidArgument("BFS source out of range");
    std::vector<int> dist(static_cast<std::size_t>(g.order()), kUnreachable);
    std::vector<Vertex> queue;
    queue.reserve(g.order());
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

EccentricityProfile eccentricity_profile(const Graph& g) {
    if (!g.connected()) throw DisconnectedGraph("eccentricity requires a connected graph");
    const int n = g.order();
    EccentricityProfile p;
    p.ecc = eccentricities_parallel(g);
    std::int64_t total = 0;
    for (int e : p.ecc) total += e;
    p.radius = *std::min_element(p.ecc.begin(), p.ecc.end());
    p.diameter = *std::max_element(p.ecc.begin(), p.ecc.end());
    for (int v = 0; v < n; ++v)
        if (p.ecc[v] == p.radius) p.center.push_back(v);
    p.average = Rational(total, n);
    return p;
}

Rational average_eccentricity(const Graph& g) { return eccentricity_profile(g).average; }

bool is_connected(const Graph& g) { return g.connected(); }

bool is_tree(const Graph& g) {
    return g.connected() && g.size() == static_cast<std::size_t>(g.order() - 1);
}

bool is_unicyclic(const Graph& g) {
    return g.connected() && g.size() == static_cast<std::size_t>(g.order());
}

std::vector<Edge> bridges(const Graph& g) {
    // Iterative low-link DFS.
    const int n = g.order();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<std::size_t> next(n, 0);
    std::vector<Edge> out;
    int timer = 0;
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        std::vector<Vertex> stack{root};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Vertex u = stack.back();
            auto row = g.neighbors(u);
            if (next[u] < row.size()) {
                Vertex w = row[next[u]++];
                if (disc[w] == -1) {
                    parent[w] = u;
                    disc[w] = low[w] = timer++;
                    stack.push_back(w);
                } else if (w != parent[u]) {
                    low[u] = std::min(low[u], disc[w]);
                }
            } else {
                stack.pop_back();
                if (parent[u] != -1) {
                    Vertex p = parent[u];
                    low[p] = std::min(low[p], low[u]);
                    if (low[u] > disc[p]) out.push_back({std::min(p, u), std::max(p, u)});
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vertex> pendant_vertices(const Graph& g) {
    std::vector<Vertex> out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

// ---------------------------------------------------------------------------
// graph6

namespace {

constexpr int kBias = 63;

void append_order(std::string& out, std::int64_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    } else {
        out.append("~~");
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
}

}  // namespace

std::string encode_graph6(const Graph& g) {
    const std::int64_t n = g.order();
    std::string out;
    append_order(out, n);
    int acc = 0;
    int bits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
    return out;
}

Graph decode_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
    if (text.empty()) throw InvalidArgument("graph6: empty input");
    for (char c : text) {
        auto b = static_cast<unsigned char>(c);
        if (b < 63 || b > 126) throw InvalidArgument("graph6: non-printable byte " + std::to_string(b));
    }

    std::size_t pos = 0;
    auto take = [&](int groups) {
        if (pos + groups > text.size()) throw InvalidArgument("graph6: truncated header");
        std::int64_t v = 0;
        for (int k = 0; k < groups; ++k) v = (v << 6) | (static_cast<unsigned char>(text[pos++]) - kBias);
        return v;
    };
    std::int64_t n;
    if (text[0] != '~') {
        n = take(1);
    } else if (text.size() > 1 && text[1] != '~') {
        pos = 1;
        n = take(3);
        if (n <= 62) throw InvalidArgument("graph6: non-minimal order header");
    } else {
        pos = 2;
        n = take(6);
        if (n <= 258047) throw InvalidArgument("graph6: non-minimal order header");
    }
    if (n == 0) throw InvalidArgument("graph6: zero-vertex graphs are not supported");
    if (n > 1'000'000) throw InvalidArgument("graph6: order too large for in-memory graph");

    const std::int64_t pairs = n * (n - 1) / 2;
    const std::int64_t body = (pairs + 5) / 6;
    const auto remaining = static_cast<std::int64_t>(text.size() - pos);
    if (remaining < body) throw InvalidArgument("graph6: body too short");
    if (remaining > body) throw InvalidArgument("graph6: trailing garbage");

    std::vector<Edge> edges;
    std::int64_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int byte = static_cast<unsigned char>(text[pos + k / 6]) - kBias;
            if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
        }
    }
    if (pairs % 6 != 0) {
        int byte = static_cast<unsigned char>(text.back()) - kBias;
        int pad = static_cast<int>(6 - pairs % 6);
        if (byte & ((1 << pad) - 1)) throw InvalidArgument("graph6: nonzero padding bits");
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.order() << ' ' << g.size() << '\n';
    for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
    return os.str();
}

Graph read_edge_list(std::istream& in) {
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw InvalidArgument("edge list: missing 'n m' header");
    if (n <= 0 || n > 1'000'000 || m < 0) throw InvalidArgument("edge list: bad header values");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v)) throw InvalidArgument("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidArgument("edge list: vertex out of range");
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

}  // namespace ecclab
