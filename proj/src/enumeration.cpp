#include "ecclab/enumeration.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <numeric>

#include "ecclab/canonical.hpp"
#include "ecclab/error.hpp"
#include "ecclab/families.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ecclab {

std::string_view class_name(GraphClass c) {
    switch (c) {
        case GraphClass::trees: return "trees";
        case GraphClass::connected_graphs: return "connected_graphs";
        case GraphClass::unicyclic: return "unicyclic";
        case GraphClass::starlike: return "starlike";
    }
    return "?";
}

GraphClass parse_class(std::string_view text) {
    if (text == "trees" || text == "tree") return GraphClass::trees;
    if (text == "connected_graphs" || text == "connected" || text == "graphs") return GraphClass::connected_graphs;
    if (text == "unicyclic") return GraphClass::unicyclic;
    if (text == "starlike") return GraphClass::starlike;
    throw InvalidArgument("unknown graph class '" + std::string(text) + "'");
}

int EnumerationLimits::cap(GraphClass c) const {
    switch (c) {
        case GraphClass::trees: return trees;
        case GraphClass::connected_graphs: return connected_graphs;
        case GraphClass::unicyclic: return unicyclic;
        case GraphClass::starlike: return starlike;
    }
    return 0;
}

namespace {

void check_cap(GraphClass c, int n, int lowest, const EnumerationLimits& limits) {
    if (n < lowest) throw InvalidArgument(std::string(class_name(c)) + ": n must be at least " + std::to_string(lowest));
    if (n > limits.cap(c))
        throw InvalidArgument(std::string(class_name(c)) + ": n=" + std::to_string(n) + " exceeds the configured cap " +
                              std::to_string(limits.cap(c)));
}

// Level-sequence helpers (Wright, Richmond, Odlyzko and McKay).

std::vector<int> next_rooted_tree(const std::vector<int>& pred, int p) {
    int q = p - 1;
    while (pred[q] != pred[p] - 1) --q;
    std::vector<int> result = pred;
    for (std::size_t i = p; i < result.size(); ++i) result[i] = result[i - p + q];
    return result;
}

std::optional<std::vector<int>> next_rooted_tree(const std::vector<int>& pred) {
    int p = static_cast<int>(pred.size()) - 1;
    while (pred[p] == 1) --p;
    if (p == 0) return std::nullopt;
    return next_rooted_tree(pred, p);
}

// Splits at the second vertex of depth 1: the first subtree of the root
// (depths shifted down by one) and the rest of the tree.
std::pair<std::vector<int>, std::vector<int>> split_tree(const std::vector<int>& layout) {
    std::size_t m = layout.size();
    bool one_found = false;
    for (std::size_t i = 0; i < layout.size(); ++i) {
        if (layout[i] == 1) {
            if (one_found) {
                m = i;
                break;
            }
            one_found = true;
        }
    }
    std::vector<int> left, rest{0};
    for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
    for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
    return {left, rest};
}

std::vector<int> next_tree(const std::vector<int>& candidate) {
    auto [left, rest] = split_tree(candidate);
    int left_height = *std::max_element(left.begin(), left.end());
    int rest_height = *std::max_element(rest.begin(), rest.end());
    bool valid = rest_height >= left_height;
    if (valid && rest_height == left_height) {
        if (left.size() > rest.size())
            valid = false;
        else if (left.size() == rest.size() && left > rest)
            valid = false;
    }
    if (valid) return candidate;

    const int p = static_cast<int>(left.size());
    auto fresh = next_rooted_tree(candidate, p);
    if (candidate[p] > 2) {
        auto [new_left, new_rest] = split_tree(fresh);
        int height = *std::max_element(new_left.begin(), new_left.end());
        std::size_t len = static_cast<std::size_t>(height) + 1;
        for (std::size_t i = 0; i < len; ++i) fresh[fresh.size() - len + i] = static_cast<int>(i) + 1;
    }
    return fresh;
}

Graph layout_to_graph(const std::vector<int>& layout) {
    std::vector<Edge> edges;
    std::vector<int> stack;
    for (int i = 0; i < static_cast<int>(layout.size()); ++i) {
        if (!stack.empty()) {
            while (layout[stack.back()] >= layout[i]) stack.pop_back();
            edges.push_back({stack.back(), i});
        }
        stack.push_back(i);
    }
    return Graph::from_edges(static_cast<int>(layout.size()), edges);
}

void set_threads([[maybe_unused]] int threads) {
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif
}

// Certificates of g + e for every non-edge e of every graph in `base`.
std::vector<std::string> one_edge_extensions(const std::vector<Graph>& base, int threads) {
    std::vector<std::vector<std::string>> per_graph(base.size());
    set_threads(threads);
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < static_cast<long>(base.size()); ++i) {
        const Graph& g = base[i];
        auto& out = per_graph[i];
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v)
                if (!g.adjacent(u, v)) out.push_back(canonical_certificate(g.with_edge_added(u, v)));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    std::vector<std::string> merged;
    for (auto& chunk : per_graph) merged.insert(merged.end(), std::make_move_iterator(chunk.begin()), std::make_move_iterator(chunk.end()));
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    return merged;
}

std::vector<Graph> decode_all(const std::vector<std::string>& certificates) {
    std::vector<Graph> out;
    out.reserve(certificates.size());
    for (const auto& c : certificates) out.push_back(decode_graph6(c));
    return out;
}

}  // namespace

TreeGenerator::TreeGenerator(int n, const EnumerationLimits& limits) : n_(n) {
    check_cap(GraphClass::trees, n, 1, limits);
    if (n_ >= 2) {
        for (int i = 0; i <= n_ / 2; ++i) layout_.push_back(i);
        for (int i = 1; i < (n_ + 1) / 2; ++i) layout_.push_back(i);
    }
}

std::optional<Graph> TreeGenerator::next() {
    if (done_) return std::nullopt;
    if (n_ == 1) {
        done_ = true;
        return Graph::from_edges(1, std::span<const Edge>{});
    }
    if (!first_) {
        auto succ = next_rooted_tree(layout_);
        if (!succ) {
            done_ = true;
            return std::nullopt;
        }
        layout_ = std::move(*succ);
    }
    first_ = false;
    layout_ = next_tree(layout_);
    return layout_to_graph(layout_);
}

std::vector<Graph> enumerate_trees(int n, const EnumerationLimits& limits) {
    TreeGenerator gen(n, limits);
    std::vector<Graph> out;
    while (auto t = gen.next()) out.push_back(std::move(*t));
    return out;
}

std::vector<Graph> enumerate_connected_graphs(int n, const EnumerationLimits& limits, int threads) {
    check_cap(GraphClass::connected_graphs, n, 1, limits);
    std::vector<std::string> level;
    for (const Graph& t : enumerate_trees(n, {n, n, n, n})) level.push_back(canonical_certificate(t));
    std::sort(level.begin(), level.end());

    std::vector<Graph> out;
    const std::size_t max_edges = static_cast<std::size_t>(n) * (n - 1) / 2;
    for (std::size_t m = static_cast<std::size_t>(n) - 1;; ++m) {
        auto graphs = decode_all(level);
        if (m == max_edges) {
            out.insert(out.end(), graphs.begin(), graphs.end());
            break;
        }
        level = one_edge_extensions(graphs, threads);
        out.insert(out.end(), std::make_move_iterator(graphs.begin()), std::make_move_iterator(graphs.end()));
    }
    return out;
}

std::vector<Graph> enumerate_unicyclic(int n, const EnumerationLimits& limits, int threads) {
    check_cap(GraphClass::unicyclic, n, 3, limits);
    auto trees = enumerate_trees(n, {n, n, n, n});
    return decode_all(one_edge_extensions(trees, threads));
}

std::vector<std::vector<int>> partitions_into(int total, int k) {
    std::vector<std::vector<int>> out;
    if (k <= 0 || total < k) return out;
    std::vector<int> current;
    // Largest part first, each part at most the previous one.
    auto rec = [&](auto&& self, int remaining, int parts_left, int cap) -> void {
        if (parts_left == 0) {
            if (remaining == 0) out.push_back(current);
            return;
        }
        int hi = std::min(cap, remaining - (parts_left - 1));
        int lo = (remaining + parts_left - 1) / parts_left;
        for (int part = hi; part >= lo; --part) {
            current.push_back(part);
            self(self, remaining - part, parts_left - 1, part);
            current.pop_back();
        }
    };
    rec(rec, total, k, total);
    return out;
}

std::vector<Graph> enumerate_starlike(int n, int k, const EnumerationLimits& limits) {
    check_cap(GraphClass::starlike, n, 4, limits);
    if (k < 3) throw InvalidArgument("starlike: k >= 3");
    if (n - 1 < k) throw InvalidArgument("starlike: infeasible, n-1 < k");
    std::vector<Graph> out;
    for (auto& parts : partitions_into(n - 1, k)) out.push_back(families::starlike(parts));
    return out;
}

std::vector<Graph> enumerate(const EnumerationQuery& query, const EnumerationLimits& limits) {
    std::vector<Graph> raw;
    switch (query.graph_class) {
        case GraphClass::trees: raw = enumerate_trees(query.n, limits); break;
        case GraphClass::connected_graphs: raw = enumerate_connected_graphs(query.n, limits, query.threads); break;
        case GraphClass::unicyclic: raw = enumerate_unicyclic(query.n, limits, query.threads); break;
        case GraphClass::starlike:
            if (query.arms) {
                raw = enumerate_starlike(query.n, *query.arms, limits);
            } else {
                check_cap(GraphClass::starlike, query.n, 4, limits);
                for (int k = 3; k <= query.n - 1; ++k) {
                    auto part = enumerate_starlike(query.n, k, limits);
                    raw.insert(raw.end(), part.begin(), part.end());
                }
            }
            break;
    }
    std::optional<int> bound = query.max_degree;
    if (query.chemical) bound = std::min(bound.value_or(4), 4);
    if (!bound) return raw;
    std::vector<Graph> out;
    for (auto& g : raw)
        if (g.max_degree() <= *bound) out.push_back(std::move(g));
    return out;
}

std::optional<Graph> Graph6Reader::next() {
    std::string text;
    while (std::getline(in_, text)) {
        ++line_;
        while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
        std::size_t start = 0;
        while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start]))) ++start;
        if (start == text.size()) continue;
        text.erase(0, start);
        try {
            return decode_graph6(text);
        } catch (const InvalidArgument& e) {
            throw InvalidArgument("line " + std::to_string(line_) + ": " + e.what());
        }
    }
    return std::nullopt;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    Graph6Reader reader(in);
    std::vector<Graph> out;
    while (auto g = reader.next()) out.push_back(std::move(*g));
    return out;
}

}  // namespace ecclab
