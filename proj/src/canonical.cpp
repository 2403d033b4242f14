#include "ecclab/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "ecclab/error.hpp"

namespace ecclab {

namespace {

using Colouring = std::vector<int>;  // vertex -> cell index, dense and ordered

class Canonizer {
public:
    explicit Canonizer(const Graph& g) : g_(g), n_(g.order()), rows_(static_cast<std::size_t>(n_), 0) {
        for (int v = 0; v < n_; ++v)
            for (Vertex w : g.neighbors(v)) rows_[v] |= std::uint64_t{1} << w;
    }

    CanonicalResult run() {
        Colouring initial(static_cast<std::size_t>(n_), 0);
        std::vector<Vertex> prefix;
        search(initial, prefix);

        CanonicalResult r{best_perm_, g_.relabeled(best_perm_), {}, leaves_};
        r.certificate = encode_graph6(r.form);
        return r;
    }

private:
    // Splits cells by neighbour counts into every other cell until stable.
    // Signatures depend only on colours, so the result is label-invariant.
    Colouring refine(Colouring colours) const {
        int cells = 1 + *std::max_element(colours.begin(), colours.end());
        std::vector<std::vector<int>> sig(static_cast<std::size_t>(n_));
        std::vector<int> order(static_cast<std::size_t>(n_));
        while (true) {
            for (int v = 0; v < n_; ++v) {
                auto& s = sig[v];
                s.assign(static_cast<std::size_t>(cells) + 1, 0);
                s[0] = colours[v];
                for (Vertex w : g_.neighbors(v)) ++s[1 + colours[w]];
            }
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
            Colouring next(static_cast<std::size_t>(n_));
            int c = 0;
            for (int i = 0; i < n_; ++i) {
                if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++c;
                next[order[i]] = c;
            }
            int next_cells = c + 1;
            colours = std::move(next);
            if (next_cells == cells) return colours;
            cells = next_cells;
        }
    }

    Colouring individualize(const Colouring& colours, Vertex v) const {
        Colouring out(colours.size());
        for (int u = 0; u < n_; ++u) out[u] = 2 * colours[u] + (u == v ? 0 : 1);
        // re-densify
        std::vector<int> used(static_cast<std::size_t>(2 * n_ + 2), 0);
        for (int c : out) used[c] = 1;
        std::vector<int> rank(used.size(), 0);
        int r = 0;
        for (std::size_t c = 0; c < used.size(); ++c)
            if (used[c]) rank[c] = r++;
        for (int& c : out) c = rank[c];
        return out;
    }

    std::string code_for(const std::vector<Vertex>& inverse) const {
        std::string code;
        code.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
        for (int j = 1; j < n_; ++j)
            for (int i = 0; i < j; ++i) code.push_back((rows_[inverse[i]] >> inverse[j]) & 1 ? '1' : '0');
        return code;
    }

    void record_automorphism(const std::vector<Vertex>& perm_a, const std::vector<Vertex>& inverse_b) {
        std::vector<Vertex> gamma(static_cast<std::size_t>(n_));
        bool identity = true;
        for (int v = 0; v < n_; ++v) {
            gamma[v] = inverse_b[perm_a[v]];
            identity = identity && gamma[v] == v;
        }
        if (!identity) automorphisms_.push_back(std::move(gamma));
    }

    void leaf(const Colouring& colours) {
        ++leaves_;
        std::vector<Vertex> perm(colours.begin(), colours.end());
        std::vector<Vertex> inverse(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) inverse[perm[v]] = v;
        std::string code = code_for(inverse);
        if (leaves_ == 1) {
            first_perm_ = best_perm_ = perm;
            first_code_ = best_code_ = code;
            return;
        }
        if (code == first_code_) {
            record_automorphism(first_perm_, inverse);
        } else if (code == best_code_) {
            record_automorphism(best_perm_, inverse);
        } else if (code < best_code_) {
            best_code_ = std::move(code);
            best_perm_ = std::move(perm);
        }
    }

    // Union-find over automorphisms that fix every prefix vertex.
    std::vector<int> orbits(const std::vector<Vertex>& prefix) const {
        std::vector<int> parent(static_cast<std::size_t>(n_));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& gamma : automorphisms_) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](Vertex p) { return gamma[p] == p; });
            if (!fixes) continue;
            for (int v = 0; v < n_; ++v) {
                int a = find(v), b = find(gamma[v]);
                if (a != b) parent[a] = b;
            }
        }
        for (int v = 0; v < n_; ++v) parent[v] = find(v);
        return parent;
    }

    void search(const Colouring& input, std::vector<Vertex>& prefix) {
        Colouring colours = refine(input);
        const int cells = 1 + *std::max_element(colours.begin(), colours.end());
        if (cells == n_) {
            leaf(colours);
            return;
        }
        std::vector<int> cell_size(static_cast<std::size_t>(cells), 0);
        for (int c : colours) ++cell_size[c];
        int target = 0;
        while (cell_size[target] == 1) ++target;

        std::vector<Vertex> members;
        for (int v = 0; v < n_; ++v)
            if (colours[v] == target) members.push_back(v);

        std::vector<Vertex> explored;
        for (Vertex v : members) {
            if (!explored.empty()) {
                auto orb = orbits(prefix);
                bool covered = std::any_of(explored.begin(), explored.end(), [&](Vertex e) { return orb[e] == orb[v]; });
                if (covered) continue;
            }
            prefix.push_back(v);
            search(individualize(colours, v), prefix);
            prefix.pop_back();
            explored.push_back(v);
        }
    }

    const Graph& g_;
    int n_;
    std::vector<std::uint64_t> rows_;
    std::vector<std::vector<Vertex>> automorphisms_;
    std::vector<Vertex> first_perm_, best_perm_;
    std::string first_code_, best_code_;
    std::size_t leaves_ = 0;
};

}  // namespace

CanonicalResult canonical_form(const Graph& g) {
    if (g.order() > 64) throw ComputationLimit("canonical labeling supports at most 64 vertices");
    return Canonizer(g).run();
}

std::string canonical_certificate(const Graph& g) { return canonical_form(g).certificate; }

}  // namespace ecclab
