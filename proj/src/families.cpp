#include "ecclab/families.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "ecclab/error.hpp"

namespace ecclab {

namespace {

struct KindInfo {
    FamilyKind kind;
    std::string_view name;
    std::vector<std::string_view> keys;  // empty for starlike (variable arity)
};

const std::vector<KindInfo>& kind_table() {
    static const std::vector<KindInfo> table = {
        {FamilyKind::path, "path", {"n"}},
        {FamilyKind::cycle, "cycle", {"n"}},
        {FamilyKind::star, "star", {"n"}},
        {FamilyKind::complete, "complete", {"n"}},
        {FamilyKind::complete_bipartite, "complete_bipartite", {"a", "b"}},
        {FamilyKind::hypercube, "hypercube", {"d"}},
        {FamilyKind::broom, "broom", {"n", "delta"}},
        {FamilyKind::starlike, "starlike", {}},
        {FamilyKind::balanced_starlike, "balanced_starlike", {"n", "k"}},
        {FamilyKind::double_broom, "double_broom", {"d", "a", "b"}},
        {FamilyKind::lollipop, "lollipop", {"n", "k"}},
        {FamilyKind::star_plus_edge, "star_plus_edge", {"n"}},
        {FamilyKind::dn_tree, "dn_tree", {"n"}},
        {FamilyKind::complete_minus_matching, "complete_minus_matching", {"n"}},
        {FamilyKind::pc_graph, "pc_graph", {"k", "delta"}},
        {FamilyKind::dumbbell, "dumbbell", {"n", "k1", "k2", "len"}},
    };
    return table;
}

const KindInfo& info(FamilyKind kind) {
    for (const auto& k : kind_table())
        if (k.kind == kind) return k;
    throw InvalidArgument("unknown family kind");
}

[[noreturn]] void bad(const FamilySpec& spec, const std::string& why) {
    throw InvalidArgument(std::string(family_name(spec.kind)) + ": " + why);
}

void require(bool ok, const FamilySpec& spec, const std::string& why) {
    if (!ok) bad(spec, why);
}

int parse_int(std::string_view text, std::string_view key) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw InvalidArgument("family parameter '" + std::string(key) + "' is not an integer: '" + std::string(text) + "'");
    return value;
}

// Sum of eccentricities of P_L: floor((3L^2 - 2L) / 4).
std::int64_t path_ecc_sum(std::int64_t length) { return (3 * length * length - 2 * length) / 4; }

Rational broom_closed_form(std::int64_t n, std::int64_t delta) {
    const std::int64_t spine = n - delta + 2;
    return Rational(path_ecc_sum(spine) + (n - delta + 1) * (delta - 2), n);
}

class EdgeBuilder {
public:
    void add(int u, int v) { edges_.push_back({u, v}); }
    void clique(int first, int count, std::pair<int, int> skip = {-1, -1}) {
        for (int i = first; i < first + count; ++i)
            for (int j = i + 1; j < first + count; ++j)
                if (!(i == skip.first && j == skip.second) && !(j == skip.first && i == skip.second)) add(i, j);
    }
    Graph build(int n) const { return Graph::from_edges(n, edges_); }

private:
    std::vector<Edge> edges_;
};

}  // namespace

std::string_view family_name(FamilyKind kind) { return info(kind).name; }

FamilySpec parse_family(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string word;
    if (!(in >> word)) throw InvalidArgument("empty family description");
    if (word == "family" && !(in >> word)) throw InvalidArgument("missing family kind");
    if (word == "pc") word = "pc_graph";

    const KindInfo* kind = nullptr;
    for (const auto& k : kind_table())
        if (k.name == word) kind = &k;
    if (!kind) throw InvalidArgument("unknown family '" + word + "'");

    std::map<std::string, std::string, std::less<>> values;
    while (in >> word) {
        auto eq = word.find('=');
        if (eq == std::string::npos || eq == 0) throw InvalidArgument("expected key=value, got '" + word + "'");
        values[word.substr(0, eq)] = word.substr(eq + 1);
    }

    FamilySpec spec{kind->kind, {}};
    if (kind->kind == FamilyKind::starlike) {
        auto it = values.find("arms");
        if (it == values.end() || values.size() != 1) throw InvalidArgument("starlike: expected arms=n1,n2,...");
        std::string_view rest = it->second;
        while (!rest.empty()) {
            auto comma = rest.find(',');
            spec.params.push_back(parse_int(rest.substr(0, comma), "arms"));
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        }
    } else {
        for (auto key : kind->keys) {
            auto it = values.find(key);
            if (it == values.end()) throw InvalidArgument(std::string(kind->name) + ": missing parameter '" + std::string(key) + "'");
            spec.params.push_back(parse_int(it->second, key));
            values.erase(it);
        }
        if (!values.empty()) throw InvalidArgument(std::string(kind->name) + ": unknown parameter '" + values.begin()->first + "'");
    }
    validate(spec);
    return spec;
}

std::string format_family(const FamilySpec& spec) {
    const auto& k = info(spec.kind);
    std::string out(k.name);
    if (spec.kind == FamilyKind::starlike) {
        out += " arms=";
        for (std::size_t i = 0; i < spec.params.size(); ++i) out += (i ? "," : "") + std::to_string(spec.params[i]);
        return out;
    }
    for (std::size_t i = 0; i < k.keys.size() && i < spec.params.size(); ++i)
        out += " " + std::string(k.keys[i]) + "=" + std::to_string(spec.params[i]);
    return out;
}

void validate(const FamilySpec& spec) {
    const auto& k = info(spec.kind);
    const auto& p = spec.params;
    if (spec.kind == FamilyKind::starlike) {
        require(p.size() >= 2, spec, "needs at least two arms");
        require(std::all_of(p.begin(), p.end(), [](int x) { return x >= 1; }), spec, "arm lengths must be positive");
        return;
    }
    require(p.size() == k.keys.size(), spec, "expected " + std::to_string(k.keys.size()) + " parameters");
    switch (spec.kind) {
        case FamilyKind::path: require(p[0] >= 1, spec, "n >= 1"); break;
        case FamilyKind::cycle: require(p[0] >= 3, spec, "n >= 3"); break;
        case FamilyKind::star: require(p[0] >= 2, spec, "n >= 2"); break;
        case FamilyKind::complete: require(p[0] >= 1, spec, "n >= 1"); break;
        case FamilyKind::complete_bipartite: require(p[0] >= 1 && p[1] >= 1, spec, "a, b >= 1"); break;
        case FamilyKind::hypercube: require(p[0] >= 1 && p[0] <= 20, spec, "1 <= d <= 20"); break;
        case FamilyKind::broom: require(p[0] >= 3 && p[1] >= 2 && p[1] <= p[0] - 1, spec, "requires 2 <= delta <= n-1"); break;
        case FamilyKind::balanced_starlike: require(p[1] >= 2 && p[0] - 1 >= p[1], spec, "requires k >= 2 and n-1 >= k"); break;
        case FamilyKind::double_broom: require(p[0] >= 2 && p[1] >= 0 && p[2] >= 0, spec, "requires d >= 2, a, b >= 0"); break;
        case FamilyKind::lollipop: require(p[1] >= 2 && p[1] <= p[0], spec, "requires 2 <= k <= n"); break;
        case FamilyKind::star_plus_edge: require(p[0] >= 3, spec, "n >= 3"); break;
        case FamilyKind::dn_tree: require(p[0] >= 5, spec, "n >= 5"); break;
        case FamilyKind::complete_minus_matching: require(p[0] >= 4, spec, "n >= 4"); break;
        case FamilyKind::pc_graph: require(p[0] >= 2 && p[1] >= 2, spec, "requires k >= 2 and delta >= 2"); break;
        case FamilyKind::dumbbell:
            require(p[1] >= 1 && p[2] >= 1 && p[3] >= 0, spec, "requires k1, k2 >= 1 and len >= 0");
            require(p[0] == p[1] + p[2] + p[3], spec, "requires n = k1 + k2 + len");
            break;
        case FamilyKind::starlike: break;
    }
}

Graph make(const FamilySpec& spec) {
    validate(spec);
    const auto& p = spec.params;
    switch (spec.kind) {
        case FamilyKind::path: return families::path(p[0]);
        case FamilyKind::cycle: return families::cycle(p[0]);
        case FamilyKind::star: return families::star(p[0]);
        case FamilyKind::complete: return families::complete(p[0]);
        case FamilyKind::complete_bipartite: return families::complete_bipartite(p[0], p[1]);
        case FamilyKind::hypercube: return families::hypercube(p[0]);
        case FamilyKind::broom: return families::broom(p[0], p[1]);
        case FamilyKind::starlike: return families::starlike(p);
        case FamilyKind::balanced_starlike: return families::balanced_starlike(p[0], p[1]);
        case FamilyKind::double_broom: return families::double_broom(p[0], p[1], p[2]);
        case FamilyKind::lollipop: return families::lollipop(p[0], p[1]);
        case FamilyKind::star_plus_edge: return families::star_plus_edge(p[0]);
        case FamilyKind::dn_tree: return families::dn_tree(p[0]);
        case FamilyKind::complete_minus_matching: return families::complete_minus_matching(p[0]);
        case FamilyKind::pc_graph: return families::pc_graph(p[0], p[1]);
        case FamilyKind::dumbbell: return families::dumbbell(p[1], p[2], p[3]);
    }
    throw InvalidArgument("unknown family kind");
}

bool has_closed_form(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::path:
        case FamilyKind::cycle:
        case FamilyKind::star:
        case FamilyKind::complete:
        case FamilyKind::complete_bipartite:
        case FamilyKind::hypercube:
        case FamilyKind::broom:
        case FamilyKind::lollipop:
            return true;
        case FamilyKind::pc_graph:
            return spec.params.size() == 2 && spec.params[0] % 2 == 0;
        default:
            return false;
    }
}

Rational closed_form_ecc(const FamilySpec& spec) {
    validate(spec);
    const auto& p = spec.params;
    switch (spec.kind) {
        case FamilyKind::path: return Rational(path_ecc_sum(p[0]), p[0]);
        case FamilyKind::cycle: return Rational(p[0] / 2);
        case FamilyKind::star:
            require(p[0] >= 3, spec, "closed form 2 - 1/n needs n >= 3");
            return Rational(2) - Rational(1, p[0]);
        case FamilyKind::complete:
            require(p[0] >= 2, spec, "closed form needs n >= 2");
            return Rational(1);
        case FamilyKind::complete_bipartite: {
            // K_{a,b} with a part of size one is a star.
            int n = p[0] + p[1];
            if (n == 2) return Rational(1);
            if (std::min(p[0], p[1]) == 1) return Rational(2) - Rational(1, n);
            return Rational(2);
        }
        case FamilyKind::hypercube: return Rational(p[0]);
        case FamilyKind::broom: return broom_closed_form(p[0], p[1]);
        case FamilyKind::lollipop: return broom_closed_form(p[0], p[1]);
        case FamilyKind::pc_graph: {
            const std::int64_t k = p[0], delta = p[1];
            require(k % 2 == 0, spec, "closed form is stated for even k only");
            return Rational(9 * k, 4) - Rational(1, 2) + Rational(3 * (k - 2), 2 * (k * delta + k + 2));
        }
        default: break;
    }
    bad(spec, "no closed form for this family");
}

Rational broom_alpha_plus_ecc(int n, int delta) {
    if (n < 3 || delta < 2 || delta > n - 1)
        throw InvalidArgument("broom_alpha_plus_ecc: requires 2 <= delta <= n-1");
    const Rational base = Rational(5 * static_cast<std::int64_t>(n), 4) -
                          Rational(static_cast<std::int64_t>(delta) * (delta - 2), 4 * static_cast<std::int64_t>(n));
    if ((n - delta) % 2 == 0) return base - Rational(1, 2);
    return base - Rational(1, 4 * static_cast<std::int64_t>(n));
}

Rational lollipop_product(int n, int k) {
    if (n < 3 || k < 2 || k > n - 1) throw InvalidArgument("lollipop_product: requires 2 <= k <= n-1");
    const std::int64_t nn = n, kk = k;
    const std::int64_t inner = -kk * kk - 2 * kk * (nn - 1) + nn * (2 + 3 * nn);
    // inner >= 0 on the valid range, so integer division is the floor.
    return Rational(kk, nn) * Rational(inner / 4);
}

LollipopOptimum lollipop_kstar(int n) {
    if (n < 4) throw InvalidArgument("lollipop_kstar: requires n >= 4");
    const double nd = n;
    LollipopOptimum out;
    out.k_star = (2.0 - 2.0 * nd + std::sqrt(4.0 - 2.0 * nd + 13.0 * nd * nd)) / 3.0;
    for (int k = 2; k <= n - 1; ++k) {
        Rational v = lollipop_product(n, k);
        if (out.argmax.empty() || v > out.best) {
            out.best = v;
            out.argmax = {k};
        } else if (v == out.best) {
            out.argmax.push_back(k);
        }
    }
    return out;
}

namespace families {

Graph path(int n) {
    EdgeBuilder b;
    for (int i = 0; i + 1 < n; ++i) b.add(i, i + 1);
    return b.build(n);
}

Graph cycle(int n) {
    if (n < 3) throw InvalidArgument("cycle: n >= 3");
    EdgeBuilder b;
    for (int i = 0; i < n; ++i) b.add(i, (i + 1) % n);
    return b.build(n);
}

Graph star(int n) {
    EdgeBuilder b;
    for (int i = 1; i < n; ++i) b.add(0, i);
    return b.build(n);
}

Graph complete(int n) {
    EdgeBuilder b;
    b.clique(0, n);
    return b.build(n);
}

Graph complete_bipartite(int a, int b) {
    EdgeBuilder e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.add(i, a + j);
    return e.build(a + b);
}

Graph hypercube(int d) {
    const int n = 1 << d;
    EdgeBuilder b;
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i)
            if (v < (v ^ (1 << i))) b.add(v, v ^ (1 << i));
    return b.build(n);
}

Graph broom(int n, int delta) {
    validate({FamilyKind::broom, {n, delta}});
    EdgeBuilder b;
    for (int leaf = 1; leaf < delta; ++leaf) b.add(0, leaf);
    b.add(0, delta);
    for (int v = delta; v + 1 < n; ++v) b.add(v, v + 1);
    return b.build(n);
}

Graph starlike(std::vector<int> arms) {
    validate({FamilyKind::starlike, arms});
    std::sort(arms.begin(), arms.end(), std::greater<>());
    const int n = 1 + std::accumulate(arms.begin(), arms.end(), 0);
    EdgeBuilder b;
    int next = 1;
    for (int len : arms) {
        int prev = 0;
        for (int i = 0; i < len; ++i, ++next) {
            b.add(prev, next);
            prev = next;
        }
    }
    return b.build(n);
}

std::vector<int> balanced_parts(int total, int k) {
    std::vector<int> parts(static_cast<std::size_t>(k), total / k);
    for (int i = 0; i < total % k; ++i) ++parts[i];
    return parts;
}

Graph balanced_starlike(int n, int k) {
    validate({FamilyKind::balanced_starlike, {n, k}});
    return starlike(balanced_parts(n - 1, k));
}

Graph double_broom(int d, int a, int b) {
    validate({FamilyKind::double_broom, {d, a, b}});
    const int n = d + 1 + a + b;
    EdgeBuilder e;
    for (int i = 0; i < d; ++i) e.add(i, i + 1);
    int next = d + 1;
    for (int i = 0; i < a; ++i) e.add(1, next++);
    for (int i = 0; i < b; ++i) e.add(d - 1, next++);
    return e.build(n);
}

Graph lollipop(int n, int k) {
    validate({FamilyKind::lollipop, {n, k}});
    EdgeBuilder b;
    b.clique(0, k);
    for (int v = k - 1; v + 1 < n; ++v) b.add(v, v + 1);
    return b.build(n);
}

Graph star_plus_edge(int n) {
    validate({FamilyKind::star_plus_edge, {n}});
    EdgeBuilder b;
    for (int i = 1; i < n; ++i) b.add(0, i);
    b.add(1, 2);
    return b.build(n);
}

Graph dn_tree(int n) {
    validate({FamilyKind::dn_tree, {n}});
    EdgeBuilder b;
    for (int i = 0; i + 1 < n - 1; ++i) b.add(i, i + 1);
    b.add(2, n - 1);
    return b.build(n);
}

Graph complete_minus_matching(int n) {
    validate({FamilyKind::complete_minus_matching, {n}});
    EdgeBuilder b;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool matched = (j == i + 1 && i % 2 == 0 && j < n - (n % 2));
            bool extra = (n % 2 == 1 && i == 0 && j == n - 1);
            if (!matched && !extra) b.add(i, j);
        }
    return b.build(n);
}

Graph pc_graph(int k, int delta) {
    validate({FamilyKind::pc_graph, {k, delta}});
    EdgeBuilder b;
    std::vector<int> first(static_cast<std::size_t>(k));
    int next = 0;
    for (int i = 0; i < k; ++i) {
        int size = (i == 0 || i == k - 1) ? delta + 2 : delta + 1;
        first[i] = next;
        // local 0 is v_i, local 1 is u_i; the block is a clique minus u_i v_i.
        b.clique(next, size, {next, next + 1});
        next += size;
    }
    for (int i = 0; i + 1 < k; ++i) b.add(first[i] + 1, first[i + 1]);
    return b.build(next);
}

Graph dumbbell(int k1, int k2, int len) {
    const int n = k1 + k2 + len;
    validate({FamilyKind::dumbbell, {n, k1, k2, len}});
    EdgeBuilder b;
    b.clique(0, k1);
    b.clique(k1 + len, k2);
    for (int v = k1 - 1; v < k1 + len; ++v) b.add(v, v + 1);
    return b.build(n);
}

}  // namespace families

}  // namespace ecclab
