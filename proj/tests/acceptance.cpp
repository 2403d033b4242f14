// Acceptance run: one PASS/FAIL line per criterion, runtime limits pinned below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ecclab/canonical.hpp"
#include "ecclab/conjectures.hpp"
#include "ecclab/enumeration.hpp"
#include "ecclab/families.hpp"
#include "ecclab/invariants.hpp"
#include "ecclab/transforms.hpp"
#include "oracles.hpp"

using namespace ecclab;
namespace fam = ecclab::families;

namespace {

using Clock = std::chrono::steady_clock;

// Runtime limits in seconds; 0 means the criterion has none.
constexpr double kLimitClosedForms = 10;
constexpr double kLimitPi = 120;
constexpr double kLimitBroomMax = 180;
constexpr double kLimitSigma = 300;
constexpr double kLimitStarlike = 60;
constexpr double kLimitPendant = 60;
constexpr double kLimitRefutation = 30;
constexpr double kLimitLollipop = 10;
constexpr double kLimitSuite = 900;

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void fail(const std::string& why) {
        if (ok) detail << "FAILED: ";
        else detail << "; ";
        detail << why;
        ok = false;
    }
};

struct Result {
    int id;
    std::string name;
    bool ok;
    double seconds;
    double limit;
    std::string detail;
};

std::vector<Result> results;
const Clock::time_point suite_start = Clock::now();

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

void run(int id, std::string name, double limit, const std::function<void(Outcome&)>& body) {
    std::fprintf(stderr, "running criterion %d: %s\n", id, name.c_str());
    Outcome out;
    auto t0 = Clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.fail(std::string("exception: ") + e.what());
    }
    double s = since(t0);
    bool ok = out.ok && (limit == 0 || s < limit);
    if (out.ok && !ok) out.detail << " (runtime over limit)";
    results.push_back({id, std::move(name), ok, s, limit, out.detail.str()});
}

std::string cert(const Graph& g) { return canonical_certificate(g); }

// 1. Closed forms against BFS.
void closed_forms(Outcome& out) {
    int checked = 0, mismatches = 0;
    auto check = [&](FamilySpec spec) {
        ++checked;
        if (closed_form_ecc(spec) != average_eccentricity(make(spec))) {
            if (mismatches++ < 5) out.fail("mismatch at " + format_family(spec));
        }
    };
    for (int n = 2; n <= 64; ++n) {
        check({FamilyKind::complete, {n}});
        check({FamilyKind::path, {n}});
        if (n >= 3) check({FamilyKind::star, {n}});
        if (n >= 3) check({FamilyKind::cycle, {n}});
    }
    for (int a = 1; a <= 16; ++a)
        for (int b = 1; b <= 16; ++b) check({FamilyKind::complete_bipartite, {a, b}});
    for (int d = 1; d <= 16; ++d) check({FamilyKind::hypercube, {d}});
    for (int n = 5; n <= 64; ++n)
        for (int d = 3; d <= n - 2; ++d) check({FamilyKind::broom, {n, d}});
    out.detail << checked << " family members, " << mismatches << " mismatches";
}

// 2. pi strictly increases ecc on every admissible application.
void pi_property(Outcome& out) {
    long applications = 0, exceptions = 0;
    for (int n = 4; n <= 12; ++n)
        for (const Graph& t : enumerate_trees(n)) {
            Rational before = oracle::average_ecc(t);
            for (Vertex w = 0; w < n; ++w) {
                if (t.degree(w) < 3) continue;  // needs a neighbour outside both paths
                auto ps = pendant_paths_at(t, w);
                for (std::size_t i = 0; i < ps.size(); ++i)
                    for (std::size_t j = 0; j < ps.size(); ++j) {
                        if (i == j || ps[i].length() < ps[j].length()) continue;
                        ++applications;
                        Graph next = pi_transform(t, w, ps[i], ps[j]);
                        if (!is_tree(next) || !(oracle::average_ecc(next) > before)) {
                            if (exceptions++ < 3) out.fail("no increase on " + encode_graph6(t));
                        }
                    }
            }
        }
    out.detail << applications << " applications on trees n <= 12, " << exceptions << " exceptions";
}

// 3. B(n, Delta) is the unique maximizer among trees of max degree Delta.
void broom_maximizer(Outcome& out) {
    int cases = 0;
    for (int n = 6; n <= 14; ++n) {
        auto trees = enumerate_trees(n);
        for (int d = 3; d <= n - 2; ++d) {
            ++cases;
            Rational best(-1);
            std::vector<const Graph*> argmax;
            for (const Graph& t : trees) {
                if (t.max_degree() != d) continue;
                Rational e = average_eccentricity(t);
                if (e > best) {
                    best = e;
                    argmax = {&t};
                } else if (e == best) {
                    argmax.push_back(&t);
                }
            }
            if (argmax.size() != 1 || cert(*argmax[0]) != cert(fam::broom(n, d)))
                out.fail("n=" + std::to_string(n) + " Delta=" + std::to_string(d) + ": " +
                         std::to_string(argmax.size()) + " maximizers, broom not unique");
        }
    }
    out.detail << cases << " (n, Delta) cases";
}

int side_size(const Graph& g, Edge e, Vertex from) {
    std::vector<Edge> rest;
    for (Edge f : g.edges())
        if (!(f == e)) rest.push_back(f);
    auto d = bfs_distances(Graph::from_edges(g.order(), rest), from);
    int c = 0;
    for (int x : d) c += x != kUnreachable;
    return c;
}

// 4. sigma strictly decreases ecc on every admissible bridge.
void sigma_property(Outcome& out) {
    long applications = 0, exceptions = 0;
    for (int n = 4; n <= 8; ++n)
        for (const Graph& g : enumerate_connected_graphs(n)) {
            auto br = bridges(g);
            if (br.empty()) continue;
            Rational before = oracle::average_ecc(g);
            for (Edge e : br)
                for (Edge uv : {e, Edge{e.v, e.u}}) {
                    if (side_size(g, e, uv.u) < 2 || side_size(g, e, uv.v) < 2) continue;
                    ++applications;
                    Graph next = sigma_transform(g, uv);
                    if (!next.connected() || !(oracle::average_ecc(next) < before)) {
                        if (exceptions++ < 3) out.fail("no decrease on " + encode_graph6(g));
                    }
                }
        }
    out.detail << applications << " applications on connected graphs n <= 8, " << exceptions << " exceptions";
}

// 5. Majorization monotonicity and the broom / balanced sandwich.
void starlike_property(Outcome& out) {
    long pairs = 0, trees = 0;
    for (int n = 4; n <= 14; ++n)
        for (int k = 3; k <= n - 1; ++k) {
            auto parts = partitions_into(n - 1, k);
            std::vector<Rational> ecc;
            for (const auto& p : parts) ecc.push_back(oracle::average_ecc(fam::starlike(p)));
            for (std::size_t i = 0; i < parts.size(); ++i)
                for (std::size_t j = 0; j < parts.size(); ++j) {
                    if (i == j || !majorizes({parts[i], parts[j]})) continue;
                    ++pairs;
                    if (!(ecc[i] >= ecc[j])) out.fail("majorization order broken at n=" + std::to_string(n));
                }
            std::string broom = cert(fam::broom(n, k));
            std::string balanced = cert(fam::balanced_starlike(n, k));
            Rational hi = average_eccentricity(fam::broom(n, k));
            Rational lo = average_eccentricity(fam::balanced_starlike(n, k));
            for (std::size_t i = 0; i < parts.size(); ++i) {
                ++trees;
                std::string c = cert(fam::starlike(parts[i]));
                if (ecc[i] > hi || ecc[i] < lo) out.fail("outside sandwich at n=" + std::to_string(n));
                if ((ecc[i] == hi) != (c == broom)) out.fail("upper equality not unique at n=" + std::to_string(n));
                if ((ecc[i] == lo) != (c == balanced)) out.fail("lower equality not unique at n=" + std::to_string(n));
            }
        }
    out.detail << trees << " starlike trees, " << pairs << " majorization pairs";
}

// 6. The removable pendant keeps every other eccentricity.
void pendant_property(Outcome& out) {
    long checked = 0;
    for (int n = 4; n <= 14; ++n)
        for (const Graph& t : enumerate_trees(n)) {
            if (t.max_degree() <= 2) continue;
            ++checked;
            Vertex v = removable_pendant(t);
            auto before = oracle::eccentricities(t);
            auto after = oracle::eccentricities(t.with_vertex_removed(v));
            bool same = t.degree(v) == 1;
            for (int u = 0, i = 0; u < n && same; ++u)
                if (u != v) same = before[u] == after[i++];
            if (!same) out.fail("eccentricity changed on " + encode_graph6(t));
        }
    out.detail << checked << " non-path trees";
}

std::string witness_list(const std::vector<Witness>& ws, std::size_t limit = 3) {
    std::string s;
    for (std::size_t i = 0; i < ws.size() && i < limit; ++i)
        s += (i ? " " : "") + ws[i].graph6 + "(n=" + std::to_string(ws[i].n) + ")";
    if (ws.size() > limit) s += " ...";
    return s;
}

// 7. A.478-U: no violations, equality exactly at P_n / B(n,3).
void a478(Outcome& out) {
    const auto& spec = find_conjecture("A.478-U");
    std::size_t scanned = 0;
    for (auto [cls, hi] : {std::pair{GraphClass::trees, 14}, std::pair{GraphClass::connected_graphs, 8}}) {
        ScanReport r = scan(spec, cls, 4, hi);
        scanned += r.scanned;
        if (!r.violations.empty()) out.fail("violations " + witness_list(r.violations));
        for (const auto& s : r.per_n) {
            if (!s.extremal_value || !s.extremal_value->is_exact()) out.fail("inexact value");
            std::set<std::string> eq;
            for (const auto& w : r.equality_graphs)
                if (w.n == s.n) eq.insert(w.certificate);
            Graph expect = s.n % 2 ? fam::path(s.n) : fam::broom(s.n, 3);
            if (eq != std::set<std::string>{cert(expect)})
                out.fail(std::string(class_name(cls)) + " n=" + std::to_string(s.n) + ": equality set has " +
                         std::to_string(eq.size()) + " graphs");
        }
    }
    out.detail << scanned << " graphs, equality sets {P_n} / {B(n,3)}";
}

// 8. A.462-U and A.464-U: no violations, unique extremal P_n.
void a462_a464(Outcome& out) {
    std::size_t scanned = 0;
    for (const char* id : {"A.462-U", "A.464-U"}) {
        ScanReport r = scan(find_conjecture(id), GraphClass::connected_graphs, 4, 8);
        scanned += r.scanned;
        if (!r.violations.empty()) out.fail(std::string(id) + " violations " + witness_list(r.violations));
        for (const auto& s : r.per_n)
            if (s.extremal_graphs.size() != 1 || s.extremal_graphs[0].certificate != cert(fam::path(s.n)))
                out.fail(std::string(id) + " n=" + std::to_string(s.n) + ": extremal set is not {P_n}");
    }
    out.detail << scanned << " evaluations";
}

// 9. A.100-U counterexample and margin grid.
void a100(Outcome& out) {
    std::vector<int> ks{4, 6, 8, 10, 12, 16, 20}, ds{9, 10, 12, 16, 20};
    auto rows = refute_a100(ks, ds);
    bool boundary = false, headline = false;
    for (const auto& r : rows) {
        if (!r.forms_agree) out.fail("closed form disagrees at k=" + std::to_string(r.k));
        if (r.ecc_bfs != average_eccentricity(fam::pc_graph(r.k, r.delta))) out.fail("BFS mismatch");
        if (r.criterion == 0) {
            boundary = true;
            out.detail << "boundary k=" << r.k << " delta=" << r.delta << " margin=" << r.margin.str() << "; ";
        }
        if (r.k == 20 && r.delta == 20) {
            headline = r.n == 422 && r.violated && r.bound == Rational(842);
            out.detail << "(20,20): n=" << r.n << " delta*ecc=" << r.product.str() << " ~ " << r.product.to_double()
                       << " > 842; ";
        }
    }
    std::size_t violated = 0;
    for (const auto& r : rows) violated += r.violated;
    out.detail << rows.size() << " grid rows, " << violated << " violated";
    if (!boundary) out.fail("grid lacks a boundary case");
    if (!headline) out.fail("(20,20) does not violate 2n-2");
}

// 10. Star minimizes ecc over trees; S_n' attains 2 - 1/n over unicyclic graphs.
void star_minimal(Outcome& out) {
    for (int n = 4; n <= 14; ++n) {
        Rational best(1000);
        std::vector<std::string> argmin;
        for (const Graph& t : enumerate_trees(n)) {
            Rational e = average_eccentricity(t);
            if (e < best) {
                best = e;
                argmin = {cert(t)};
            } else if (e == best) {
                argmin.push_back(cert(t));
            }
        }
        if (argmin != std::vector<std::string>{cert(fam::star(n))})
            out.fail("trees n=" + std::to_string(n) + ": star not the unique minimizer");
    }
    for (int n = 4; n <= 10; ++n) {
        Rational best(1000);
        std::set<std::string> argmin;
        for (const Graph& g : enumerate_unicyclic(n)) {
            Rational e = average_eccentricity(g);
            if (e < best) {
                best = e;
                argmin = {cert(g)};
            } else if (e == best) {
                argmin.insert(cert(g));
            }
        }
        if (best != Rational(2) - Rational(1, n) || !argmin.count(cert(fam::star_plus_edge(n))))
            out.fail("unicyclic n=" + std::to_string(n) + ": minimum " + best.str());
    }
    out.detail << "trees 4..14, unicyclic 4..10";
}

// 11. Integer argmax of k * ecc(LP(n,k)) against the real critical point.
// The argmax is taken over the exact floor formula; BFS confirms every k for
// n <= kFullBfs and the argmax with its neighbours above that.
constexpr int kFullBfs = 120;

void lollipop(Outcome& out) {
    int exceptions = 0, bfs_checks = 0;
    std::string listed;
    auto bfs_value = [](int n, int k) { return Rational(k) * average_eccentricity(fam::lollipop(n, k)); };
    for (int n = 10; n <= 200; ++n) {
        // Positive root of d/dk [-k^3 - 2(n-1)k^2 + n(3n+2)k] = 0.
        double kstar = (-4.0 * (n - 1) + std::sqrt(16.0 * (n - 1) * (n - 1) + 12.0 * n * (3.0 * n + 2))) / 6.0;
        auto opt = lollipop_kstar(n);
        if (std::abs(kstar - opt.k_star) > 1e-9) out.fail("k* disagrees at n=" + std::to_string(n));
        Rational best(-1);
        std::vector<int> argmax;
        for (int k = 2; k <= n - 1; ++k) {
            Rational v = lollipop_product(n, k);
            if (n <= kFullBfs) {
                ++bfs_checks;
                if (v != bfs_value(n, k)) out.fail("formula differs from BFS at n=" + std::to_string(n));
            }
            if (v > best) {
                best = v;
                argmax = {k};
            } else if (v == best) {
                argmax.push_back(k);
            }
        }
        if (argmax != opt.argmax) out.fail("library argmax differs at n=" + std::to_string(n));
        if (n > kFullBfs)
            for (int k = argmax.front() - 1; k <= argmax.back() + 1; ++k) {
                if (k < 2 || k > n - 1) continue;
                ++bfs_checks;
                if (lollipop_product(n, k) != bfs_value(n, k)) out.fail("formula differs from BFS at n=" + std::to_string(n));
            }
        for (int k : argmax)
            if (std::abs(k - kstar) > 1.0) {
                ++exceptions;
                char buf[96];
                std::snprintf(buf, sizeof buf, " n=%d argmax=%d k*=%.4f", n, k, kstar);
                listed += buf;
            }
    }
    out.detail << "n = 10..200, " << bfs_checks << " BFS confirmations, exceptions: " << exceptions << listed;
    if (exceptions) out.fail(std::to_string(exceptions) + " argmax values farther than 1 from k*");
}

// 12. Open conjectures: zero violations; the original domination bound fails on a tree.
void open_conjectures(Outcome& out) {
    struct Job {
        const char* id;
        GraphClass cls;
        int hi;
    };
    std::vector<Job> jobs;
    for (const char* id : {"A.462-L", "A.464-L-randic", "A.458-L", "A.460-L"}) {
        jobs.push_back({id, GraphClass::trees, 14});
        jobs.push_back({id, GraphClass::connected_graphs, 8});
    }
    jobs.push_back({"A.479-U", GraphClass::connected_graphs, 8});
    jobs.push_back({"A.492-U", GraphClass::connected_graphs, 8});
    jobs.push_back({"A.464-L-domination-corrected", GraphClass::trees, 14});
    for (const auto& j : jobs) {
        ScanReport r = scan(find_conjecture(j.id), j.cls, 4, j.hi);
        if (!r.violations.empty())
            out.fail(std::string(j.id) + " on " + std::string(class_name(j.cls)) + ": " +
                     std::to_string(r.violations.size()) + " violations, e.g. " + witness_list(r.violations));
    }
    ScanReport orig = scan(find_conjecture("A.464-L-domination-original"), GraphClass::trees, 4, 14);
    if (orig.violations.empty() || orig.violations[0].graph6.empty())
        out.fail("original domination bound has no tree witness");
    else
        out.detail << (out.ok ? "" : "; ") << "original domination bound fails: " << orig.violations.size() << " trees, e.g. "
                   << witness_list(orig.violations) << "; ";
    double total = since(suite_start);
    out.detail << "suite time so far " << static_cast<int>(total) << " s (limit " << kLimitSuite << " s)";
    if (total >= kLimitSuite) out.fail("suite over time limit");
}

// 13. Enumeration counts and brute-force agreement.
void counts(Outcome& out) {
    const std::map<int, long> trees{{1, 1},  {2, 1},   {3, 1},   {4, 2},   {5, 3},    {6, 6},    {7, 11},
                                    {8, 23}, {9, 47}, {10, 106}, {11, 235}, {12, 551}, {13, 1301}, {14, 3159}};
    const std::map<int, long> graphs{{1, 1}, {2, 1}, {3, 2}, {4, 6}, {5, 21}, {6, 112}, {7, 853}, {8, 11117}};
    for (auto [n, c] : trees)
        if (static_cast<long>(enumerate_trees(n).size()) != c) out.fail("tree count n=" + std::to_string(n));
    for (auto [n, c] : graphs)
        if (static_cast<long>(enumerate_connected_graphs(n).size()) != c) out.fail("graph count n=" + std::to_string(n));
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> brute_g, brute_t, ours_g, ours_t;
        oracle::for_each_labeled_graph(n, [&](const Graph& g) {
            if (g.connected()) brute_g.insert(oracle::brute_canonical(g));
        });
        if (n >= 2)
            oracle::for_each_labeled_tree(n, [&](const Graph& t) { brute_t.insert(oracle::brute_canonical(t)); });
        else
            brute_t.insert(oracle::brute_canonical(Graph::from_edges(1, {})));
        for (const Graph& g : enumerate_connected_graphs(n)) ours_g.insert(oracle::brute_canonical(g));
        for (const Graph& t : enumerate_trees(n)) ours_t.insert(oracle::brute_canonical(t));
        if (brute_g != ours_g) out.fail("connected graphs differ from brute force at n=" + std::to_string(n));
        if (brute_t != ours_t) out.fail("trees differ from brute force at n=" + std::to_string(n));
    }
    out.detail << "trees n <= 14, connected graphs n <= 8, brute force n <= 6";
}

}  // namespace

int main() {
    run(1, "closed forms equal BFS", kLimitClosedForms, closed_forms);
    run(2, "pi-transform strictly increases ecc", kLimitPi, pi_property);
    run(3, "broom is the unique maximizer for fixed max degree", kLimitBroomMax, broom_maximizer);
    run(4, "sigma-transform strictly decreases ecc", kLimitSigma, sigma_property);
    run(5, "starlike majorization and sandwich", kLimitStarlike, starlike_property);
    run(6, "removable pendant preserves eccentricities", kLimitPendant, pendant_property);
    run(7, "A.478-U scan", 0, a478);
    run(8, "A.462-U / A.464-U scans", 0, a462_a464);
    run(9, "A.100-U refutation", kLimitRefutation, a100);
    run(10, "star and S_n' minimality", 0, star_minimal);
    run(11, "lollipop argmax near k*", kLimitLollipop, lollipop);
    run(13, "enumeration counts", 0, counts);
    run(12, "open conjecture regression", 0, open_conjectures);

    std::sort(results.begin(), results.end(), [](const Result& a, const Result& b) { return a.id < b.id; });
    int passed = 0;
    for (const auto& r : results) {
        passed += r.ok;
        char time[64];
        if (r.limit > 0) std::snprintf(time, sizeof time, "%.2f s / %.0f s", r.seconds, r.limit);
        else std::snprintf(time, sizeof time, "%.2f s", r.seconds);
        std::printf("%s %2d  %s  [%s]  %s\n", r.ok ? "PASS" : "FAIL", r.id, r.name.c_str(), time, r.detail.c_str());
    }
    std::printf("%d/%zu criteria passed in %.1f s\n", passed, results.size(), since(suite_start));
    return passed == static_cast<int>(results.size()) ? 0 : 1;
}
