#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "ecclab/canonical.hpp"
#include "ecclab/enumeration.hpp"
#include "ecclab/families.hpp"
#include "oracles.hpp"

using namespace ecclab;
namespace fam = ecclab::families;

TEST_CASE("certificate examples") {
    Graph p4 = fam::path(4);
    std::vector<Vertex> perm{2, 0, 3, 1};
    CHECK(canonical_certificate(p4) == canonical_certificate(p4.relabeled(perm)));
    CHECK(canonical_certificate(p4) != canonical_certificate(fam::star(4)));
    CHECK(isomorphic(fam::broom(6, 3), fam::starlike({3, 1, 1})));
}

TEST_CASE("certificates separate exactly the isomorphism classes on <= 6 vertices") {
    // Published counts of all graphs (not necessarily connected).
    const std::map<int, int> classes{{1, 1}, {2, 2}, {3, 4}, {4, 11}, {5, 34}, {6, 156}};
    for (auto [n, count] : classes) {
        std::map<std::string, std::string> cert_to_brute;
        std::set<std::string> brute;
        oracle::for_each_labeled_graph(n, [&](const Graph& g) {
            auto c = canonical_certificate(g);
            auto b = oracle::brute_canonical(g);
            auto [it, fresh] = cert_to_brute.emplace(c, b);
            REQUIRE(it->second == b);  // equal certificates imply isomorphic
            brute.insert(b);
        });
        CHECK(cert_to_brute.size() == static_cast<std::size_t>(count));
        CHECK(brute.size() == static_cast<std::size_t>(count));
    }
}

TEST_CASE("canonical form is a relabeling and is permutation invariant") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 60; ++t) {
        int n = 2 + t % 8;
        Graph g = oracle::random_graph(n, 0.45, rng);
        auto res = canonical_form(g);
        CHECK(g.relabeled(res.labeling) == res.form);
        CHECK(res.certificate == encode_graph6(res.form));
        for (int k = 0; k < 100; ++k) {
            Graph h = g.relabeled(oracle::random_permutation(n, rng));
            REQUIRE(canonical_certificate(h) == res.certificate);
        }
    }
}

TEST_CASE("certificate invariance on regular and highly symmetric graphs") {
    std::mt19937_64 rng(29);
    std::vector<Graph> hard{fam::cycle(12), fam::hypercube(4), fam::complete_bipartite(5, 5),
                            fam::complete_minus_matching(10), fam::pc_graph(4, 3),
                            // Petersen graph
                            Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                                                   {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}})};
    for (const Graph& g : hard) {
        auto c = canonical_certificate(g);
        for (int k = 0; k < 20; ++k) CHECK(canonical_certificate(g.relabeled(oracle::random_permutation(g.order(), rng))) == c);
    }
    // Two 3-regular graphs on 6 vertices: the prism and K_{3,3}.
    Graph prism = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
    CHECK_FALSE(isomorphic(prism, fam::complete_bipartite(3, 3)));
    // C_6 and two triangles.
    CHECK_FALSE(isomorphic(fam::cycle(6), Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
}

TEST_CASE("certificate agrees with brute force isomorphism on random pairs") {
    std::mt19937_64 rng(31);
    int iso = 0;
    for (int t = 0; t < 400; ++t) {
        int n = 4 + t % 4;
        Graph a = oracle::random_graph(n, 0.5, rng);
        Graph b = oracle::random_graph(n, 0.5, rng);
        if (a.size() != b.size()) continue;
        bool expected = oracle::brute_isomorphic(a, b);
        iso += expected;
        CHECK(isomorphic(a, b) == expected);
    }
    CHECK(iso > 0);
}
