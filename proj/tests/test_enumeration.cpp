#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "ecclab/canonical.hpp"
#include "ecclab/enumeration.hpp"
#include "ecclab/error.hpp"
#include "ecclab/families.hpp"
#include "oracles.hpp"

using namespace ecclab;
namespace fam = ecclab::families;

namespace {

// Published counting sequences: free trees, connected graphs, connected
// unicyclic graphs, indexed by n.
const std::map<int, long> kFreeTrees{{1, 1},   {2, 1},   {3, 1},    {4, 2},    {5, 3},    {6, 6},     {7, 11},
                                     {8, 23},  {9, 47},  {10, 106}, {11, 235}, {12, 551}, {13, 1301}, {14, 3159}};
const std::map<int, long> kConnected{{1, 1}, {2, 1}, {3, 2}, {4, 6}, {5, 21}, {6, 112}, {7, 853}, {8, 11117}};
const std::map<int, long> kUnicyclic{{3, 1}, {4, 2}, {5, 5}, {6, 13}, {7, 33}, {8, 89}, {9, 240}, {10, 657}};

std::set<std::string> certificates(const std::vector<Graph>& gs) {
    std::set<std::string> out;
    for (const Graph& g : gs) out.insert(canonical_certificate(g));
    return out;
}

}  // namespace

TEST_CASE("tree counts") {
    for (auto [n, count] : kFreeTrees) {
        auto trees = enumerate_trees(n);
        CHECK(static_cast<long>(trees.size()) == count);
        for (const Graph& t : trees) REQUIRE(is_tree(t));
        if (n <= 10) CHECK(certificates(trees).size() == trees.size());
    }
    CHECK(enumerate_trees(4).size() == 2);
    CHECK_THROWS_AS(enumerate_trees(19), InvalidArgument);
    CHECK_THROWS_AS(enumerate_trees(0), InvalidArgument);
}

TEST_CASE("tree generator is lazy and deterministic") {
    TreeGenerator gen(9);
    std::vector<std::string> first;
    while (auto t = gen.next()) first.push_back(encode_graph6(*t));
    CHECK(first.size() == 47);
    std::vector<std::string> second;
    for (const Graph& t : enumerate_trees(9)) second.push_back(encode_graph6(t));
    CHECK(first == second);
}

TEST_CASE("trees agree with Pruefer brute force") {
    std::set<std::string> seven;
    oracle::for_each_labeled_tree(7, [&](const Graph& t) { seven.insert(canonical_certificate(t)); });
    CHECK(seven == certificates(enumerate_trees(7)));
    for (int n = 2; n <= 6; ++n) {
        std::set<std::string> brute;
        oracle::for_each_labeled_tree(n, [&](const Graph& t) {
            REQUIRE(is_tree(t));
            brute.insert(oracle::brute_canonical(t));
        });
        std::set<std::string> ours;
        for (const Graph& t : enumerate_trees(n)) ours.insert(oracle::brute_canonical(t));
        CHECK(brute == ours);
    }
}

TEST_CASE("connected graph counts") {
    for (auto [n, count] : kConnected) {
        auto gs = enumerate_connected_graphs(n);
        CHECK(static_cast<long>(gs.size()) == count);
        for (const Graph& g : gs) REQUIRE(g.connected());
        CHECK(certificates(gs).size() == gs.size());
    }
    CHECK_THROWS_AS(enumerate_connected_graphs(10), InvalidArgument);
}

TEST_CASE("connected graphs agree with labeled brute force n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> brute;
        oracle::for_each_labeled_graph(n, [&](const Graph& g) {
            if (g.connected()) brute.insert(oracle::brute_canonical(g));
        });
        std::set<std::string> ours;
        for (const Graph& g : enumerate_connected_graphs(n)) ours.insert(oracle::brute_canonical(g));
        CHECK(brute == ours);
    }
}

TEST_CASE("connected enumeration is ordered and identical across thread counts") {
    auto serial = enumerate_connected_graphs(7, {}, 1);
    auto parallel = enumerate_connected_graphs(7, {}, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) REQUIRE(serial[i] == parallel[i]);
    for (std::size_t i = 1; i < serial.size(); ++i) {
        auto a = std::make_pair(serial[i - 1].size(), canonical_certificate(serial[i - 1]));
        auto b = std::make_pair(serial[i].size(), canonical_certificate(serial[i]));
        REQUIRE(a < b);
    }
}

TEST_CASE("unicyclic counts") {
    for (auto [n, count] : kUnicyclic) {
        auto gs = enumerate_unicyclic(n);
        CHECK(static_cast<long>(gs.size()) == count);
        for (const Graph& g : gs) REQUIRE(is_unicyclic(g));
        if (n <= 8) CHECK(certificates(gs).size() == gs.size());
    }
    // Cross-check against the connected enumerator.
    for (int n = 3; n <= 8; ++n) {
        std::set<std::string> filtered;
        for (const Graph& g : enumerate_connected_graphs(n))
            if (g.size() == static_cast<std::size_t>(n)) filtered.insert(canonical_certificate(g));
        CHECK(filtered == certificates(enumerate_unicyclic(n)));
    }
}

TEST_CASE("starlike trees") {
    CHECK(partitions_into(6, 3) == std::vector<std::vector<int>>{{4, 1, 1}, {3, 2, 1}, {2, 2, 2}});
    CHECK(partitions_into(4, 4) == std::vector<std::vector<int>>{{1, 1, 1, 1}});
    CHECK(partitions_into(4, 3) == std::vector<std::vector<int>>{{2, 1, 1}});
    CHECK(partitions_into(2, 3).empty());
    CHECK(enumerate_starlike(7, 3).size() == 3);
    CHECK(enumerate_starlike(5, 4).size() == 1);
    CHECK(enumerate_starlike(5, 3).size() == 1);
    CHECK(enumerate_starlike(6, 3).size() == 2);  // (3,1,1), (2,2,1)
    CHECK_THROWS_AS(enumerate_starlike(3, 3), InvalidArgument);
    CHECK_THROWS_AS(enumerate_starlike(7, 2), InvalidArgument);
    // Starlike trees are exactly the trees with one vertex of degree >= 3.
    for (int n = 4; n <= 12; ++n) {
        std::set<std::string> expected;
        for (const Graph& t : enumerate_trees(n)) {
            int big = 0;
            for (int v = 0; v < n; ++v) big += t.degree(v) >= 3;
            if (big == 1) expected.insert(canonical_certificate(t));
        }
        EnumerationQuery q{GraphClass::starlike, n};
        CHECK(certificates(enumerate(q)) == expected);
    }
}

TEST_CASE("query filters") {
    EnumerationQuery q{GraphClass::trees, 10};
    q.max_degree = 3;
    for (const Graph& t : enumerate(q)) CHECK(t.max_degree() <= 3);
    q.max_degree.reset();
    q.chemical = true;
    std::size_t chem = enumerate(q).size();
    std::size_t all = enumerate_trees(10).size();
    CHECK(chem < all);
    CHECK(chem == 75);  // chemical trees on 10 vertices
    EnumerationQuery arms{GraphClass::starlike, 9};
    arms.arms = 4;
    CHECK(enumerate(arms).size() == partitions_into(8, 4).size());
    CHECK(parse_class("connected_graphs") == GraphClass::connected_graphs);
    CHECK(parse_class("graphs") == GraphClass::connected_graphs);
    CHECK_THROWS_AS(parse_class("forests"), InvalidArgument);
    EnumerationLimits big = EnumerationLimits::paper_scale();
    CHECK(big.cap(GraphClass::trees) == 20);
    CHECK(big.cap(GraphClass::connected_graphs) == 10);
}

TEST_CASE("graph6 stream reader") {
    std::istringstream two("Ch\nC~\n");
    auto gs = read_graph6_stream(two);
    REQUIRE(gs.size() == 2);
    CHECK(gs[0] == fam::path(4));
    CHECK(gs[1] == fam::complete(4));
    std::istringstream empty("");
    CHECK(read_graph6_stream(empty).empty());
    std::istringstream crlf("Ch\r\n\n  \nC~\r\n");
    CHECK(read_graph6_stream(crlf).size() == 2);
    std::istringstream bad("Ch\nC~\nCx!\n");
    try {
        read_graph6_stream(bad);
        FAIL("expected an error");
    } catch (const InvalidArgument& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}
