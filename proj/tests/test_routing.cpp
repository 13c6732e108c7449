#include "doctest.h"
#include "fwdidx/routing.hpp"
#include "testutil.hpp"

using namespace fwdidx;

namespace {

Routing allDirectRouting(const Graph& g) {
    Routing r(g.order());
    for (int x = 0; x < g.order(); ++x)
        for (int y : g.outNeighbors(x)) r.setPath({x, y});
    return r;
}

}  // namespace

TEST_CASE("validation reports missing pairs and bad paths") {
    auto k3 = generate({Family::Complete, {3}});
    Routing r = allDirectRouting(k3);
    CHECK(validateRouting(k3, r).ok());

    Routing incomplete(3);
    incomplete.setPath({0, 1});
    incomplete.setPath({1, 0});
    incomplete.setPath({0, 2});
    incomplete.setPath({1, 2});
    incomplete.setPath({2, 1});
    auto rep = validateRouting(k3, incomplete);
    CHECK_FALSE(rep.ok());
    REQUIRE(rep.missingPairs.size() == 1);
    CHECK(rep.missingPairs[0] == std::pair<int, int>{2, 0});

    // a non-simple walk is stored but flagged by validation
    auto k3b = generate({Family::Complete, {3}});
    Routing nonSimple(3);
    nonSimple.setPath({0, 1, 0, 2});
    bool repeated = false;
    for (const auto& v : validateRouting(k3b, nonSimple).violations)
        if (v.src == 0 && v.dst == 2 && v.reason.find("repeated") != std::string::npos)
            repeated = true;
    CHECK(repeated);

    // a step that is not an arc is caught by validation
    auto p4 = generate({Family::Path, {4}});
    Routing hop(4);
    hop.setPath({0, 2, 3});
    auto rep2 = validateRouting(p4, hop);
    bool foundBadStep = false;
    for (const auto& v : rep2.violations)
        if (v.src == 0 && v.dst == 3) foundBadStep = true;
    CHECK(foundBadStep);
}

TEST_CASE("classification of the worked wheel routings") {
    auto w7 = testutil::wheel7();
    auto rm = testutil::wheel7MinimalRouting();
    auto cls = classifyRouting(w7, rm);
    CHECK(cls.minimal);
    CHECK(cls.symmetric);

    auto modified = testutil::wheel7ModifiedRouting();
    auto cls2 = classifyRouting(w7, modified);
    CHECK_FALSE(cls2.minimal);  // the (2,5) path takes three edges over distance two
}

TEST_CASE("single-edge routing on complete graphs is minimal, symmetric, consistent") {
    for (int n : {3, 4, 5}) {
        auto kn = generate({Family::Complete, {n}});
        auto cls = classifyRouting(kn, allDirectRouting(kn));
        CHECK(cls.minimal);
        CHECK(cls.symmetric);
        CHECK(cls.consistent);
    }
}

TEST_CASE("shortest-path routings are minimal; lowest-label is also consistent") {
    // The lowest-label rule yields the lexicographically minimal shortest
    // paths, whose prefixes and suffixes are again lex-minimal, so the
    // routing is consistent. The load-aware rule trades that closure for
    // balance: its trees may route a source differently per destination
    // (hypercubes already exhibit this), so only minimality is promised.
    std::mt19937 rng(23);
    std::vector<Graph> graphs = {
        generate({Family::Cycle, {6}}),     generate({Family::Path, {5}}),
        generate({Family::Hypercube, {3}}), testutil::wheel7(),
        generate({Family::CompleteBipartite, {2, 3}}),
    };
    for (int trial = 0; trial < 10; ++trial) graphs.push_back(testutil::randomConnectedGraph(rng));
    for (const auto& g : graphs) {
        for (auto rule : {TieRule::LowestLabel, TieRule::LoadAwareGreedy}) {
            auto r = shortestPathRouting(g, rule);
            CHECK(validateRouting(g, r).ok());
            auto cls = classifyRouting(g, r);
            CHECK(cls.minimal);
            if (rule == TieRule::LowestLabel) CHECK(cls.consistent);
        }
    }
}

TEST_CASE("load profile on the worked wheel routings") {
    auto w7 = testutil::wheel7();
    auto lp = loadProfile(w7, testutil::wheel7MinimalRouting());
    CHECK(lp.vertexLoad[6] == 6);  // hub
    for (int i = 0; i < 6; ++i) CHECK(lp.vertexLoad[i] == 2);
    CHECK(lp.maxVertexLoad == 6);

    auto lp2 = loadProfile(w7, testutil::wheel7ModifiedRouting());
    CHECK(lp2.maxVertexLoad == 4);
    CHECK(lp2.vertexLoad[6] == 4);
    CHECK(lp2.vertexLoad[2] == 2);
    CHECK(lp2.vertexLoad[5] == 2);
    for (int i : {0, 1, 3, 4}) CHECK(lp2.vertexLoad[i] == 3);
}

TEST_CASE("single-edge routing on K3 loads every edge twice") {
    auto k3 = generate({Family::Complete, {3}});
    auto lp = loadProfile(k3, allDirectRouting(k3));
    for (auto v : lp.vertexLoad) CHECK(v == 0);
    for (auto e : lp.edgeLoad) CHECK(e == 2);
    CHECK(lp.maxEdgeLoad == 2);
}

TEST_CASE("directed arcs are loaded separately") {
    auto dc3 = generate({Family::DirectedCycle, {3}});
    auto r = shortestPathRouting(dc3);
    auto lp = loadProfile(dc3, r);
    // each arc carries (0,1),(0,2)-style traffic: d-sum per arc = 3
    for (auto e : lp.edgeLoad) CHECK(e == 3);
    CHECK(lp.maxVertexLoad == 1);
}

TEST_CASE("load conservation identities") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = testutil::randomConnectedGraph(rng);
        auto r = shortestPathRouting(g, TieRule::LoadAwareGreedy);
        auto lp = loadProfile(g, r);
        std::int64_t vertexSum = 0, edgeSum = 0;
        for (auto v : lp.vertexLoad) vertexSum += v;
        for (auto e : lp.edgeLoad) edgeSum += e;
        CHECK(vertexSum == lp.totalTransit);
        CHECK(edgeSum == lp.totalTraversals);

        // minimal routing: total transit is exactly sum of (d(u,v)-1)
        auto dm = distances(g);
        std::int64_t want = 0;
        for (int u = 0; u < g.order(); ++u) want += dm.rowSums[u];
        want -= static_cast<std::int64_t>(g.order()) * (g.order() - 1);
        CHECK(vertexSum == want);
        CHECK(edgeSum == want + static_cast<std::int64_t>(g.order()) * (g.order() - 1));
    }
}

TEST_CASE("symmetric routings have even vertex loads on undirected graphs") {
    // the wheel minimal routing is symmetric; each unordered pair contributes
    // 0 or 2 to any interior vertex
    auto w7 = testutil::wheel7();
    auto rm = testutil::wheel7MinimalRouting();
    REQUIRE(classifyRouting(w7, rm).symmetric);
    auto lp = loadProfile(w7, rm);
    for (auto v : lp.vertexLoad) CHECK(v % 2 == 0);
}

TEST_CASE("load-aware tie-break balances the square") {
    auto c4 = generate({Family::Cycle, {4}});
    auto r = shortestPathRouting(c4, TieRule::LoadAwareGreedy);
    auto lp = loadProfile(c4, r);
    CHECK(lp.maxVertexLoad == 1);
    CHECK(lp.maxEdgeLoad == 4);
}
