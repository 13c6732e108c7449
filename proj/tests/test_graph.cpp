#include <set>

#include "doctest.h"
#include "fwdidx/graph.hpp"
#include "testutil.hpp"

using namespace fwdidx;

namespace {

Graph triangle() { return Graph::undirected(3, {{0, 1}, {1, 2}, {2, 0}}); }

}  // namespace

TEST_CASE("graph construction validates input") {
    Graph k3 = triangle();
    CHECK(k3.order() == 3);
    CHECK(k3.size() == 3);
    CHECK_FALSE(k3.isDirected());

    Graph p4 = Graph::undirected(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(p4.maxDegree() == 2);
    CHECK(p4.minDegree() == 1);

    CHECK_THROWS_AS(Graph::directed(3, {{0, 1}, {1, 2}}), DisconnectedGraphError);
    CHECK_THROWS_AS(Graph::undirected(4, {{0, 1}, {2, 3}}), DisconnectedGraphError);
    CHECK_THROWS_AS(Graph::undirected(3, {{0, 0}, {0, 1}, {1, 2}}), MalformedEdgeError);
    CHECK_THROWS_AS(Graph::undirected(3, {{0, 5}, {0, 1}, {1, 2}}), MalformedEdgeError);

    // duplicate listings collapse
    Graph dup = Graph::undirected(3, {{0, 1}, {1, 0}, {1, 2}, {2, 0}});
    CHECK(dup.size() == 3);
}

TEST_CASE("distances: pentagon, cube, complete graph") {
    auto c5 = generate({Family::Cycle, {5}});
    auto dmC5 = distances(c5);
    for (int v = 0; v < 5; ++v) CHECK(dmC5.rowSums[v] == 6);
    CHECK(dmC5.diameter == 2);

    // hypercube row sum from the binomial distance distribution: sum k*C(3,k)
    auto q3 = generate({Family::Hypercube, {3}});
    auto dmQ3 = distances(q3);
    for (int v = 0; v < 8; ++v) CHECK(dmQ3.rowSums[v] == 12);
    CHECK(dmQ3.diameter == 3);

    auto k4 = generate({Family::Complete, {4}});
    auto dmK4 = distances(k4);
    CHECK(dmK4.diameter == 1);
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) CHECK(dmK4.at(u, v) == (u == v ? 0 : 1));

    // directed cycle distances wrap one way
    auto dc4 = generate({Family::DirectedCycle, {4}});
    auto dmDC = distances(dc4);
    CHECK(dmDC.at(0, 3) == 3);
    CHECK(dmDC.at(3, 0) == 1);
    CHECK(dmDC.rowRegular());
}

TEST_CASE("distance properties: symmetry, triangle inequality") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = testutil::randomConnectedGraph(rng);
        auto dm = distances(g);
        const int n = g.order();
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                CHECK(dm.at(u, v) == dm.at(v, u));
                for (int w = 0; w < n; ++w)
                    CHECK(dm.at(u, w) <= dm.at(u, v) + dm.at(v, w));
            }
        }
    }
}

TEST_CASE("cartesian products") {
    auto k2 = generate({Family::Complete, {2}});
    auto c4 = cartesianProduct(k2, k2);
    CHECK(c4.order() == 4);
    CHECK(c4.size() == 4);
    CHECK(c4.isRegular(2));

    auto q3 = cartesianProduct(cartesianProduct(k2, k2), k2);
    CHECK(q3.order() == 8);
    CHECK(q3.size() == 12);
    CHECK(q3.isRegular(3));

    auto c3 = generate({Family::Cycle, {3}});
    auto torus = cartesianProduct(c3, c3);
    CHECK(torus.order() == 9);
    CHECK(torus.size() == 18);
    CHECK(torus.isRegular(4));
    CHECK(distances(torus).diameter == 2);

    auto dc3 = generate({Family::DirectedCycle, {3}});
    CHECK_THROWS_AS(cartesianProduct(c3, dc3), MixedDirectednessError);
}

TEST_CASE("product distances add coordinatewise") {
    auto p4 = generate({Family::Path, {4}});
    auto c5 = generate({Family::Cycle, {5}});
    auto prod = cartesianProduct(p4, c5);
    auto dmP = distances(p4), dmC = distances(c5), dmProd = distances(prod);
    for (int u = 0; u < 4; ++u)
        for (int x = 0; x < 5; ++x)
            for (int v = 0; v < 4; ++v)
                for (int y = 0; y < 5; ++y)
                    CHECK(dmProd.at(u * 5 + x, v * 5 + y) == dmP.at(u, v) + dmC.at(x, y));
}

TEST_CASE("connectivity against the cut-enumeration oracle") {
    auto check = [](const Graph& g, int expectKappa, int expectLambda) {
        auto rep = connectivity(g);
        CHECK(rep.kappa == expectKappa);
        CHECK(rep.lambda == expectLambda);
        CHECK(rep.kappa == testutil::oracleVertexConnectivity(g));
        CHECK(rep.lambda == testutil::oracleEdgeConnectivity(g));
        CHECK(rep.kappa <= rep.lambda);
        CHECK(rep.lambda <= g.minDegree());
    };
    check(generate({Family::Cycle, {6}}), 2, 2);
    check(generate({Family::CompleteBipartite, {2, 4}}), 2, 2);
    check(generate({Family::Hypercube, {3}}), 3, 3);
    check(generate({Family::Complete, {5}}), 4, 4);
    check(generate({Family::Path, {4}}), 1, 1);
    check(generate({Family::Star, {5}}), 1, 1);
    check(testutil::wheel7(), 3, 3);
}

TEST_CASE("kappa <= lambda <= minDegree on random graphs") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = testutil::randomConnectedGraph(rng, 4, 6);
        auto rep = connectivity(g);
        CHECK(rep.kappa <= rep.lambda);
        CHECK(rep.lambda <= g.minDegree());
        CHECK(rep.kappa == testutil::oracleVertexConnectivity(g));
        CHECK(rep.lambda == testutil::oracleEdgeConnectivity(g));
    }
}

TEST_CASE("directed connectivity is strong connectivity") {
    auto dc5 = generate({Family::DirectedCycle, {5}});
    auto rep = connectivity(dc5);
    CHECK(rep.kappa == 1);
    CHECK(rep.lambda == 1);

    auto dt = generate({Family::DirectedToroidalMesh, {3, 3}});
    auto rep2 = connectivity(dt);
    CHECK(rep2.kappa == 2);
    CHECK(rep2.lambda == 2);
}

TEST_CASE("enumeration: small orders") {
    // connected labeled graphs on 4 vertices
    EnumerationOptions labeled;
    labeled.dedup = false;
    CHECK(enumerateConnectedGraphs(4, [](const Graph&) {}, labeled) == 38);

    // n=3, maxDeg=2: exactly P3 and C3 up to isomorphism
    std::vector<std::int64_t> sizes;
    enumerateConnectedGraphs(3, {DegreeConstraint::MaxDegree, 2},
                             [&](const Graph& g) { sizes.push_back(g.size()); });
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::int64_t>{2, 3});

    // n=3, maxDeg=1: empty
    CHECK(enumerateConnectedGraphs(3, {DegreeConstraint::MaxDegree, 1}, [](const Graph&) {}) == 0);

    CHECK_THROWS_AS(enumerateConnectedGraphs(7, [](const Graph&) {}), LimitExceededError);
}

TEST_CASE("enumeration: n=4 maxDeg=3 classes include star, K4, paw, diamond") {
    // identify isomorphism classes by (edge count, sorted degree sequence)
    std::set<std::pair<std::int64_t, std::vector<int>>> classes;
    enumerateConnectedGraphs(4, {DegreeConstraint::MaxDegree, 3}, [&](const Graph& g) {
        std::vector<int> degs;
        for (int v = 0; v < 4; ++v) degs.push_back(g.degree(v));
        std::sort(degs.begin(), degs.end());
        classes.insert({g.size(), degs});
    });
    CHECK(classes.count({3, {1, 1, 1, 3}}) == 1);  // K_{1,3}
    CHECK(classes.count({6, {3, 3, 3, 3}}) == 1);  // K4
    CHECK(classes.count({4, {1, 2, 2, 3}}) == 1);  // paw
    CHECK(classes.count({5, {2, 2, 3, 3}}) == 1);  // diamond
}

TEST_CASE("enumeration dedup agrees across mask partitions") {
    // splitting the mask range must not change the dedup outcome
    std::int64_t whole = enumerateConnectedGraphs(4, [](const Graph&) {});
    EnumerationOptions lowHalf, highHalf;
    lowHalf.maskEnd = 32;
    highHalf.maskBegin = 32;
    std::int64_t split = enumerateConnectedGraphs(4, [](const Graph&) {}, lowHalf) +
                         enumerateConnectedGraphs(4, [](const Graph&) {}, highHalf);
    CHECK(whole == split);
    CHECK(whole == 6);  // connected graphs on 4 vertices up to isomorphism
}
