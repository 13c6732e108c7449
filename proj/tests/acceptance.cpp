// Acceptance suite: every criterion prints one PASS/FAIL line; the process
// exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "fwdidx/bounds.hpp"
#include "fwdidx/families.hpp"
#include "fwdidx/graph.hpp"
#include "fwdidx/io.hpp"
#include "fwdidx/routing.hpp"
#include "fwdidx/solver.hpp"
#include "testutil.hpp"

using namespace fwdidx;
using Clock = std::chrono::steady_clock;

namespace {

struct Check {
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    template <typename T, typename U>
    void equal(const T& got, const U& want, const std::string& what) {
        if (!(got == static_cast<T>(want))) {
            std::ostringstream os;
            os << what << ": got " << got << ", want " << want;
            failures.push_back(os.str());
        }
    }
};

double seconds(Clock::time_point from) {
    return std::chrono::duration<double>(Clock::now() - from).count();
}

SolveResult solved(const Graph& g, Objective obj, RoutingMode mode, Check& c,
                   const std::string& what, double budgetSeconds = 60.0) {
    auto start = Clock::now();
    auto r = exactIndex(g, obj, mode);
    double took = seconds(start);
    c.expect(r.status == SolveStatus::Optimal, what + ": solve did not complete");
    c.expect(took < budgetSeconds, what + ": solve exceeded its time budget");
    return r;
}

// ----------------------------------------------------------------- criteria

void criterion1(Check& c) {
    auto k14 = generate({Family::Star, {5}});
    c.equal(solved(k14, Objective::Vertex, RoutingMode::General, c, "xi(K_{1,4})").value, 12,
            "xi(K_{1,4})");
    c.equal(solved(k14, Objective::Edge, RoutingMode::General, c, "pi(K_{1,4})").value, 8,
            "pi(K_{1,4})");

    auto p4 = generate({Family::Path, {4}});
    c.equal(solved(p4, Objective::Vertex, RoutingMode::General, c, "xi(P4)").value, 4, "xi(P4)");
    c.equal(solved(p4, Objective::Edge, RoutingMode::General, c, "pi(P4)").value, 8, "pi(P4)");

    auto q3 = generate({Family::Hypercube, {3}});
    c.equal(solved(q3, Objective::Vertex, RoutingMode::General, c, "xi(Q3)").value, 5, "xi(Q3)");
    c.equal(solved(q3, Objective::Edge, RoutingMode::General, c, "pi(Q3)").value, 8, "pi(Q3)");

    for (int d = 3; d <= 8; ++d) {
        auto cd = generate({Family::Cycle, {d}});
        c.equal(solved(cd, Objective::Edge, RoutingMode::General, c, "pi(C" + std::to_string(d) + ")")
                    .value,
                d * d / 4, "pi(C" + std::to_string(d) + ")");
    }

    auto k22 = generate({Family::CompleteBipartite, {2, 2}});
    c.equal(solved(k22, Objective::Vertex, RoutingMode::General, c, "xi(K_{2,2})").value, 1,
            "xi(K_{2,2})");

    for (int d = 3; d <= 6; ++d) {
        auto dc = generate({Family::DirectedCycle, {d}});
        c.equal(solved(dc, Objective::Vertex, RoutingMode::General, c,
                       "xi(directed C" + std::to_string(d) + ")")
                    .value,
                (d - 1) * (d - 2) / 2, "xi(directed C" + std::to_string(d) + ")");
    }
}

void criterion2(Check& c) {
    const std::int64_t exactValues[] = {0, 1, 2};
    for (int d = 3; d <= 5; ++d) {
        auto records = verifyFamily({Family::Cycle, {d}});
        bool refutedPrinted = false, confirmedTorus = false;
        for (const auto& rec : records) {
            if (rec.objective != Objective::Vertex || rec.mode != RoutingMode::General) continue;
            if (rec.citation == "§6-item5") {
                refutedPrinted = rec.verdict == Verdict::Refuted && rec.exactValue &&
                                 *rec.exactValue == exactValues[d - 3];
            }
            if (rec.citation == "§6-item6") {
                confirmedTorus = rec.verdict == Verdict::Confirmed && rec.exactValue &&
                                 *rec.exactValue == exactValues[d - 3];
            }
        }
        c.expect(refutedPrinted, "cycle " + std::to_string(d) +
                                     ": printed vertex form not refuted with the exact value");
        c.expect(confirmedTorus, "cycle " + std::to_string(d) +
                                     ": torus specialization not confirmed (cited §6-item6)");
    }
}

void criterion3(Check& c) {
    auto w7 = testutil::wheel7();
    auto lpMinimal = loadProfile(w7, testutil::wheel7MinimalRouting());
    c.equal(lpMinimal.vertexLoad[6], 6, "W7 transcribed minimal routing: hub load");
    for (int i = 0; i < 6; ++i)
        c.equal(lpMinimal.vertexLoad[i], 2, "W7 transcribed minimal routing: rim load");

    auto lpModified = loadProfile(w7, testutil::wheel7ModifiedRouting());
    c.equal(lpModified.maxVertexLoad, 4, "W7 modified routing: max load");

    auto start = Clock::now();
    auto general = exactIndex(w7, Objective::Vertex, RoutingMode::General);
    c.expect(seconds(start) < 300.0, "W7 general-mode solve exceeded 5 minutes");
    c.expect(general.status == SolveStatus::Optimal, "W7 general-mode solve incomplete");
    c.equal(general.value, 3, "xi(W7)");
    bool certOk = general.certificate.has_value();
    if (certOk) {
        auto v = validateRouting(w7, *general.certificate);
        certOk = v.ok() && loadProfile(w7, *general.certificate).maxVertexLoad == 3;
    }
    c.expect(certOk, "xi(W7) certificate is not a valid max-load-3 routing");

    c.equal(solved(w7, Objective::Vertex, RoutingMode::Minimal, c, "xi_m(W7)", 300.0).value, 6,
            "xi_m(W7)");
}

void criterion4(Check& c) {
    std::vector<FamilySpec> specs = {
        {Family::Cycle, {5}},           {Family::Cycle, {6}},
        {Family::Complete, {5}},        {Family::CompleteBipartite, {3, 3}},
        {Family::Hypercube, {3}},       {Family::ToroidalMesh, {3, 3}},
    };
    for (const auto& spec : specs) {
        auto g = generate(spec);
        auto want = transitiveIndexFormula(g);
        auto r = solved(g, Objective::Vertex, RoutingMode::Minimal, c, spec.str(), 300.0);
        c.equal(r.value, want, "Eq-4 check on " + spec.str());
    }
}

void criterion5(Check& c) {
    auto two = productOptimal({{3, 0, 2}, {3, 0, 2}});
    c.equal(two.first, 4, "product formula xi(K3 x K3)");
    c.equal(two.second, 6, "product formula pi(K3 x K3)");
    auto torus = generate({Family::ToroidalMesh, {3, 3}});
    c.equal(solved(torus, Objective::Vertex, RoutingMode::General, c, "xi(C3xC3)", 300.0).value,
            two.first, "exact xi(C3xC3) vs product formula");
    c.equal(solved(torus, Objective::Edge, RoutingMode::General, c, "pi(C3xC3)", 300.0).value,
            two.second, "exact pi(C3xC3) vs product formula");

    auto three = productOptimal({{2, 0, 2}, {2, 0, 2}, {2, 0, 2}});
    c.equal(three.first, 5, "product formula xi(K2^3)");
    c.equal(three.second, 8, "product formula pi(K2^3)");
    auto q3 = generate({Family::Hypercube, {3}});
    c.equal(solved(q3, Objective::Vertex, RoutingMode::General, c, "xi(Q3)").value, three.first,
            "exact xi(Q3) vs product formula");
    c.equal(solved(q3, Objective::Edge, RoutingMode::General, c, "pi(Q3)").value, three.second,
            "exact pi(Q3) vs product formula");
}

void criterion6(Check& c) {
    std::vector<FamilySpec> corpus = {
        {Family::Cycle, {3}},   {Family::Cycle, {4}},     {Family::Cycle, {5}},
        {Family::Cycle, {6}},   {Family::Cycle, {7}},     {Family::Complete, {4}},
        {Family::Complete, {5}},{Family::Path, {4}},      {Family::Path, {5}},
        {Family::Star, {4}},    {Family::Star, {5}},      {Family::CompleteBipartite, {2, 2}},
        {Family::CompleteBipartite, {2, 3}},              {Family::CompleteBipartite, {3, 3}},
        {Family::Hypercube, {3}},                         {Family::Wheel, {7}},
    };
    int solvedCount = 0;
    for (const auto& spec : corpus) {
        auto g = generate(spec);
        IndexValues iv;
        iv.xi = solved(g, Objective::Vertex, RoutingMode::General, c, spec.str(), 300.0).value;
        iv.pi = solved(g, Objective::Edge, RoutingMode::General, c, spec.str(), 300.0).value;
        iv.xim = solved(g, Objective::Vertex, RoutingMode::Minimal, c, spec.str(), 300.0).value;
        iv.pim = solved(g, Objective::Edge, RoutingMode::Minimal, c, spec.str(), 300.0).value;
        auto stats = computeGraphStats(g);
        auto rep = relationCheck(iv, stats.n, stats.maxDeg, stats.minDeg);
        for (const auto& e : rep.entries)
            c.expect(e.holds, "relation " + e.id + " fails on " + spec.str());
        ++solvedCount;

        if (spec.family == Family::Hypercube)
            c.expect(2 * iv.xi + 2 * (stats.n - 1) == stats.maxDeg * iv.pi,
                     "relation (a) is not tight on Q3");
        if (spec.family == Family::Cycle && spec.params[0] == 5)
            c.expect(2 * iv.xi + 2 * (stats.n - 1) == stats.maxDeg * iv.pi,
                     "relation (a) is not tight on C5");
    }
    c.expect(solvedCount >= 10, "fewer than 10 corpus instances were solved");
}

void criterion7(Check& c) {
    auto start = Clock::now();

    c.equal(enumerativeMinIndex(4, {DegreeConstraint::MaxDegree, 2}, Objective::Vertex).value, 1,
            "enumerative xi_{2,4}");
    c.equal(enumerativeMinIndex(5, {DegreeConstraint::MaxDegree, 2}, Objective::Vertex).value, 2,
            "enumerative xi_{2,5}");

    for (int n = 3; n <= 5; ++n) {
        for (int delta = 2; delta < n; ++delta) {
            auto cat = minIndexClosedForms(n, {DegreeConstraint::MinDegree, delta});
            auto xiMin =
                enumerativeMinIndex(n, {DegreeConstraint::MinDegree, delta}, Objective::Vertex);
            auto piMin =
                enumerativeMinIndex(n, {DegreeConstraint::MinDegree, delta}, Objective::Edge);
            std::string tag = "(delta=" + std::to_string(delta) + ",n=" + std::to_string(n) + ")";
            c.expect(xiMin.witness.has_value(), "empty min-degree class " + tag);
            if (!xiMin.witness) continue;
            c.equal(xiMin.value, *cat.xi.exact, "min-degree vertex closed form " + tag);
            c.equal(piMin.value, *cat.pi.exact, "min-degree edge closed form " + tag);
        }
    }

    // generic lower bounds are never violated by exhaustive minima
    for (int n = 3; n <= 5; ++n) {
        for (int maxDeg = 1; maxDeg < n; ++maxDeg) {
            auto xiMin =
                enumerativeMinIndex(n, {DegreeConstraint::MaxDegree, maxDeg}, Objective::Vertex);
            if (!xiMin.witness) continue;
            c.expect(xiMin.value >= n - 1 - maxDeg, "T4.5d violated at (n=" + std::to_string(n) +
                                                        ",maxDeg=" + std::to_string(maxDeg) + ")");
            if (maxDeg >= 3) {
                auto piMin =
                    enumerativeMinIndex(n, {DegreeConstraint::MaxDegree, maxDeg}, Objective::Edge);
                c.expect(piMin.value >= (4 * (n - 1) + maxDeg - 1) / maxDeg - 2,
                         "T4.7a violated at (n=" + std::to_string(n) +
                             ",maxDeg=" + std::to_string(maxDeg) + ")");
            }
        }
    }

    c.expect(seconds(start) < 600.0, "enumerative minima exceeded 10 minutes");
}

void criterion8(Check& c) {
    std::vector<Graph> graphs;
    for (const auto& spec : std::vector<FamilySpec>{
             {Family::Cycle, {4}}, {Family::Cycle, {5}}, {Family::Cycle, {6}},
             {Family::Cycle, {7}}, {Family::Complete, {4}}, {Family::Complete, {5}},
             {Family::Path, {4}}, {Family::Path, {5}}, {Family::Star, {5}},
             {Family::CompleteBipartite, {2, 3}}, {Family::CompleteBipartite, {3, 3}},
             {Family::Wheel, {7}}, {Family::DirectedCycle, {4}}, {Family::DirectedCycle, {5}}})
        graphs.push_back(generate(spec));
    std::mt19937 rng(20260808);
    for (int i = 0; i < 50; ++i) graphs.push_back(testutil::randomConnectedGraph(rng, 4, 7));

    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = graphs[i];
        std::string tag = "graph#" + std::to_string(i) + " (" + graphIdentity(g) + ")";
        for (auto obj : {Objective::Vertex, Objective::Edge}) {
            auto general = solved(g, obj, RoutingMode::General, c, tag, 300.0);
            auto minimal = solved(g, obj, RoutingMode::Minimal, c, tag, 300.0);
            std::int64_t lb = obj == Objective::Vertex ? averageTransitDemand(g).ceil()
                                                       : averageEdgeDemand(g).ceil();
            c.expect(lb <= general.value, tag + ": analytic lower bound exceeds the optimum");
            c.expect(general.value <= minimal.value, tag + ": general optimum above minimal");
            auto h = heuristicIndex(g, obj, 150);
            c.expect(h.value >= general.value, tag + ": heuristic beat the exact optimum");

            for (const auto* r : {&general, &minimal}) {
                c.expect(r->certificate.has_value(), tag + ": missing certificate");
                if (!r->certificate) continue;
                auto lp = loadProfile(g, *r->certificate);
                auto max = obj == Objective::Vertex ? lp.maxVertexLoad : lp.maxEdgeLoad;
                c.expect(max == r->value, tag + ": certificate load differs from reported value");
            }
        }
    }
}

void criterion9(Check& c) {
    for (int n = 2; n <= 3; ++n) {
        for (auto family : {Family::FoldedCube, Family::AugmentedCube}) {
            FamilySpec spec{family, {n}};
            auto g = generate(spec);
            const Claim* xi = nullptr;
            const Claim* pi = nullptr;
            for (const auto& claim : closedFormClaims(spec)) {
                if (claim.mode != RoutingMode::General) continue;
                if (claim.objective == Objective::Vertex) xi = &claim;
                if (claim.objective == Objective::Edge) pi = &claim;
            }
            c.expect(xi && pi, spec.str() + ": missing catalogued claims");
            if (!xi || !pi) continue;
            c.equal(transitiveIndexFormula(g), xi->lo,
                    spec.str() + ": vertex closed form vs distance-sum formula");
            c.equal(averageEdgeDemand(g).ceil(), pi->lo,
                    spec.str() + ": edge closed form vs ceil(B)");
            if (n == 2) {
                c.equal(xi->lo, 0, spec.str() + " should reduce to the K4 vertex value");
                c.equal(pi->lo, 2, spec.str() + " should reduce to the K4 edge value");
            }
        }
    }
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* label;
        std::function<void(Check&)> run;
    };
    std::vector<Criterion> criteria = {
        {1, "closed-form confirmations by exact solve", criterion1},
        {2, "cycle discrepancy ledger (refute printed, confirm torus form)", criterion2},
        {3, "wheel W7 reproduction", criterion3},
        {4, "distance-sum formula suite", criterion4},
        {5, "cartesian product formulas vs exact solves", criterion5},
        {6, "index relations across the solved corpus", criterion6},
        {7, "enumerative minima vs closed forms", criterion7},
        {8, "bracketing and certificate properties", criterion8},
        {9, "folded/augmented cube arithmetic checks", criterion9},
    };

    int failures = 0;
    for (auto& criterion : criteria) {
        Check check;
        auto start = Clock::now();
        try {
            criterion.run(check);
        } catch (const std::exception& e) {
            check.failures.push_back(std::string("exception: ") + e.what());
        }
        double took = seconds(start);
        if (check.failures.empty()) {
            std::printf("[PASS] criterion %d: %s (%.1fs)\n", criterion.id, criterion.label, took);
        } else {
            ++failures;
            std::printf("[FAIL] criterion %d: %s (%.1fs)\n", criterion.id, criterion.label, took);
            for (const auto& f : check.failures) std::printf("       - %s\n", f.c_str());
        }
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
