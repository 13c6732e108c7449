#ifndef FWDIDX_SOLVER_HPP
#define FWDIDX_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "fwdidx/graph.hpp"
#include "fwdidx/rational.hpp"
#include "fwdidx/routing.hpp"

namespace fwdidx {

enum class Objective { Vertex, Edge };
enum class RoutingMode { Minimal, General };
enum class SolveStatus { Optimal, UpperBound, LowerBoundOnly };

std::string to_string(Objective o);
std::string to_string(RoutingMode m);
std::string to_string(SolveStatus s);

struct SearchLimits {
    int maxPathLength = 0;              // general-mode candidate cap; 0 means n-1
    std::int64_t maxNodes = INT64_C(1) << 40;
    double timeBudgetSeconds = 0.0;     // 0 means unlimited
    int threads = 1;                    // >1 fans out top-level branches
};

struct SolveResult {
    Objective objective = Objective::Vertex;
    RoutingMode mode = RoutingMode::General;
    std::int64_t value = 0;
    SolveStatus status = SolveStatus::Optimal;
    std::int64_t lowerBound = 0;  // ceil(A) or ceil(B)
    std::int64_t nodesExplored = 0;
    std::optional<Routing> certificate;
};

/// A(G): average transit demand (1/n) sum over ordered pairs of (d(u,v)-1).
/// Its ceiling is an integer lower bound on the vertex-forwarding index.
Rational averageTransitDemand(const Graph& g);

/// B(G): average edge demand (1/eps) sum over ordered pairs of d(u,v).
/// Its ceiling is an integer lower bound on the edge-forwarding index.
Rational averageEdgeDemand(const Graph& g);

/// Row-regular shortcut: when every distance row sum is equal (as it is for
/// vertex-transitive graphs) the vertex index is rowSum - (n-1). Throws
/// NotRowRegularError when row sums differ; the result is meaningless then.
std::int64_t transitiveIndexFormula(const Graph& g);

/// Exact forwarding index by branch and bound over per-pair path choices.
/// Candidate pools are all shortest paths (minimal mode) or all simple paths
/// up to the length cap (general mode). Deterministic for a fixed thread
/// count; parallel runs agree with serial runs in value.
SolveResult exactIndex(const Graph& g, Objective objective, RoutingMode mode,
                       const SearchLimits& limits = {});

/// Local search upper bound: start from a shortest-path routing, then
/// repeatedly reroute a pair passing through a maximally loaded vertex/edge
/// along a minimum-bottleneck alternative, accepting moves that reduce the
/// descending-sorted load vector. Status is always UpperBound.
SolveResult heuristicIndex(const Graph& g, Objective objective, int iterations = 200,
                           TieRule seedRule = TieRule::LoadAwareGreedy, int maxPathLength = 0);

/// Cut-based lower bound on the edge-forwarding index of an undirected graph:
/// max over sampled subsets S (singletons plus greedy min-cut sweeps) of
/// ceil(2|S|(n-|S|)/|cut(S)|).
std::int64_t cutLowerBoundEdge(const Graph& g);

}  // namespace fwdidx

#endif
