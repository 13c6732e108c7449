#ifndef FWDIDX_ROUTING_HPP
#define FWDIDX_ROUTING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fwdidx/graph.hpp"

namespace fwdidx {

/// A routing: one simple path for every ordered vertex pair (x,y), x != y,
/// stored explicitly as vertex sequences so non-consistent routings (which
/// the optimum may require) stay representable. Immutable once validated.
class Routing {
public:
    explicit Routing(int n) : n_(n), paths_(static_cast<std::size_t>(n) * n) {}

    int order() const { return n_; }

    /// Installs the path path[0]..path.back() for the pair (path[0], path.back()).
    void setPath(std::vector<int> path);

    bool hasPath(int src, int dst) const { return !pathRef(src, dst).empty(); }
    const std::vector<int>& path(int src, int dst) const { return pathRef(src, dst); }

    /// Number of installed pairs; a complete routing has n(n-1).
    std::int64_t pairCount() const;

private:
    const std::vector<int>& pathRef(int src, int dst) const {
        return paths_[static_cast<std::size_t>(src) * n_ + dst];
    }

    int n_;
    std::vector<std::vector<int>> paths_;
};

/// Itemized validation outcome; downstream operations reject a routing that
/// fails any check instead of silently computing on it.
struct RoutingValidation {
    struct Violation {
        int src = 0;
        int dst = 0;
        std::string reason;
    };

    bool complete = false;
    std::vector<std::pair<int, int>> missingPairs;
    std::vector<Violation> violations;

    bool ok() const { return complete && violations.empty(); }
};

RoutingValidation validateRouting(const Graph& g, const Routing& r);

struct RoutingClassification {
    bool minimal = false;     // every path is shortest
    bool symmetric = false;   // R(y,x) is the reverse of R(x,y)
    bool consistent = false;  // R(x,y) = R(x,z) ++ R(z,y) for interior z
};

/// Throws InvalidRoutingError when the routing fails validation.
RoutingClassification classifyRouting(const Graph& g, const Routing& r);

/// Transit loads. Endpoint vertices are not counted in vertex loads; an
/// undirected edge aggregates both traversal directions into one counter,
/// a digraph counts each arc separately.
struct LoadProfile {
    std::vector<std::int64_t> vertexLoad;
    std::vector<std::int64_t> edgeLoad;  // indexed like Graph::edges()
    std::int64_t maxVertexLoad = 0;      // xi(G,R)
    std::int64_t maxEdgeLoad = 0;        // pi(G,R)
    std::int64_t totalTransit = 0;       // sum of (path length - 1)
    std::int64_t totalTraversals = 0;    // sum of path lengths
};

LoadProfile loadProfile(const Graph& g, const Routing& r);

enum class TieRule {
    LowestLabel,      // smallest-labeled parent; yields the lex-min shortest paths
    LoadAwareGreedy,  // parent with the currently smallest transit load
};

/// Minimal routing built from per-destination shortest-path trees with a
/// deterministic, seedless tie-break. LowestLabel gives the lexicographically
/// minimal shortest paths and is therefore also consistent; LoadAwareGreedy
/// balances transit loads instead and may route a source differently in
/// different destination trees.
Routing shortestPathRouting(const Graph& g, TieRule rule = TieRule::LowestLabel);

}  // namespace fwdidx

#endif
