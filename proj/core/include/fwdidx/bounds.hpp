#ifndef FWDIDX_BOUNDS_HPP
#define FWDIDX_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fwdidx/graph.hpp"
#include "fwdidx/solver.hpp"

namespace fwdidx {

/// One catalogued theorem evaluation. Inapplicable theorems stay in the
/// report as skipped entries carrying the failed condition. Advisory entries
/// ("n sufficiently large" style provisos) are informational and never used
/// in verification assertions; disputed entries reproduce the catalogued
/// statement but are known to fail on small cases.
struct BoundEntry {
    enum class Kind { Lower, Upper, Equality, Relation };

    std::string id;       // stable catalog id, e.g. "T2.6a"
    Kind kind = Kind::Upper;
    std::string target;   // "xi", "pi", "xi_m", "pi_m", "relation"
    bool applicable = false;
    std::string condition;
    std::int64_t value = 0;  // bound value when applicable and not a relation
    bool holds = false;      // relations only
    bool advisory = false;
    bool disputed = false;
    std::string citation;
};

struct BoundReport {
    std::vector<BoundEntry> entries;

    void add(BoundEntry e) { entries.push_back(std::move(e)); }
    const BoundEntry* find(const std::string& id) const;
};

/// Universal upper bounds for a connected graph of order n:
/// xi <= (n-1)(n-2) and pi <= floor(n^2/2).
std::pair<std::int64_t, std::int64_t> trivialUpperBounds(std::int64_t n);

struct IndexValues {
    std::int64_t xi = 0;
    std::int64_t pi = 0;
    std::int64_t xim = 0;
    std::int64_t pim = 0;
};

/// The three vertex/edge index relations:
/// (a) 2 xi + 2(n-1) <= maxDeg * pi, (b) pi <= xi + 2(n-1),
/// (c) pi_m <= xi_m + 2(n - minDeg).
BoundReport relationCheck(const IndexValues& v, std::int64_t n, std::int64_t maxDeg,
                          std::int64_t minDeg);

/// Upper bounds for a two-factor cartesian product from factor indices:
/// xi(GxH) <= n xi' + n' xi + (n-1)(n'-1), pi(GxH) <= max(n pi', n' pi).
std::pair<std::int64_t, std::int64_t> productUpper(std::int64_t nG, std::int64_t nH,
                                                   std::int64_t xiG, std::int64_t xiH,
                                                   std::int64_t piG, std::int64_t piH);

struct FactorStats {
    std::int64_t n = 0;
    std::int64_t xi = 0;
    std::int64_t pi = 0;
};

/// Exact product formulas, valid when every factor is vertex-/edge-optimal.
std::pair<std::int64_t, std::int64_t> productOptimal(const std::vector<FactorStats>& factors);

/// Everything the per-graph bound evaluations need; computed once.
struct GraphStats {
    std::int64_t n = 0;
    std::int64_t eps = 0;
    int maxDeg = 0;
    int minDeg = 0;
    int diameter = 0;
    int kappa = 0;
    int lambda = 0;
    bool regular3 = false;
    bool directed = false;
};

GraphStats computeGraphStats(const Graph& g);

/// Connectivity-conditioned upper bounds (undirected).
BoundReport connectivityBounds(const GraphStats& s);

/// Strong-digraph upper bounds.
BoundReport digraphBounds(const GraphStats& s);

/// Degree/diameter-conditioned upper bounds (undirected).
BoundReport degreeBounds(const GraphStats& s);

/// Bounds on the minimum index over all graphs of order n with the given
/// exact max- or min-degree. `exact` is set only by trusted catalog entries;
/// disputed printed formulas stay in the entry list, flagged.
struct ValueBounds {
    std::int64_t lower = 0;
    std::optional<std::int64_t> upper;
    std::optional<std::int64_t> exact;
    std::vector<std::string> citations;
};

struct MinIndexBounds {
    ValueBounds xi;
    ValueBounds pi;
    std::vector<BoundEntry> entries;
};

MinIndexBounds minIndexClosedForms(std::int64_t n, DegreeConstraint constraint);

/// Exhaustive minimum of the exact index over all connected graphs with the
/// given order and degree constraint, plus a witness attaining it.
struct EnumerativeMinimum {
    std::int64_t value = 0;
    std::optional<Graph> witness;
    std::int64_t graphsExamined = 0;
};

EnumerativeMinimum enumerativeMinIndex(int n, DegreeConstraint constraint, Objective objective,
                                       const EnumerationOptions& enumOpts = {},
                                       const SearchLimits& limits = {});

/// Full per-graph report: analytic lower bounds, trivial and conditioned
/// upper bounds; connectivity and degree parameters are computed internally.
BoundReport boundReportForGraph(const Graph& g);

}  // namespace fwdidx

#endif
