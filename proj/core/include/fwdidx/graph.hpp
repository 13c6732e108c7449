#ifndef FWDIDX_GRAPH_HPP
#define FWDIDX_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fwdidx/errors.hpp"

namespace fwdidx {

/// Simple connected graph or strongly connected digraph with dense vertex
/// labels 0..n-1. Immutable after construction; constructors validate.
///
/// Undirected edges are stored as symmetric arc pairs so one traversal API
/// serves both directednesses; an undirected {u,v} counts as one edge.
class Graph {
public:
    /// Builds and validates an undirected graph. Edges may be listed in either
    /// or both orientations; they are symmetrized and deduplicated.
    static Graph undirected(int n, const std::vector<std::pair<int, int>>& edges,
                            std::string name = "");

    /// Builds and validates a digraph from ordered arcs.
    static Graph directed(int n, const std::vector<std::pair<int, int>>& arcs,
                          std::string name = "");

    int order() const { return n_; }
    bool isDirected() const { return directed_; }

    /// Edge count: arcs/2 for undirected graphs, arcs for digraphs.
    std::int64_t size() const { return directed_ ? arcCount_ : arcCount_ / 2; }
    std::int64_t arcCount() const { return arcCount_; }

    const std::vector<int>& outNeighbors(int v) const { return out_[v]; }
    const std::vector<int>& inNeighbors(int v) const { return directed_ ? in_[v] : out_[v]; }
    bool hasArc(int u, int v) const;

    int degree(int v) const { return static_cast<int>(out_[v].size()); }
    int inDegree(int v) const { return static_cast<int>(inNeighbors(v).size()); }
    /// Max/min degree. For digraphs the degree of a vertex is taken as
    /// min(out-degree, in-degree), the quantity the strong-connectivity
    /// bounds constrain.
    int maxDegree() const;
    int minDegree() const;
    bool isRegular(int k) const;

    /// Unique edge list: u < v once per edge for undirected graphs, all
    /// ordered arcs for digraphs. Order is fixed, usable as an edge index.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    /// Index of an edge/arc in edges(), -1 if absent. Undirected lookups
    /// accept either endpoint order.
    int edgeIndex(int u, int v) const;

    const std::string& name() const { return name_; }
    void rename(std::string name) { name_ = std::move(name); }

    /// Optional per-vertex labels (bit strings, tuples, permutations) attached
    /// by family generators. Metadata only; empty unless a generator set them.
    const std::vector<std::string>& vertexLabels() const { return labels_; }
    void setVertexLabels(std::vector<std::string> labels);

private:
    Graph() = default;

    int n_ = 0;
    bool directed_ = false;
    std::int64_t arcCount_ = 0;
    std::string name_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;  // only filled for digraphs
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::string> labels_;
};

/// All-pairs hop distances, their row sums and the diameter.
struct DistanceMatrix {
    int n = 0;
    std::vector<int> d;  // row-major n*n
    std::vector<std::int64_t> rowSums;
    int diameter = 0;

    int at(int u, int v) const { return d[static_cast<std::size_t>(u) * n + v]; }
    bool rowRegular() const;
};

/// BFS hop distances for every ordered pair. Connectivity is guaranteed by
/// the Graph constructor, so all entries are finite.
DistanceMatrix distances(const Graph& g);

struct ConnectivityReport {
    int kappa = 0;   // vertex connectivity
    int lambda = 0;  // edge connectivity
};

/// Vertex connectivity via unit-capacity max-flow with vertex splitting over
/// all non-adjacent pairs (n-1 for complete graphs), edge connectivity via
/// minimum edge cuts. Digraphs report strong vertex/arc connectivity.
ConnectivityReport connectivity(const Graph& g);

/// Cartesian product: (u,x)~(v,y) iff (u=v and x~y) or (x=y and u~v).
/// Vertex (u,x) gets label u*|V(h)|+x. Operands must share directedness.
Graph cartesianProduct(const Graph& g, const Graph& h);

struct DegreeConstraint {
    enum Kind { MaxDegree, MinDegree };
    Kind kind = MaxDegree;
    int value = 0;
};

struct EnumerationOptions {
    int orderLimit = 6;   // LimitExceeded above this
    bool dedup = true;    // emit only canonical representatives of iso classes
    std::uint64_t maskBegin = 0;  // edge-mask partition, for parallel consumers
    std::uint64_t maskEnd = ~std::uint64_t{0};
};

/// Streams every connected simple undirected graph on n labeled vertices,
/// optionally restricted to an exact max- or min-degree. With dedup enabled a
/// graph is emitted only when its edge mask is the canonical (permutation-
/// minimal) form, so disjoint mask partitions still dedup globally.
/// Returns the number of graphs emitted.
std::int64_t enumerateConnectedGraphs(int n, const std::function<void(const Graph&)>& yield,
                                      const EnumerationOptions& opts = {});
std::int64_t enumerateConnectedGraphs(int n, DegreeConstraint constraint,
                                      const std::function<void(const Graph&)>& yield,
                                      const EnumerationOptions& opts = {});

}  // namespace fwdidx

#endif
