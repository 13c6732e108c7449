#include "fwdidx/graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>
#include <set>

namespace fwdidx {

namespace {

void checkEndpoints(int n, int u, int v) {
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw MalformedEdgeError("edge endpoint out of range: (" + std::to_string(u) + "," +
                                 std::to_string(v) + ") with n=" + std::to_string(n));
    if (u == v) throw MalformedEdgeError("self-loop at vertex " + std::to_string(u));
}

// BFS reach count over an adjacency list.
int reachCount(const std::vector<std::vector<int>>& adj, int start) {
    std::vector<char> seen(adj.size(), 0);
    std::queue<int> q;
    q.push(start);
    seen[start] = 1;
    int count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                q.push(w);
            }
        }
    }
    return count;
}

}  // namespace

Graph Graph::undirected(int n, const std::vector<std::pair<int, int>>& edges, std::string name) {
    if (n <= 0) throw MalformedEdgeError("graph order must be positive");
    std::set<std::pair<int, int>> unique;
    for (auto [u, v] : edges) {
        checkEndpoints(n, u, v);
        unique.emplace(std::min(u, v), std::max(u, v));
    }
    Graph g;
    g.n_ = n;
    g.directed_ = false;
    g.name_ = std::move(name);
    g.out_.resize(n);
    g.edges_.assign(unique.begin(), unique.end());
    for (auto [u, v] : g.edges_) {
        g.out_[u].push_back(v);
        g.out_[v].push_back(u);
    }
    for (auto& nb : g.out_) std::sort(nb.begin(), nb.end());
    g.arcCount_ = 2 * static_cast<std::int64_t>(g.edges_.size());
    if (n > 1 && reachCount(g.out_, 0) != n)
        throw DisconnectedGraphError("graph is not connected");
    return g;
}

Graph Graph::directed(int n, const std::vector<std::pair<int, int>>& arcs, std::string name) {
    if (n <= 0) throw MalformedEdgeError("graph order must be positive");
    std::set<std::pair<int, int>> unique;
    for (auto [u, v] : arcs) {
        checkEndpoints(n, u, v);
        unique.emplace(u, v);
    }
    Graph g;
    g.n_ = n;
    g.directed_ = true;
    g.name_ = std::move(name);
    g.out_.resize(n);
    g.in_.resize(n);
    g.edges_.assign(unique.begin(), unique.end());
    for (auto [u, v] : g.edges_) {
        g.out_[u].push_back(v);
        g.in_[v].push_back(u);
    }
    for (auto& nb : g.out_) std::sort(nb.begin(), nb.end());
    for (auto& nb : g.in_) std::sort(nb.begin(), nb.end());
    g.arcCount_ = static_cast<std::int64_t>(g.edges_.size());
    if (n > 1 && (reachCount(g.out_, 0) != n || reachCount(g.in_, 0) != n))
        throw DisconnectedGraphError("digraph is not strongly connected");
    return g;
}

bool Graph::hasArc(int u, int v) const {
    const auto& nb = out_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::maxDegree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v)
        best = std::max(best, directed_ ? std::min(degree(v), inDegree(v)) : degree(v));
    return best;
}

int Graph::minDegree() const {
    int best = n_;
    for (int v = 0; v < n_; ++v)
        best = std::min(best, directed_ ? std::min(degree(v), inDegree(v)) : degree(v));
    return best;
}

bool Graph::isRegular(int k) const {
    for (int v = 0; v < n_; ++v) {
        if (degree(v) != k) return false;
        if (directed_ && inDegree(v) != k) return false;
    }
    return true;
}

int Graph::edgeIndex(int u, int v) const {
    std::pair<int, int> key = directed_ ? std::make_pair(u, v)
                                        : std::make_pair(std::min(u, v), std::max(u, v));
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return -1;
    return static_cast<int>(it - edges_.begin());
}

void Graph::setVertexLabels(std::vector<std::string> labels) {
    if (static_cast<int>(labels.size()) != n_)
        throw BadParamsError("vertex label count does not match order");
    labels_ = std::move(labels);
}

bool DistanceMatrix::rowRegular() const {
    for (auto s : rowSums)
        if (s != rowSums[0]) return false;
    return true;
}

DistanceMatrix distances(const Graph& g) {
    const int n = g.order();
    DistanceMatrix m;
    m.n = n;
    m.d.assign(static_cast<std::size_t>(n) * n, 0);
    m.rowSums.assign(n, 0);
    std::vector<int> dist(n);
    std::vector<int> queue(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        int head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            int v = queue[head++];
            for (int w : g.outNeighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue[tail++] = w;
                }
            }
        }
        for (int t = 0; t < n; ++t) {
            m.d[static_cast<std::size_t>(s) * n + t] = dist[t];
            m.rowSums[s] += dist[t];
            m.diameter = std::max(m.diameter, dist[t]);
        }
    }
    return m;
}

namespace {

// Unit-capacity max-flow (BFS augmenting paths) on a small directed network
// given as capacity-adjacency. Enough for desk-scale connectivity queries.
class UnitFlowNetwork {
public:
    explicit UnitFlowNetwork(int nodes) : n_(nodes), head_(nodes, -1) {}

    void addArc(int u, int v, int cap) {
        arcs_.push_back({v, head_[u], cap});
        head_[u] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({u, head_[v], 0});
        head_[v] = static_cast<int>(arcs_.size()) - 1;
    }

    int maxFlow(int s, int t, int stopAt) {
        int flow = 0;
        while (flow < stopAt && augment(s, t)) ++flow;
        return flow;
    }

private:
    struct Arc {
        int to, next, cap;
    };

    bool augment(int s, int t) {
        std::vector<int> parentArc(n_, -1);
        std::vector<char> seen(n_, 0);
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty() && !seen[t]) {
            int v = q.front();
            q.pop();
            for (int a = head_[v]; a != -1; a = arcs_[a].next) {
                if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
                    seen[arcs_[a].to] = 1;
                    parentArc[arcs_[a].to] = a;
                    q.push(arcs_[a].to);
                }
            }
        }
        if (!seen[t]) return false;
        for (int v = t; v != s;) {
            int a = parentArc[v];
            arcs_[a].cap -= 1;
            arcs_[a ^ 1].cap += 1;
            v = arcs_[a ^ 1].to;
        }
        return true;
    }

    int n_;
    std::vector<int> head_;
    std::vector<Arc> arcs_;
};

// Max number of internally vertex-disjoint s-t paths (vertex splitting).
int vertexFlow(const Graph& g, int s, int t, int stopAt) {
    const int n = g.order();
    // node 2v = v_in, 2v+1 = v_out
    UnitFlowNetwork net(2 * n);
    for (int v = 0; v < n; ++v) net.addArc(2 * v, 2 * v + 1, (v == s || v == t) ? n : 1);
    for (int u = 0; u < n; ++u)
        for (int v : g.outNeighbors(u)) net.addArc(2 * u + 1, 2 * v, 1);
    return net.maxFlow(2 * s + 1, 2 * t, stopAt);
}

int edgeFlow(const Graph& g, int s, int t, int stopAt) {
    UnitFlowNetwork net(g.order());
    if (g.isDirected()) {
        for (int u = 0; u < g.order(); ++u)
            for (int v : g.outNeighbors(u)) net.addArc(u, v, 1);
    } else {
        for (auto [u, v] : g.edges()) {
            net.addArc(u, v, 1);
            net.addArc(v, u, 1);
        }
    }
    return net.maxFlow(s, t, stopAt);
}

}  // namespace

ConnectivityReport connectivity(const Graph& g) {
    const int n = g.order();
    ConnectivityReport rep;
    if (n == 1) {
        rep.kappa = 0;
        rep.lambda = 0;
        return rep;
    }

    // λ: fix vertex 0, min cut against every other vertex (both directions
    // for digraphs). Menger over edges.
    int lambda = n * n;
    for (int t = 1; t < n; ++t) {
        lambda = std::min(lambda, edgeFlow(g, 0, t, lambda));
        if (g.isDirected()) lambda = std::min(lambda, edgeFlow(g, t, 0, lambda));
    }
    rep.lambda = lambda;

    // κ: min over non-adjacent ordered pairs; complete graphs have none and
    // get n-1 by convention.
    int kappa = n - 1;
    for (int s = 0; s < n; ++s) {
        for (int t = 0; t < n; ++t) {
            if (s == t || g.hasArc(s, t)) continue;
            kappa = std::min(kappa, vertexFlow(g, s, t, kappa));
        }
    }
    rep.kappa = kappa;
    return rep;
}

Graph cartesianProduct(const Graph& g, const Graph& h) {
    if (g.isDirected() != h.isDirected())
        throw MixedDirectednessError("cartesian product operands must share directedness");
    const int nh = h.order();
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < g.order(); ++u) {
        for (int x = 0; x < nh; ++x) {
            int id = u * nh + x;
            for (int y : h.outNeighbors(x)) arcs.emplace_back(id, u * nh + y);
            for (int v : g.outNeighbors(u)) arcs.emplace_back(id, v * nh + x);
        }
    }
    int n = g.order() * nh;
    return g.isDirected() ? Graph::directed(n, arcs) : Graph::undirected(n, arcs);
}

namespace {

// Labeled-graph edge masks over the C(n,2) vertex pairs, i < j in colex order.
struct PairIndex {
    std::array<std::array<int, 8>, 8> idx{};
    int count = 0;

    explicit PairIndex(int n) {
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) idx[i][j] = count++;
    }
};

bool maskConnected(int n, std::uint64_t mask, const PairIndex& pi) {
    std::uint64_t visited = 1;
    std::uint64_t frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (int v = 0; v < n; ++v) {
            if (!(frontier >> v & 1)) continue;
            for (int w = 0; w < n; ++w) {
                if (w == v || (visited >> w & 1)) continue;
                int bit = v < w ? pi.idx[v][w] : pi.idx[w][v];
                if (mask >> bit & 1) next |= std::uint64_t{1} << w;
            }
        }
        visited |= next;
        frontier = next;
    }
    return visited == (std::uint64_t{1} << n) - 1;
}

std::uint64_t permuteMask(int n, std::uint64_t mask, const std::vector<int>& perm,
                          const PairIndex& pi) {
    std::uint64_t out = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (!(mask >> pi.idx[i][j] & 1)) continue;
            int a = perm[i], b = perm[j];
            out |= std::uint64_t{1} << (a < b ? pi.idx[a][b] : pi.idx[b][a]);
        }
    }
    return out;
}

// True iff mask is the minimum over all vertex permutations of itself.
bool isCanonicalMask(int n, std::uint64_t mask, const PairIndex& pi) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
        if (permuteMask(n, mask, perm, pi) < mask) return false;
    }
    return true;
}

Graph maskToGraph(int n, std::uint64_t mask, const PairIndex& pi) {
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (mask >> pi.idx[i][j] & 1) edges.emplace_back(i, j);
    return Graph::undirected(n, edges);
}

}  // namespace

namespace {

void checkEnumerationOrder(int n, const EnumerationOptions& opts) {
    if (n < 1 || n > opts.orderLimit)
        throw LimitExceededError("enumeration order " + std::to_string(n) + " above limit " +
                                 std::to_string(opts.orderLimit));
    if (n > 8) throw LimitExceededError("labeled enumeration supports n <= 8");
}

}  // namespace

std::int64_t enumerateConnectedGraphs(int n, const std::function<void(const Graph&)>& yield,
                                      const EnumerationOptions& opts) {
    checkEnumerationOrder(n, opts);
    PairIndex pi(n);
    const std::uint64_t total = std::uint64_t{1} << pi.count;
    const std::uint64_t end = std::min(opts.maskEnd, total);
    std::int64_t emitted = 0;
    for (std::uint64_t mask = opts.maskBegin; mask < end; ++mask) {
        if (!maskConnected(n, mask, pi)) continue;
        if (opts.dedup && !isCanonicalMask(n, mask, pi)) continue;
        yield(maskToGraph(n, mask, pi));
        ++emitted;
    }
    return emitted;
}

std::int64_t enumerateConnectedGraphs(int n, DegreeConstraint constraint,
                                      const std::function<void(const Graph&)>& yield,
                                      const EnumerationOptions& opts) {
    checkEnumerationOrder(n, opts);
    PairIndex pi(n);
    const std::uint64_t total = std::uint64_t{1} << pi.count;
    const std::uint64_t end = std::min(opts.maskEnd, total);
    std::int64_t emitted = 0;
    std::vector<int> deg(n);
    for (std::uint64_t mask = opts.maskBegin; mask < end; ++mask) {
        std::fill(deg.begin(), deg.end(), 0);
        for (int j = 1; j < n; ++j) {
            for (int i = 0; i < j; ++i) {
                if (mask >> pi.idx[i][j] & 1) {
                    ++deg[i];
                    ++deg[j];
                }
            }
        }
        int lo = n, hi = 0;
        for (int v = 0; v < n; ++v) {
            lo = std::min(lo, deg[v]);
            hi = std::max(hi, deg[v]);
        }
        if (constraint.kind == DegreeConstraint::MaxDegree ? hi != constraint.value
                                                           : lo != constraint.value)
            continue;
        if (!maskConnected(n, mask, pi)) continue;
        if (opts.dedup && !isCanonicalMask(n, mask, pi)) continue;
        yield(maskToGraph(n, mask, pi));
        ++emitted;
    }
    return emitted;
}

}  // namespace fwdidx
