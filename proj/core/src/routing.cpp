#include "fwdidx/routing.hpp"

#include <algorithm>

namespace fwdidx {

void Routing::setPath(std::vector<int> path) {
    if (path.size() < 2) throw InvalidRoutingError("path needs at least two vertices");
    int src = path.front(), dst = path.back();
    if (src < 0 || src >= n_ || dst < 0 || dst >= n_ || src == dst)
        throw InvalidRoutingError("bad path endpoints");
    paths_[static_cast<std::size_t>(src) * n_ + dst] = std::move(path);
}

std::int64_t Routing::pairCount() const {
    std::int64_t count = 0;
    for (const auto& p : paths_)
        if (!p.empty()) ++count;
    return count;
}

RoutingValidation validateRouting(const Graph& g, const Routing& r) {
    RoutingValidation rep;
    const int n = g.order();
    rep.complete = true;
    if (r.order() != n) {
        rep.complete = false;
        rep.violations.push_back({0, 0, "routing order differs from graph order"});
        return rep;
    }
    std::vector<char> onPath(n);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            if (!r.hasPath(x, y)) {
                rep.complete = false;
                rep.missingPairs.emplace_back(x, y);
                continue;
            }
            const auto& p = r.path(x, y);
            if (p.front() != x || p.back() != y) {
                rep.violations.push_back({x, y, "path endpoints do not match the pair"});
                continue;
            }
            std::fill(onPath.begin(), onPath.end(), 0);
            bool bad = false;
            for (std::size_t i = 0; i < p.size(); ++i) {
                int v = p[i];
                if (v < 0 || v >= n) {
                    rep.violations.push_back({x, y, "vertex out of range"});
                    bad = true;
                    break;
                }
                if (onPath[v]) {
                    rep.violations.push_back({x, y, "repeated vertex " + std::to_string(v)});
                    bad = true;
                    break;
                }
                onPath[v] = 1;
                if (i > 0 && !g.hasArc(p[i - 1], v)) {
                    rep.violations.push_back({x, y, "step (" + std::to_string(p[i - 1]) + "," +
                                                        std::to_string(v) + ") is not an arc"});
                    bad = true;
                    break;
                }
            }
            if (bad) continue;
        }
    }
    return rep;
}

namespace {

void requireValid(const Graph& g, const Routing& r) {
    auto rep = validateRouting(g, r);
    if (rep.ok()) return;
    std::string msg = "invalid routing:";
    if (!rep.complete) msg += " incomplete (" + std::to_string(rep.missingPairs.size()) + " pairs missing)";
    if (!rep.violations.empty())
        msg += " first violation (" + std::to_string(rep.violations[0].src) + "," +
               std::to_string(rep.violations[0].dst) + "): " + rep.violations[0].reason;
    throw InvalidRoutingError(msg);
}

}  // namespace

RoutingClassification classifyRouting(const Graph& g, const Routing& r) {
    requireValid(g, r);
    const int n = g.order();
    auto dm = distances(g);

    RoutingClassification c;
    c.minimal = true;
    c.symmetric = true;
    c.consistent = true;

    for (int x = 0; x < n && (c.minimal || c.symmetric || c.consistent); ++x) {
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            const auto& p = r.path(x, y);
            if (static_cast<int>(p.size()) - 1 != dm.at(x, y)) c.minimal = false;
            if (c.symmetric) {
                const auto& q = r.path(y, x);
                if (q.size() != p.size() ||
                    !std::equal(p.begin(), p.end(), q.rbegin()))
                    c.symmetric = false;
            }
            if (c.consistent) {
                for (std::size_t i = 1; i + 1 < p.size() && c.consistent; ++i) {
                    int z = p[i];
                    const auto& front = r.path(x, z);
                    const auto& back = r.path(z, y);
                    if (front.size() != i + 1 || back.size() != p.size() - i ||
                        !std::equal(front.begin(), front.end(), p.begin()) ||
                        !std::equal(back.begin(), back.end(), p.begin() + i))
                        c.consistent = false;
                }
            }
        }
    }
    return c;
}

LoadProfile loadProfile(const Graph& g, const Routing& r) {
    requireValid(g, r);
    const int n = g.order();
    LoadProfile lp;
    lp.vertexLoad.assign(n, 0);
    lp.edgeLoad.assign(g.edges().size(), 0);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            const auto& p = r.path(x, y);
            for (std::size_t i = 1; i + 1 < p.size(); ++i) ++lp.vertexLoad[p[i]];
            for (std::size_t i = 1; i < p.size(); ++i) ++lp.edgeLoad[g.edgeIndex(p[i - 1], p[i])];
            lp.totalTransit += static_cast<std::int64_t>(p.size()) - 2;
            lp.totalTraversals += static_cast<std::int64_t>(p.size()) - 1;
        }
    }
    for (auto v : lp.vertexLoad) lp.maxVertexLoad = std::max(lp.maxVertexLoad, v);
    for (auto e : lp.edgeLoad) lp.maxEdgeLoad = std::max(lp.maxEdgeLoad, e);
    return lp;
}

Routing shortestPathRouting(const Graph& g, TieRule rule) {
    const int n = g.order();
    auto dm = distances(g);
    Routing r(n);
    std::vector<std::int64_t> transit(n, 0);

    // One shortest-path tree per destination; each source picks a parent one
    // hop closer to the destination. Sources are committed in order of
    // increasing distance so a parent's own path already exists.
    std::vector<int> order(n);
    std::vector<int> parent(n);
    for (int dst = 0; dst < n; ++dst) {
        for (int v = 0; v < n; ++v) order[v] = v;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return dm.at(a, dst) < dm.at(b, dst); });
        std::fill(parent.begin(), parent.end(), -1);
        for (int src : order) {
            if (src == dst) continue;
            int best = -1;
            for (int w : g.outNeighbors(src)) {
                if (dm.at(w, dst) != dm.at(src, dst) - 1) continue;
                if (best < 0) {
                    best = w;
                } else if (rule == TieRule::LoadAwareGreedy &&
                           transit[w] < transit[best]) {
                    best = w;
                }
                // LowestLabel: neighbors come sorted, first hit wins.
            }
            parent[src] = best;
            std::vector<int> path;
            for (int v = src; v != dst; v = parent[v]) path.push_back(v);
            path.push_back(dst);
            for (std::size_t i = 1; i + 1 < path.size(); ++i) ++transit[path[i]];
            r.setPath(std::move(path));
        }
    }
    return r;
}

}  // namespace fwdidx
