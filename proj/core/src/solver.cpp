#include "fwdidx/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <memory>
#include <queue>
#include <thread>

namespace fwdidx {

std::string to_string(Objective o) { return o == Objective::Vertex ? "vertex" : "edge"; }

std::string to_string(RoutingMode m) { return m == RoutingMode::Minimal ? "minimal" : "general"; }

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::UpperBound: return "upper-bound";
        case SolveStatus::LowerBoundOnly: return "lower-bound-only";
    }
    return "?";
}

Rational averageTransitDemand(const Graph& g) {
    auto dm = distances(g);
    std::int64_t sum = 0;
    for (auto s : dm.rowSums) sum += s;
    sum -= static_cast<std::int64_t>(g.order()) * (g.order() - 1);
    return Rational(sum, g.order());
}

Rational averageEdgeDemand(const Graph& g) {
    if (g.size() == 0) return Rational(0);
    auto dm = distances(g);
    std::int64_t sum = 0;
    for (auto s : dm.rowSums) sum += s;
    return Rational(sum, g.size());
}

std::int64_t transitiveIndexFormula(const Graph& g) {
    auto dm = distances(g);
    if (!dm.rowRegular())
        throw NotRowRegularError("distance row sums differ; transitive formula inapplicable");
    return dm.rowSums[0] - (g.order() - 1);
}

namespace {

using Clock = std::chrono::steady_clock;

// ---------------------------------------------------------------- candidates

// All shortest x->y paths, walking the distance-decreasing DAG. Neighbors are
// visited in label order, so the pool comes out lexicographically sorted.
void collectShortestPaths(const Graph& g, const DistanceMatrix& dm, int x, int y,
                          std::vector<std::vector<int>>& out) {
    std::vector<int> path{x};
    auto dfs = [&](auto&& self, int v) -> void {
        if (v == y) {
            out.push_back(path);
            return;
        }
        for (int w : g.outNeighbors(v)) {
            if (dm.at(w, y) != dm.at(v, y) - 1) continue;
            path.push_back(w);
            self(self, w);
            path.pop_back();
        }
    };
    dfs(dfs, x);
}

// All simple x->y paths with at most maxLen edges, sorted by (length, lex).
void collectSimplePaths(const Graph& g, int x, int y, int maxLen,
                        std::vector<std::vector<int>>& out) {
    std::vector<int> path{x};
    std::vector<char> onPath(g.order(), 0);
    onPath[x] = 1;
    auto dfs = [&](auto&& self, int v) -> void {
        if (v == y) {
            out.push_back(path);
            return;
        }
        if (static_cast<int>(path.size()) - 1 >= maxLen) return;
        for (int w : g.outNeighbors(v)) {
            if (onPath[w]) continue;
            onPath[w] = 1;
            path.push_back(w);
            self(self, w);
            path.pop_back();
            onPath[w] = 0;
        }
    };
    dfs(dfs, x);
    std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
}

// A path affects vertex loads only through its interior vertex set, so for
// the vertex objective a candidate whose interiors contain another's can be
// dropped: swapping it out never raises any load. Candidates arrive sorted by
// (length, lex); the first representative of each minimal interior set wins.
void reduceToMinimalInteriorSets(int n, std::vector<std::vector<int>>& pool) {
    if (n > 64 || pool.size() < 2) return;
    std::vector<std::uint64_t> keptMasks;
    std::vector<std::vector<int>> kept;
    for (auto& p : pool) {
        std::uint64_t mask = 0;
        for (std::size_t i = 1; i + 1 < p.size(); ++i) mask |= std::uint64_t{1} << p[i];
        bool dominated = false;
        for (auto m : keptMasks) {
            if ((m & ~mask) == 0) {  // an earlier interior set is contained in this one
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            keptMasks.push_back(mask);
            kept.push_back(std::move(p));
        }
    }
    pool = std::move(kept);
}

// ------------------------------------------------------- forced-load bounds

std::int64_t unreachablePairs(const Graph& g, int skipVertex, int skipEdge) {
    const int n = g.order();
    std::int64_t count = 0;
    std::vector<char> seen(n);
    std::vector<int> queue(n);
    for (int u = 0; u < n; ++u) {
        if (u == skipVertex) continue;
        std::fill(seen.begin(), seen.end(), 0);
        seen[u] = 1;
        int head = 0, tail = 0;
        queue[tail++] = u;
        while (head < tail) {
            int v = queue[head++];
            for (int w : g.outNeighbors(v)) {
                if (w == skipVertex || seen[w]) continue;
                if (g.edgeIndex(v, w) == skipEdge) continue;
                seen[w] = 1;
                queue[tail++] = w;
            }
        }
        for (int w = 0; w < n; ++w)
            if (w != u && w != skipVertex && !seen[w]) ++count;
    }
    return count;
}

// Every routing loads v with at least the number of ordered pairs v strictly
// separates; likewise for a separating edge/arc.
std::int64_t vertexSeparationBound(const Graph& g) {
    std::int64_t best = 0;
    for (int v = 0; v < g.order(); ++v)
        best = std::max(best, unreachablePairs(g, v, -1));
    return best;
}

std::int64_t edgeSeparationBound(const Graph& g) {
    std::int64_t best = 0;
    for (int e = 0; e < static_cast<int>(g.edges().size()); ++e)
        best = std::max(best, unreachablePairs(g, -1, e));
    return best;
}

// ------------------------------------------------------------ b&b machinery

struct PairTask {
    int src = 0, dst = 0;
    std::int64_t floorContribution = 0;  // d-1 for vertex objective, d for edge
    std::vector<std::vector<int>> candidates;
};

struct SearchShared {
    std::atomic<std::int64_t> best{0};
    std::atomic<std::int64_t> nodes{0};
    std::atomic<bool> stop{false};
    std::atomic<bool> budgetHit{false};
    std::int64_t internalLB = 0;
    std::int64_t maxNodes = 0;
    bool timed = false;
    Clock::time_point deadline;
};

class Worker {
public:
    Worker(const Graph& g, Objective obj, const std::vector<PairTask>& tasks,
           const std::vector<std::int64_t>& suffixFloor, std::vector<std::int64_t> vload,
           std::vector<std::int64_t> eload, std::int64_t total, std::int64_t baseMax,
           SearchShared& shared)
        : g_(g),
          obj_(obj),
          tasks_(tasks),
          suffixFloor_(suffixFloor),
          vload_(std::move(vload)),
          eload_(std::move(eload)),
          total_(total),
          curMax_(baseMax),
          shared_(shared),
          chosen_(tasks.size(), -1),
          orderByDepth_(tasks.size()) {
        denominator_ = obj == Objective::Vertex ? g.order() : g.size();
    }

    void run(int firstOffset, int firstStride) {
        firstOffset_ = firstOffset;
        firstStride_ = firstStride;
        descend(0);
    }

    bool improved() const { return improved_; }
    std::int64_t bestValue() const { return bestValue_; }
    const std::vector<std::vector<int>>& bestChoice() const { return bestChoice_; }

private:
    std::int64_t pathScore(const std::vector<int>& p) const {
        std::int64_t s = 0;
        if (obj_ == Objective::Vertex) {
            for (std::size_t i = 1; i + 1 < p.size(); ++i) s = std::max(s, vload_[p[i]]);
        } else {
            for (std::size_t i = 1; i < p.size(); ++i)
                s = std::max(s, eload_[g_.edgeIndex(p[i - 1], p[i])]);
        }
        return s;
    }

    std::int64_t contributionOf(const std::vector<int>& p) const {
        return static_cast<std::int64_t>(p.size()) - (obj_ == Objective::Vertex ? 2 : 1);
    }

    void apply(const std::vector<int>& p, int dir) {
        if (obj_ == Objective::Vertex) {
            for (std::size_t i = 1; i + 1 < p.size(); ++i) vload_[p[i]] += dir;
        } else {
            for (std::size_t i = 1; i < p.size(); ++i)
                eload_[g_.edgeIndex(p[i - 1], p[i])] += dir;
        }
        total_ += dir * contributionOf(p);
    }

    bool tick() {
        auto used = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (used > shared_.maxNodes) {
            shared_.budgetHit.store(true);
            shared_.stop.store(true);
            return false;
        }
        if (shared_.timed && (used & 0xfff) == 0 && Clock::now() > shared_.deadline) {
            shared_.budgetHit.store(true);
            shared_.stop.store(true);
            return false;
        }
        return true;
    }

    void recordSolution() {
        std::int64_t mine = curMax_;
        std::int64_t cur = shared_.best.load();
        while (mine < cur && !shared_.best.compare_exchange_weak(cur, mine)) {
        }
        if (mine < bestValue_) {
            bestValue_ = mine;
            improved_ = true;
            bestChoice_.clear();
            bestChoice_.reserve(tasks_.size());
            for (std::size_t i = 0; i < tasks_.size(); ++i)
                bestChoice_.push_back(tasks_[i].candidates[chosen_[i]]);
        }
        if (shared_.best.load() <= shared_.internalLB) shared_.stop.store(true);
    }

    void descend(std::size_t depth) {
        if (shared_.stop.load(std::memory_order_relaxed)) return;
        if (depth == tasks_.size()) {
            recordSolution();
            return;
        }
        const auto& task = tasks_[depth];
        const std::int64_t rest = suffixFloor_[depth + 1];
        std::int64_t entryBest = shared_.best.load(std::memory_order_relaxed);
        // Averaging prune: a completion has max >= ceil((total+rest')/denom),
        // so candidates contributing more than this margin cannot help.
        std::int64_t maxContribution = (entryBest - 1) * denominator_ - total_ - rest;

        auto& order = orderByDepth_[depth];
        order.clear();
        for (int c = 0; c < static_cast<int>(task.candidates.size()); ++c) {
            if (depth == 0 && (c % firstStride_) != firstOffset_) continue;
            const auto& p = task.candidates[c];
            if (contributionOf(p) > maxContribution) break;  // pool sorted by length
            std::int64_t score = pathScore(p);
            if (std::max(curMax_, score + 1) >= entryBest) continue;
            order.emplace_back(score, c);
        }
        std::sort(order.begin(), order.end());

        for (std::size_t k = 0; k < order.size(); ++k) {
            if (shared_.stop.load(std::memory_order_relaxed)) return;
            auto [score, c] = order[k];
            const auto& p = task.candidates[c];
            std::int64_t bestKnown = shared_.best.load(std::memory_order_relaxed);
            if (std::max(curMax_, score + 1) >= bestKnown) continue;
            if (total_ + contributionOf(p) + rest > (bestKnown - 1) * denominator_) continue;
            if (!tick()) return;
            apply(p, +1);
            std::int64_t prevMax = curMax_;
            curMax_ = std::max(curMax_, score + 1);
            chosen_[depth] = c;
            descend(depth + 1);
            curMax_ = prevMax;
            apply(p, -1);
        }
    }

    const Graph& g_;
    Objective obj_;
    const std::vector<PairTask>& tasks_;
    const std::vector<std::int64_t>& suffixFloor_;
    std::vector<std::int64_t> vload_;
    std::vector<std::int64_t> eload_;
    std::int64_t total_;
    std::int64_t curMax_;
    std::int64_t denominator_;
    SearchShared& shared_;
    std::vector<int> chosen_;
    std::vector<std::vector<std::pair<std::int64_t, int>>> orderByDepth_;
    int firstOffset_ = 0;
    int firstStride_ = 1;
    bool improved_ = false;
    std::int64_t bestValue_ = INT64_MAX;
    std::vector<std::vector<int>> bestChoice_;
};

std::int64_t objectiveValue(const LoadProfile& lp, Objective obj) {
    return obj == Objective::Vertex ? lp.maxVertexLoad : lp.maxEdgeLoad;
}

}  // namespace

std::int64_t cutLowerBoundEdge(const Graph& g) {
    if (g.isDirected()) throw BadParamsError("cut bound is defined for undirected graphs");
    const int n = g.order();
    if (n < 2 || g.size() == 0) return 0;

    auto cutSize = [&](const std::vector<char>& inS) {
        std::int64_t cut = 0;
        for (auto [u, v] : g.edges())
            if (inS[u] != inS[v]) ++cut;
        return cut;
    };
    auto bound = [&](std::int64_t s, std::int64_t cut) {
        return cut == 0 ? std::int64_t{0} : (2 * s * (n - s) + cut - 1) / cut;
    };

    std::int64_t best = 0;
    std::vector<char> inS(n);
    for (int start = 0; start < n; ++start) {
        std::fill(inS.begin(), inS.end(), 0);
        inS[start] = 1;
        std::int64_t size = 1;
        best = std::max(best, bound(size, cutSize(inS)));
        // grow S by the vertex that keeps the cut smallest
        while (size < n - 1) {
            int pick = -1;
            std::int64_t pickCut = 0;
            for (int v = 0; v < n; ++v) {
                if (inS[v]) continue;
                inS[v] = 1;
                std::int64_t c = cutSize(inS);
                inS[v] = 0;
                if (pick < 0 || c < pickCut) {
                    pick = v;
                    pickCut = c;
                }
            }
            inS[pick] = 1;
            ++size;
            best = std::max(best, bound(size, pickCut));
        }
    }
    return best;
}

SolveResult exactIndex(const Graph& g, Objective objective, RoutingMode mode,
                       const SearchLimits& limits) {
    const int n = g.order();
    auto dm = distances(g);

    SolveResult result;
    result.objective = objective;
    result.mode = mode;
    result.lowerBound = objective == Objective::Vertex ? averageTransitDemand(g).ceil()
                                                       : averageEdgeDemand(g).ceil();

    // The search may exit early against a stronger valid lower bound than the
    // reported analytic one.
    std::int64_t internalLB = result.lowerBound;
    if (objective == Objective::Vertex) {
        internalLB = std::max(internalLB, vertexSeparationBound(g));
    } else {
        internalLB = std::max(internalLB, edgeSeparationBound(g));
        if (!g.isDirected()) internalLB = std::max(internalLB, cutLowerBoundEdge(g));
    }

    // Seed the incumbent with deterministic constructions.
    Routing bestRouting = shortestPathRouting(g, TieRule::LowestLabel);
    std::int64_t bestValue = objectiveValue(loadProfile(g, bestRouting), objective);
    {
        Routing alt = shortestPathRouting(g, TieRule::LoadAwareGreedy);
        std::int64_t v = objectiveValue(loadProfile(g, alt), objective);
        if (v < bestValue) {
            bestValue = v;
            bestRouting = std::move(alt);
        }
    }
    if (mode == RoutingMode::General && bestValue > internalLB) {
        SolveResult h =
            heuristicIndex(g, objective, 80, TieRule::LoadAwareGreedy, limits.maxPathLength);
        if (h.value < bestValue) {
            bestValue = h.value;
            bestRouting = std::move(*h.certificate);
        }
    }

    if (n <= 2 || bestValue <= internalLB) {
        result.value = bestValue;
        result.status = SolveStatus::Optimal;
        result.certificate = std::move(bestRouting);
        return result;
    }

    const int cap = mode == RoutingMode::General
                        ? std::min(n - 1, limits.maxPathLength > 0 ? limits.maxPathLength : n - 1)
                        : n - 1;

    // Candidate pools. Forced pairs (single candidate) are committed upfront.
    // Adjacent pairs are forced in minimal mode (the edge is the one shortest
    // path); under the vertex objective the direct edge is transit-free, so
    // fixing adjacent pairs to it keeps an optimal routing reachable.
    std::vector<PairTask> tasks;
    std::vector<std::int64_t> vload(n, 0), eload(g.edges().size(), 0);
    std::int64_t total = 0, baseMax = 0;
    Routing preassigned(n);
    auto commit = [&](const std::vector<int>& p) {
        preassigned.setPath(p);
        if (objective == Objective::Vertex) {
            for (std::size_t i = 1; i + 1 < p.size(); ++i)
                baseMax = std::max(baseMax, ++vload[p[i]]);
            total += static_cast<std::int64_t>(p.size()) - 2;
        } else {
            for (std::size_t i = 1; i < p.size(); ++i)
                baseMax = std::max(baseMax, ++eload[g.edgeIndex(p[i - 1], p[i])]);
            total += static_cast<std::int64_t>(p.size()) - 1;
        }
    };
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            if (g.hasArc(x, y) &&
                (mode == RoutingMode::Minimal || objective == Objective::Vertex)) {
                commit({x, y});
                continue;
            }
            PairTask task;
            task.src = x;
            task.dst = y;
            task.floorContribution = dm.at(x, y) - (objective == Objective::Vertex ? 1 : 0);
            if (mode == RoutingMode::Minimal)
                collectShortestPaths(g, dm, x, y, task.candidates);
            else
                collectSimplePaths(g, x, y, cap, task.candidates);
            if (objective == Objective::Vertex) reduceToMinimalInteriorSets(n, task.candidates);
            if (task.candidates.size() == 1) {
                commit(task.candidates[0]);
                continue;
            }
            tasks.push_back(std::move(task));
        }
    }

    if (tasks.empty()) {
        if (baseMax < bestValue) {
            bestValue = baseMax;
            bestRouting = std::move(preassigned);
        }
        result.value = bestValue;
        result.status = SolveStatus::Optimal;
        result.certificate = std::move(bestRouting);
        return result;
    }

    // Fewest-candidates-first pair order; suffix sums of per-pair minimum
    // contributions feed the averaging prune.
    std::stable_sort(tasks.begin(), tasks.end(), [](const PairTask& a, const PairTask& b) {
        return a.candidates.size() < b.candidates.size();
    });
    std::vector<std::int64_t> suffixFloor(tasks.size() + 1, 0);
    for (std::size_t i = tasks.size(); i-- > 0;)
        suffixFloor[i] = suffixFloor[i + 1] + tasks[i].floorContribution;

    SearchShared shared;
    shared.best.store(bestValue);
    shared.internalLB = internalLB;
    shared.maxNodes = limits.maxNodes > 0 ? limits.maxNodes : INT64_C(1) << 40;
    if (limits.timeBudgetSeconds > 0) {
        shared.timed = true;
        shared.deadline =
            Clock::now() + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(limits.timeBudgetSeconds));
    }

    int workerCount = std::max(1, limits.threads);
    workerCount = std::min<int>(workerCount, static_cast<int>(tasks[0].candidates.size()));

    std::vector<std::unique_ptr<Worker>> workers;
    workers.reserve(workerCount);
    for (int w = 0; w < workerCount; ++w)
        workers.push_back(std::make_unique<Worker>(g, objective, tasks, suffixFloor, vload, eload,
                                                   total, baseMax, shared));
    if (workerCount == 1) {
        workers[0]->run(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workerCount);
        for (int w = 0; w < workerCount; ++w)
            pool.emplace_back([&, w] { workers[w]->run(w, workerCount); });
        for (auto& t : pool) t.join();
    }

    int bestWorker = -1;
    for (int w = 0; w < workerCount; ++w) {
        if (!workers[w]->improved()) continue;
        if (workers[w]->bestValue() < bestValue) {
            bestValue = workers[w]->bestValue();
            bestWorker = w;
        }
    }
    if (bestWorker >= 0) {
        Routing improved = preassigned;
        const auto& choice = workers[bestWorker]->bestChoice();
        for (std::size_t i = 0; i < tasks.size(); ++i) improved.setPath(choice[i]);
        bestRouting = std::move(improved);
    }

    result.value = bestValue;
    result.nodesExplored = std::min(shared.nodes.load(), shared.maxNodes);
    result.status = shared.budgetHit.load() && bestValue > internalLB ? SolveStatus::UpperBound
                                                                      : SolveStatus::Optimal;
    result.certificate = std::move(bestRouting);
    return result;
}

namespace {

// Minimum-bottleneck simple path for the local search: smallest threshold t
// such that the destination is reachable within the hop cap using only
// elements loaded at most t; ties resolved by BFS layer and label order.
std::vector<int> minBottleneckPath(const Graph& g, int x, int y, Objective obj,
                                   const std::vector<std::int64_t>& vload,
                                   const std::vector<std::int64_t>& eload, int cap) {
    std::vector<std::int64_t> thresholds;
    if (obj == Objective::Vertex) {
        for (int v = 0; v < g.order(); ++v)
            if (v != x && v != y) thresholds.push_back(vload[v]);
        thresholds.push_back(0);
    } else {
        thresholds = eload;
    }
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

    std::vector<int> parent(g.order());
    std::vector<int> dist(g.order());
    for (auto t : thresholds) {
        std::fill(parent.begin(), parent.end(), -1);
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> q;
        q.push(x);
        dist[x] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            if (v == y) break;
            if (dist[v] == cap) continue;
            for (int w : g.outNeighbors(v)) {
                if (dist[w] >= 0) continue;
                if (obj == Objective::Vertex) {
                    if (w != y && vload[w] > t) continue;
                } else {
                    if (eload[g.edgeIndex(v, w)] > t) continue;
                }
                dist[w] = dist[v] + 1;
                parent[w] = v;
                q.push(w);
            }
        }
        if (dist[y] >= 0 && dist[y] <= cap) {
            std::vector<int> path;
            for (int v = y; v != -1; v = parent[v]) path.push_back(v);
            std::reverse(path.begin(), path.end());
            return path;
        }
    }
    return {};  // only when the cap is below the distance
}

}  // namespace

SolveResult heuristicIndex(const Graph& g, Objective objective, int iterations, TieRule seedRule,
                           int maxPathLength) {
    const int n = g.order();
    const int cap = std::min(n - 1, maxPathLength > 0 ? maxPathLength : n - 1);

    SolveResult result;
    result.objective = objective;
    result.mode = RoutingMode::General;
    result.status = SolveStatus::UpperBound;
    result.lowerBound = objective == Objective::Vertex ? averageTransitDemand(g).ceil()
                                                       : averageEdgeDemand(g).ceil();

    Routing r = shortestPathRouting(g, seedRule);
    auto lp = loadProfile(g, r);
    std::vector<std::int64_t> vload = lp.vertexLoad;
    std::vector<std::int64_t> eload = lp.edgeLoad;

    auto sortedDesc = [](std::vector<std::int64_t> v) {
        std::sort(v.begin(), v.end(), std::greater<>());
        return v;
    };
    auto& loads = objective == Objective::Vertex ? vload : eload;
    auto maxLoad = [&] {
        return loads.empty() ? std::int64_t{0} : *std::max_element(loads.begin(), loads.end());
    };

    auto addPath = [&](const std::vector<int>& p, int dir) {
        for (std::size_t i = 1; i + 1 < p.size(); ++i) vload[p[i]] += dir;
        for (std::size_t i = 1; i < p.size(); ++i) eload[g.edgeIndex(p[i - 1], p[i])] += dir;
    };
    auto touchesHot = [&](const std::vector<int>& p, std::int64_t hot) {
        if (objective == Objective::Vertex) {
            for (std::size_t i = 1; i + 1 < p.size(); ++i)
                if (vload[p[i]] == hot) return true;
        } else {
            for (std::size_t i = 1; i < p.size(); ++i)
                if (eload[g.edgeIndex(p[i - 1], p[i])] == hot) return true;
        }
        return false;
    };

    for (int it = 0; it < iterations; ++it) {
        std::int64_t hot = maxLoad();
        if (hot <= result.lowerBound) break;
        bool moved = false;
        for (int x = 0; x < n && !moved; ++x) {
            for (int y = 0; y < n && !moved; ++y) {
                if (x == y) continue;
                if (!touchesHot(r.path(x, y), hot)) continue;
                auto before = sortedDesc(loads);
                std::vector<int> old = r.path(x, y);
                addPath(old, -1);
                auto candidate = minBottleneckPath(g, x, y, objective, vload, eload, cap);
                if (candidate.empty() || candidate == old) {
                    addPath(old, +1);
                    continue;
                }
                addPath(candidate, +1);
                if (sortedDesc(loads) < before) {
                    r.setPath(candidate);
                    moved = true;
                } else {
                    addPath(candidate, -1);
                    addPath(old, +1);
                }
            }
        }
        if (!moved) break;
    }

    result.value = maxLoad();
    result.certificate = std::move(r);
    return result;
}

}  // namespace fwdidx
