#include "fwdidx/bounds.hpp"

#include <algorithm>

namespace fwdidx {

namespace {

std::int64_t ceilDiv(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

BoundEntry upper(std::string id, std::string target, std::int64_t value, std::string citation,
                 std::string condition = "") {
    BoundEntry e;
    e.id = std::move(id);
    e.kind = BoundEntry::Kind::Upper;
    e.target = std::move(target);
    e.applicable = true;
    e.value = value;
    e.citation = std::move(citation);
    e.condition = std::move(condition);
    return e;
}

BoundEntry lower(std::string id, std::string target, std::int64_t value, std::string citation,
                 std::string condition = "") {
    BoundEntry e = upper(std::move(id), std::move(target), value, std::move(citation),
                         std::move(condition));
    e.kind = BoundEntry::Kind::Lower;
    return e;
}

BoundEntry skipped(std::string id, std::string target, std::string condition,
                   std::string citation) {
    BoundEntry e;
    e.id = std::move(id);
    e.target = std::move(target);
    e.applicable = false;
    e.condition = std::move(condition);
    e.citation = std::move(citation);
    return e;
}

BoundEntry relation(std::string id, bool holds, std::string condition, std::string citation) {
    BoundEntry e;
    e.id = std::move(id);
    e.kind = BoundEntry::Kind::Relation;
    e.target = "relation";
    e.applicable = true;
    e.holds = holds;
    e.condition = std::move(condition);
    e.citation = std::move(citation);
    return e;
}

}  // namespace

const BoundEntry* BoundReport::find(const std::string& id) const {
    for (const auto& e : entries)
        if (e.id == id) return &e;
    return nullptr;
}

std::pair<std::int64_t, std::int64_t> trivialUpperBounds(std::int64_t n) {
    if (n < 2) throw BadParamsError("trivial bounds need n >= 2");
    return {(n - 1) * (n - 2), n * n / 2};
}

BoundReport relationCheck(const IndexValues& v, std::int64_t n, std::int64_t maxDeg,
                          std::int64_t minDeg) {
    BoundReport rep;
    rep.add(relation("T2.6a", 2 * v.xi + 2 * (n - 1) <= maxDeg * v.pi,
                     "2*xi + 2(n-1) <= maxDeg*pi", "§2.2-T2.6"));
    rep.add(relation("T2.6b", v.pi <= v.xi + 2 * (n - 1), "pi <= xi + 2(n-1)", "§2.2-T2.6"));
    rep.add(relation("T2.6c", v.pim <= v.xim + 2 * (n - minDeg), "pi_m <= xi_m + 2(n-minDeg)",
                     "§2.2-T2.6"));
    return rep;
}

std::pair<std::int64_t, std::int64_t> productUpper(std::int64_t nG, std::int64_t nH,
                                                   std::int64_t xiG, std::int64_t xiH,
                                                   std::int64_t piG, std::int64_t piH) {
    if (nG < 2 || nH < 2) throw BadParamsError("product factors need order >= 2");
    std::int64_t xiUp = nG * xiH + nH * xiG + (nG - 1) * (nH - 1);
    std::int64_t piUp = std::max(nG * piH, nH * piG);
    return {xiUp, piUp};
}

std::pair<std::int64_t, std::int64_t> productOptimal(const std::vector<FactorStats>& factors) {
    if (factors.empty()) throw BadParamsError("product of zero factors");
    const std::int64_t k = static_cast<std::int64_t>(factors.size());
    std::int64_t all = 1;
    for (const auto& f : factors) all *= f.n;
    std::int64_t xi = (k - 1) * all + 1;
    std::int64_t pi = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        std::int64_t others = all / factors[i].n;
        xi += others * (factors[i].xi - 1);
        pi = std::max(pi, others * factors[i].pi);
    }
    if (factors.size() == 1) return {factors[0].xi, factors[0].pi};
    return {xi, pi};
}

GraphStats computeGraphStats(const Graph& g) {
    GraphStats s;
    s.n = g.order();
    s.eps = g.size();
    s.maxDeg = g.maxDegree();
    s.minDeg = g.minDegree();
    s.directed = g.isDirected();
    s.diameter = distances(g).diameter;
    auto conn = connectivity(g);
    s.kappa = conn.kappa;
    s.lambda = conn.lambda;
    s.regular3 = !g.isDirected() && g.isRegular(3);
    return s;
}

BoundReport connectivityBounds(const GraphStats& s) {
    if (s.directed) throw BadParamsError("connectivity bounds are for undirected graphs");
    BoundReport rep;
    const std::int64_t n = s.n;
    const std::int64_t k = s.kappa;

    if (s.kappa >= 2) {
        rep.add(upper("T3.1a", "xi", (n - 2) * (n - 3) / 2, "§3.1-T3.1", "2-connected"));
        if (n >= 7)
            rep.add(upper("T3.1c", "xi_m", n * n - 7 * n + 12, "§3.1-T3.1", "2-connected, n>=7"));
        else if (n >= 6 && s.diameter == 2)
            rep.add(upper("T3.1b", "xi_m", n * n - 7 * n + 12, "§3.1-T3.1",
                          "2-connected, n>=6, diameter 2"));
        else
            rep.add(skipped("T3.1b", "xi_m", "needs n>=6 with diameter 2, or n>=7", "§3.1-T3.1"));
        rep.add(upper("T3.1d", "pi", n * n / 4, "§3.1-T3.1", "2-connected"));
    } else {
        rep.add(skipped("T3.1a", "xi", "needs 2-connected", "§3.1-T3.1"));
    }

    // T3.2 is monotone in k, so use the largest j <= kappa meeting n >= 8j-10.
    {
        std::int64_t j = std::min(k, (n + 10) / 8);
        if (j >= 3)
            rep.add(upper("T3.2", "xi", n * n - (2 * j + 1) * n + 2 * j, "§3.1-T3.2",
                          "j-connected with j=" + std::to_string(j) + ", n>=8j-10"));
        else
            rep.add(skipped("T3.2", "xi", "needs kappa>=3 and n>=8*kappa-10", "§3.1-T3.2"));
    }

    if (k >= 1) {
        std::int64_t q = ceilDiv(n - k - 1, k);
        rep.add(upper("T3.4a", "xi", (n - 1) * q, "§3.1-T3.4", "kappa-connected"));
        {
            auto e = upper("T3.4b", "xi_m",
                           n * n / 2 - (k - 1) * n + (3 * (k - 1) * (k - 1)) / 8, "§3.1-T3.4",
                           "holds only for n substantially larger than kappa");
            e.advisory = true;
            rep.add(e);
        }
        {
            // Fails on small cycles (C5: bound 5 < pi = 6); the h(n,k) framing
            // carries an unspecified n-large proviso.
            auto e = upper("T3.4c", "pi", n * q, "§3.1-T3.4",
                           "holds only for n large relative to kappa (threshold unstated)");
            e.advisory = true;
            rep.add(e);
        }
        rep.add(upper("T3.5", "xi", (n - 1) * q - (n - s.maxDeg - 1), "§3.1-T3.5",
                      "kappa-connected"));
        {
            auto e = upper("T3.5pi", "pi", n * q - (n - s.maxDeg), "§3.1-T3.5",
                           "holds only for n large relative to kappa (threshold unstated)");
            e.advisory = true;
            rep.add(e);
        }
    }

    if (s.regular3 && s.kappa >= 3 && n >= 4)
        rep.add(upper("T3.7", "xi", ceilDiv((n - 3) * (n - 4), 3), "§3.1-T3.7",
                      "3-regular 3-connected, n>=4"));
    else
        rep.add(skipped("T3.7", "xi", "needs 3-regular 3-connected", "§3.1-T3.7"));

    if (s.lambda >= 2) {
        rep.add(upper("T3.8a", "pi_m", (n * n - 2 * n + 1) / 2, "§3.2-T3.8", "2-edge-connected"));
        rep.add(upper("T3.8b", "pi", n * n / 4, "§3.2-T3.8", "2-edge-connected"));
    } else {
        rep.add(skipped("T3.8a", "pi_m", "needs 2-edge-connected", "§3.2-T3.8"));
    }

    // T3.11: decreasing in lambda; largest j <= lambda with n >= max(3j+3, (j+1)^2/2).
    {
        std::int64_t bestJ = 0;
        for (std::int64_t j = 3; j <= s.lambda; ++j)
            if (n >= 3 * j + 3 && 2 * n >= (j + 1) * (j + 1)) bestJ = j;
        if (bestJ >= 3)
            rep.add(upper("T3.11", "xi_m", ceilDiv(n * n, 2) - n - 2 * (bestJ - 1) * (bestJ - 1),
                          "§3.2-T3.11",
                          "lambda>=" + std::to_string(bestJ) + ", n>=max(3L+3,(L+1)^2/2)"));
        else
            rep.add(skipped("T3.11", "xi_m", "needs lambda>=3 and n>=max(3L+3,(L+1)^2/2)",
                            "§3.2-T3.11"));
    }
    return rep;
}

BoundReport digraphBounds(const GraphStats& s) {
    if (!s.directed) throw BadParamsError("digraph bounds are for digraphs");
    BoundReport rep;
    const std::int64_t n = s.n;
    const std::int64_t k = s.kappa;
    const std::int64_t d = s.minDeg;

    rep.add(upper("T3.12", "pi_m", (n - 1) * (n - 2) + 1, "§3.3-T3.12", "strong digraph"));

    if (n >= 3 && k >= 1)
        rep.add(upper("T3.13a", "pi", (n - 1) * ceilDiv(n - k - 1, k) + 1, "§3.3-T3.13",
                      "k-connected, n>=3"));
    {
        std::int64_t j = std::min(k, (n - 1) / 2);
        if (j >= 1)
            rep.add(upper("T3.13b", "xi_m", n * n - (2 * j + 1) * n + 2 * j, "§3.3-T3.13",
                          "j-connected with j=" + std::to_string(j) + ", n>=2j+1"));
    }
    {
        // Printed with condition n>=4k-1 but fails on small directed cycles
        // (directed C5 at k=1: bound 7 < pi_m = 10); kept flagged.
        std::int64_t j = std::min(k, (n + 1) / 4);
        if (j >= 1) {
            auto e = upper("T3.13c", "pi_m", n * n - (3 * j + 2) * n + 4 * j + 3, "§3.3-T3.13",
                           "printed condition n>=4k-1 is insufficient for small n");
            e.disputed = true;
            rep.add(e);
        }
    }

    rep.add(upper("T4.15a", "xi_m", n * n - (d + 2) * n + d + 1, "§4.4-T4.15", "strong digraph"));
    {
        auto e = upper("T4.15b", "pi_m",
                       std::max(n * n - 3 * n * d + 2 * d * d + d,
                                n * n - (2 * d + 3) * n + d * d + 4 * d + 3),
                       "§4.4-T4.15", "holds only for n sufficiently large relative to minDeg");
        e.advisory = true;
        rep.add(e);
    }
    return rep;
}

BoundReport degreeBounds(const GraphStats& s) {
    if (s.directed) throw BadParamsError("degree bounds are for undirected graphs");
    BoundReport rep;
    const std::int64_t n = s.n;
    const std::int64_t D = s.maxDeg;
    const std::int64_t diam = s.diameter;

    {
        std::int64_t q = (n - 1) / D;
        std::int64_t cut = (2 * n - 2 - D * (1 + q)) * q;
        rep.add(upper("T4.12", "xi", (n - 1) * (n - 2) - cut, "§4.4-T4.12", ""));
    }
    rep.add(upper("T4.13a", "xi_m", (n - 1) * (n - 2) - 2 * (s.eps - D), "§4.4-T4.13", ""));
    rep.add(upper("T4.13b", "xi_m",
                  n * n - 3 * n - (diam / 2) * (diam / 2) -
                      ((diam + 1) / 2) * ((diam + 1) / 2) + diam + 2,
                  "§4.4-T4.13", ""));
    if (diam == 2 && s.minDeg >= 2)
        rep.add(upper("T4.14", "pi_m", 2 * n - 4, "§4.4-T4.14", "diameter 2, no end vertex"));
    else
        rep.add(skipped("T4.14", "pi_m", "needs diameter 2 and no end vertex", "§4.4-T4.14"));
    return rep;
}

namespace {

void mergeLower(ValueBounds& vb, std::int64_t value, const std::string& citation) {
    if (value > vb.lower) vb.lower = value;
    vb.citations.push_back(citation);
}

void setExact(ValueBounds& vb, std::int64_t value, const std::string& citation) {
    if (vb.exact) return;  // first (highest-priority) catalog hit wins
    vb.exact = value;
    vb.lower = std::max(vb.lower, value);
    vb.upper = vb.upper ? std::min(*vb.upper, value) : value;
    vb.citations.push_back(citation);
}

void mergeInterval(ValueBounds& vb, std::int64_t lo, std::int64_t hi, const std::string& citation) {
    vb.lower = std::max(vb.lower, lo);
    vb.upper = vb.upper ? std::min(*vb.upper, hi) : hi;
    vb.citations.push_back(citation);
}

}  // namespace

MinIndexBounds minIndexClosedForms(std::int64_t n, DegreeConstraint constraint) {
    if (n < 2) throw BadParamsError("minimum-index catalog needs n >= 2");
    const std::int64_t val = constraint.value;
    if (val < 1 || val >= n) throw BadParamsError("degree constraint out of range");

    MinIndexBounds out;
    out.xi.lower = 0;
    out.pi.lower = 2;  // every order-n graph has B >= 2

    if (constraint.kind == DegreeConstraint::MinDegree) {
        setExact(out.xi, ceilDiv(2 * (n - 1 - val), val), "T4.16");
        setExact(out.pi, ceilDiv(2 * (n - 1), val), "T4.16");
        out.entries.push_back(upper("T4.16", "xi_min", *out.xi.exact, "§4.4-T4.16", "exact"));
        out.entries.push_back(upper("T4.16pi", "pi_min", *out.pi.exact, "§4.4-T4.16", "exact"));
        return out;
    }

    const std::int64_t D = val;

    // Complete-graph regime.
    if (D == n - 1) {
        setExact(out.xi, 0, "S4.1");
        setExact(out.pi, 2, "S4.1");
        out.entries.push_back(upper("S4.1", "xi_min", 0, "§4.1", "maxDeg = n-1"));
    }

    // Generic lower bounds.
    mergeLower(out.xi, n - 1 - D, "T4.5d");
    out.entries.push_back(lower("T4.5d", "xi_min", n - 1 - D, "§4.2-T4.5", ""));
    if (n % 2 == 1 && D % 2 == 1) {
        mergeLower(out.xi, n - D, "T4.5f");
        out.entries.push_back(lower("T4.5f", "xi_min", n - D, "§4.2-T4.5", "n and maxDeg odd"));
    }
    if (D >= 3) {
        mergeLower(out.pi, ceilDiv(4 * (n - 1), D) - 2, "T4.7a");
        out.entries.push_back(lower("T4.7a", "pi_min", ceilDiv(4 * (n - 1), D) - 2, "§4.3-T4.7", ""));
        if (n % 2 == 1 && D % 2 == 1) {
            mergeLower(out.pi, ceilDiv(4 * n - 2, D) - 2, "T4.7c");
            out.entries.push_back(
                lower("T4.7c", "pi_min", ceilDiv(4 * n - 2, D) - 2, "§4.3-T4.7", "n and maxDeg odd"));
        }
    }

    // Cycle regime: the printed vertex formula disagrees with exhaustive
    // solves (and with the one-dimensional torus specialization), so it is
    // catalogued but never trusted as exact.
    if (D == 2) {
        auto e = upper("T4.3a", "xi_min", (n - 1) * (n - 1) / 4, "§4.2-T4.3", "maxDeg = 2");
        e.disputed = true;
        out.entries.push_back(e);
        setExact(out.pi, n * n / 4, "T4.3b");
        out.entries.push_back(upper("T4.3b", "pi_min", n * n / 4, "§4.2-T4.3", "exact"));
    }

    // Exact vertex values, each under its own stated hypotheses. At maxDeg 2
    // and n <= 5 these land on the exhaustively verified cycle values, unlike
    // the disputed printed form above.
    {
        bool evenCase = (n % 2 == 0) || (D % 2 == 0);
        if (evenCase && (3 * D >= n + 1 || ((n == 12 || n == 13) && D == 4))) {
            setExact(out.xi, n - 1 - D, "T4.4a");
            out.entries.push_back(upper("T4.4a", "xi_min", n - 1 - D, "§4.2-T4.4", "exact"));
        }
        if (n % 2 == 1 && D % 2 == 1 && (3 * D >= n + 4 || (n == 13 && D == 5))) {
            setExact(out.xi, n - D, "T4.4b");
            out.entries.push_back(upper("T4.4b", "xi_min", n - D, "§4.2-T4.4", "exact"));
        }
        if ((n - D - 1) % 2 == 0) {
            std::int64_t p = (n - D - 1) / 2;
            if (p >= 1 && n >= 3 * p + 2) {
                setExact(out.xi, 2 * p, "T4.5a");
                out.entries.push_back(upper("T4.5a", "xi_min", 2 * p, "§4.2-T4.5", "exact"));
            }
        }
        if (D % 2 == 1 && n % 2 == 1) {
            std::int64_t p = (D - 1) / 2;
            if (p >= 1 && 2 * p + 1 <= n && n <= 6 * p - 1) {
                setExact(out.xi, n - D, "T4.5b");
                out.entries.push_back(upper("T4.5b", "xi_min", n - D, "§4.2-T4.5", "exact"));
            }
        }
        if (D % 2 == 0) {
            std::int64_t p = D / 2;
            if (p >= 3 && 2 * p + 1 <= n && n <= 6 * p - 1) {
                setExact(out.xi, n - D - 1, "T4.5c");
                out.entries.push_back(upper("T4.5c", "xi_min", n - D - 1, "§4.2-T4.5", "exact"));
            }
        }
    }

    // Piecewise edge values.
    if ((n - D - 1) % 2 == 0 && (n - D - 1) / 2 >= 1) {
        std::int64_t p = (n - D - 1) / 2;
        if (n >= 10 * p + 1) {
            setExact(out.pi, 3, "T4.8");
        } else if (n >= 6 * p + 1) {
            setExact(out.pi, 4, "T4.8");
        } else if (n >= 4 * p + 2 * ceilDiv(p, 3) + 1 && n <= 6 * p) {
            setExact(out.pi, 5, "T4.8");
        } else if (n >= 4 * p + 1 && n <= 4 * p + ceilDiv(2 * p, 3)) {
            setExact(out.pi, 6, "T4.8");
        } else if (n >= 4 * p + ceilDiv(2 * p, 3) + 1 && n <= 4 * p + 2 * ceilDiv(p, 3)) {
            // printed gap: undetermined between the 5 and 6 regimes
            mergeInterval(out.pi, 5, 6, "T4.8-gap");
        }
    }
    if ((n - D) % 2 == 0 && (n - D) / 2 >= 1) {
        std::int64_t p = (n - D) / 2;
        if (n >= 10 * p - 2 || n == 10 * p - 4) {
            setExact(out.pi, 3, "T4.10");
        } else if ((n >= 6 * p + 1 && n < 10 * p - 4) || n == 10 * p - 3) {
            setExact(out.pi, 4, "T4.10");
        } else if (n >= 4 * p + 1 && n <= 4 * p + ceilDiv(2 * p - 1, 3) - 2) {
            setExact(out.pi, 6, "T4.10");
        }
    }

    return out;
}

EnumerativeMinimum enumerativeMinIndex(int n, DegreeConstraint constraint, Objective objective,
                                       const EnumerationOptions& enumOpts,
                                       const SearchLimits& limits) {
    EnumerativeMinimum out;
    out.value = -1;
    enumerateConnectedGraphs(n, constraint, [&](const Graph& g) {
        ++out.graphsExamined;
        auto r = exactIndex(g, objective, RoutingMode::General, limits);
        if (r.status != SolveStatus::Optimal)
            throw Error("enumerative minimum: a member graph exhausted the search budget");
        if (!out.witness || r.value < out.value) {
            out.value = r.value;
            out.witness = g;
        }
    }, enumOpts);
    return out;
}

BoundReport boundReportForGraph(const Graph& g) {
    BoundReport rep;
    auto stats = computeGraphStats(g);
    const auto A = averageTransitDemand(g);
    const auto B = averageEdgeDemand(g);
    rep.add(lower("A", "xi", A.ceil(), "§2.2-T2.3", "A(G) = " + A.str()));
    rep.add(lower("B", "pi", B.ceil(), "§2.2-T2.4", "B(G) = " + B.str()));
    if (!g.isDirected()) {
        // the floor(n^2/2) edge bound is proved for graphs only; digraphs get
        // the strong-digraph bounds instead
        auto [xiUp, piUp] = trivialUpperBounds(stats.n);
        rep.add(upper("T2.3", "xi", xiUp, "§2.2-T2.3", ""));
        rep.add(upper("T2.4", "pi", piUp, "§2.2-T2.4", ""));
        rep.add(lower("CUT", "pi", cutLowerBoundEdge(g), "artifact cut bound", ""));
        for (auto& e : connectivityBounds(stats).entries) rep.add(e);
        for (auto& e : degreeBounds(stats).entries) rep.add(e);
    } else {
        for (auto& e : digraphBounds(stats).entries) rep.add(e);
    }
    return rep;
}

}  // namespace fwdidx
