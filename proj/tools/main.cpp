// fwdidx: compute, bound and verify vertex/edge forwarding indices of graphs.

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "fwdidx/bounds.hpp"
#include "fwdidx/families.hpp"
#include "fwdidx/graph.hpp"
#include "fwdidx/io.hpp"
#include "fwdidx/routing.hpp"
#include "fwdidx/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitRefuted = 4;

std::vector<std::int64_t> parseParams(const std::string& csv) {
    std::vector<std::int64_t> params;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        params.push_back(std::stoll(item));
    }
    return params;
}

fwdidx::Objective parseObjective(const std::string& s) {
    if (s == "vertex") return fwdidx::Objective::Vertex;
    if (s == "edge") return fwdidx::Objective::Edge;
    throw fwdidx::BadParamsError("--index must be vertex or edge");
}

// Auto-mode thresholds; overridable via FWDIX_LIMITS=general=7,minimal=10
struct AutoLimits {
    int general = 7;
    int minimal = 10;
};

AutoLimits autoLimitsFromEnv() {
    AutoLimits lims;
    const char* env = std::getenv("FWDIX_LIMITS");
    if (!env) return lims;
    std::stringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) continue;
        std::string key = item.substr(0, eq);
        int value = 0;
        try {
            value = std::stoi(item.substr(eq + 1));
        } catch (const std::exception&) {
            std::cerr << "ignoring malformed FWDIX_LIMITS entry: " << item << "\n";
            continue;
        }
        if (key == "general") lims.general = value;
        if (key == "minimal") lims.minimal = value;
    }
    return lims;
}

int runGen(const std::string& familyName, const std::string& paramsCsv, const std::string& out) {
    fwdidx::FamilySpec spec;
    spec.family = fwdidx::familyFromString(familyName);
    spec.params = parseParams(paramsCsv);
    fwdidx::Graph g = fwdidx::generate(spec);
    if (out.empty()) {
        std::cout << fwdidx::graphToJson(g) << "\n";
    } else {
        fwdidx::saveGraphFile(g, out);
        std::cerr << "wrote " << g.order() << " vertices, " << g.size()
                  << (g.isDirected() ? " arcs" : " edges") << " to " << out << "\n";
    }
    return kExitOk;
}

int runSolve(const std::string& graphPath, const std::string& index, const std::string& mode,
             fwdidx::SearchLimits limits, const std::string& routingOut, bool jsonOut) {
    fwdidx::Graph g = fwdidx::loadGraphFile(graphPath);
    fwdidx::Objective obj = parseObjective(index);

    fwdidx::SolveResult result;
    if (mode == "auto") {
        AutoLimits lims = autoLimitsFromEnv();
        if (g.order() <= lims.general) {
            result = fwdidx::exactIndex(g, obj, fwdidx::RoutingMode::General, limits);
        } else if (g.order() <= lims.minimal) {
            result = fwdidx::exactIndex(g, obj, fwdidx::RoutingMode::Minimal, limits);
        } else {
            result.objective = obj;
            result.mode = fwdidx::RoutingMode::General;
            result.status = fwdidx::SolveStatus::LowerBoundOnly;
            result.lowerBound = obj == fwdidx::Objective::Vertex
                                    ? fwdidx::averageTransitDemand(g).ceil()
                                    : fwdidx::averageEdgeDemand(g).ceil();
            result.value = result.lowerBound;
        }
    } else if (mode == "minimal" || mode == "general") {
        auto m = mode == "minimal" ? fwdidx::RoutingMode::Minimal : fwdidx::RoutingMode::General;
        result = fwdidx::exactIndex(g, obj, m, limits);
    } else {
        throw fwdidx::BadParamsError("--mode must be minimal, general or auto");
    }

    std::string certFile;
    if (!routingOut.empty() && result.certificate) {
        fwdidx::saveRoutingFile(g, *result.certificate, routingOut);
        certFile = routingOut;
    }
    if (jsonOut) {
        std::cout << fwdidx::solveResultToJson(result, certFile) << "\n";
    } else {
        std::cout << to_string(result.objective) << " index (" << to_string(result.mode)
                  << " mode) of " << fwdidx::graphIdentity(g) << ": " << result.value << " ["
                  << to_string(result.status) << "], lower bound " << result.lowerBound
                  << ", nodes " << result.nodesExplored << "\n";
    }
    return result.status == fwdidx::SolveStatus::UpperBound ? kExitBudget : kExitOk;
}

int runLoads(const std::string& graphPath, const std::string& routingPath) {
    fwdidx::Graph g = fwdidx::loadGraphFile(graphPath);
    fwdidx::Routing r = fwdidx::loadRoutingFile(routingPath, g.order());
    auto validation = fwdidx::validateRouting(g, r);
    if (!validation.ok()) {
        std::cerr << "routing fails validation:\n";
        for (auto [src, dst] : validation.missingPairs)
            std::cerr << "  missing pair (" << src << "," << dst << ")\n";
        for (const auto& v : validation.violations)
            std::cerr << "  (" << v.src << "," << v.dst << "): " << v.reason << "\n";
        return kExitUsage;
    }
    std::cout << fwdidx::loadProfileCsv(g, fwdidx::loadProfile(g, r));
    return kExitOk;
}

int runBounds(const std::string& graphPath) {
    fwdidx::Graph g = fwdidx::loadGraphFile(graphPath);
    std::cout << fwdidx::boundReportToJson(fwdidx::boundReportForGraph(g)) << "\n";
    return kExitOk;
}

int runVerify(const std::string& manifestPath, const std::string& outPath, bool jsonOut,
              int threads, fwdidx::VerifyPolicy policy) {
    auto specs = fwdidx::loadManifestFile(manifestPath);
    std::vector<std::vector<fwdidx::VerificationRecord>> results(specs.size());

    fwdidx::SearchLimits limits;
    if (threads <= 1) {
        for (std::size_t i = 0; i < specs.size(); ++i)
            results[i] = fwdidx::verifyFamily(specs[i], limits, policy);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < specs.size(); i = next.fetch_add(1))
                    results[i] = fwdidx::verifyFamily(specs[i], limits, policy);
            });
        }
        for (auto& th : pool) th.join();
    }

    std::vector<fwdidx::VerificationRecord> records;
    for (auto& part : results)
        for (auto& rec : part) records.push_back(std::move(rec));

    if (!outPath.empty()) {
        fwdidx::writeTextFile(outPath, fwdidx::verificationCsv(records));
        std::string jsonPath = outPath;
        auto dot = jsonPath.rfind('.');
        jsonPath = (dot == std::string::npos ? jsonPath : jsonPath.substr(0, dot)) + ".json";
        fwdidx::writeTextFile(jsonPath, fwdidx::verificationJson(records) + "\n");
    }

    int confirmed = 0, refuted = 0, consistent = 0, skipped = 0;
    for (const auto& rec : records) {
        switch (rec.verdict) {
            case fwdidx::Verdict::Confirmed: ++confirmed; break;
            case fwdidx::Verdict::Refuted: ++refuted; break;
            case fwdidx::Verdict::BoundConsistent: ++consistent; break;
            case fwdidx::Verdict::Skipped: ++skipped; break;
        }
    }
    if (jsonOut) {
        std::cout << fwdidx::verificationJson(records) << "\n";
    } else {
        std::cout << fwdidx::verificationCsv(records);
        std::cerr << "verified " << records.size() << " claims: " << confirmed << " confirmed, "
                  << refuted << " refuted, " << consistent << " bound-consistent, " << skipped
                  << " skipped\n";
    }
    return refuted > 0 ? kExitRefuted : kExitOk;
}

int runEnumerate(int n, int maxDegree, int minDegree, const std::string& index,
                 const std::string& witnessOut, int limit, bool jsonOut) {
    if ((maxDegree < 0) == (minDegree < 0))
        throw fwdidx::BadParamsError("give exactly one of --max-degree / --min-degree");
    fwdidx::DegreeConstraint constraint;
    constraint.kind = maxDegree >= 0 ? fwdidx::DegreeConstraint::MaxDegree
                                     : fwdidx::DegreeConstraint::MinDegree;
    constraint.value = maxDegree >= 0 ? maxDegree : minDegree;

    fwdidx::EnumerationOptions opts;
    opts.orderLimit = limit;
    auto result = fwdidx::enumerativeMinIndex(n, constraint, parseObjective(index), opts);
    if (!result.witness) {
        std::cerr << "no connected graph of order " << n << " matches the degree constraint\n";
        return kExitUsage;
    }
    if (!witnessOut.empty()) fwdidx::saveGraphFile(*result.witness, witnessOut);
    if (jsonOut) {
        std::cout << "{\"minimum\": " << result.value
                  << ", \"graphsExamined\": " << result.graphsExamined << "}\n";
    } else {
        std::cout << "minimum " << index << " index over connected graphs with n=" << n << ", "
                  << (constraint.kind == fwdidx::DegreeConstraint::MaxDegree ? "maxDeg=" : "minDeg=")
                  << constraint.value << ": " << result.value << " (" << result.graphsExamined
                  << " graphs examined)\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"forwarding-index toolkit: routings, loads, exact solves, bounds and "
                 "family verification"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a named family instance");
    std::string genFamily, genParams, genOut;
    gen->add_option("--family", genFamily, "family name, e.g. hypercube")->required();
    gen->add_option("--params", genParams, "comma-separated integer parameters")->required();
    gen->add_option("--out", genOut, "output graph JSON file (stdout when omitted)");

    // solve
    auto* solve = app.add_subcommand("solve", "compute a forwarding index exactly");
    std::string solveGraph, solveIndex = "vertex", solveMode = "auto", solveRoutingOut;
    fwdidx::SearchLimits limits;
    bool solveJson = false;
    solve->add_option("--graph", solveGraph, "graph JSON file")->required();
    solve->add_option("--index", solveIndex, "vertex|edge");
    solve->add_option("--mode", solveMode, "minimal|general|auto");
    solve->add_option("--max-nodes", limits.maxNodes, "search node budget");
    solve->add_option("--time-limit", limits.timeBudgetSeconds, "wall-clock budget in seconds");
    solve->add_option("--max-path-length", limits.maxPathLength,
                      "general-mode candidate length cap (default n-1)");
    solve->add_option("--threads", limits.threads, "parallel workers for the search");
    solve->add_option("--routing-out", solveRoutingOut, "write the certificate routing here");
    solve->add_flag("--json", solveJson, "emit the result as JSON");

    // loads
    auto* loads = app.add_subcommand("loads", "load profile of a routing (CSV on stdout)");
    std::string loadsGraph, loadsRouting;
    loads->add_option("--graph", loadsGraph, "graph JSON file")->required();
    loads->add_option("--routing", loadsRouting, "routing JSON file")->required();

    // bounds
    auto* bounds = app.add_subcommand("bounds", "catalogued bound report for a graph (JSON)");
    std::string boundsGraph;
    bounds->add_option("--graph", boundsGraph, "graph JSON file")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "check catalogued family claims");
    std::string verifyManifest, verifyOut;
    bool verifyJson = false;
    int verifyThreads = 1;
    fwdidx::VerifyPolicy policy;
    verify->add_option("--manifest", verifyManifest, "JSON list of family specs")->required();
    verify->add_option("--out", verifyOut, "CSV report path (a .json sibling is written too)");
    verify->add_option("--threads", verifyThreads, "parallel workers over manifest entries");
    verify->add_option("--exact-general", policy.exactGeneralMaxOrder,
                       "max order for exact general-mode solves");
    verify->add_option("--exact-minimal", policy.exactMinimalMaxOrder,
                       "max order for exact minimal-mode solves");
    verify->add_flag("--json", verifyJson, "print records as JSON instead of CSV");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "minimum index over a degree class");
    int enumN = 0, enumMaxDeg = -1, enumMinDeg = -1, enumLimit = 6;
    std::string enumIndex = "vertex", enumWitness = "witness.json";
    bool enumJson = false;
    enumerate->add_option("--n", enumN, "graph order")->required();
    enumerate->add_option("--max-degree", enumMaxDeg, "exact maximum degree");
    enumerate->add_option("--min-degree", enumMinDeg, "exact minimum degree");
    enumerate->add_option("--index", enumIndex, "vertex|edge");
    enumerate->add_option("--witness-out", enumWitness, "file for a witness graph");
    enumerate->add_option("--limit", enumLimit, "enumeration order limit");
    enumerate->add_flag("--json", enumJson, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return runGen(genFamily, genParams, genOut);
        if (solve->parsed())
            return runSolve(solveGraph, solveIndex, solveMode, limits, solveRoutingOut, solveJson);
        if (loads->parsed()) return runLoads(loadsGraph, loadsRouting);
        if (bounds->parsed()) return runBounds(boundsGraph);
        if (verify->parsed())
            return runVerify(verifyManifest, verifyOut, verifyJson, verifyThreads, policy);
        if (enumerate->parsed())
            return runEnumerate(enumN, enumMaxDeg, enumMinDeg, enumIndex, enumWitness, enumLimit,
                                enumJson);
    } catch (const fwdidx::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
