#include "fwdidx/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fwdidx {

using nlohmann::json;

namespace {

std::string dump(const json& j, int indent) { return indent > 0 ? j.dump(indent) : j.dump(); }

}  // namespace

std::string graphToJson(const Graph& g, int indent) {
    json j;
    if (!g.name().empty()) j["name"] = g.name();
    j["directed"] = g.isDirected();
    j["n"] = g.order();
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return dump(j, indent);
}

Graph graphFromJson(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("n") || !j.contains("edges"))
        throw MalformedEdgeError("graph JSON needs \"n\" and \"edges\"");
    int n = j.at("n").get<int>();
    bool directed = j.value("directed", false);
    std::string name = j.value("name", std::string{});
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw MalformedEdgeError("edge entries must be pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return directed ? Graph::directed(n, edges, name) : Graph::undirected(n, edges, name);
}

Graph loadGraphFile(const std::string& path) { return graphFromJson(readTextFile(path)); }

void saveGraphFile(const Graph& g, const std::string& path) {
    writeTextFile(path, graphToJson(g) + "\n");
}

std::string graphIdentity(const Graph& g) {
    if (!g.name().empty()) return g.name();
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&](std::uint64_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(g.order()));
    mix(g.isDirected() ? 1 : 2);
    for (auto [u, v] : g.edges()) {
        mix(static_cast<std::uint64_t>(u) + 1);
        mix(static_cast<std::uint64_t>(v) + 1);
    }
    std::ostringstream os;
    os << "g-" << std::hex << h;
    return os.str();
}

std::string routingToJson(const Graph& g, const Routing& r, int indent) {
    json j;
    j["graph"] = graphIdentity(g);
    json pairs = json::array();
    const int n = r.order();
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (x == y || !r.hasPath(x, y)) continue;
            pairs.push_back({{"src", x}, {"dst", y}, {"path", r.path(x, y)}});
        }
    }
    j["pairs"] = std::move(pairs);
    return dump(j, indent);
}

Routing routingFromJson(const std::string& text, int order) {
    json j = json::parse(text);
    int maxLabel = order - 1;
    for (const auto& entry : j.at("pairs")) {
        for (int v : entry.at("path").get<std::vector<int>>()) maxLabel = std::max(maxLabel, v);
    }
    Routing r(maxLabel + 1);
    for (const auto& entry : j.at("pairs")) {
        auto path = entry.at("path").get<std::vector<int>>();
        if (path.empty() || path.front() != entry.at("src").get<int>() ||
            path.back() != entry.at("dst").get<int>())
            throw InvalidRoutingError("pair entry endpoints do not match its path");
        r.setPath(std::move(path));
    }
    return r;
}

Routing loadRoutingFile(const std::string& path, int order) {
    return routingFromJson(readTextFile(path), order);
}

void saveRoutingFile(const Graph& g, const Routing& r, const std::string& path) {
    writeTextFile(path, routingToJson(g, r) + "\n");
}

std::string loadProfileCsv(const Graph& g, const LoadProfile& lp) {
    std::ostringstream os;
    for (std::size_t v = 0; v < lp.vertexLoad.size(); ++v)
        os << "vertex," << v << "," << lp.vertexLoad[v] << "\n";
    const auto& edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e)
        os << "edge," << edges[e].first << "," << edges[e].second << "," << lp.edgeLoad[e] << "\n";
    return os.str();
}

std::string solveResultToJson(const SolveResult& r, const std::string& certificateFile,
                              int indent) {
    json j;
    j["objective"] = to_string(r.objective);
    j["mode"] = to_string(r.mode);
    j["value"] = r.value;
    j["status"] = to_string(r.status);
    j["lowerBound"] = r.lowerBound;
    j["nodes"] = r.nodesExplored;
    if (!certificateFile.empty()) j["certificateFile"] = certificateFile;
    return dump(j, indent);
}

std::string boundReportToJson(const BoundReport& rep, int indent) {
    json entries = json::array();
    for (const auto& e : rep.entries) {
        json je;
        je["id"] = e.id;
        switch (e.kind) {
            case BoundEntry::Kind::Lower: je["kind"] = "lower"; break;
            case BoundEntry::Kind::Upper: je["kind"] = "upper"; break;
            case BoundEntry::Kind::Equality: je["kind"] = "equality"; break;
            case BoundEntry::Kind::Relation: je["kind"] = "relation"; break;
        }
        je["target"] = e.target;
        je["applicable"] = e.applicable;
        if (!e.condition.empty()) je["condition"] = e.condition;
        if (e.applicable) {
            if (e.kind == BoundEntry::Kind::Relation)
                je["holds"] = e.holds;
            else
                je["value"] = e.value;
        }
        if (e.advisory) je["advisory"] = true;
        if (e.disputed) je["disputed"] = true;
        je["citation"] = e.citation;
        entries.push_back(std::move(je));
    }
    json j;
    j["entries"] = std::move(entries);
    return dump(j, indent);
}

std::string verificationCsv(const std::vector<VerificationRecord>& records) {
    std::ostringstream os;
    os << "family,params,objective,mode,claimed,computed,verdict,citation\n";
    for (const auto& rec : records) {
        os << to_string(rec.spec.family) << "," << rec.spec.paramsStr() << ","
           << to_string(rec.objective) << "," << to_string(rec.mode) << "," << rec.claimed << ","
           << rec.computed << "," << to_string(rec.verdict) << "," << rec.citation << "\n";
    }
    return os.str();
}

std::string verificationJson(const std::vector<VerificationRecord>& records, int indent) {
    json arr = json::array();
    for (const auto& rec : records) {
        json j;
        j["family"] = to_string(rec.spec.family);
        j["params"] = rec.spec.params;
        j["objective"] = to_string(rec.objective);
        j["mode"] = to_string(rec.mode);
        j["claimed"] = rec.claimed;
        j["computed"] = rec.computed;
        if (rec.exactValue) j["exact"] = *rec.exactValue;
        j["verdict"] = to_string(rec.verdict);
        j["citation"] = rec.citation;
        if (!rec.note.empty()) j["note"] = rec.note;
        arr.push_back(std::move(j));
    }
    return dump(arr, indent);
}

std::vector<FamilySpec> manifestFromJson(const std::string& text) {
    json j = json::parse(text);
    if (!j.is_array()) throw BadParamsError("manifest must be a JSON array of family specs");
    std::vector<FamilySpec> specs;
    for (const auto& entry : j) {
        FamilySpec spec;
        spec.family = familyFromString(entry.at("family").get<std::string>());
        spec.params = entry.at("params").get<std::vector<std::int64_t>>();
        specs.push_back(std::move(spec));
    }
    return specs;
}

std::vector<FamilySpec> loadManifestFile(const std::string& path) {
    return manifestFromJson(readTextFile(path));
}

std::string readTextFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void writeTextFile(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
}

}  // namespace fwdidx
