#include <cstdio>
#include <set>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "fwdidx/io.hpp"
#include "json.hpp"
#include "testutil.hpp"

using namespace fwdidx;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exitCode = -1;
    std::string output;  // stdout only
};

RunResult runCli(const std::string& args) {
    std::string cmd = std::string(FWDIDX_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe)) res.output.append(buffer, got);
    int status = pclose(pipe);
    res.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

fs::path tempDir() {
    auto dir = fs::temp_directory_path() / "fwdidx-test";
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("graph JSON round trip") {
    auto g = generate({Family::Wheel, {7}});
    auto text = graphToJson(g);
    auto back = graphFromJson(text);
    CHECK(back.order() == 7);
    CHECK(back.size() == 12);
    CHECK(back.name() == g.name());
    CHECK_FALSE(back.isDirected());

    // undirected files list each edge once; the loader symmetrizes
    Graph fromFile = graphFromJson(R"({"directed": false, "n": 3, "edges": [[0,1],[1,2],[2,0]]})");
    CHECK(fromFile.size() == 3);
    CHECK(fromFile.hasArc(1, 0));

    Graph digraph = graphFromJson(R"({"directed": true, "n": 3, "edges": [[0,1],[1,2],[2,0]]})");
    CHECK(digraph.size() == 3);
    CHECK_FALSE(digraph.hasArc(1, 0));

    CHECK_THROWS(graphFromJson(R"({"n": 2})"));
}

TEST_CASE("routing JSON round trip preserves paths") {
    auto w7 = testutil::wheel7();
    auto r = testutil::wheel7ModifiedRouting();
    auto text = routingToJson(w7, r);
    auto back = routingFromJson(text, 7);
    CHECK(back.pairCount() == 42);
    CHECK(back.path(2, 5) == std::vector<int>{2, 1, 0, 5});
    CHECK(loadProfile(w7, back).maxVertexLoad == 4);
}

TEST_CASE("load profile CSV rows") {
    auto k3 = generate({Family::Complete, {3}});
    Routing r(3);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            if (x != y) r.setPath({x, y});
    auto csv = loadProfileCsv(k3, loadProfile(k3, r));
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "vertex,0,0");
    std::vector<std::string> lines{line};
    while (std::getline(in, line)) lines.push_back(line);
    CHECK(lines.size() == 6);
    CHECK(lines[3] == "edge,0,1,2");
}

TEST_CASE("solve result JSON carries the schema fields") {
    auto c5 = generate({Family::Cycle, {5}});
    auto result = exactIndex(c5, Objective::Vertex, RoutingMode::General);
    auto j = nlohmann::json::parse(solveResultToJson(result, "cert.json"));
    CHECK(j["objective"] == "vertex");
    CHECK(j["mode"] == "general");
    CHECK(j["value"] == 2);
    CHECK(j["status"] == "optimal");
    CHECK(j["lowerBound"] == 2);
    CHECK(j["certificateFile"] == "cert.json");
    CHECK(j.contains("nodes"));
}

TEST_CASE("bound report JSON lists theorem ids") {
    auto q3 = generate({Family::Hypercube, {3}});
    auto j = nlohmann::json::parse(boundReportToJson(boundReportForGraph(q3)));
    std::set<std::string> ids;
    for (const auto& e : j["entries"]) ids.insert(e["id"].get<std::string>());
    CHECK(ids.count("A"));
    CHECK(ids.count("B"));
    CHECK(ids.count("T2.3"));
    CHECK(ids.count("T2.4"));
    CHECK(ids.count("T3.1a"));
    CHECK(ids.count("T3.7"));
    CHECK(ids.count("T4.13a"));
}

TEST_CASE("manifest parsing") {
    auto specs = manifestFromJson(R"([
        {"family": "cycle", "params": [5]},
        {"family": "toroidal-mesh", "params": [3, 4]}
    ])");
    REQUIRE(specs.size() == 2);
    CHECK(specs[0].family == Family::Cycle);
    CHECK(specs[1].paramsStr() == "3x4");
    CHECK_THROWS_AS(manifestFromJson(R"({"family": "cycle"})"), BadParamsError);
}

TEST_CASE("cli: gen, solve, loads round trip reproduces the reported value") {
    auto dir = tempDir();
    auto graphPath = (dir / "w7.json").string();
    auto routingPath = (dir / "w7-routing.json").string();

    auto gen = runCli("gen --family wheel --params 7 --out " + graphPath);
    CHECK(gen.exitCode == 0);

    auto solve = runCli("solve --graph " + graphPath +
                        " --index vertex --mode general --routing-out " + routingPath + " --json");
    CHECK(solve.exitCode == 0);
    auto j = nlohmann::json::parse(solve.output);
    CHECK(j["value"] == 3);
    CHECK(j["status"] == "optimal");

    auto loads = runCli("loads --graph " + graphPath + " --routing " + routingPath);
    CHECK(loads.exitCode == 0);
    std::istringstream in(loads.output);
    std::string line;
    std::int64_t maxVertexLoad = 0;
    while (std::getline(in, line)) {
        if (line.rfind("vertex,", 0) != 0) continue;
        auto comma = line.rfind(',');
        maxVertexLoad = std::max<std::int64_t>(maxVertexLoad, std::stoll(line.substr(comma + 1)));
    }
    CHECK(maxVertexLoad == 3);
}

TEST_CASE("cli: identical invocations produce identical output") {
    auto dir = tempDir();
    auto graphPath = (dir / "c6.json").string();
    REQUIRE(runCli("gen --family cycle --params 6 --out " + graphPath).exitCode == 0);
    auto a = runCli("solve --graph " + graphPath + " --index edge --mode general --json");
    auto b = runCli("solve --graph " + graphPath + " --index edge --mode general --json");
    CHECK(a.exitCode == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("cli: verify emits the refutation row and exit code 4") {
    auto dir = tempDir();
    auto manifestPath = (dir / "basic.json").string();
    auto reportPath = (dir / "report.csv").string();
    writeTextFile(manifestPath, R"([
        {"family": "cycle", "params": [5]},
        {"family": "hypercube", "params": [3]}
    ])");
    auto verify = runCli("verify --manifest " + manifestPath + " --out " + reportPath);
    CHECK(verify.exitCode == 4);
    auto csv = readTextFile(reportPath);
    CHECK(csv.find("cycle,5,vertex,general,4,2,refuted,§6-item5") != std::string::npos);
    CHECK(csv.find("cycle,5,vertex,general,2,2,confirmed,§6-item6") != std::string::npos);
    // a JSON sibling is written as well
    CHECK(fs::exists(dir / "report.json"));

    // all-confirmed manifests exit 0
    writeTextFile(manifestPath, R"([{"family": "hypercube", "params": [3]}])");
    CHECK(runCli("verify --manifest " + manifestPath + " --out " + reportPath).exitCode == 0);
}

TEST_CASE("cli: enumerate reports the minimum and writes a witness") {
    auto dir = tempDir();
    auto witnessPath = (dir / "witness.json").string();
    auto run = runCli("enumerate --n 4 --max-degree 2 --index vertex --witness-out " + witnessPath +
                      " --json");
    CHECK(run.exitCode == 0);
    auto j = nlohmann::json::parse(run.output);
    CHECK(j["minimum"] == 1);
    auto witness = loadGraphFile(witnessPath);
    CHECK(witness.order() == 4);
    CHECK(witness.size() == 4);
}

TEST_CASE("cli: usage errors exit 2") {
    CHECK(runCli("solve --graph /nonexistent.json").exitCode == 2);
    CHECK(runCli("gen --family no-such-family --params 3").exitCode == 2);
    CHECK(runCli("enumerate --n 4 --index vertex").exitCode == 2);
}
