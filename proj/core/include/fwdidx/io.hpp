#ifndef FWDIDX_IO_HPP
#define FWDIDX_IO_HPP

#include <string>
#include <vector>

#include "fwdidx/bounds.hpp"
#include "fwdidx/families.hpp"
#include "fwdidx/graph.hpp"
#include "fwdidx/routing.hpp"
#include "fwdidx/solver.hpp"

namespace fwdidx {

// Graph files: {"name": str?, "directed": bool, "n": int, "edges": [[u,v],...]}
// Undirected files list each edge once; the loader symmetrizes.
std::string graphToJson(const Graph& g, int indent = 2);
Graph graphFromJson(const std::string& text);
Graph loadGraphFile(const std::string& path);
void saveGraphFile(const Graph& g, const std::string& path);

/// Graph name when set, otherwise a short content hash.
std::string graphIdentity(const Graph& g);

// Routing files: {"graph": name/hash, "pairs": [{"src","dst","path"},...]}
// `order` fixes the vertex count; 0 infers it from the largest label seen.
std::string routingToJson(const Graph& g, const Routing& r, int indent = 0);
Routing routingFromJson(const std::string& text, int order = 0);
Routing loadRoutingFile(const std::string& path, int order = 0);
void saveRoutingFile(const Graph& g, const Routing& r, const std::string& path);

// LoadProfile CSV: "vertex,<v>,<load>" rows then "edge,<u>,<v>,<load>" rows.
std::string loadProfileCsv(const Graph& g, const LoadProfile& lp);

std::string solveResultToJson(const SolveResult& r, const std::string& certificateFile = "",
                              int indent = 2);

std::string boundReportToJson(const BoundReport& rep, int indent = 2);

// Verification report: one row/object per claim checked.
std::string verificationCsv(const std::vector<VerificationRecord>& records);
std::string verificationJson(const std::vector<VerificationRecord>& records, int indent = 2);

// Manifest: JSON list of {"family": name, "params": [ints]}.
std::vector<FamilySpec> manifestFromJson(const std::string& text);
std::vector<FamilySpec> loadManifestFile(const std::string& path);

std::string readTextFile(const std::string& path);
void writeTextFile(const std::string& path, const std::string& content);

}  // namespace fwdidx

#endif
