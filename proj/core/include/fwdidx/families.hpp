#ifndef FWDIDX_FAMILIES_HPP
#define FWDIDX_FAMILIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fwdidx/graph.hpp"
#include "fwdidx/solver.hpp"

namespace fwdidx {

enum class Family {
    Complete,
    Star,
    Path,
    Cycle,
    DirectedCycle,
    CompleteBipartite,
    Wheel,
    Hypercube,
    GeneralizedHypercube,
    DAryNCube,
    ToroidalMesh,
    DirectedToroidalMesh,
    FoldedCube,
    AugmentedCube,
    CrossedCube,
    CubeConnectedCycles,
    WrappedButterfly,
    DeBruijn,
    Kautz,
    StarGraph,
    CompleteTransposition,
};

std::string to_string(Family f);
Family familyFromString(const std::string& name);

struct FamilySpec {
    Family family = Family::Complete;
    std::vector<std::int64_t> params;

    std::string str() const;        // e.g. "toroidal-mesh(3,4)"
    std::string paramsStr() const;  // e.g. "3x4"
};

/// Builds the named graph with its documented vertex labeling (bit strings
/// for cubes, tuples for meshes, permutations for the permutation families,
/// strings for de Bruijn and Kautz graphs).
Graph generate(const FamilySpec& spec);

/// Whether the family is expected to be row-regular (vertex-transitive) at
/// every parameter choice.
bool isTransitiveFamily(const FamilySpec& spec);

/// A catalogued index claim for a family instance.
struct Claim {
    enum class Kind { Exact, Interval, UpperOnly };

    Objective objective = Objective::Vertex;
    RoutingMode mode = RoutingMode::General;
    Kind kind = Kind::Exact;
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::string citation;
    bool disputed = false;
    std::string note;

    std::string render() const;
};

/// Claims with citations for the instance; throws NoClaimError when the
/// family has none catalogued.
std::vector<Claim> closedFormClaims(const FamilySpec& spec);

enum class Verdict { Confirmed, Refuted, BoundConsistent, Skipped };
std::string to_string(Verdict v);

struct VerifyPolicy {
    int exactGeneralMaxOrder = 9;
    int exactMinimalMaxOrder = 10;
    int heuristicIterations = 300;
};

struct VerificationRecord {
    FamilySpec spec;
    Objective objective = Objective::Vertex;
    RoutingMode mode = RoutingMode::General;
    std::string claimed;
    std::string computed;
    std::optional<std::int64_t> exactValue;
    Verdict verdict = Verdict::Skipped;
    std::string citation;
    std::string note;
};

/// Compares catalogued claims against exact solves where the order permits,
/// downgrading to bound consistency (analytic lower bound vs constructed
/// routing value) on larger instances. Failures become skipped verdicts.
std::vector<VerificationRecord> verifyFamily(const FamilySpec& spec,
                                             const SearchLimits& limits = {},
                                             const VerifyPolicy& policy = {});

}  // namespace fwdidx

#endif
