#ifndef FWDIDX_ERRORS_HPP
#define FWDIDX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fwdidx {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input graph is not connected (undirected) or not strongly connected (directed).
struct DisconnectedGraphError : Error {
    using Error::Error;
};

// Self-loop, out-of-range endpoint or duplicate arc.
struct MalformedEdgeError : Error {
    using Error::Error;
};

// Binary graph operation applied to one directed and one undirected operand.
struct MixedDirectednessError : Error {
    using Error::Error;
};

// Enumeration request above the configured order limit.
struct LimitExceededError : Error {
    using Error::Error;
};

// Distance row sums differ, so the transitive index formula does not apply.
struct NotRowRegularError : Error {
    using Error::Error;
};

// Routing failed validation and cannot be classified or load-profiled.
struct InvalidRoutingError : Error {
    using Error::Error;
};

struct BadParamsError : Error {
    using Error::Error;
};

// Family has no catalogued closed-form claim.
struct NoClaimError : Error {
    using Error::Error;
};

}  // namespace fwdidx

#endif
