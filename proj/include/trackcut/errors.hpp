#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace trackcut {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Violated graph invariant (self-loop, duplicate edge, bad index, weight < 1,
/// cyclic input where a forest is required, non-chordal input, ...).
class GraphError : public Error {
public:
    using Error::Error;
};

/// A configured enumeration cap was exceeded. Oracles and verifiers never
/// fall back to sampling; they raise this instead.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// The instance admits no solution at all, e.g. an r-ftfvs request on a graph
/// with a cycle of length <= r. Carries the offending cycle when there is one.
class InfeasibleInstance : public Error {
public:
    InfeasibleInstance(const std::string& what, std::vector<int> witness = {})
        : Error(what), witness_(std::move(witness)) {}

    const std::vector<int>& witness() const noexcept { return witness_; }

private:
    std::vector<int> witness_;
};

}  // namespace trackcut
