#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sdpcolor {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input violates a documented precondition. CLI exit code 2.
struct PreconditionError : Error {
    using Error::Error;
};

struct DegenerateError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct NotPsdError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct UnsupportedRoundError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct DecompositionError : Error {
    using Error::Error;
};

// Proof that the input graph has no proper 3-coloring. CLI exit code 3.
struct NotThreeColorableError : Error {
    std::vector<int> odd_cycle;
    NotThreeColorableError(const std::string& what, std::vector<int> cycle)
        : Error(what), odd_cycle(std::move(cycle)) {}
};

}  // namespace sdpcolor
