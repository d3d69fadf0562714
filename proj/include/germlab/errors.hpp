#pragma once

#include <stdexcept>
#include <string>

namespace germlab {

// Bad user input: malformed model files, out-of-range parameters, unknown names.
// The CLI maps this to exit code 2; every other exception maps to exit code 1.
struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal consistency failure: an algorithm detected a state it cannot handle
// (non-generic projection after retries, disagreeing dual-route invariants, ...).
struct ComputationError : std::runtime_error {
    explicit ComputationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace germlab
