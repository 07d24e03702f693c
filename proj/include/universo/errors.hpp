#pragma once

#include <stdexcept>
#include <string>

namespace universo {

// Bad argument values: out-of-range ids, non-prime s, malformed input files.
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A documented precondition between modules was violated by the caller.
struct contract_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Input graph is not of the declared kind (not a caterpillar, not a clique union, ...).
struct classification_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// No packing / host large enough exists within the configured caps.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numeric input outside the mathematical domain of a function.
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace universo
