#pragma once

#include <stdexcept>

namespace baselgeo {

// Input lies outside the domain an operation requires.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// An inverse-cosine argument strayed beyond [-1, 1] by more than the clamp window.
struct ClampError : std::domain_error {
    using std::domain_error::domain_error;
};

// A stencil or integrand evaluation failed inside a numeric routine.
struct EvaluationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An adaptive routine exhausted its budget before reaching the requested tolerance.
struct ToleranceNotMet : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A box or point is not contained in the region an operation requires.
struct NotContained : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// No check is registered under the requested name.
struct UnknownCheck : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// No figure is registered under the requested name.
struct UnknownFigure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Writing an output file failed.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace baselgeo
