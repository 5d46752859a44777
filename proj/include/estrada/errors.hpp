#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace estrada {

/// A loop or out-of-range endpoint in an edge list.
struct InvalidEdge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Family parameters outside the family's valid range.
struct InvalidFamilyParam : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed graph6 token. `byte_offset` points at the offending byte.
struct Graph6ParseError : std::runtime_error {
    Graph6ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
          byte_offset(offset) {}
    std::size_t byte_offset;
};

/// Graph order outside the encodable graph6 range.
struct UnsupportedSize : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Eigensolver failed to reach the convergence threshold within the sweep cap.
struct NoConvergence : std::runtime_error {
    NoConvergence(const std::string& what, double achieved)
        : std::runtime_error(what), residual(achieved) {}
    double residual;
};

/// Spectral moment order beyond the supported range.
struct UnsupportedMoment : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// exp(lambda_1) would exceed double range.
struct OverflowGuard : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A signless-Laplacian spectrum with a materially negative eigenvalue;
/// indicates a solver or construction bug, never a data condition.
struct NotPSD : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Ragged, asymmetric, or non-numeric matrix text input.
struct MatrixParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace estrada
