#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ckgeom {

/// Base class of every error raised by the library.
///
/// `reason()` is a short machine-readable code (e.g. "singular-jet",
/// "antisymmetric-part-not-closed") that the CLI forwards verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string reason, const std::string& message)
        : std::runtime_error(message), reason_(std::move(reason)) {}

    const std::string& reason() const noexcept { return reason_; }

private:
    std::string reason_;
};

/// Operands live in different workspaces (dimension or degree cap differ).
class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& message) : Error("dimension-mismatch", message) {}
};

/// A jet (or jet matrix) had to be inverted but its constant term vanishes.
class SingularJet : public Error {
public:
    explicit SingularJet(const std::string& message) : Error("singular-jet", message) {}
};

/// Input data violates a documented precondition of an operation.
class PreconditionError : public Error {
public:
    PreconditionError(std::string reason, const std::string& message)
        : Error(std::move(reason), message) {}
};

/// Raised by the Cauchy-Kowalevski solvers when the right-hand side fails.
/// Keeps the reason of the underlying error and records the Picard iteration.
class SolverError : public Error {
public:
    SolverError(std::string reason, int iteration, const std::string& message)
        : Error(std::move(reason), message), iteration_(iteration) {}

    int iteration() const noexcept { return iteration_; }

private:
    int iteration_;
};

/// Malformed serialized input (JSON schema, rational syntax, keys).
class FormatError : public Error {
public:
    explicit FormatError(const std::string& message) : Error("malformed-input", message) {}
};

} // namespace ckgeom
