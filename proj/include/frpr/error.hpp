#pragma once

#include <stdexcept>
#include <string>

namespace frpr {

/// Failure categories; the CLI maps them onto process exit codes.
enum class ErrorKind {
    InvalidInput,      // malformed grid, mismatched grids, bad parameters
    DegreeLimit,
    NearSingularAngle,
    AngleConstraint,
    IllConditioned,
    ModelMismatch,
    OrderSelection,
    Numerical,
    EnumerationCap,
    DisconnectedSupport,
    Schedule,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

const char* to_string(ErrorKind kind) noexcept;

/// 2 usage/input, 3 model mismatch, 4 angle constraint, 5 numerical failure.
int exit_code(ErrorKind kind) noexcept;

}  // namespace frpr
