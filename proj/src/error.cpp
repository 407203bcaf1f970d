#include "frpr/error.hpp"

namespace frpr {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidInput: return "invalid-input";
        case ErrorKind::DegreeLimit: return "degree-limit";
        case ErrorKind::NearSingularAngle: return "near-singular-angle";
        case ErrorKind::AngleConstraint: return "angle-constraint";
        case ErrorKind::IllConditioned: return "ill-conditioned-angle";
        case ErrorKind::ModelMismatch: return "model-mismatch";
        case ErrorKind::OrderSelection: return "order-selection";
        case ErrorKind::Numerical: return "numerical";
        case ErrorKind::EnumerationCap: return "enumeration-cap";
        case ErrorKind::DisconnectedSupport: return "disconnected-support";
        case ErrorKind::Schedule: return "schedule";
    }
    return "unknown";
}

int exit_code(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::ModelMismatch:
        case ErrorKind::OrderSelection: return 3;
        case ErrorKind::AngleConstraint:
        case ErrorKind::IllConditioned:
        case ErrorKind::NearSingularAngle: return 4;
        case ErrorKind::Numerical:
        case ErrorKind::DisconnectedSupport: return 5;
        case ErrorKind::InvalidInput:
        case ErrorKind::DegreeLimit:
        case ErrorKind::EnumerationCap:
        case ErrorKind::Schedule: return 2;
    }
    return 5;
}

}  // namespace frpr
