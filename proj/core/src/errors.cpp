#include "qgp/errors.hpp"

namespace qgp {

const char *to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
        case ErrorCode::EndpointMisplaced: return "EndpointMisplaced";
        case ErrorCode::MissingCost: return "MissingCost";
        case ErrorCode::NonPositiveCost: return "NonPositiveCost";
        case ErrorCode::NodeOutOfRange: return "NodeOutOfRange";
        case ErrorCode::WrongStructureClass: return "WrongStructureClass";
        case ErrorCode::IncompleteAssignment: return "IncompleteAssignment";
        case ErrorCode::UnmappedVariable: return "UnmappedVariable";
        case ErrorCode::BasisOutOfRange: return "BasisOutOfRange";
        case ErrorCode::TooManyQubits: return "TooManyQubits";
        case ErrorCode::LayoutMismatch: return "LayoutMismatch";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::AllFiltered: return "AllFiltered";
        case ErrorCode::AllZero: return "AllZero";
        case ErrorCode::NoFeasiblePath: return "NoFeasiblePath";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::MalformedKet: return "MalformedKet";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "UnknownError";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string &message) {
    throw Error(code, message);
}

} // namespace qgp
