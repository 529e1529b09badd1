#ifndef QGP_ERRORS_HPP
#define QGP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qgp {

enum class ErrorCode {
    DimensionTooSmall,
    EndpointMisplaced,
    MissingCost,
    NonPositiveCost,
    NodeOutOfRange,
    WrongStructureClass,
    IncompleteAssignment,
    UnmappedVariable,
    BasisOutOfRange,
    TooManyQubits,
    LayoutMismatch,
    LengthMismatch,
    AllFiltered,
    AllZero,
    NoFeasiblePath,
    TooLarge,
    MalformedKet,
    InvalidArgument,
};

const char *to_string(ErrorCode code);

/// Exception carrying a machine-checkable error code plus a human message.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &message);
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string &message);

} // namespace qgp

#endif
