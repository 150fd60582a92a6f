#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lch {

enum class Errc {
    // dga-core
    DuplicateId,
    InvalidId,
    UnknownGenerator,
    UnknownGeneratorInDifferential,
    InhomogeneousDifferential,
    SharedDegreeMismatch,
    SharedDifferentialMismatch,
    SharedNotClosed,
    IdCollision,
    // grading
    MissingPairData,
    InvalidHandleIndex,
    // homology / hochschild
    InfiniteBasis,
    InvalidWindow,
    InvalidAugmentation,
    UnsupportedGrading,
    // front1d
    MalformedEvent,
    StrandCountViolation,
    OpenEnds,
    NotGradable,
    InvalidTreeData,
    // handle-flow
    DegeneratePoint,
    NoRootInBracket,
    OutOfDomain,
    InvalidParams,
    // surgery-cli
    SyntaxError,
    UnclassifiedGenerator,
    InvalidBundle,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace lch
