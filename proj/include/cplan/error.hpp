#pragma once

#include <stdexcept>
#include <string>

namespace cplan {

enum class ErrorCode {
    NonSymmetricRotation,
    Disconnected,
    NonPlanarEmbedding,
    DuplicateEdge,
    CycleMismatch,
    VertexClash,
    NotACycle,
    ForeignEdge,
    PreconditionDegree,
    TooSmall,
    NotTwoConnected,
    NotThreeConnected,
    NotNested,
    ClusterSeparatorCycle,
    NotCConnected,
    MergeIncompatible,
    TooLarge,
    SchemaError,
    BadParams,
    Timeout,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace cplan
