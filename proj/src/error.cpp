#include "cplan/error.hpp"

namespace cplan {

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::NonSymmetricRotation: return "NonSymmetricRotation";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NonPlanarEmbedding: return "NonPlanarEmbedding";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::CycleMismatch: return "CycleMismatch";
    case ErrorCode::VertexClash: return "VertexClash";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::ForeignEdge: return "ForeignEdge";
    case ErrorCode::PreconditionDegree: return "PreconditionDegree";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::NotTwoConnected: return "NotTwoConnected";
    case ErrorCode::NotThreeConnected: return "NotThreeConnected";
    case ErrorCode::NotNested: return "NotNested";
    case ErrorCode::ClusterSeparatorCycle: return "ClusterSeparatorCycle";
    case ErrorCode::NotCConnected: return "NotCConnected";
    case ErrorCode::MergeIncompatible: return "MergeIncompatible";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::Timeout: return "Timeout";
    }
    return "UnknownError";
}

} // namespace cplan
