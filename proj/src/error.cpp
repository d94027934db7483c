#include "envcheck/error.hpp"

namespace envcheck {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidName: return "InvalidName";
        case ErrorCode::InvalidVersion: return "InvalidVersion";
        case ErrorCode::InvalidSpecifier: return "InvalidSpecifier";
        case ErrorCode::InvalidMarker: return "InvalidMarker";
        case ErrorCode::SchemaError: return "SchemaError";
        case ErrorCode::DuplicateRelease: return "DuplicateRelease";
        case ErrorCode::NetworkError: return "NetworkError";
        case ErrorCode::NotFound: return "NotFound";
        case ErrorCode::UnknownPackage: return "UnknownPackage";
        case ErrorCode::NoSatisfyingVersion: return "NoSatisfyingVersion";
        case ErrorCode::NoCandidate: return "NoCandidate";
        case ErrorCode::InstallFailure: return "InstallFailure";
        case ErrorCode::MissingConfigFiles: return "MissingConfigFiles";
        case ErrorCode::MissingSourceCode: return "MissingSourceCode";
        case ErrorCode::ScanError: return "ScanError";
        case ErrorCode::MissingResult: return "MissingResult";
        case ErrorCode::CorpusError: return "CorpusError";
        case ErrorCode::EmptyCorpus: return "EmptyCorpus";
        case ErrorCode::ProbeError: return "ProbeError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace envcheck
