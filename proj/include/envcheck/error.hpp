#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace envcheck {

/// Failure categories raised by the library. Issue-level findings are never
/// thrown; they are collected as IssueRecords by the checker.
enum class ErrorCode {
    InvalidName,
    InvalidVersion,
    InvalidSpecifier,
    InvalidMarker,
    SchemaError,
    DuplicateRelease,
    NetworkError,
    NotFound,
    UnknownPackage,
    NoSatisfyingVersion,
    NoCandidate,
    InstallFailure,
    MissingConfigFiles,
    MissingSourceCode,
    ScanError,
    MissingResult,
    CorpusError,
    EmptyCorpus,
    ProbeError,
    IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace envcheck
