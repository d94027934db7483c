#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "envcheck/checker.hpp"

namespace envcheck {

/// {"imports": [{"id": 1, "statement-text": "import os"}, ...]}
nlohmann::json probe_request(const std::vector<ProbeImport>& imports);

/// Checks one result per request id, in request order, and null error
/// fields on success. Throws Error{ProbeError}.
std::vector<ProbeOutcome> parse_probe_response(const nlohmann::json& response,
                                               const std::vector<ProbeImport>& request);

/// Runs "<interpreter> <script>" with the request on stdin and reads the
/// result from stdout.
class ProbeClient {
public:
    ProbeClient(std::filesystem::path interpreter, std::filesystem::path script);

    /// Throws Error{ProbeError} on a non-zero exit or a malformed response.
    std::vector<ProbeOutcome> run(const std::vector<ProbeImport>& imports) const;
    /// Interpreter version string reported by the last run.
    [[nodiscard]] std::string reported_interpreter() const;

    [[nodiscard]] ProbeFn as_fn() const;

private:
    std::filesystem::path interpreter_;
    std::filesystem::path script_;
    mutable std::string reported_;
};

}  // namespace envcheck
