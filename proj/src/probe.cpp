#include "envcheck/probe.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <iterator>
#include <random>

namespace envcheck {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'') out += "'\\''";
        else out += c;
    }
    return out + "'";
}

[[noreturn]] void probe_error(const std::string& msg) { throw Error(ErrorCode::ProbeError, msg); }

std::optional<std::string> opt_string(const json& r, const char* key) {
    if (!r.contains(key) || r.at(key).is_null()) return std::nullopt;
    if (!r.at(key).is_string()) probe_error(std::string("result field '") + key + "' must be a string or null");
    return r.at(key).get<std::string>();
}

}  // namespace

json probe_request(const std::vector<ProbeImport>& imports) {
    json list = json::array();
    for (const auto& i : imports) list.push_back({{"id", i.id}, {"statement-text", i.statement}});
    return {{"imports", list}};
}

std::vector<ProbeOutcome> parse_probe_response(const json& response, const std::vector<ProbeImport>& request) {
    if (!response.is_object() || !response.contains("results") || !response.at("results").is_array()) {
        probe_error("response lacks a 'results' list");
    }
    const json& results = response.at("results");
    if (results.size() != request.size()) {
        probe_error("expected " + std::to_string(request.size()) + " results, got " + std::to_string(results.size()));
    }
    std::vector<ProbeOutcome> out;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const json& r = results[i];
        if (!r.is_object() || !r.contains("id") || !r.at("id").is_number_integer() || !r.contains("ok") ||
            !r.at("ok").is_boolean()) {
            probe_error("result " + std::to_string(i) + " lacks id/ok");
        }
        ProbeOutcome o;
        o.id = r.at("id").get<int>();
        if (o.id != request[i].id) {
            probe_error("result " + std::to_string(i) + " has id " + std::to_string(o.id) + ", expected " +
                        std::to_string(request[i].id));
        }
        o.ok = r.at("ok").get<bool>();
        o.error_type = opt_string(r, "error_type");
        o.error_message = opt_string(r, "error_message");
        if (o.ok && (o.error_type || o.error_message)) probe_error("successful result carries an error");
        if (!o.ok && !o.error_type) probe_error("failed result without error_type");
        out.push_back(std::move(o));
    }
    return out;
}

ProbeClient::ProbeClient(fs::path interpreter, fs::path script)
    : interpreter_(std::move(interpreter)), script_(std::move(script)) {}

std::vector<ProbeOutcome> ProbeClient::run(const std::vector<ProbeImport>& imports) const {
    if (imports.empty()) return {};
    static thread_local std::mt19937_64 rng{std::random_device{}()};
    const std::string stem = "envcheck-probe-" + std::to_string(rng());
    const fs::path input = fs::temp_directory_path() / (stem + ".json");
    const fs::path errors = fs::temp_directory_path() / (stem + ".err");
    {
        std::ofstream f(input, std::ios::binary);
        if (!f) probe_error("cannot write " + input.string());
        f << probe_request(imports).dump();
    }
    const std::string cmd = shell_quote(interpreter_.string()) + " " + shell_quote(script_.string()) + " < " +
                            shell_quote(input.string()) + " 2> " + shell_quote(errors.string());
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) {
        std::error_code ignored;
        fs::remove(input, ignored);
        probe_error("cannot start " + interpreter_.string());
    }
    std::string output;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) output.append(buf, n);
    const int status = ::pclose(pipe);
    std::string diagnostics;
    {
        std::ifstream e(errors, std::ios::binary);
        diagnostics.assign(std::istreambuf_iterator<char>(e), {});
    }
    std::error_code ec;
    fs::remove(input, ec);
    fs::remove(errors, ec);
    if (status == -1 || !WIFEXITED(status) || WEXITSTATUS(status) != 0) {
        probe_error("probe exited with status " + std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1) +
                    ": " + diagnostics.substr(0, 500));
    }
    json response;
    try {
        response = json::parse(output);
    } catch (const json::exception& e) {
        probe_error(std::string("probe output is not JSON: ") + e.what());
    }
    if (response.contains("interpreter") && response.at("interpreter").is_string()) {
        reported_ = response.at("interpreter").get<std::string>();
    }
    return parse_probe_response(response, imports);
}

std::string ProbeClient::reported_interpreter() const { return reported_; }

ProbeFn ProbeClient::as_fn() const {
    return [client = *this](const std::vector<ProbeImport>& imports) { return client.run(imports); };
}

}  // namespace envcheck
