#include "envcheck/interpreter.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "envcheck/error.hpp"

namespace envcheck {

InterpreterVersion InterpreterVersion::parse(std::string_view text) {
    auto bad = [&] { return Error(ErrorCode::InvalidVersion, "interpreter version '" + std::string(text) + "'"); };
    auto dot = text.find('.');
    if (dot == std::string_view::npos) throw bad();
    auto rest = text.substr(dot + 1);
    auto minor_end = rest.find('.');
    auto minor_text = rest.substr(0, minor_end);
    InterpreterVersion v;
    auto p1 = std::from_chars(text.data(), text.data() + dot, v.major);
    auto p2 = std::from_chars(minor_text.data(), minor_text.data() + minor_text.size(), v.minor);
    if (p1.ec != std::errc{} || p1.ptr != text.data() + dot || p2.ec != std::errc{} ||
        p2.ptr != minor_text.data() + minor_text.size() || v.major < 0 || v.minor < 0) {
        throw bad();
    }
    return v;
}

InterpreterReleaseTable::InterpreterReleaseTable(std::map<InterpreterVersion, Date> dates)
    : dates_(std::move(dates)) {
    const std::pair<const InterpreterVersion, Date>* prev = nullptr;
    for (const auto& entry : dates_) {
        if (prev && prev->first.major == entry.first.major &&
            std::chrono::sys_days{prev->second} >= std::chrono::sys_days{entry.second}) {
            throw Error(ErrorCode::SchemaError, "interpreter " + entry.first.str() + " is not dated after " +
                                                    prev->first.str());
        }
        prev = &entry;
    }
}

const InterpreterReleaseTable& InterpreterReleaseTable::embedded() {
    static const InterpreterReleaseTable table = from_json_text(R"({
        "2.7": "2010-07-03",
        "3.0": "2008-12-03",
        "3.1": "2009-06-27",
        "3.2": "2011-02-20",
        "3.3": "2012-09-29",
        "3.4": "2014-03-16",
        "3.5": "2015-09-13",
        "3.6": "2016-12-23",
        "3.7": "2018-06-27",
        "3.8": "2019-10-14",
        "3.9": "2020-10-05",
        "3.10": "2021-10-04",
        "3.11": "2022-10-24",
        "3.12": "2023-10-02"
    })");
    return table;
}

InterpreterReleaseTable InterpreterReleaseTable::from_json_text(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::SchemaError, std::string("interpreter table: ") + e.what());
    }
    if (!doc.is_object()) throw Error(ErrorCode::SchemaError, "interpreter table must be an object");
    std::map<InterpreterVersion, Date> dates;
    for (const auto& [key, value] : doc.items()) {
        if (!value.is_string()) throw Error(ErrorCode::SchemaError, "interpreter table: date for " + key);
        InterpreterVersion v;
        try {
            v = InterpreterVersion::parse(key);
        } catch (const Error&) {
            throw Error(ErrorCode::SchemaError, "interpreter table: bad key '" + key + "'");
        }
        dates[v] = parse_date(value.get<std::string>());
    }
    return InterpreterReleaseTable(std::move(dates));
}

InterpreterReleaseTable InterpreterReleaseTable::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

std::vector<InterpreterVersion> InterpreterReleaseTable::versions() const {
    std::vector<InterpreterVersion> out;
    for (const auto& [v, _] : dates_) out.push_back(v);
    return out;
}

}  // namespace envcheck
