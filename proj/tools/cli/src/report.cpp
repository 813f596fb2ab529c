#include "disclab_cli/report.hpp"

#include <ostream>

namespace disclab::cli {

Json json_number(wide_int v) {
    constexpr wide_int kSafe = wide_int{1} << 53;
    if (v > -kSafe && v < kSafe) return static_cast<std::int64_t>(v);
    return to_string(v);
}

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char ch : cell) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

namespace {

std::string csv_cell(const Json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return csv_escape(v.get<std::string>());
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_structured()) return csv_escape(v.dump());
    return v.dump();
}

} // namespace

void emit(const Report& report, Format format, std::ostream& out) {
    switch (format) {
    case Format::text:
        out << report.text;
        break;
    case Format::json: {
        Json doc = Json::object();
        doc["config"] = report.config;
        doc["results"] = report.results;
        doc["findings"] = report.findings;
        doc["summary"] = report.summary;
        out << doc.dump(2) << '\n';
        break;
    }
    case Format::csv: {
        if (report.results.empty()) break;
        std::vector<std::string> keys;
        for (const auto& [key, _] : report.results.front().items()) keys.push_back(key);
        for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << csv_escape(keys[i]);
        out << '\n';
        for (const Json& row : report.results) {
            for (std::size_t i = 0; i < keys.size(); ++i)
                out << (i ? "," : "") << (row.contains(keys[i]) ? csv_cell(row[keys[i]]) : "");
            out << '\n';
        }
        break;
    }
    }
}

} // namespace disclab::cli
