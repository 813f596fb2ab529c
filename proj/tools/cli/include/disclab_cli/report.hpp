#pragma once

#include "disclab/arith.hpp"

#include "json.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace disclab::cli {

using Json = nlohmann::ordered_json;

enum class Format { text, csv, json };

/// Output of one command. JSON renders {config, results, findings, summary};
/// CSV renders a header row plus one row per result; text is prebuilt.
struct Report {
    Json config = Json::object();
    std::vector<Json> results;
    Json findings = Json::array();
    Json summary = Json::object();
    std::string text;
};

/// Integers beyond 2^53 in magnitude become decimal strings.
Json json_number(wide_int v);

void emit(const Report& report, Format format, std::ostream& out);

std::string csv_escape(const std::string& cell);

} // namespace disclab::cli
