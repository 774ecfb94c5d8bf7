#pragma once

#include "json.hpp"

#include <string>
#include <vector>

namespace rcdim::report {

using Json = nlohmann::ordered_json;

/// One command's result: flat snake_case records plus claim citations.
/// Rendering is deterministic; identical reports render to identical bytes.
struct Report {
    std::string command;
    Json params = Json::object();
    std::vector<Json> rows;
    std::vector<std::string> notes;
    std::vector<std::string> citations;
    bool discrepancy = false;
};

enum class Format { text, json, csv };

/// Accepts "text", "json", "csv"; throws std::invalid_argument otherwise.
Format parse_format(const std::string& name);

std::string render(const Report& r, Format f);

}  // namespace rcdim::report
