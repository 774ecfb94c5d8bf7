#include "rcdim/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rcdim::report {

Format parse_format(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    throw std::invalid_argument("unknown format: " + name + " (expected text|json|csv)");
}

namespace {

std::string scalar_to_string(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_null()) return "";
    return v.dump();
}

std::vector<std::string> row_keys(const std::vector<Json>& rows) {
    std::vector<std::string> keys;
    for (const auto& row : rows) {
        for (auto it = row.begin(); it != row.end(); ++it) {
            if (std::find(keys.begin(), keys.end(), it.key()) == keys.end())
                keys.push_back(it.key());
        }
    }
    return keys;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string render_text(const Report& r) {
    std::ostringstream os;
    os << "# rcdim " << r.command << "\n";
    if (!r.params.empty()) {
        os << "#";
        for (auto it = r.params.begin(); it != r.params.end(); ++it)
            os << " " << it.key() << "=" << scalar_to_string(it.value());
        os << "\n";
    }
    const auto keys = row_keys(r.rows);
    if (!keys.empty()) {
        std::vector<std::size_t> width(keys.size());
        for (std::size_t i = 0; i < keys.size(); ++i) width[i] = keys[i].size();
        std::vector<std::vector<std::string>> cells;
        for (const auto& row : r.rows) {
            std::vector<std::string> line;
            for (std::size_t i = 0; i < keys.size(); ++i) {
                std::string v = row.contains(keys[i]) ? scalar_to_string(row.at(keys[i])) : "";
                width[i] = std::max(width[i], v.size());
                line.push_back(std::move(v));
            }
            cells.push_back(std::move(line));
        }
        auto emit = [&os, &width](const std::vector<std::string>& line) {
            for (std::size_t i = 0; i < line.size(); ++i) {
                os << (i ? "  " : "") << line[i]
                   << std::string(width[i] - line[i].size(), ' ');
            }
            os << "\n";
        };
        emit(keys);
        for (const auto& line : cells) emit(line);
    }
    for (const auto& note : r.notes) os << "note: " << note << "\n";
    for (const auto& claim : r.citations) os << "claim: " << claim << "\n";
    os << "status: " << (r.discrepancy ? "discrepancy found" : "ok") << "\n";
    return os.str();
}

std::string render_json(const Report& r) {
    Json out;
    out["command"] = r.command;
    out["params"] = r.params;
    out["rows"] = r.rows;
    out["notes"] = r.notes;
    out["citations"] = r.citations;
    out["discrepancy"] = r.discrepancy;
    return out.dump(2) + "\n";
}

std::string render_csv(const Report& r) {
    std::ostringstream os;
    const auto keys = row_keys(r.rows);
    for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << csv_escape(keys[i]);
    os << "\n";
    for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < keys.size(); ++i) {
            os << (i ? "," : "")
               << csv_escape(row.contains(keys[i]) ? scalar_to_string(row.at(keys[i])) : "");
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace

std::string render(const Report& r, Format f) {
    switch (f) {
        case Format::text: return render_text(r);
        case Format::json: return render_json(r);
        case Format::csv: return render_csv(r);
    }
    throw std::logic_error("unreachable");
}

}  // namespace rcdim::report
