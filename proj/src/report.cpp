#include "disklab/report.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace disklab::report {

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

} // namespace

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_csv(const Report& rep, std::ostream& os) {
    for (const auto& [k, v] : rep.meta) os << "# " << k << " = " << v << "\r\n";
    for (std::size_t i = 0; i < rep.columns.size(); ++i)
        os << (i ? "," : "") << csv_escape(rep.columns[i]);
    os << "\r\n";
    for (const auto& row : rep.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << csv_escape(row[i]);
        os << "\r\n";
    }
    for (const auto& [k, v] : rep.summary) os << "# summary " << k << " = " << v << "\r\n";
}

void write_json(const Report& rep, std::ostream& os) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto& [k, v] : rep.meta) meta[k] = v;
    j["meta"] = std::move(meta);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : rep.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size() && i < rep.columns.size(); ++i)
            obj[rep.columns[i]] = row[i];
        rows.push_back(std::move(obj));
    }
    j["rows"] = std::move(rows);
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();
    for (const auto& [k, v] : rep.summary) summary[k] = v;
    j["summary"] = std::move(summary);
    os << j.dump(2) << "\n";
}

void write(const Report& rep, const std::string& format, std::ostream& os) {
    if (format == "csv") write_csv(rep, os);
    else if (format == "json") write_json(rep, os);
    else throw std::invalid_argument("unknown report format: " + format);
}

} // namespace disklab::report
